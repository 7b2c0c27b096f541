//! Catalog of identities between the symmetric functions, Stirling families
//! and enumeration oracles, checked exhaustively on bounded grids.
//!
//! Every check is exact. Cells outside an identity's hypotheses are
//! reported as skipped with the reason, never as passes.

mod catalog;
mod checks;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub use catalog::{list_identities, IdentityId, IdentityInfo, Profile};
use checks::{check, grid, Form, Outcome};

/// Bounds of a verification grid. Which fields are required depends on the
/// identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ranges {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_list: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub board_max: Option<usize>,
}

impl Ranges {
    /// Fields of `self`, with gaps filled from `fallback`.
    pub fn or(&self, fallback: &Ranges) -> Ranges {
        Ranges {
            n_max: self.n_max.or(fallback.n_max),
            k_max: self.k_max.or(fallback.k_max),
            s_max: self.s_max.or(fallback.s_max),
            p_list: self.p_list.clone().or_else(|| fallback.p_list.clone()),
            ell: self.ell.clone().or_else(|| fallback.ell.clone()),
            board_max: self.board_max.or(fallback.board_max),
        }
    }
}

/// One grid cell. Unused parameters are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(v) = self.n {
            parts.push(format!("n={v}"));
        }
        if let Some(v) = self.k {
            parts.push(format!("k={v}"));
        }
        if let Some(v) = self.s {
            parts.push(format!("s={v}"));
        }
        if let Some(v) = self.ell {
            parts.push(format!("ell={v}"));
        }
        if let Some(v) = self.p {
            parts.push(format!("p={v}"));
        }
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped(_) => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub params: Params,
    /// Canonical text of each side; absent for skipped cells.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// How a commonly printed statement fares against the checked form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrataNote {
    pub printed: &'static str,
    pub checked: &'static str,
    pub range: Ranges,
    pub cells: usize,
    pub failing: usize,
    pub first_failure: Option<IdentityCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub identity: IdentityId,
    pub anchor: &'static str,
    pub range: Ranges,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub failures: Vec<IdentityCase>,
    pub errata: Vec<ErrataNote>,
    pub interpretation: bool,
    /// Every cell in grid order.
    #[serde(skip)]
    pub cases: Vec<IdentityCase>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Deliberately broken variants of catalog entries, used to show that the
/// checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Drop the `x_n M_(k-1)(n-1)` term of the four-term recurrence.
    Rec4DropLinear,
    /// Sum over every exponent of `x_n`, not only residues 0 and 1.
    Rec3AllResidues,
    /// Shift the first-kind Stirling column by one.
    Ps1ShiftedIndex,
    /// Numerator `1 + r x^s` in the second-kind generating function.
    S2modGfPrintedNumerator,
    /// Weight `n^l` instead of `(n-1)^l` in the first-kind recurrence.
    S1modRecShiftedWeight,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::Rec4DropLinear,
        Mutation::Rec3AllResidues,
        Mutation::Ps1ShiftedIndex,
        Mutation::S2modGfPrintedNumerator,
        Mutation::S1modRecShiftedWeight,
    ];

    pub fn target(self) -> IdentityId {
        match self {
            Mutation::Rec4DropLinear => IdentityId::Rec4,
            Mutation::Rec3AllResidues => IdentityId::Rec3,
            Mutation::Ps1ShiftedIndex => IdentityId::Ps1,
            Mutation::S2modGfPrintedNumerator => IdentityId::S2modGf,
            Mutation::S1modRecShiftedWeight => IdentityId::S1modRec,
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::Rec4DropLinear => "rec4-drop-linear",
            Mutation::Rec3AllResidues => "rec3-all-residues",
            Mutation::Ps1ShiftedIndex => "ps1-shifted-index",
            Mutation::S2modGfPrintedNumerator => "s2mod-gf-printed-numerator",
            Mutation::S1modRecShiftedWeight => "s1mod-rec-shifted-weight",
        })
    }
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::usage(format!("unknown mutation '{s}'")))
    }
}

fn run_cells(id: IdentityId, cells: &[Params], form: Form) -> Vec<IdentityCase> {
    cells
        .par_iter()
        .map(|p| {
            let (lhs, rhs, status, reason) = match check(id, p, form) {
                Outcome::Compare(l, r) => {
                    let status = if l == r { Status::Pass } else { Status::Fail };
                    (Some(l), Some(r), status, None)
                }
                Outcome::Skip(why) => (None, None, Status::Skipped(why.clone()), Some(why)),
            };
            IdentityCase {
                id,
                params: p.clone(),
                lhs,
                rhs,
                status,
                reason,
            }
        })
        .collect()
}

fn report(id: IdentityId, ranges: &Ranges, form: Form) -> Result<VerifyReport> {
    let cells = grid(id, ranges)?;
    let cases = run_cells(id, &cells, form);
    let count = |pred: fn(&Status) -> bool| cases.iter().filter(|c| pred(&c.status)).count();
    let errata = match form {
        Form::Stated => errata_notes(id),
        _ => Vec::new(),
    };
    Ok(VerifyReport {
        identity: id,
        anchor: id.anchor(),
        range: ranges.clone(),
        pass: count(|s| *s == Status::Pass),
        fail: count(|s| *s == Status::Fail),
        skipped: count(|s| matches!(s, Status::Skipped(_))),
        failures: cases
            .iter()
            .filter(|c| c.status == Status::Fail)
            .cloned()
            .collect(),
        errata,
        interpretation: id.interpretation(),
        cases,
    })
}

/// Checks `id` on every cell of the grid described by `ranges`.
pub fn verify(id: IdentityId, ranges: &Ranges) -> Result<VerifyReport> {
    report(id, ranges, Form::Stated)
}

/// Runs the whole catalog at the profile's bounds.
pub fn verify_all(profile: Profile) -> Vec<VerifyReport> {
    IdentityId::ALL
        .into_iter()
        .map(|id| verify(id, &profile.ranges(id)).expect("profile grids are valid"))
        .collect()
}

/// The commonly printed statement of an errata entry, checked on `ranges`.
/// `None` for entries without errata.
pub fn verify_printed(id: IdentityId, ranges: &Ranges) -> Result<Option<VerifyReport>> {
    if !id.has_errata() {
        return Ok(None);
    }
    report(id, ranges, Form::Printed).map(Some)
}

/// Checks the mutated variant of `m.target()` on `ranges`.
pub fn verify_mutated(m: Mutation, ranges: &Ranges) -> Result<VerifyReport> {
    report(m.target(), ranges, Form::Mutated(m))
}

/// Runs every mutation at the quick bounds of its target. A sound suite
/// reports at least one failure for each.
pub fn mutation_self_test() -> Vec<(Mutation, VerifyReport)> {
    Mutation::ALL
        .into_iter()
        .map(|m| {
            let r = verify_mutated(m, &Profile::Quick.ranges(m.target()))
                .expect("profile grids are valid");
            (m, r)
        })
        .collect()
}

fn errata_notes(id: IdentityId) -> Vec<ErrataNote> {
    let (printed, checked, range) = match id {
        IdentityId::S2modGf => (
            "sum_n S2mod(n,k,s) x^(n-k) = prod_(r=1..k) (1 + r x^s) / (1 - (r x)^(s+1))",
            "numerator 1 + r x",
            Ranges {
                n_max: Some(8),
                k_max: Some(3),
                s_max: Some(3),
                ..Ranges::default()
            },
        ),
        IdentityId::InvH => (
            "h_k(x^s) = sum_(j=0..k(s+1)) (-1)^j h_j M_(k(s+1)-j)^(s)",
            "left side h_k(x^(s+1))",
            Ranges {
                n_max: Some(2),
                k_max: Some(2),
                s_max: Some(2),
                ..Ranges::default()
            },
        ),
        IdentityId::InvE => (
            "e_k = sum_j (-1)^j e_j M_(k-j(s+1))^(s)",
            "e_j evaluated at x^(s+1)",
            Ranges {
                n_max: Some(3),
                k_max: Some(4),
                s_max: Some(2),
                ..Ranges::default()
            },
        ),
        _ => return Vec::new(),
    };
    let cells = grid(id, &range).expect("fixed errata grid");
    let cases = run_cells(id, &cells, Form::Printed);
    let failing: Vec<&IdentityCase> = cases.iter().filter(|c| c.status == Status::Fail).collect();
    vec![ErrataNote {
        printed,
        checked,
        range,
        cells: cases.len(),
        failing: failing.len(),
        first_failure: failing.first().map(|c| (*c).clone()),
    }]
}

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::Ranges;

/// Identifier of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    GfM,
    Rec3,
    Rec4,
    Paths,
    Tilings,
    AllOnes,
    S2modSpec,
    S2modRec,
    S2modGf,
    PartMod,
    PartZero,
    Ps1,
    Fermat,
    Lmod,
    EVanish,
    ConvHe,
    InvH,
    InvE,
    InvZero,
    EhMe,
    S1modDef,
    S1modRec,
    S1modPart,
    Nested,
    HigherRec,
    Omega,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 26] = [
        GfM, Rec3, Rec4, Paths, Tilings, AllOnes, S2modSpec, S2modRec, S2modGf, PartMod, PartZero,
        Ps1, Fermat, Lmod, EVanish, ConvHe, InvH, InvE, InvZero, EhMe, S1modDef, S1modRec,
        S1modPart, Nested, HigherRec, Omega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfM => "GF_M",
            Rec3 => "REC3",
            Rec4 => "REC4",
            Paths => "PATHS",
            Tilings => "TILINGS",
            AllOnes => "ALLONES",
            S2modSpec => "S2MOD_SPEC",
            S2modRec => "S2MOD_REC",
            S2modGf => "S2MOD_GF",
            PartMod => "PART_MOD",
            PartZero => "PART_ZERO",
            Ps1 => "PS1",
            Fermat => "FERMAT",
            Lmod => "LMOD",
            EVanish => "EVANISH",
            ConvHe => "CONV_HE",
            InvH => "INV_H",
            InvE => "INV_E",
            InvZero => "INV_ZERO",
            EhMe => "EH_ME",
            S1modDef => "S1MOD_DEF",
            S1modRec => "S1MOD_REC",
            S1modPart => "S1MOD_PART",
            Nested => "NESTED",
            HigherRec => "HIGHER_REC",
            Omega => "OMEGA",
        }
    }

    /// The identity as a formula.
    pub fn anchor(self) -> &'static str {
        match self {
            GfM => "sum_k M_k^(s) t^k = prod_i (1 + x_i t) / (1 - (x_i t)^(s+1))",
            Rec3 => "M_k^(s)(x_1..x_n) = sum_(j = 0,1 mod s+1) x_n^j M_(k-j)^(s)(x_1..x_(n-1))",
            Rec4 => "M_k^(s)(n) = x_n^(s+1) M_(k-s-1)^(s)(n) + x_n M_(k-1)^(s)(n-1) + M_k^(s)(n-1), k >= s+1",
            Paths => "M_k^(s)(x_1..x_n) = weight sum of lattice paths with level counts = 0,1 mod s+1",
            Tilings => "M_k^(s)(x_1..x_n) = weight sum of tilings with black runs = 0,1 mod s+1",
            AllOnes => "M_k^(s)(1..1) = sum_j C(n, k-j(s+1)) C(j+n-1, n-1)",
            S2modSpec => "S2mod(n,k,s) = M_(n-k)^(s)(1, ..., k)",
            S2modRec => "S2mod(n,k) = S2mod(n-1,k-1) + k S2mod(n-2,k-1) + k^(s+1) S2mod(n-s-1,k)",
            S2modGf => "sum_n S2mod(n,k,s) x^(n-k) = prod_(r=1..k) (1 + r x) / (1 - (r x)^(s+1))",
            PartMod => "S2mod(n,k,s) = #partitions of [n] into k blocks with gaps = 0,1 mod s+1",
            PartZero => "#partitions of [n] into k blocks with gaps = 0 mod s+1 = h_((n-k)/(s+1))(1^(s+1), ..., k^(s+1))",
            Ps1 => "S2mod(n+k,n,s) = sum_i h_(q-i)(1^(s+1), ..., n^(s+1)) S1(n+1, n+1-r-i(s+1)), k = q(s+1)+r",
            Fermat => "S2mod(n+k,n,p-1) = sum_i S2(n+q-i, n) S1(n+1, n+1-r-ip) mod p, k = qp+r",
            Lmod => "M_k^(s,l)(1..n) = sum_i h_(c-il)(1^(s+1), ..., n^(s+1)) [n+1, n+1-r-i(s+1)]_l, r = k l^-1 mod s+1, c = floor(k/(s+1)) - floor(rl/(s+1))",
            EVanish => "sum_i (-1)^i E_i^(s) M_(k-i)^(s) = 0 for odd s, k >= 1",
            ConvHe => "M_k^(s) = sum_j h_j(x^(s+1)) e_(k-(s+1)j)",
            InvH => "h_k(x^(s+1)) = sum_(j=0..k(s+1)) (-1)^j h_j M_(k(s+1)-j)^(s)",
            InvE => "e_k = sum_j (-1)^j e_j(x^(s+1)) M_(k-j(s+1))^(s)",
            InvZero => "sum_(j=0..k) (-1)^j h_j M_(k-j)^(s) = 0 when k != 0 mod s+1",
            EhMe => "sum_j e_j h_(k-j) = sum_j M_j^(s) E_(k-j)^(s)",
            S1modDef => "S1mod(n+1,k+1,s) = (n!)^s E_k^(s)(1, 1/2, ..., 1/n)",
            S1modRec => "S1mod(n,k) = sum_(l=0..s) S1mod(n-1, k-(s-l)) (n-1)^l, S1mod(0, 1-s) = 1",
            S1modPart => "S1mod(n+1,k+1,s) = #partitions of [n(s+1)-k] into n blocks with gaps <= s",
            Nested => "S1mod(n,k,s) = #s-tuples of permutations with nested min-sets and k+s-1 cycles",
            HigherRec => "#s-tuples of k-cycle permutations sharing one min-set = T(n-1,k-1) + (n-1)^s T(n-1,k)",
            Omega => "x(x+1^s)...(x+(n-1)^s) = sum_k T_s(n,k) x^k",
        }
    }

    /// The check depends on reading a bracket as the higher-level Stirling
    /// number; a failure would point at that reading.
    pub fn interpretation(self) -> bool {
        self == Lmod
    }

    /// Entries whose commonly printed statement differs from the checked form.
    pub fn has_errata(self) -> bool {
        matches!(self, S2modGf | InvH | InvE)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| Error::usage(format!("unknown identity '{s}'")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

/// Catalog row.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityInfo {
    pub id: IdentityId,
    pub anchor: &'static str,
    pub interpretation: bool,
    pub errata: bool,
}

pub fn list_identities() -> Vec<IdentityInfo> {
    IdentityId::ALL
        .into_iter()
        .map(|id| IdentityInfo {
            id,
            anchor: id.anchor(),
            interpretation: id.interpretation(),
            errata: id.has_errata(),
        })
        .collect()
}

/// Preset bounds for [`super::verify_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::usage(format!(
                "unknown profile '{other}' (expected quick or full)"
            ))),
        }
    }
}

fn nks(n: usize, k: usize, s: usize) -> Ranges {
    Ranges {
        n_max: Some(n),
        k_max: Some(k),
        s_max: Some(s),
        ..Ranges::default()
    }
}

fn ns(n: usize, s: usize) -> Ranges {
    Ranges {
        n_max: Some(n),
        s_max: Some(s),
        ..Ranges::default()
    }
}

impl Profile {
    pub fn ranges(self, id: IdentityId) -> Ranges {
        match self {
            Profile::Full => match id {
                GfM => nks(5, 10, 3),
                Rec3 | Rec4 => nks(8, 8, 4),
                Paths | Tilings => nks(4, 8, 3),
                AllOnes => nks(6, 12, 4),
                S2modSpec => ns(12, 4),
                S2modRec => ns(20, 4),
                S2modGf => nks(26, 6, 4),
                PartMod | PartZero => ns(10, 4),
                Ps1 => nks(5, 10, 4),
                Fermat => Ranges {
                    p_list: Some(vec![2, 3, 5]),
                    ..nks(5, 10, 4)
                },
                Lmod => nks(4, 8, 4),
                EVanish => nks(3, 6, 4),
                ConvHe => nks(6, 8, 4),
                InvH => nks(3, 4, 3),
                InvE | InvZero => nks(3, 7, 3),
                EhMe => nks(3, 6, 3),
                S1modDef => ns(5, 3),
                S1modRec => ns(10, 4),
                S1modPart => Ranges {
                    board_max: Some(12),
                    ..ns(5, 3)
                },
                Nested => ns(4, 3),
                HigherRec => ns(5, 3),
                Omega => ns(10, 3),
            },
            Profile::Quick => match id {
                GfM => nks(3, 6, 2),
                Rec3 | Rec4 => nks(4, 6, 3),
                Paths | Tilings => nks(3, 5, 2),
                AllOnes => nks(4, 8, 3),
                S2modSpec => ns(8, 3),
                S2modRec => ns(12, 3),
                S2modGf => nks(12, 4, 3),
                PartMod | PartZero => ns(7, 3),
                Ps1 => nks(4, 8, 3),
                Fermat => Ranges {
                    p_list: Some(vec![2, 3, 5]),
                    ..nks(3, 6, 4)
                },
                Lmod => nks(3, 6, 3),
                EVanish => nks(3, 5, 3),
                ConvHe => nks(4, 6, 3),
                InvH => nks(2, 3, 2),
                InvE | InvZero => nks(3, 5, 2),
                EhMe => nks(3, 5, 2),
                S1modDef => ns(4, 2),
                S1modRec => ns(6, 3),
                S1modPart => Ranges {
                    board_max: Some(8),
                    ..ns(4, 2)
                },
                Nested => ns(3, 2),
                HigherRec => ns(4, 2),
                Omega => ns(6, 2),
            },
        }
    }
}

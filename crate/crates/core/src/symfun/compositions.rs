use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Which part sizes a weak composition may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PartRule {
    Any,
    AtMost(usize),
    /// Parts congruent to 0 or `residue` modulo `modulus`.
    Residues {
        modulus: usize,
        residue: usize,
    },
}

impl PartRule {
    pub(crate) fn admits(self, a: usize) -> bool {
        match self {
            PartRule::Any => true,
            PartRule::AtMost(b) => a <= b,
            PartRule::Residues { modulus, residue } => {
                let r = a % modulus;
                r == 0 || r == residue
            }
        }
    }

    /// Admissible part sizes up to `k`, ascending.
    pub(crate) fn parts_upto(self, k: usize) -> Vec<usize> {
        match self {
            PartRule::Any => (0..=k).collect(),
            PartRule::AtMost(b) => (0..=k.min(b)).collect(),
            PartRule::Residues { modulus, residue } => {
                let mut out = Vec::new();
                let mut base = 0;
                while base <= k {
                    out.push(base);
                    if residue != 0 && base + residue <= k {
                        out.push(base + residue);
                    }
                    base += modulus;
                }
                out
            }
        }
    }
}

/// Calls `f` with every weak composition of `k` into `n` admissible parts.
///
/// Descends from the last variable, only ever stepping through admissible
/// part sizes; the first variable absorbs the remainder.
pub(crate) fn for_each_composition(n: usize, k: usize, rule: PartRule, f: &mut impl FnMut(&[u32])) {
    if n == 0 {
        if k == 0 {
            f(&[]);
        }
        return;
    }
    let parts = rule.parts_upto(k);
    let mut exps = vec![0u32; n];
    descend(n - 1, k, &parts, rule, &mut exps, f);
}

fn descend(
    var: usize,
    remaining: usize,
    parts: &[usize],
    rule: PartRule,
    exps: &mut [u32],
    f: &mut impl FnMut(&[u32]),
) {
    if var == 0 {
        if rule.admits(remaining) {
            exps[0] = remaining as u32;
            f(exps);
        }
        return;
    }
    for &a in parts {
        if a > remaining {
            break;
        }
        exps[var] = a as u32;
        descend(var - 1, remaining - a, parts, rule, exps, f);
    }
}

/// `sum over admissible compositions a of k of prod_i point[i]^a_i`.
///
/// Same enumeration as [`for_each_composition`], with the monomial value
/// accumulated along the descent instead of materialized.
pub(crate) fn composition_sum_at(point: &[BigInt], k: usize, rule: PartRule) -> BigInt {
    let n = point.len();
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let parts = rule.parts_upto(k);
    // powers[i][j] = point[i]^parts[j]
    let powers: Vec<Vec<BigInt>> = point
        .iter()
        .map(|v| {
            parts
                .iter()
                .map(|&a| num_traits::pow(v.clone(), a))
                .collect()
        })
        .collect();
    let first_var: Vec<Option<BigInt>> = (0..=k)
        .map(|r| rule.admits(r).then(|| num_traits::pow(point[0].clone(), r)))
        .collect();
    sum_descend(n - 1, k, &parts, &powers, &first_var, &BigInt::one())
}

fn sum_descend(
    var: usize,
    remaining: usize,
    parts: &[usize],
    powers: &[Vec<BigInt>],
    first_var: &[Option<BigInt>],
    acc: &BigInt,
) -> BigInt {
    if var == 0 {
        return match &first_var[remaining] {
            Some(p) => acc * p,
            None => BigInt::zero(),
        };
    }
    let mut total = BigInt::zero();
    for (j, &a) in parts.iter().enumerate() {
        if a > remaining {
            break;
        }
        let next = acc * &powers[var][j];
        total += sum_descend(var - 1, remaining - a, parts, powers, first_var, &next);
    }
    total
}

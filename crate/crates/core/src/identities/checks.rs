//! Grid construction and per-cell evaluation of every catalog entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::enumerate::{
    count_equal_minset_tuples, count_nested_minset_tuples, count_partitions_bounded,
    count_partitions_mod, count_partitions_zeromod, gen_lattice_paths, gen_tilings, weight_sum,
    LatticePath, Tiling,
};
use crate::error::{Error, Result};
use crate::polycore::{ones_point, powered_range_point, range_point, Monomial, Polynomial};
use crate::stirling::{
    omega_poly, stirling1, stirling1_higher, stirling1_mod, stirling1_mod_rec, stirling2,
    stirling2_mod, stirling2_mod_series_with_numerator, Stirling2ModMethod,
};
use crate::symfun::{
    bounded_elem_sym, comp_sym, elem_sym, eval_comp_sym, eval_lmodular_sym, eval_modular_sym,
    modular_all_ones, modular_series, modular_sym, Method,
};

use super::catalog::IdentityId::{self, *};
use super::{Mutation, Params, Ranges};

/// Which statement of an identity a cell is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Form {
    Stated,
    Printed,
    Mutated(Mutation),
}

pub(crate) enum Outcome {
    Compare(String, String),
    Skip(String),
}

fn cmp(lhs: impl ToString, rhs: impl ToString) -> Outcome {
    Outcome::Compare(lhs.to_string(), rhs.to_string())
}

fn skip(reason: &str) -> Outcome {
    Outcome::Skip(reason.to_string())
}

fn need(v: Option<usize>, flag: &str, id: IdentityId) -> Result<usize> {
    v.ok_or_else(|| Error::usage(format!("{id} needs --{flag}")))
}

/// Cells in `(n, k, s)` order, then `l` or `p`.
pub(crate) fn grid(id: IdentityId, r: &Ranges) -> Result<Vec<Params>> {
    let n_max = need(r.n_max, "n-max", id)?;
    let needs_k = !matches!(
        id,
        S2modSpec
            | S2modRec
            | PartMod
            | PartZero
            | S1modDef
            | S1modRec
            | S1modPart
            | Nested
            | HigherRec
            | Omega
    );
    let k_cap = if needs_k {
        Some(need(r.k_max, "k-max", id)?)
    } else {
        r.k_max
    };
    let mut cells = Vec::new();

    if id == Fermat {
        let primes = r
            .p_list
            .clone()
            .ok_or_else(|| Error::usage("FERMAT needs --p-list"))?;
        let k_max = k_cap.unwrap_or(0);
        for n in 0..=n_max {
            for k in 0..=k_max {
                for &p in &primes {
                    cells.push(Params {
                        n: Some(n as i64),
                        k: Some(k as i64),
                        p: Some(p),
                        ..Params::default()
                    });
                }
            }
        }
        return non_empty(cells, id);
    }

    let s_max = need(r.s_max, "s-max", id)?;
    let n_min = usize::from(matches!(id, Rec3 | Rec4 | Paths | Tilings));
    let board_max = if id == S1modPart {
        Some(need(r.board_max, "board-max", id)?)
    } else {
        None
    };

    // k range for the cell, as a closed interval
    let k_bounds = |n: usize, s: usize| -> (i64, i64) {
        let (n, s) = (n as i64, s as i64);
        match id {
            S2modSpec | S2modRec | PartMod | PartZero | HigherRec | Omega => (0, n),
            S2modGf => (0, n),
            S1modDef | S1modPart => (0, n * s),
            S1modRec => (0, ((n - 1) * s + 1).max(0)),
            Nested => (1 - s, ((n - 1) * s + 1).max(1 - s)),
            _ => (0, i64::MAX),
        }
    };
    let k_lo = if id == Nested { 1 - s_max as i64 } else { 0 };
    let k_hi = match k_cap {
        Some(c) if needs_k => c as i64,
        cap => {
            let widest = (0..=n_max)
                .flat_map(|n| (1..=s_max).map(move |s| (n, s)))
                .map(|(n, s)| k_bounds(n, s).1)
                .max()
                .unwrap_or(0);
            cap.map_or(widest, |c| widest.min(c as i64))
        }
    };

    for n in n_min..=n_max {
        for k in k_lo..=k_hi {
            for s in 1..=s_max {
                let (lo, hi) = k_bounds(n, s);
                if k < lo || k > hi {
                    continue;
                }
                if let Some(b) = board_max {
                    if (n * (s + 1)) as i64 - k > b as i64 {
                        continue;
                    }
                }
                let base = Params {
                    n: Some(n as i64),
                    k: Some(k),
                    s: Some(s),
                    ..Params::default()
                };
                if id == Lmod {
                    let ells: Vec<usize> = match &r.ell {
                        Some(list) => list.iter().copied().filter(|&l| l <= s).collect(),
                        None => (0..=s).collect(),
                    };
                    for l in ells {
                        cells.push(Params {
                            ell: Some(l),
                            ..base.clone()
                        });
                    }
                } else {
                    cells.push(base);
                }
            }
        }
    }
    non_empty(cells, id)
}

fn non_empty(cells: Vec<Params>, id: IdentityId) -> Result<Vec<Params>> {
    if cells.is_empty() {
        return Err(Error::usage(format!("empty parameter grid for {id}")));
    }
    Ok(cells)
}

fn m(n: usize, k: usize, s: usize) -> Polynomial {
    modular_sym(n, k, s, Method::Enumeration)
}

fn signed(j: usize, p: Polynomial) -> Polynomial {
    if j.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Index `i` below zero reads as zero.
fn h_powered(n: usize, idx: i64, e: u32) -> BigInt {
    if idx < 0 {
        return BigInt::zero();
    }
    eval_comp_sym(&powered_range_point(n, e), idx as usize)
}

fn s1(n: usize, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        stirling1(n, k as usize)
    }
}

/// First-kind modular recurrence with the weight `n^l` in place of `(n-1)^l`.
fn shifted_first_mod_rec(n: usize, k: i64, s: usize) -> BigInt {
    let lo = 1 - s as i64;
    let hi = (n * s) as i64 + 1;
    let width = (hi - lo + 1) as usize;
    let mut row = vec![BigInt::zero(); width];
    row[0] = BigInt::one();
    for m in 1..=n {
        let w = BigInt::from(m);
        let mut next = vec![BigInt::zero(); width];
        for (idx, v) in next.iter_mut().enumerate() {
            for l in 0..=s {
                if let Some(j) = idx.checked_sub(s - l) {
                    *v += &row[j] * Pow::pow(&w, l as u32);
                }
            }
        }
        row = next;
    }
    if k < lo || k > hi {
        return BigInt::zero();
    }
    row[(k - lo) as usize].clone()
}

pub(crate) fn check(id: IdentityId, p: &Params, form: Form) -> Outcome {
    let n = p.n.unwrap_or(0) as usize;
    let ki = p.k.unwrap_or(0);
    let k = ki.max(0) as usize;
    let s = p.s.unwrap_or(1);
    let mutated = |mu: Mutation| form == Form::Mutated(mu);
    match id {
        GfM => cmp(modular_series(n, s, k).coeff(k), m(n, k, s)),
        Rec3 => {
            let all = mutated(Mutation::Rec3AllResidues);
            let rhs: Polynomial = (0..=k)
                .filter(|j| all || j % (s + 1) <= 1)
                .map(|j| m(n - 1, k - j, s).shift(&Monomial::var_pow(n, j as u32)))
                .sum();
            cmp(m(n, k, s), rhs)
        }
        Rec4 => {
            if k < s + 1 {
                return skip("k < s+1");
            }
            let mut rhs =
                m(n, k - s - 1, s).shift(&Monomial::var_pow(n, (s + 1) as u32)) + m(n - 1, k, s);
            if !mutated(Mutation::Rec4DropLinear) {
                rhs += &m(n - 1, k - 1, s).shift(&Monomial::var_pow(n, 1));
            }
            cmp(m(n, k, s), rhs)
        }
        Paths => cmp(
            weight_sum(gen_lattice_paths(n, k, s), LatticePath::weight),
            modular_sym(n, k, s, Method::Recurrence),
        ),
        Tilings => cmp(
            weight_sum(gen_tilings(n, k, s), Tiling::weight),
            modular_sym(n, k, s, Method::Recurrence),
        ),
        AllOnes => cmp(
            modular_all_ones(n, k, s),
            eval_modular_sym(&ones_point(n), k, s),
        ),
        S2modSpec => {
            let special =
                stirling2_mod(n, k, s, Stirling2ModMethod::Specialization).expect("k <= n");
            let poly = modular_sym(k, n - k, s, Method::Recurrence);
            cmp(special, poly.eval(&range_point(k)).expect("k variables"))
        }
        S2modRec => cmp(
            stirling2_mod(n, k, s, Stirling2ModMethod::Recurrence).expect("k <= n"),
            stirling2_mod(n, k, s, Stirling2ModMethod::Specialization).expect("k <= n"),
        ),
        S2modGf => {
            let power = if form == Form::Printed || mutated(Mutation::S2modGfPrintedNumerator) {
                s
            } else {
                1
            };
            let series = stirling2_mod_series_with_numerator(k, s, n - k, power);
            cmp(
                &series[n - k],
                stirling2_mod(n, k, s, Stirling2ModMethod::Recurrence).expect("k <= n"),
            )
        }
        PartMod => cmp(
            count_partitions_mod(n, k, s),
            stirling2_mod(n, k, s, Stirling2ModMethod::Recurrence).expect("k <= n"),
        ),
        PartZero => {
            if !(n - k).is_multiple_of(s + 1) {
                return skip("s+1 does not divide n-k");
            }
            cmp(
                count_partitions_zeromod(n, k, s),
                h_powered(k, ((n - k) / (s + 1)) as i64, (s + 1) as u32),
            )
        }
        Ps1 => {
            let (q, r) = (k / (s + 1), k % (s + 1));
            let upper = ((n as i64 - r as i64).div_euclid((s + 1) as i64)).min(q as i64);
            let shift = i64::from(mutated(Mutation::Ps1ShiftedIndex));
            let rhs: BigInt = (0..=upper)
                .map(|i| {
                    let idx = (n + 1) as i64 - r as i64 - i * (s + 1) as i64 - shift;
                    h_powered(n, q as i64 - i, (s + 1) as u32) * s1(n + 1, idx)
                })
                .sum();
            cmp(
                stirling2_mod(n + k, n, s, Stirling2ModMethod::Recurrence).expect("n <= n+k"),
                rhs,
            )
        }
        Fermat => {
            let pr = p.p.expect("prime in grid");
            if !is_prime(pr) {
                return skip("p is not prime");
            }
            let pu = pr as usize;
            let (q, r) = (k / pu, k % pu);
            let upper = ((n as i64 - r as i64).div_euclid(pu as i64)).min(q as i64);
            let rhs: BigInt = (0..=upper)
                .map(|i| {
                    let i = i as usize;
                    stirling2(n + q - i, n) * s1(n + 1, (n + 1) as i64 - (r + i * pu) as i64)
                })
                .sum();
            let lhs =
                stirling2_mod(n + k, n, pu - 1, Stirling2ModMethod::Recurrence).expect("n <= n+k");
            let modulus = BigInt::from(pr);
            cmp(lhs.mod_floor(&modulus), rhs.mod_floor(&modulus))
        }
        Lmod => {
            let l = p.ell.expect("ell in grid");
            let m1 = s + 1;
            if l.gcd(&m1) != 1 {
                return skip("gcd(ell, s+1) != 1");
            }
            let inv = (1..m1)
                .find(|x| (x * l) % m1 == 1)
                .expect("unit has an inverse");
            let r = (k * inv) % m1;
            let c = (k / m1) as i64 - ((r * l) / m1) as i64;
            let upper = ((n as i64 - r as i64).div_euclid(m1 as i64)).min(c);
            let rhs: BigInt = (0..=upper)
                .map(|i| {
                    let col = (n + 1) as i64 - r as i64 - i * m1 as i64;
                    let bracket = if col < 0 {
                        BigInt::zero()
                    } else {
                        stirling1_higher(n + 1, col as usize, l)
                    };
                    h_powered(n, c - i * l as i64, m1 as u32) * bracket
                })
                .sum();
            cmp(
                eval_lmodular_sym(&range_point(n), k, s, l).expect("ell <= s"),
                rhs,
            )
        }
        EVanish => {
            if s.is_multiple_of(2) {
                return skip("s is even");
            }
            if k == 0 {
                return skip("k = 0");
            }
            let lhs: Polynomial = (0..=k)
                .map(|i| signed(i, &bounded_elem_sym(n, i, s) * &m(n, k - i, s)))
                .sum();
            cmp(lhs, Polynomial::zero())
        }
        ConvHe => cmp(m(n, k, s), modular_sym(n, k, s, Method::Convolution)),
        InvH => {
            let top = k * (s + 1);
            let power = if form == Form::Printed { s } else { s + 1 };
            let rhs: Polynomial = (0..=top)
                .map(|j| signed(j, &comp_sym(n, j) * &m(n, top - j, s)))
                .sum();
            cmp(comp_sym(n, k).substitute_power(power as u32), rhs)
        }
        InvE => {
            let powered = form != Form::Printed;
            let rhs: Polynomial = (0..=k / (s + 1))
                .map(|j| {
                    let e = elem_sym(n, j);
                    let e = if powered {
                        e.substitute_power((s + 1) as u32)
                    } else {
                        e
                    };
                    signed(j, &e * &m(n, k - j * (s + 1), s))
                })
                .sum();
            cmp(elem_sym(n, k), rhs)
        }
        InvZero => {
            if k.is_multiple_of(s + 1) {
                return skip("k is a multiple of s+1");
            }
            let lhs: Polynomial = (0..=k)
                .map(|j| signed(j, &comp_sym(n, j) * &m(n, k - j, s)))
                .sum();
            cmp(lhs, Polynomial::zero())
        }
        EhMe => {
            let lhs: Polynomial = (0..=k).map(|j| &elem_sym(n, j) * &comp_sym(n, k - j)).sum();
            let rhs: Polynomial = (0..=k)
                .map(|j| &m(n, j, s) * &bounded_elem_sym(n, k - j, s))
                .sum();
            cmp(lhs, rhs)
        }
        S1modDef => {
            // (n!)^s prod_i (1/i)^(a_i) = prod_i i^(s - a_i)
            let lhs: BigInt = bounded_elem_sym(n, k, s)
                .terms()
                .map(|(mono, c)| {
                    (1..=n)
                        .map(|i| Pow::pow(BigInt::from(i), s as u32 - mono.exponent(i)))
                        .product::<BigInt>()
                        * c
                })
                .sum();
            cmp(lhs, stirling1_mod(n + 1, k + 1, s))
        }
        S1modRec => {
            let rhs = if mutated(Mutation::S1modRecShiftedWeight) {
                shifted_first_mod_rec(n, ki, s)
            } else {
                stirling1_mod_rec(n, ki, s)
            };
            cmp(stirling1_mod(n, k, s), rhs)
        }
        S1modPart => cmp(
            count_partitions_bounded(n * (s + 1) - k, n, s),
            stirling1_mod(n + 1, k + 1, s),
        ),
        Nested => cmp(
            count_nested_minset_tuples(n, ki, s),
            stirling1_mod_rec(n, ki, s),
        ),
        HigherRec => cmp(
            count_equal_minset_tuples(n, k, s),
            stirling1_higher(n, k, s),
        ),
        Omega => {
            let coeffs = omega_poly(n, s).univariate_coeffs().expect("univariate");
            cmp(
                coeffs.get(k).cloned().unwrap_or_default(),
                stirling1_higher(n, k, s),
            )
        }
    }
}

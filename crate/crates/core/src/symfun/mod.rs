//! Symmetric polynomials: `e_k`, `h_k`, the modular function `M_k^(s)`,
//! the `l`-modular function `M_k^(s,l)` and the bounded elementary function
//! `E_k^(s)`.
//!
//! `M_k^(s)(x_1..x_n)` sums every monomial of degree `k` whose exponents are
//! all congruent to 0 or 1 modulo `s+1`. It is available through three
//! independent routes (see [`Method`]) that must agree exactly.
//!
//! The `eval_*` functions compute the same sums at an integer point without
//! building the polynomial.

mod compositions;

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::{Monomial, Polynomial, TruncatedSeries};

pub(crate) use compositions::{composition_sum_at, for_each_composition, PartRule};

/// Parameters shared by the symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymFunParams {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub ell: usize,
}

impl SymFunParams {
    pub fn new(n: usize, k: usize, s: usize, ell: usize) -> Result<Self> {
        check_s(s)?;
        check_ell(s, ell)?;
        Ok(SymFunParams { n, k, s, ell })
    }
}

fn check_s(s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::usage("s must be at least 1"));
    }
    Ok(())
}

fn check_ell(s: usize, ell: usize) -> Result<()> {
    if ell > s {
        return Err(Error::usage(format!(
            "ell must satisfy 0 <= ell <= s (got ell={ell}, s={s})"
        )));
    }
    Ok(())
}

fn modular_rule(s: usize) -> PartRule {
    PartRule::Residues {
        modulus: s + 1,
        residue: 1,
    }
}

/// Route used by [`modular_sym`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Sum over admissible exponent vectors.
    Enumeration,
    /// Recurrence on the number of variables, with the four-term shortcut
    /// for `k >= s+1`.
    Recurrence,
    /// `sum_j h_j(x^(s+1)) e_(k-(s+1)j)`.
    Convolution,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Enumeration, Method::Recurrence, Method::Convolution];
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "enumeration" => Ok(Method::Enumeration),
            "recurrence" => Ok(Method::Recurrence),
            "convolution" => Ok(Method::Convolution),
            other => Err(Error::usage(format!(
                "unknown method '{other}' (expected enumeration, recurrence or convolution)"
            ))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::Recurrence => "recurrence",
            Method::Convolution => "convolution",
        })
    }
}

fn monomial_of_indices(indices: &[usize]) -> Monomial {
    let mut exps = vec![0u32; indices.last().copied().unwrap_or(0)];
    for &i in indices {
        exps[i - 1] += 1;
    }
    Monomial::new(exps)
}

/// `e_k(x_1..x_n)`: products over strictly increasing index subsets.
pub fn elem_sym(n: usize, k: usize) -> Polynomial {
    Polynomial::from_terms(
        (1..=n)
            .combinations(k)
            .map(|idx| (monomial_of_indices(&idx), BigInt::from(1))),
    )
}

/// `h_k(x_1..x_n)`: products over weakly increasing index multisets.
pub fn comp_sym(n: usize, k: usize) -> Polynomial {
    if k == 0 {
        return Polynomial::one();
    }
    Polynomial::from_terms(
        (1..=n)
            .combinations_with_replacement(k)
            .map(|idx| (monomial_of_indices(&idx), BigInt::from(1))),
    )
}

fn composition_poly(n: usize, k: usize, rule: PartRule) -> Polynomial {
    let mut p = Polynomial::zero();
    for_each_composition(n, k, rule, &mut |e| {
        p.add_term(Monomial::new(e.to_vec()), BigInt::from(1))
    });
    p
}

/// `M_k^(s)(x_1..x_n)` by the chosen route.
///
/// # Panics
/// If `s == 0`.
pub fn modular_sym(n: usize, k: usize, s: usize, method: Method) -> Polynomial {
    assert!(s >= 1, "s must be at least 1");
    match method {
        Method::Enumeration => composition_poly(n, k, modular_rule(s)),
        Method::Recurrence => modular_recurrence_table(n, k, s)
            .swap_remove(n)
            .swap_remove(k),
        Method::Convolution => modular_convolution(n, k, s),
    }
}

/// Table `t[m][j] = M_j^(s)(x_1..x_m)` for `m <= n`, `j <= k`, built bottom-up.
///
/// For `j >= s+1`:
/// `M_j(m) = x_m^(s+1) M_(j-s-1)(m) + x_m M_(j-1)(m-1) + M_j(m-1)`;
/// below that only residues 0 and 1 fit, so
/// `M_j(m) = M_j(m-1) + x_m M_(j-1)(m-1)`.
pub fn modular_recurrence_table(n: usize, k: usize, s: usize) -> Vec<Vec<Polynomial>> {
    let mut table: Vec<Vec<Polynomial>> = Vec::with_capacity(n + 1);
    table.push(
        (0..=k)
            .map(|j| {
                if j == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                }
            })
            .collect(),
    );
    for m in 1..=n {
        let xm = Monomial::var_pow(m, 1);
        let xm_s1 = Monomial::var_pow(m, (s + 1) as u32);
        let mut row: Vec<Polynomial> = Vec::with_capacity(k + 1);
        for j in 0..=k {
            let prev = &table[m - 1];
            let mut v = prev[j].clone();
            if j >= 1 {
                v += &prev[j - 1].shift(&xm);
            }
            if j > s {
                v += &row[j - s - 1].shift(&xm_s1);
            }
            row.push(v);
        }
        table.push(row);
    }
    table
}

fn modular_convolution(n: usize, k: usize, s: usize) -> Polynomial {
    (0..=k / (s + 1))
        .map(|j| {
            let h = comp_sym(n, j).substitute_power((s + 1) as u32);
            &h * &elem_sym(n, k - (s + 1) * j)
        })
        .sum()
}

/// `M_k^(s,l)(x_1..x_n)`: exponents congruent to 0 or `ell` modulo `s+1`.
pub fn lmodular_sym(n: usize, k: usize, s: usize, ell: usize) -> Result<Polynomial> {
    check_s(s)?;
    check_ell(s, ell)?;
    Ok(composition_poly(
        n,
        k,
        PartRule::Residues {
            modulus: s + 1,
            residue: ell,
        },
    ))
}

/// `E_k^(s)(x_1..x_n)`: every exponent at most `s`.
pub fn bounded_elem_sym(n: usize, k: usize, s: usize) -> Polynomial {
    assert!(s >= 1, "s must be at least 1");
    composition_poly(n, k, PartRule::AtMost(s))
}

/// Expansion of `prod_i (1 + x_i t) / (1 - (x_i t)^(s+1))` through `t^degree_bound`.
pub fn modular_series(n: usize, s: usize, degree_bound: usize) -> TruncatedSeries {
    assert!(s >= 1, "s must be at least 1");
    let mut acc = TruncatedSeries::one(degree_bound);
    for i in 1..=n {
        let numerator = TruncatedSeries::var_powers(degree_bound, i, [0, 1]);
        let geometric =
            TruncatedSeries::var_powers(degree_bound, i, (0..=degree_bound).step_by(s + 1));
        acc = acc.mul(&numerator.mul(&geometric));
    }
    acc
}

/// Rows `0..=max_row` of Pascal's triangle.
pub fn pascal(max_row: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row + 1);
    for a in 0..=max_row {
        let mut row = vec![BigInt::from(1); a + 1];
        for b in 1..a {
            row[b] = &rows[a - 1][b - 1] + &rows[a - 1][b];
        }
        rows.push(row);
    }
    rows
}

fn choose(table: &[Vec<BigInt>], a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    table[a as usize][b as usize].clone()
}

/// `M_k^(s)(1, ..., 1)` in closed form:
/// `sum_j C(n, k - j(s+1)) C(j+n-1, n-1)`.
pub fn modular_all_ones(n: usize, k: usize, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    if n == 0 {
        return BigInt::from(u8::from(k == 0));
    }
    let jmax = k / (s + 1);
    let table = pascal(n.max(jmax + n - 1));
    (0..=jmax)
        .map(|j| {
            choose(&table, n as i64, (k - j * (s + 1)) as i64)
                * choose(&table, (j + n - 1) as i64, (n - 1) as i64)
        })
        .sum()
}

pub fn eval_elem_sym(point: &[BigInt], k: usize) -> BigInt {
    composition_sum_at(point, k, PartRule::AtMost(1))
}

pub fn eval_comp_sym(point: &[BigInt], k: usize) -> BigInt {
    composition_sum_at(point, k, PartRule::Any)
}

pub fn eval_modular_sym(point: &[BigInt], k: usize, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    composition_sum_at(point, k, modular_rule(s))
}

pub fn eval_lmodular_sym(point: &[BigInt], k: usize, s: usize, ell: usize) -> Result<BigInt> {
    check_s(s)?;
    check_ell(s, ell)?;
    Ok(composition_sum_at(
        point,
        k,
        PartRule::Residues {
            modulus: s + 1,
            residue: ell,
        },
    ))
}

pub fn eval_bounded_elem_sym(point: &[BigInt], k: usize, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    composition_sum_at(point, k, PartRule::AtMost(s))
}

//! Stirling-number families.
//!
//! | family          | value                                     |
//! |-----------------|-------------------------------------------|
//! | `stirling2`     | partitions of `[n]` into `k` blocks       |
//! | `stirling1`     | permutations of `[n]` with `k` cycles     |
//! | `stirling2_mod` | `M_(n-k)^(s)(1, ..., k)`                  |
//! | `stirling1_mod` | `E_((n-1)s-(k-1))^(s)(1, ..., n-1)`       |
//! | `stirling1_higher` | coefficient of `x^k` in `x(x+1^s)...(x+(n-1)^s)` |
//!
//! All values are exact. Whole rows are built bottom-up in explicit tables.

mod table;

pub use table::{Family, StirlingQuery, Triangle};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::polycore::{range_point, Polynomial};
use crate::symfun::{eval_bounded_elem_sym, eval_modular_sym};

/// Rows `0..=n_max` of the second-kind triangle, row `n` holding `k = 0..=n`.
pub fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let mut v = BigInt::zero();
                if k >= 1 {
                    v += &prev[k - 1];
                }
                if k < n {
                    v += &prev[k] * k;
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Rows `0..=n_max` of the unsigned first-kind triangle.
pub fn stirling1_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    stirling1_higher_triangle(1, n_max)
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling2_triangle(n).swap_remove(n).swap_remove(k)
}

pub fn stirling1(n: usize, k: usize) -> BigInt {
    stirling1_higher(n, k, 1)
}

/// `x(x+1)...(x+n-1)` in the variable `x1`.
pub fn rising_factorial_poly(n: usize) -> Polynomial {
    omega_poly(n, 1)
}

/// Route used by [`stirling2_mod`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stirling2ModMethod {
    /// Evaluate `M_(n-k)^(s)` at `(1, ..., k)` by enumerating exponent vectors.
    Specialization,
    /// `S(n,k) = S(n-1,k-1) + k S(n-2,k-1) + k^(s+1) S(n-s-1,k)`, the last
    /// term only while `n - k >= s+1`.
    Recurrence,
}

impl FromStr for Stirling2ModMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "specialization" => Ok(Stirling2ModMethod::Specialization),
            "recurrence" => Ok(Stirling2ModMethod::Recurrence),
            other => Err(Error::usage(format!(
                "unknown method '{other}' (expected specialization or recurrence)"
            ))),
        }
    }
}

impl fmt::Display for Stirling2ModMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stirling2ModMethod::Specialization => "specialization",
            Stirling2ModMethod::Recurrence => "recurrence",
        })
    }
}

/// Modular `s`-Stirling number of the second kind.
pub fn stirling2_mod(n: usize, k: usize, s: usize, method: Stirling2ModMethod) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::usage("s must be at least 1"));
    }
    if k > n {
        return Err(Error::usage(format!("need k <= n (got n={n}, k={k})")));
    }
    Ok(match method {
        Stirling2ModMethod::Specialization => eval_modular_sym(&range_point(k), n - k, s),
        Stirling2ModMethod::Recurrence => stirling2_mod_rows(s, n, k).swap_remove(n).swap_remove(k),
    })
}

/// Rows `0..=n_max` of the modular second-kind triangle (recurrence route).
pub fn stirling2_mod_triangle(s: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    assert!(s >= 1, "s must be at least 1");
    stirling2_mod_rows(s, n_max, n_max)
}

/// Rows `0..=n_max`, row `a` holding `k = 0..=min(a, k_max)`.
fn stirling2_mod_rows(s: usize, n_max: usize, k_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    let get = |rows: &Vec<Vec<BigInt>>, a: isize, b: usize| -> BigInt {
        if a < 0 {
            return BigInt::zero();
        }
        rows[a as usize].get(b).cloned().unwrap_or_default()
    };
    for a in 0..=n_max {
        let width = a.min(k_max);
        let mut row = Vec::with_capacity(width + 1);
        for b in 0..=width {
            let v = if b == 0 {
                BigInt::from(u8::from(a == 0))
            } else {
                let a = a as isize;
                let bb = BigInt::from(b);
                let mut v = get(&rows, a - 1, b - 1) + &bb * get(&rows, a - 2, b - 1);
                if a - b as isize > s as isize {
                    v += Pow::pow(&bb, (s + 1) as u32) * get(&rows, a - s as isize - 1, b);
                }
                v
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Modular `s`-Stirling number of the first kind, unshifted indices.
///
/// Computed as `E_((n-1)s-(k-1))^(s)(1, ..., n-1)`, which clears the
/// denominators of `((n-1)!)^s E_(k-1)^(s)(1, 1/2, ..., 1/(n-1))`.
/// Zero when that index is out of `0..=(n-1)s`. For `n = 0` the value is 1
/// exactly at `k = 1 - s`, so only `(0, 0)` with `s = 1` is nonzero here.
pub fn stirling1_mod(n: usize, k: usize, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    if n == 0 {
        return BigInt::from(u8::from(k == 0 && s == 1));
    }
    if k == 0 {
        return BigInt::zero();
    }
    let m = n - 1;
    let top = m * s;
    if k - 1 > top {
        return BigInt::zero();
    }
    eval_bounded_elem_sym(&range_point(m), top - (k - 1), s)
}

/// Row bounds `(lo, hi)` of nonzero first-kind modular values in row `n`.
fn first_mod_support(n: usize, s: usize) -> (i64, i64) {
    if n == 0 {
        let v = 1 - s as i64;
        (v, v)
    } else {
        (1, ((n - 1) * s + 1) as i64)
    }
}

/// Rows `0..=n_max` of the first-kind modular numbers by
/// `S(n,k) = sum_(l=0..s) S(n-1, k-(s-l)) (n-1)^l`, with `S(0, 1-s) = 1`.
/// Row `n` is indexed by `k - lo` where `lo = 1 - s`.
fn stirling1_mod_rec_rows(s: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    let lo = 1 - s as i64;
    let width = |n: usize| (first_mod_support(n, s).1 - lo) as usize + 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    let mut row0 = vec![BigInt::zero(); width(0)];
    row0[0] = BigInt::one();
    rows.push(row0);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let base = BigInt::from(n - 1);
        let powers: Vec<BigInt> = (0..=s).map(|l| Pow::pow(&base, l as u32)).collect();
        let row: Vec<BigInt> = (0..width(n))
            .map(|idx| {
                let k = lo + idx as i64;
                (0..=s)
                    .filter_map(|l| {
                        let kk = k - (s - l) as i64;
                        let j = kk - lo;
                        if j < 0 {
                            return None;
                        }
                        prev.get(j as usize).map(|v| v * &powers[l])
                    })
                    .sum()
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// First-kind modular numbers by their recurrence; `k` may be negative
/// (down to `1 - s`).
pub fn stirling1_mod_rec(n: usize, k: i64, s: usize) -> BigInt {
    assert!(s >= 1, "s must be at least 1");
    let lo = 1 - s as i64;
    if k < lo || k > first_mod_support(n, s).1 {
        return BigInt::zero();
    }
    stirling1_mod_rec_rows(s, n)
        .swap_remove(n)
        .swap_remove((k - lo) as usize)
}

/// Rows `0..=n_max` of the first-kind modular triangle, row `n` holding
/// `k = 0..=max(0, (n-1)s+1)`. Entries at negative `k` (only nonzero in
/// row 0 when `s > 1`) are not part of the triangle.
pub fn stirling1_mod_triangle(s: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    assert!(s >= 1, "s must be at least 1");
    let lo = 1 - s as i64;
    stirling1_mod_rec_rows(s, n_max)
        .into_iter()
        .enumerate()
        .map(|(n, row)| {
            let hi = first_mod_support(n, s).1.max(0);
            (0..=hi)
                .map(|k| row.get((k - lo) as usize).cloned().unwrap_or_default())
                .collect()
        })
        .collect()
}

/// Rows `0..=n_max` of the higher-level first-kind triangle:
/// `T(n,k) = T(n-1,k-1) + (n-1)^s T(n-1,k)`.
pub fn stirling1_higher_triangle(s: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    assert!(s >= 1, "s must be at least 1");
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let w = Pow::pow(&BigInt::from(n - 1), s as u32);
        let row = (0..=n)
            .map(|k| {
                let mut v = BigInt::zero();
                if k >= 1 {
                    v += &prev[k - 1];
                }
                if k < n {
                    v += &prev[k] * &w;
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn stirling1_higher(n: usize, k: usize, s: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling1_higher_triangle(s, n)
        .swap_remove(n)
        .swap_remove(k)
}

/// `x(x+1^s)(x+2^s)...(x+(n-1)^s)` in the variable `x1`; `1` for `n = 0`.
pub fn omega_poly(n: usize, s: usize) -> Polynomial {
    assert!(s >= 1, "s must be at least 1");
    let x = Polynomial::var(1);
    (0..n).fold(Polynomial::one(), |acc, i| {
        let shift = Polynomial::constant(Pow::pow(&BigInt::from(i), s as u32));
        &acc * &(&x + &shift)
    })
}

/// Truncated product of univariate integer series.
fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let len = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients `m = 0..=degree_bound` of
/// `prod_(r=1..k) (1 + r x) / (1 - (r x)^(s+1))`;
/// coefficient `m` is the modular number for `(k+m, k)`.
pub fn stirling2_mod_series(k: usize, s: usize, degree_bound: usize) -> Vec<BigInt> {
    stirling2_mod_series_with_numerator(k, s, degree_bound, 1)
}

/// Same product with numerator `1 + r x^numerator_power`.
pub(crate) fn stirling2_mod_series_with_numerator(
    k: usize,
    s: usize,
    degree_bound: usize,
    numerator_power: usize,
) -> Vec<BigInt> {
    assert!(s >= 1, "s must be at least 1");
    let len = degree_bound + 1;
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    for r in 1..=k {
        let rr = BigInt::from(r);
        let mut numerator = vec![BigInt::zero(); len];
        numerator[0] = BigInt::one();
        if numerator_power < len {
            numerator[numerator_power] += &rr;
        }
        let step = s + 1;
        let geometric: Vec<BigInt> = (0..len)
            .map(|m| {
                if m % step == 0 {
                    Pow::pow(&rr, m as u32)
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        acc = series_mul(&acc, &series_mul(&numerator, &geometric));
    }
    acc
}

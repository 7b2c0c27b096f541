//! Exact sparse polynomial and truncated power-series arithmetic.
//!
//! Every symbolic quantity in the crate is a [`Polynomial`] over arbitrary
//! precision integers. Variables are 1-based (`x1, x2, ...`) and terms are
//! ordered graded-lexicographically; text and JSON output list terms from
//! the largest monomial down.

mod monomial;
mod polynomial;
mod series;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use series::TruncatedSeries;

use num_bigint::BigInt;

/// The point `(1, 2, ..., n)`.
pub fn range_point(n: usize) -> Vec<BigInt> {
    (1..=n).map(BigInt::from).collect()
}

/// The point `(1^e, 2^e, ..., n^e)`.
pub fn powered_range_point(n: usize, e: u32) -> Vec<BigInt> {
    (1..=n)
        .map(|i| num_traits::pow(BigInt::from(i), e as usize))
        .collect()
}

/// The point `(1, 1, ..., 1)` with `n` coordinates.
pub fn ones_point(n: usize) -> Vec<BigInt> {
    vec![BigInt::from(1); n]
}

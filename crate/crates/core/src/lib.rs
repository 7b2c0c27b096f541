//! Modular symmetric functions and the generalized Stirling numbers built on
//! them, with brute-force combinatorial oracles and an identity verifier.
//!
//! * [`polycore`]: exact sparse polynomials and truncated series.
//! * [`symfun`]: `e_k`, `h_k`, the modular function `M_k^(s)`, its
//!   `l`-modular variant and the bounded elementary function `E_k^(s)`.
//! * [`stirling`]: classical and generalized Stirling families.
//! * [`enumerate`]: lattice paths, tilings, set partitions and permutations.
//! * [`identities`]: a catalog of identities checked on parameter grids.

pub mod enumerate;
pub mod error;
pub mod identities;
pub mod polycore;
pub mod stirling;
pub mod symfun;

pub use error::{Error, Result};
pub use polycore::{Monomial, Polynomial, TruncatedSeries};

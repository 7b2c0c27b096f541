//! Brute-force combinatorial families: weighted lattice paths and tilings,
//! set partitions and permutations in cycle form.

pub mod partitions;
pub mod paths;
pub mod perms;

pub use partitions::*;
pub use paths::*;
pub use perms::*;

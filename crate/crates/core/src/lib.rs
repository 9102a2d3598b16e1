//! Exact verification of identically distributed partition statistics.
//!
//! Two statistics `X` and `Y` on integer partitions are identically
//! distributed when, for every `n` and `j`, as many partitions of `n` have
//! `X = j` as have `Y = j`. This crate computes those counts exactly in two
//! independent ways, by enumerating partitions and by inclusion-exclusion
//! over partition counts, and checks the family conditions under which the
//! two statistics are guaranteed to agree.
//!
//! ```
//! use partition_sieve::{catalog::Builtin, distribution::compare, statistics::Statistic};
//!
//! let pair = Builtin::Euler.pair();
//! let x = Statistic::from_family(pair.f().clone());
//! let y = Statistic::from_family(pair.g().clone());
//! assert!(compare(&x, &y, 1, 15).all_identical());
//! ```

pub mod catalog;
pub mod cli;
pub mod distribution;
mod error;
pub mod families;
pub mod multiset;
pub mod pairfile;
pub mod partitions;
pub mod sieve;
pub mod statistics;

pub use error::Error;
pub use multiset::Multiset;
pub use partitions::{
    count_containing, count_partitions, enumerate_partitions, ExactCount, Partition,
};

/// Worker count from `PARTITION_SIEVE_THREADS`, defaulting to 1.
///
/// Returns `None` when the variable is set but not an integer ≥ 1.
pub fn threads_from_env() -> Option<usize> {
    match std::env::var("PARTITION_SIEVE_THREADS") {
        Err(_) => Some(1),
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&t| t >= 1),
    }
}

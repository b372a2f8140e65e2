//! Combinatorics of the symmetric group: permutations, Bruhat order,
//! partitions, Young subgroups, standard tableaux and row insertion.

mod character;
mod group;
mod partition;
mod perm;
mod tableau;
mod young;

use thiserror::Error;

pub use character::mn_character;
pub use group::SymGroup;
pub use partition::Partition;
pub use perm::{all_perms, Perm, MAX_N};
pub use tableau::{rsk, rsk_inverse, RskResult, StdTableau};
pub use young::YoungData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator s{index} does not exist in S_{n}")]
    InvalidGenerator { n: usize, index: usize },
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(usize),
    #[error("expected an element of S_{expected}, found one of S_{found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("not a standard tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau shapes differ: {0} vs {1}")]
    ShapeMismatch(Partition, Partition),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

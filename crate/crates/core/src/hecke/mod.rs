//! The Iwahori–Hecke algebra of `S_n` over `Z[v, v^-1]`: T-basis
//! arithmetic, the involutions, Kazhdan–Lusztig polynomials and bases, and
//! structure constants.

mod elt;
mod kl;
mod tensor;

use thiserror::Error;

use crate::coxeter::Perm;

pub use elt::{Basis, HeckeElt};
pub use kl::{DescentChoice, KlTable, MAX_KL_RANK};
pub use tensor::HTensor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("μ({0}, {1}) is zero, nothing to corrupt")]
    NoMu(Perm, Perm),
    #[error("malformed table: {0}")]
    Malformed(String),
}

//! Kazhdan–Lusztig preorders and cells, the star operation, left cell
//! modules and their characters.

mod module;
mod order;
mod preorder;
mod star;

use thiserror::Error;

use crate::coxeter::{Partition, Perm};

pub use module::{
    class_representative, class_size, decompose_cell_character, irreducible_character,
    lambda_left_cell, sign_character, CellModule, CharacterTable,
};
pub use order::{one_sided_within_two_sided_witness, two_sided_order_witness};
pub use preorder::{left_arrows, preorder_leq, CellPartition, CellStructure, Preorder, Side};
pub use star::{in_star_domain, star_operation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellError {
    #[error("unknown side {0:?}; expected left, right or two")]
    UnknownSide(String),
    #[error("{0} occurs twice")]
    Duplicate(Perm),
    #[error("not closed: {outside} lies between {low} and {high} in the left preorder but is missing")]
    NotClosed { low: Perm, outside: Perm, high: Perm },
    #[error("module relation violated: {0}")]
    Relation(String),
    #[error("cell character of label {lambda} on class {class} is {cell_value}, Murnaghan-Nakayama gives {expected}")]
    LabelMismatch { lambda: Partition, class: Partition, cell_value: i64, expected: i64 },
    #[error("character decomposition is not a non-negative integral combination")]
    NonIntegral,
}

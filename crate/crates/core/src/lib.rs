//! Exact computations in the Iwahori–Hecke algebra of the symmetric group:
//! Kazhdan–Lusztig bases and cells, the Murphy basis and its base change to
//! the Kazhdan–Lusztig basis, Lusztig's a-function and the ring J.

pub mod cells;
pub mod coxeter;
pub mod hecke;
pub mod int;
pub mod laurent;
pub mod lusztig;
pub mod matrix;
pub mod murphy;

pub use coxeter::{Partition, Perm, StdTableau, SymGroup, YoungData};
pub use hecke::{Basis, HTensor, HeckeElt, KlTable};
pub use int::Int;
pub use laurent::{BiLaurent, Laurent, LaurentError};

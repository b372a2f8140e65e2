use crate::coxeter::{rsk, Partition};
use crate::hecke::KlTable;

use super::CellStructure;

/// Checks that the two-sided cells are the sets `R(λ)` (elements whose
/// insertion shape is `λ*`) and that `x ≤_LR y` holds exactly when
/// `μ ⊴ λ` for `x ∈ R(λ)`, `y ∈ R(μ)`. Returns a violating pair `(x, y)`.
pub fn two_sided_order_witness(kl: &KlTable, cs: &CellStructure) -> Option<(usize, usize)> {
    let g = kl.group();
    let shapes: Vec<Partition> = g.elements().iter().map(|w| rsk(w).shape.conjugate()).collect();
    for x in 0..g.size() {
        for y in 0..g.size() {
            if cs.two.equiv(x, y) != (shapes[x] == shapes[y]) {
                return Some((x, y));
            }
            if cs.two.leq(x, y) != shapes[y].dominated_by(&shapes[x]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Checks `x ≤_L y` and `x ~_LR y` imply `x ~_L y`, and the same on the
/// right. Returns a violating pair.
pub fn one_sided_within_two_sided_witness(cs: &CellStructure) -> Option<(usize, usize)> {
    let size = cs.two.size();
    for x in 0..size {
        for y in 0..size {
            if !cs.two.equiv(x, y) {
                continue;
            }
            if cs.left.leq(x, y) && !cs.left.equiv(x, y) {
                return Some((x, y));
            }
            if cs.right.leq(x, y) && !cs.right.equiv(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

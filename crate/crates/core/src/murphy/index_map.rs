use serde::Serialize;

use crate::cells::CellStructure;
use crate::coxeter::{rsk, Partition, Perm, StdTableau, YoungData};
use crate::hecke::KlTable;

use super::MurphyError;

/// The partition `λ_w` with `w ∈ R(λ_w)`: the conjugate of the shape that
/// row insertion assigns to `w`.
pub fn shape_of(w: &Perm) -> Partition {
    rsk(w).shape.conjugate()
}

/// `R(λ)`: all `w` with `shape_of(w) = λ`, ascending.
pub fn shape_class(lambda: &Partition, kl: &KlTable) -> Vec<Perm> {
    kl.group().elements().iter().filter(|w| &shape_of(w) == lambda).copied().collect()
}

/// The grid `w_λ(i, j)` aligning `R(λ)` with pairs of standard tableaux.
/// Row `i` is the right cell of `x_i w_λ`, column `j` the left cell of
/// `w_λ x_j^{-1}`; every cell of the grid holds one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexMap {
    pub lambda: Partition,
    pub tableaux: Vec<StdTableau>,
    /// `x_i = d(t_i)` over the canonical tableau order; `x_1 = 1`.
    pub x_list: Vec<Perm>,
    pub w_lambda: Perm,
    pub grid: Vec<Vec<Perm>>,
}

impl IndexMap {
    pub fn new(lambda: &Partition, kl: &KlTable, cs: &CellStructure) -> Result<IndexMap, MurphyError> {
        let g = kl.group();
        let young = YoungData::new(lambda);
        let wl = young.w_lambda;
        let tableaux = StdTableau::all(lambda);
        let x_list: Vec<Perm> = tableaux.iter().map(|t| t.d()).collect();
        let d = x_list.len();
        let mut grid = Vec::with_capacity(d);
        for xi in &x_list {
            let row_rep = g.index_of(&xi.compose(&wl));
            let mut row = Vec::with_capacity(d);
            for xj in &x_list {
                let col_rep = g.index_of(&wl.compose(&xj.inverse()));
                let hits: Vec<usize> = (0..g.size())
                    .filter(|&w| {
                        cs.right_cells.same_cell(w, row_rep) && cs.left_cells.same_cell(w, col_rep)
                    })
                    .collect();
                if hits.len() != 1 {
                    return Err(MurphyError::IndexMap(format!(
                        "right cell of {} meets left cell of {} in {} elements",
                        g.elt(row_rep),
                        g.elt(col_rep),
                        hits.len()
                    )));
                }
                row.push(g.elt(hits[0]));
            }
            grid.push(row);
        }
        let imap = IndexMap { lambda: lambda.clone(), tableaux, x_list, w_lambda: wl, grid };
        imap.validate(kl)?;
        Ok(imap)
    }

    fn validate(&self, kl: &KlTable) -> Result<(), MurphyError> {
        let d = self.dim();
        if self.grid[0][0] != self.w_lambda {
            return Err(MurphyError::IndexMap("grid(1,1) differs from w_λ".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if self.grid[i][j].inverse() != self.grid[j][i] {
                    return Err(MurphyError::IndexMap(format!(
                        "grid({},{})^-1 differs from grid({},{})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let mut flat: Vec<Perm> = self.grid.iter().flatten().copied().collect();
        flat.sort();
        if flat != shape_class(&self.lambda, kl) {
            return Err(MurphyError::IndexMap("grid does not enumerate R(λ)".into()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.x_list.len()
    }

    /// `(i, j)` (0-based) with `grid(i, j) = w`.
    pub fn position(&self, w: &Perm) -> Option<(usize, usize)> {
        for (i, row) in self.grid.iter().enumerate() {
            if let Some(j) = row.iter().position(|x| x == w) {
                return Some((i, j));
            }
        }
        None
    }

    /// Position of a tableau in the canonical order.
    pub fn tableau_index(&self, t: &StdTableau) -> Option<usize> {
        self.tableaux.iter().position(|x| x == t)
    }
}

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::Perm;
use crate::murphy::IndexMap;

use super::{GammaTable, Lusztig};

/// Element of J as a sparse map from basis index to integer coefficient.
pub type JElt = BTreeMap<usize, i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JRingError {
    #[error("(t_{x} t_{y}) t_{z} differs from t_{x} (t_{y} t_{z})")]
    Associativity { x: Perm, y: Perm, z: Perm },
    #[error("1_J is not an identity on t_{0}")]
    Identity(Perm),
    #[error("t_{x} t_{y} differs from the matrix-unit product")]
    MatrixUnit { x: Perm, y: Perm },
    #[error("index maps do not partition the group: {0}")]
    Grid(String),
}

/// Lusztig's ring J with basis `t_w` and `t_x t_y = Σ_z γ_{x,y,z^{-1}} t_z`.
#[derive(Debug, Clone, Serialize)]
pub struct JRing {
    pub n: usize,
    #[serde(skip)]
    pub gamma: GammaTable,
    /// `𝒟`, the support of `1_J`.
    pub identity_support: Vec<Perm>,
    #[serde(skip)]
    elements: Vec<Perm>,
    #[serde(skip)]
    inv: Vec<usize>,
    #[serde(skip)]
    identity: JElt,
}

impl JRing {
    pub fn new(l: &Lusztig) -> JRing {
        let g = l.kl.group();
        let identity = l.distinguished.iter().map(|&d| (d, l.adata.n_z[d])).collect();
        JRing {
            n: g.n(),
            gamma: l.gamma.clone(),
            identity_support: l.distinguished.iter().map(|&d| g.elt(d)).collect(),
            elements: g.elements().to_vec(),
            inv: (0..g.size()).map(|w| g.inv(w)).collect(),
            identity,
        }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn perm(&self, x: usize) -> Perm {
        self.elements[x]
    }

    /// `t_x t_y`.
    pub fn mul_basis(&self, x: usize, y: usize) -> JElt {
        self.gamma.row(x, y).map(|(zi, c)| (self.inv[zi], c)).collect()
    }

    pub fn mul(&self, a: &JElt, b: &JElt) -> JElt {
        let mut out = JElt::new();
        for (&x, &ca) in a {
            for (&y, &cb) in b {
                for (z, c) in self.mul_basis(x, y) {
                    *out.entry(z).or_insert(0) += ca * cb * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `1_J = Σ_{d ∈ 𝒟} n_d t_d`.
    pub fn identity(&self) -> &JElt {
        &self.identity
    }

    pub fn basis(x: usize) -> JElt {
        JElt::from([(x, 1)])
    }

    /// Checks associativity on all basis triples; returns the number checked.
    pub fn check_associativity(&self) -> Result<u64, JRingError> {
        let n = self.size();
        let bad = (0..n).into_par_iter().find_map_first(|x| {
            for y in 0..n {
                let xy = self.mul_basis(x, y);
                for z in 0..n {
                    let left = self.mul(&xy, &JRing::basis(z));
                    let right = self.mul(&JRing::basis(x), &self.mul_basis(y, z));
                    if left != right {
                        return Some((x, y, z));
                    }
                }
            }
            None
        });
        match bad {
            Some((x, y, z)) => Err(JRingError::Associativity { x: self.perm(x), y: self.perm(y), z: self.perm(z) }),
            None => Ok((n * n * n) as u64),
        }
    }

    pub fn check_identity(&self) -> Result<(), JRingError> {
        for x in 0..self.size() {
            let t = JRing::basis(x);
            if self.mul(&self.identity, &t) != t || self.mul(&t, &self.identity) != t {
                return Err(JRingError::Identity(self.perm(x)));
            }
        }
        Ok(())
    }

    /// Checks that `t_{w_λ(i,j)} ↦ E_ij` in the `λ` block is a ring
    /// isomorphism onto `⊕_λ M_{d_λ}(ℤ)`: the grids partition the group and
    /// `t_{w_λ(i,j)} t_{w_μ(k,l)} = δ_{λμ} δ_{jk} t_{w_λ(i,l)}`.
    pub fn check_matrix_units(&self, imaps: &[IndexMap]) -> Result<(), JRingError> {
        let n = self.size();
        let mut pos: Vec<Option<(usize, usize, usize)>> = vec![None; n];
        let index: BTreeMap<Perm, usize> = self.elements.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        for (b, imap) in imaps.iter().enumerate() {
            for (i, row) in imap.grid.iter().enumerate() {
                for (j, w) in row.iter().enumerate() {
                    let k = *index.get(w).ok_or_else(|| JRingError::Grid(format!("{w} has the wrong rank")))?;
                    if pos[k].replace((b, i, j)).is_some() {
                        return Err(JRingError::Grid(format!("{w} appears twice")));
                    }
                }
            }
        }
        if let Some(k) = pos.iter().position(Option::is_none) {
            return Err(JRingError::Grid(format!("{} is in no grid", self.perm(k))));
        }
        let pos: Vec<(usize, usize, usize)> = pos.into_iter().map(Option::unwrap).collect();
        for x in 0..n {
            for y in 0..n {
                let (bx, i, j) = pos[x];
                let (by, k, l) = pos[y];
                let expected = if bx == by && j == k {
                    JRing::basis(index[&imaps[bx].grid[i][l]])
                } else {
                    JElt::new()
                };
                if self.mul_basis(x, y) != expected {
                    return Err(JRingError::MatrixUnit { x: self.perm(x), y: self.perm(y) });
                }
            }
        }
        Ok(())
    }
}

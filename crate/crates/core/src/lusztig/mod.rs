//! Lusztig's a-function, the invariants `Δ(z)` and `n_z`, the constants
//! `γ_{x,y,z}`, distinguished involutions, the properties P1–P15 and the
//! ring J.

mod jring;
mod verify;

use std::collections::BTreeMap;
use std::ops::Bound;

use serde::Serialize;

use crate::cells::CellStructure;
use crate::coxeter::{Partition, Perm, YoungData};
use crate::hecke::{HTensor, KlTable};
use crate::murphy::shape_of;

pub use jring::{JElt, JRing, JRingError};
pub use verify::{
    structure_checks, verify_properties, CheckResult, Property, PropertyReport, SamplingConfig, Scope, Status,
    DEFAULT_SEED,
};

/// `a(z)` for every `z`, read off the full h-tensor:
/// the largest `-min_exp(h_{x,y,z})` over all `x, y`, and at least 0.
pub fn a_function(tensor: &HTensor) -> Vec<i32> {
    let size = tensor.size();
    let mut a = vec![0i32; size];
    for row in tensor.rows() {
        for (z, h) in row {
            let low = h.min_exp().expect("stored constants are non-zero");
            let slot = &mut a[*z as usize];
            *slot = (*slot).max(-low);
        }
    }
    a
}

/// `a` computed inside the parabolic subgroup with element indices
/// `members`: only products `C'_x C'_y` with `x, y ∈ W_I` contribute.
/// Entries for elements outside `W_I` are `None`.
pub fn a_function_restricted(tensor: &HTensor, members: &[usize]) -> Vec<Option<i32>> {
    let mut a = vec![None; tensor.size()];
    for &z in members {
        a[z] = Some(0);
    }
    for &x in members {
        for &y in members {
            for (z, h) in tensor.row(x, y) {
                let low = h.min_exp().expect("stored constants are non-zero");
                let slot = a[*z as usize].get_or_insert(0);
                *slot = (*slot).max(-low);
            }
        }
    }
    a
}

/// `(Δ(z), n_z)` from the leading term `n_z v^{-Δ(z)}` of `p_{1,z}`, the
/// term of highest degree in `v`.
pub fn delta_and_n(kl: &KlTable, z: usize) -> (i32, i64) {
    let p = kl.p(kl.group().identity(), z);
    let top = p.max_exp().expect("p_{1,z} is non-zero");
    let n = p.coeff(top).to_i64().expect("leading coefficient fits in i64");
    (-top, n)
}

/// Per-element data: `a(z)`, `Δ(z)`, `n_z` and the shape `λ_z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AData {
    pub n: usize,
    pub a: Vec<i32>,
    pub delta: Vec<i32>,
    pub n_z: Vec<i64>,
    pub shape: Vec<Partition>,
}

impl AData {
    pub fn new(kl: &KlTable, tensor: &HTensor) -> AData {
        let g = kl.group();
        let a = a_function(tensor);
        let (delta, n_z) = (0..g.size()).map(|z| delta_and_n(kl, z)).unzip();
        let shape = g.elements().iter().map(shape_of).collect();
        AData { n: g.n(), a, delta, n_z, shape }
    }

    /// `α_z = l(w_λ)` for `λ = λ_z`.
    pub fn alpha(&self, z: usize) -> i32 {
        YoungData::new(&self.shape[z]).w_lambda.length() as i32
    }
}

/// `𝒟 = { z : a(z) = Δ(z) }` as ascending indices.
pub fn distinguished_set(adata: &AData) -> Vec<usize> {
    (0..adata.a.len()).filter(|&z| adata.a[z] == adata.delta[z]).collect()
}

/// The non-zero constants `γ_{x,y,z}`, keyed by element indices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaTable {
    entries: BTreeMap<(u32, u32, u32), i64>,
}

impl GammaTable {
    /// `γ_{x,y,z^{-1}}` is the coefficient of `v^{-a(z)}` in `h_{x,y,z}`.
    pub fn new(kl: &KlTable, tensor: &HTensor, a: &[i32]) -> GammaTable {
        let g = kl.group();
        let size = g.size();
        let mut entries = BTreeMap::new();
        for x in 0..size {
            for y in 0..size {
                for (z, h) in tensor.row(x, y) {
                    let c = h.coeff(-a[*z as usize]);
                    if !c.is_zero() {
                        let c = c.to_i64().expect("γ fits in i64");
                        entries.insert((x as u32, y as u32, g.inv(*z as usize) as u32), c);
                    }
                }
            }
        }
        GammaTable { entries }
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> i64 {
        self.entries.get(&(x as u32, y as u32, z as u32)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All `((x, y, z), γ_{x,y,z})` in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&(x, y, z), &c)| ((x as usize, y as usize, z as usize), c))
    }

    /// `(z, γ_{x,y,z})` for fixed `x, y`.
    pub fn row(&self, x: usize, y: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let (x, y) = (x as u32, y as u32);
        self.entries
            .range((Bound::Included((x, y, 0)), Bound::Included((x, y, u32::MAX))))
            .map(|(&(_, _, z), &c)| (z as usize, c))
    }
}

/// Everything the property checks and the ring J read from.
#[derive(Debug, Clone)]
pub struct Lusztig<'a> {
    pub kl: &'a KlTable,
    pub tensor: &'a HTensor,
    pub cells: &'a CellStructure,
    pub adata: AData,
    pub gamma: GammaTable,
    pub distinguished: Vec<usize>,
}

impl<'a> Lusztig<'a> {
    pub fn new(kl: &'a KlTable, tensor: &'a HTensor, cells: &'a CellStructure) -> Lusztig<'a> {
        let adata = AData::new(kl, tensor);
        let gamma = GammaTable::new(kl, tensor, &adata.a);
        let distinguished = distinguished_set(&adata);
        Lusztig { kl, tensor, cells, adata, gamma, distinguished }
    }

    pub fn perm(&self, x: usize) -> Perm {
        self.kl.group().elt(x)
    }

    pub fn is_distinguished(&self, z: usize) -> bool {
        self.distinguished.binary_search(&z).is_ok()
    }
}

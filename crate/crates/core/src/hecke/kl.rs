use crate::coxeter::{Perm, SymGroup};
use crate::int::Int;
use crate::laurent::Laurent;

use super::elt::{Basis, HeckeElt};
use super::HeckeError;

/// Which left descent drives the recursion `C'_w = C'_s C'_{sw} - ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentChoice {
    Smallest,
    Largest,
}

/// All Kazhdan–Lusztig polynomials `p_{y,w}` and `μ(y,w)` of `S_n`.
///
/// Elements are addressed by their index in the length-lex enumeration of
/// the owned [`SymGroup`]. Column `w` lists `(y, p_{y,w})` for `y <= w`,
/// including `(w, 1)`.
#[derive(Debug, Clone)]
pub struct KlTable {
    group: SymGroup,
    columns: Vec<Vec<(u32, Laurent)>>,
    mus: Vec<Vec<(u32, i64)>>,
}

/// Largest rank for which tables are built.
pub const MAX_KL_RANK: usize = 8;

impl KlTable {
    pub fn new(n: usize) -> KlTable {
        KlTable::with_descent_choice(n, DescentChoice::Smallest)
    }

    pub fn with_descent_choice(n: usize, choice: DescentChoice) -> KlTable {
        assert!((1..=MAX_KL_RANK).contains(&n), "rank {n} outside 1..={MAX_KL_RANK}");
        let group = SymGroup::new(n);
        let size = group.size();
        let mut columns: Vec<Vec<(u32, Laurent)>> = Vec::with_capacity(size);
        let mut mus: Vec<Vec<(u32, i64)>> = Vec::with_capacity(size);
        columns.push(vec![(0, Laurent::one())]);
        mus.push(Vec::new());
        let v = Laurent::v_pow(1);
        let vinv = Laurent::v_pow(-1);
        let mut acc: Vec<Laurent> = vec![Laurent::zero(); size];
        for w in 1..size {
            let s = match choice {
                DescentChoice::Smallest => (1..n).find(|&i| group.has_left_descent(i, w)),
                DescentChoice::Largest => (1..n).rev().find(|&i| group.has_left_descent(i, w)),
            }
            .unwrap();
            let y = group.lmul(s, w);
            // C'_s C'_y in the T-basis
            for (u, c) in &columns[y] {
                let u = *u as usize;
                let su = group.lmul(s, u);
                acc[su] += c;
                let f = if group.len(su) > group.len(u) { &vinv } else { &v };
                acc[u] += &(c * f);
            }
            for &(z, m) in &mus[y] {
                let z = z as usize;
                if group.has_left_descent(s, z) {
                    let m = Int::from(m);
                    for (u, c) in &columns[z] {
                        acc[*u as usize].add_scaled_shifted(c, &-&m, 0);
                    }
                }
            }
            let mut col = Vec::new();
            let mut mu_col = Vec::new();
            for (u, slot) in acc.iter_mut().enumerate().take(w + 1) {
                if !slot.is_zero() {
                    let p = std::mem::take(slot);
                    let m = p.coeff(-1);
                    if u != w && !m.is_zero() {
                        mu_col.push((u as u32, m.to_i64().expect("μ fits in i64")));
                    }
                    col.push((u as u32, p));
                }
            }
            debug_assert!(acc.iter().all(|c| c.is_zero()));
            columns.push(col);
            mus.push(mu_col);
        }
        KlTable { group, columns, mus }
    }

    /// Reassembles a table from stored columns, recomputing μ.
    pub fn from_columns(n: usize, columns: Vec<Vec<(u32, Laurent)>>) -> Result<KlTable, HeckeError> {
        let group = SymGroup::new(n);
        if columns.len() != group.size() {
            return Err(HeckeError::Malformed(format!(
                "expected {} columns, found {}",
                group.size(),
                columns.len()
            )));
        }
        let mut mus = Vec::with_capacity(columns.len());
        for (w, col) in columns.iter().enumerate() {
            if col.windows(2).any(|p| p[0].0 >= p[1].0) || col.iter().any(|(y, _)| *y as usize > w) {
                return Err(HeckeError::Malformed(format!("column {w} is not sorted")));
            }
            let mut mu_col = Vec::new();
            for (y, p) in col {
                let m = p.coeff(-1);
                if *y as usize != w && !m.is_zero() {
                    let m = m.to_i64().ok_or_else(|| HeckeError::Malformed("μ overflow".into()))?;
                    mu_col.push((*y, m));
                }
            }
            mus.push(mu_col);
        }
        Ok(KlTable { group, columns, mus })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &SymGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.group.size()
    }

    /// `(y, p_{y,w})` for all `y <= w` with non-zero polynomial.
    pub fn column(&self, w: usize) -> &[(u32, Laurent)] {
        &self.columns[w]
    }

    pub fn columns(&self) -> &[Vec<(u32, Laurent)>] {
        &self.columns
    }

    /// `p_{y,w}`; zero when `y` is not below `w`.
    pub fn p(&self, y: usize, w: usize) -> Laurent {
        match self.columns[w].binary_search_by_key(&(y as u32), |t| t.0) {
            Ok(i) => self.columns[w][i].1.clone(),
            Err(_) => Laurent::zero(),
        }
    }

    pub fn p_perm(&self, y: &Perm, w: &Perm) -> Laurent {
        self.p(self.group.index_of(y), self.group.index_of(w))
    }

    /// `μ(y, w)` for `y < w`; zero otherwise.
    pub fn mu(&self, y: usize, w: usize) -> i64 {
        self.mus[w]
            .binary_search_by_key(&(y as u32), |t| t.0)
            .map_or(0, |i| self.mus[w][i].1)
    }

    /// `(z, μ(z, w))` for `z < w` with `μ(z, w) != 0`.
    pub fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        &self.mus[w]
    }

    /// Negates the stored `μ(y, w)` while leaving `p_{y,w}` untouched. Used
    /// to check that the verifiers notice corrupted input.
    pub fn inject_mu_fault(&mut self, y: &Perm, w: &Perm) -> Result<(), HeckeError> {
        let (yi, wi) = (self.group.index_of(y), self.group.index_of(w));
        let slot = self.mus[wi]
            .iter_mut()
            .find(|t| t.0 as usize == yi)
            .ok_or(HeckeError::NoMu(*y, *w))?;
        slot.1 = -slot.1;
        Ok(())
    }

    /// `C'_s C'_u` in the C'-basis for `s = s_i`.
    pub fn cprime_s_action(&self, i: usize, u: usize) -> Vec<(usize, Laurent)> {
        let g = &self.group;
        let su = g.lmul(i, u);
        if g.len(su) < g.len(u) {
            return vec![(u, Laurent::from_terms([(-1, 1), (1, 1)]))];
        }
        let mut out = vec![(su, Laurent::one())];
        for &(z, m) in &self.mus[u] {
            if g.has_left_descent(i, z as usize) {
                out.push((z as usize, Laurent::constant(m)));
            }
        }
        out
    }

    /// T-expansion of `C'_w` (`kind = CPrime`), `C_w` (`kind = C`) or `T_w`.
    pub fn kl_element(&self, w: &Perm, kind: Basis) -> HeckeElt {
        let wi = self.group.index_of(w);
        self.kl_element_idx(wi, kind)
    }

    pub(crate) fn kl_element_idx(&self, w: usize, kind: Basis) -> HeckeElt {
        let g = &self.group;
        let n = self.n();
        match kind {
            Basis::T => HeckeElt::basis_elt(Basis::T, g.elt(w)),
            Basis::CPrime => HeckeElt::from_terms(
                n,
                Basis::T,
                self.columns[w].iter().map(|(y, p)| (g.elt(*y as usize), p.clone())),
            ),
            Basis::C => HeckeElt::from_terms(
                n,
                Basis::T,
                self.columns[w].iter().map(|(y, p)| {
                    let b = p.bar();
                    let sign = g.sign(*y as usize) * g.sign(w);
                    (g.elt(*y as usize), if sign < 0 { -b } else { b })
                }),
            ),
        }
    }

    /// Coefficient of `T_y` in the T-expansion of the basis element `kind`
    /// indexed by `w`.
    fn expansion_coeff(&self, kind: Basis, p: &Laurent, y: usize, w: usize) -> Laurent {
        match kind {
            Basis::T => p.clone(),
            Basis::CPrime => p.clone(),
            Basis::C => {
                let b = p.bar();
                if self.group.sign(y) * self.group.sign(w) < 0 {
                    -b
                } else {
                    b
                }
            }
        }
    }

    pub(crate) fn to_dense(&self, h: &HeckeElt) -> Vec<Laurent> {
        let mut d = vec![Laurent::zero(); self.size()];
        for (w, c) in h.terms() {
            d[self.group.index_of(w)] = c.clone();
        }
        d
    }

    pub(crate) fn elt_from_dense(&self, basis: Basis, d: Vec<Laurent>) -> HeckeElt {
        let g = &self.group;
        HeckeElt::from_terms(
            self.n(),
            basis,
            d.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (g.elt(w), c)),
        )
    }

    /// Dense T-coefficients of `h` (any basis).
    pub(crate) fn dense_t(&self, h: &HeckeElt) -> Vec<Laurent> {
        let src = self.to_dense(h);
        if h.basis() == Basis::T {
            return src;
        }
        let mut out = vec![Laurent::zero(); self.size()];
        for (w, c) in src.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (y, p) in &self.columns[w] {
                let e = self.expansion_coeff(h.basis(), p, *y as usize, w);
                out[*y as usize] += &(c * &e);
            }
        }
        out
    }

    /// Rewrites dense T-coefficients in the KL basis `kind` by unitriangular
    /// elimination from the longest element down.
    pub(crate) fn dense_from_t(&self, mut d: Vec<Laurent>, kind: Basis) -> Vec<Laurent> {
        if kind == Basis::T {
            return d;
        }
        let mut out = vec![Laurent::zero(); self.size()];
        for w in (0..self.size()).rev() {
            if d[w].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut d[w]);
            for (y, p) in &self.columns[w] {
                let y = *y as usize;
                if y != w {
                    let e = self.expansion_coeff(kind, p, y, w);
                    d[y] -= &(&c * &e);
                }
            }
            out[w] = c;
        }
        out
    }

    /// Change of basis between T, C' and C.
    pub fn convert(&self, h: &HeckeElt, target: Basis) -> HeckeElt {
        assert_eq!(h.n(), self.n(), "rank mismatch");
        if h.basis() == target {
            return h.clone();
        }
        let t = self.dense_t(h);
        self.elt_from_dense(target, self.dense_from_t(t, target))
    }

    /// Product of two elements in any bases; the result is in the basis of
    /// the left factor. The multiplication itself happens in the T-basis.
    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let at = self.convert(a, Basis::T);
        let bt = self.convert(b, Basis::T);
        self.convert(&at.t_mul(&bt), a.basis())
    }

    /// `h_{x,y,z}` for all `z`, via T-basis multiplication of `C'_x C'_y`
    /// and conversion back to the C'-basis.
    pub fn h_constants(&self, x: &Perm, y: &Perm) -> Vec<(Perm, Laurent)> {
        let cx = self.kl_element(x, Basis::CPrime);
        let cy = self.kl_element(y, Basis::CPrime);
        let prod = self.convert(&cx.t_mul(&cy), Basis::CPrime);
        prod.terms().map(|(w, c)| (*w, c.clone())).collect()
    }
}

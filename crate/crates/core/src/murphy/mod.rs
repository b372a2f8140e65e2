//! The Murphy basis and its relation to the Kazhdan–Lusztig basis: the
//! ideals spanned by tableau pairs of dominating shapes, the index map
//! `w_λ(i, j)`, the elements `Z_w` and the base change from `ỹ_st` to `C_w`.

mod index_map;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{Partition, Perm, StdTableau, YoungData};
use crate::hecke::{Basis, HeckeElt, KlTable};
use crate::laurent::{Laurent, LaurentError};
use crate::matrix::LMatrix;

pub use index_map::{shape_class, shape_of, IndexMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MurphyError {
    #[error("tableaux {0} and {1} have different shapes")]
    ShapeMismatch(StdTableau, StdTableau),
    #[error("index map: {0}")]
    IndexMap(String),
    #[error("{0} is not in the shape class of the index map")]
    NotInShapeClass(Perm),
    #[error("Z_{w} is not integral: coefficient of C[{at}] is not divisible by the Poincaré polynomial")]
    DivisionFailure { w: Perm, at: Perm },
    #[error("base change of ({s}, {t}): term C[{term}] {reason}")]
    Classification { s: StdTableau, t: StdTableau, term: Perm, reason: String },
    #[error("determinant: {0}")]
    Determinant(#[from] LaurentError),
}

/// A pair of standard tableaux of a common shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TableauPair {
    pub lambda: Partition,
    pub s: StdTableau,
    pub t: StdTableau,
}

impl TableauPair {
    pub fn new(s: StdTableau, t: StdTableau) -> Result<TableauPair, MurphyError> {
        if s.shape() != t.shape() {
            return Err(MurphyError::ShapeMismatch(s, t));
        }
        Ok(TableauPair { lambda: s.shape(), s, t })
    }

    /// All pairs of shape `λ` in canonical order (row-major over the
    /// canonical tableau order).
    pub fn all(lambda: &Partition) -> Vec<TableauPair> {
        let ts = StdTableau::all(lambda);
        let mut out = Vec::with_capacity(ts.len() * ts.len());
        for s in &ts {
            for t in &ts {
                out.push(TableauPair { lambda: lambda.clone(), s: s.clone(), t: t.clone() });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MurphyVariant {
    /// `x_st = T_{d(s)} x_λ T_{d(t)^{-1}}`.
    X,
    /// `ỹ_st = T_{d(s)} C_{w_λ} T_{d(t)^{-1}}`.
    Y,
}

/// `x_λ = Σ_{w ∈ S_λ} v^{l(w)} T_w`.
pub fn x_lambda(lambda: &Partition) -> HeckeElt {
    let young = YoungData::new(lambda);
    HeckeElt::from_terms(
        lambda.n(),
        Basis::T,
        young.subgroup_elements().into_iter().map(|w| (w, Laurent::v_pow(w.length() as i32))),
    )
}

/// `T_{d} h T_{e^{-1}}` for `h` in the T-basis.
fn sandwich(d: &Perm, h: &HeckeElt, e: &Perm) -> HeckeElt {
    let mut out = h.t_lmul_basis(d);
    for i in e.inverse().reduced_word() {
        out = out.t_rmul_gen(i);
    }
    out
}

/// The Murphy element of the given variant, in the T-basis.
pub fn murphy_element(pair: &TableauPair, variant: MurphyVariant, kl: &KlTable) -> HeckeElt {
    let (ds, dt) = (pair.s.d(), pair.t.d());
    let middle = match variant {
        MurphyVariant::X => x_lambda(&pair.lambda),
        MurphyVariant::Y => kl.kl_element(&YoungData::new(&pair.lambda).w_lambda, Basis::C),
    };
    sandwich(&ds, &middle, &dt)
}

/// Checks `ỹ_st = ± v^{l(w_λ)} j(x_st)` and returns the sign.
pub fn j_alignment_sign(pair: &TableauPair, kl: &KlTable) -> Option<i32> {
    let y = murphy_element(pair, MurphyVariant::Y, kl);
    let x = murphy_element(pair, MurphyVariant::X, kl);
    let l = YoungData::new(&pair.lambda).w_lambda.length() as i32;
    let jx = x.j().scale(&Laurent::v_pow(l));
    if y == jx {
        Some(1)
    } else if y == jx.scale(&Laurent::constant(-1)) {
        Some(-1)
    } else {
        None
    }
}

/// Spanning sets of the ideal `N^λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub lambda: Partition,
    /// Tableau pairs of every shape `μ` with `λ ⊴ μ`.
    pub murphy_basis: Vec<TableauPair>,
    /// All `w` with `λ ⊴ λ_w`, ascending.
    pub kl_basis: Vec<Perm>,
}

impl IdealBasis {
    pub fn new(lambda: &Partition, kl: &KlTable) -> IdealBasis {
        let murphy_basis = Partition::all(lambda.n())
            .into_iter()
            .filter(|mu| lambda.dominated_by(mu))
            .flat_map(|mu| TableauPair::all(&mu))
            .collect();
        let kl_basis = kl
            .group()
            .elements()
            .iter()
            .filter(|w| lambda.dominated_by(&shape_of(w)))
            .copied()
            .collect();
        IdealBasis { lambda: lambda.clone(), murphy_basis, kl_basis }
    }

    /// `None` when `h` lies in the ideal, otherwise a C-basis index of `h`
    /// outside `kl_basis`.
    pub fn membership_witness(&self, h: &HeckeElt, kl: &KlTable) -> Option<Perm> {
        let c = kl.convert(h, Basis::C);
        let witness = c.terms().map(|(w, _)| *w).find(|w| !self.lambda.dominated_by(&shape_of(w)));
        witness
    }

    pub fn contains(&self, h: &HeckeElt, kl: &KlTable) -> bool {
        self.membership_witness(h, kl).is_none()
    }
}

/// `Z_w = (1/P_λ) ε_{w_λ} v^{l(w_λ)} C_{x_i w_λ} C_{w_λ x_j^{-1}}` in the
/// C-basis, where `w = w_λ(i, j)`. The division must be exact.
pub fn z_element(w: &Perm, imap: &IndexMap, kl: &KlTable) -> Result<HeckeElt, MurphyError> {
    let (i, j) = imap.position(w).ok_or(MurphyError::NotInShapeClass(*w))?;
    let young = YoungData::new(&imap.lambda);
    let wl = imap.w_lambda;
    let left = HeckeElt::basis_elt(Basis::C, imap.x_list[i].compose(&wl));
    let right = HeckeElt::basis_elt(Basis::C, wl.compose(&imap.x_list[j].inverse()));
    let prod = kl.mul(&left, &right);
    let l = wl.length() as i32;
    let factor = Laurent::monomial(wl.sign(), l);
    let mut out = HeckeElt::zero(kl.n(), Basis::C);
    for (z, c) in prod.terms() {
        let q = (&factor * c)
            .div_exact(&young.poincare)
            .map_err(|_| MurphyError::DivisionFailure { w: *w, at: *z })?;
        out.add_term(*z, &q);
    }
    Ok(out)
}

/// The expansion of `ỹ_st` in the C-basis, split by shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseChange {
    pub pair: TableauPair,
    pub leading: Perm,
    /// Terms `C_y` with `λ_y = λ`, `y` not leading; coefficients in `vZ[v]`.
    pub same_shape_terms: BTreeMap<Perm, Laurent>,
    /// Terms `C_y` with `λ ◁ λ_y`.
    pub higher_terms: BTreeMap<Perm, Laurent>,
}

impl BaseChange {
    /// The full C-basis expansion.
    pub fn expansion(&self) -> HeckeElt {
        let mut h = HeckeElt::basis_elt(Basis::C, self.leading);
        for (w, c) in self.same_shape_terms.iter().chain(&self.higher_terms) {
            h.add_term(*w, c);
        }
        h
    }
}

/// Expands `ỹ_st` in the C-basis and classifies every term. The leading
/// term must be `C_{w_λ(i,j)}` with coefficient exactly 1.
pub fn base_change(pair: &TableauPair, imap: &IndexMap, kl: &KlTable) -> Result<BaseChange, MurphyError> {
    let y = kl.convert(&murphy_element(pair, MurphyVariant::Y, kl), Basis::C);
    let fail = |term: Perm, reason: &str| MurphyError::Classification {
        s: pair.s.clone(),
        t: pair.t.clone(),
        term,
        reason: reason.to_string(),
    };
    let i = imap.tableau_index(&pair.s).ok_or_else(|| MurphyError::IndexMap("unknown tableau".into()))?;
    let j = imap.tableau_index(&pair.t).ok_or_else(|| MurphyError::IndexMap("unknown tableau".into()))?;
    let leading = imap.grid[i][j];
    if !y.coeff(&leading).is_one() {
        return Err(fail(leading, &format!("has coefficient {} instead of 1", y.coeff(&leading))));
    }
    let mut same_shape_terms = BTreeMap::new();
    let mut higher_terms = BTreeMap::new();
    for (w, c) in y.terms() {
        if *w == leading {
            continue;
        }
        let mu = shape_of(w);
        if mu == pair.lambda {
            if !c.in_positive_part() {
                return Err(fail(*w, &format!("has coefficient {c} outside vZ[v]")));
            }
            same_shape_terms.insert(*w, c.clone());
        } else if pair.lambda.strictly_dominated_by(&mu) {
            higher_terms.insert(*w, c.clone());
        } else {
            return Err(fail(*w, &format!("has shape {mu} not dominating {}", pair.lambda)));
        }
    }
    Ok(BaseChange { pair: pair.clone(), leading, same_shape_terms, higher_terms })
}

/// Partitions of `n` in an order extending dominance from the top:
/// if `λ ◁ μ` then `μ` comes first.
fn dominance_extension(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

/// Matrix whose columns are the C-coordinates of all `ỹ_st` (grouped by
/// shape along `shapes`) and whose rows are indexed by `w` grouped by
/// `λ_w` in the same order.
fn coordinate_blocks(
    kl: &KlTable,
    shapes: &[Partition],
) -> (Vec<Vec<Perm>>, Vec<Vec<HeckeElt>>) {
    let rows: Vec<Vec<Perm>> = shapes.iter().map(|l| shape_class(l, kl)).collect();
    let cols: Vec<Vec<HeckeElt>> = shapes
        .iter()
        .map(|l| {
            TableauPair::all(l)
                .iter()
                .map(|p| kl.convert(&murphy_element(p, MurphyVariant::Y, kl), Basis::C))
                .collect()
        })
        .collect();
    (rows, cols)
}

/// Determinant of the change of basis from `{ỹ_st}` to `{C_w}`, as the
/// product of its diagonal shape blocks. The matrix is block triangular
/// with respect to dominance; entries below the diagonal blocks are checked
/// to vanish.
pub fn murphy_determinant_blocks(kl: &KlTable) -> Result<Laurent, MurphyError> {
    let shapes = dominance_extension(kl.n());
    let (rows, cols) = coordinate_blocks(kl, &shapes);
    let mut det = Laurent::one();
    for (b, lambda) in shapes.iter().enumerate() {
        for elt in &cols[b] {
            for (w, _) in elt.terms() {
                let mu = shape_of(w);
                if !lambda.dominated_by(&mu) {
                    return Err(MurphyError::IndexMap(format!("ỹ of shape {lambda} involves C[{w}] of shape {mu}")));
                }
            }
        }
        let d = rows[b].len();
        let mut m = LMatrix::zeros(d, d);
        for (c, elt) in cols[b].iter().enumerate() {
            for (r, w) in rows[b].iter().enumerate() {
                m.set(r, c, elt.coeff(w));
            }
        }
        det = &det * &m.determinant()?;
    }
    Ok(det)
}

/// Determinant of the full `n! × n!` change-of-basis matrix.
pub fn murphy_determinant_full(kl: &KlTable) -> Result<Laurent, MurphyError> {
    let shapes = dominance_extension(kl.n());
    let (rows, cols) = coordinate_blocks(kl, &shapes);
    let rows: Vec<Perm> = rows.into_iter().flatten().collect();
    let cols: Vec<HeckeElt> = cols.into_iter().flatten().collect();
    let mut m = LMatrix::zeros(rows.len(), cols.len());
    for (c, elt) in cols.iter().enumerate() {
        for (r, w) in rows.iter().enumerate() {
            m.set(r, c, elt.coeff(w));
        }
    }
    Ok(m.determinant()?)
}

/// `± v^k` for some `k`: the units of `Z[v, v^-1]`.
pub fn is_unit(c: &Laurent) -> bool {
    c.len() == 1 && c.terms()[0].1.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::CellStructure;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        Perm::parse(s, Some(4)).unwrap()
    }

    fn setup() -> (KlTable, CellStructure, IndexMap) {
        let kl = KlTable::new(4);
        let cs = CellStructure::new(&kl);
        let imap = IndexMap::new(&pt("3,1"), &kl, &cs).unwrap();
        (kl, cs, imap)
    }

    #[test]
    fn x_lambda_has_six_terms() {
        let x = x_lambda(&pt("3,1"));
        assert_eq!(x.len(), 6);
        assert_eq!(x.coeff(&perm("s1 s2 s1")), Laurent::v_pow(3));
    }

    #[test]
    fn first_pair_is_c_w_lambda() {
        let (kl, _, imap) = setup();
        let pairs = TableauPair::all(&pt("3,1"));
        let y = kl.convert(&murphy_element(&pairs[0], MurphyVariant::Y, &kl), Basis::C);
        assert_eq!(y, HeckeElt::basis_elt(Basis::C, perm("s1 s2 s1")));
        let bc = base_change(&pairs[0], &imap, &kl).unwrap();
        assert!(bc.same_shape_terms.is_empty() && bc.higher_terms.is_empty());
        for p in &pairs {
            assert!(j_alignment_sign(p, &kl).is_some());
        }
    }

    #[test]
    fn base_change_examples() {
        let (kl, _, imap) = setup();
        let pairs = TableauPair::all(&pt("3,1"));
        let bc = base_change(&pairs[1], &imap, &kl).unwrap();
        assert_eq!(bc.leading, perm("s1 s2 s1 s3"));
        assert_eq!(bc.same_shape_terms, BTreeMap::from([(perm("s1 s2 s1"), Laurent::v_pow(1))]));
        assert!(bc.higher_terms.is_empty());
        let bc = base_change(&pairs[8], &imap, &kl).unwrap();
        assert_eq!(bc.leading, perm("s2 s3 s2"));
        let w0 = perm("s1 s2 s1 s3 s2 s1");
        assert_eq!(bc.higher_terms.get(&w0), Some(&"-v^-1 + v".parse().unwrap()));
    }

    #[test]
    fn ideal_sizes() {
        let kl = KlTable::new(4);
        let top = IdealBasis::new(&Partition::row(4), &kl);
        assert_eq!(top.kl_basis, vec![perm("s1 s2 s1 s3 s2 s1")]);
        assert_eq!(top.murphy_basis.len(), 1);
        let all = IdealBasis::new(&Partition::column(4), &kl);
        assert_eq!((all.kl_basis.len(), all.murphy_basis.len()), (24, 24));
        let mid = IdealBasis::new(&pt("3,1"), &kl);
        assert_eq!((mid.kl_basis.len(), mid.murphy_basis.len()), (10, 10));
    }

    #[test]
    fn z_elements() {
        let (kl, _, imap) = setup();
        let z = z_element(&imap.w_lambda, &imap, &kl).unwrap();
        assert_eq!(z, HeckeElt::basis_elt(Basis::C, imap.w_lambda));
        let w = perm("s1 s2 s1 s3");
        let z = z_element(&w, &imap, &kl).unwrap();
        let diff = z.sub(&HeckeElt::basis_elt(Basis::C, w));
        for (y, _) in diff.terms() {
            assert!(pt("3,1").strictly_dominated_by(&shape_of(y)));
        }
        let zt = kl.convert(&z, Basis::T);
        assert_eq!(zt.bar(), zt);
        assert!(z_element(&Perm::identity(4), &imap, &kl).is_err());
    }

    #[test]
    fn determinants_are_units() {
        let kl = KlTable::new(3);
        let full = murphy_determinant_full(&kl).unwrap();
        let blocks = murphy_determinant_blocks(&kl).unwrap();
        assert!(is_unit(&full));
        assert_eq!(full.len(), 1);
        assert!(is_unit(&blocks));
    }
}

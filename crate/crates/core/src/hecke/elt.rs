use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::Perm;
use crate::laurent::Laurent;

/// Which basis the coefficients of a [`HeckeElt`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    T,
    #[serde(rename = "Cprime")]
    CPrime,
    C,
}

impl Basis {
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::T => "T",
            Basis::CPrime => "C'",
            Basis::C => "C",
        }
    }
}

/// Element of the Hecke algebra of `S_n`, stored as a sparse map from
/// permutations to coefficients in a fixed basis. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    basis: Basis,
    n: usize,
    coeffs: BTreeMap<Perm, Laurent>,
}

/// `v - v^-1`.
pub(crate) fn q_diff() -> Laurent {
    Laurent::from_terms([(-1, -1), (1, 1)])
}

impl HeckeElt {
    pub fn zero(n: usize, basis: Basis) -> HeckeElt {
        HeckeElt { basis, n, coeffs: BTreeMap::new() }
    }

    /// The basis element indexed by `w`.
    pub fn basis_elt(basis: Basis, w: Perm) -> HeckeElt {
        let mut h = HeckeElt::zero(w.n(), basis);
        h.coeffs.insert(w, Laurent::one());
        h
    }

    /// `T_1`, the identity.
    pub fn one(n: usize) -> HeckeElt {
        HeckeElt::basis_elt(Basis::T, Perm::identity(n))
    }

    pub fn from_terms<I>(n: usize, basis: Basis, terms: I) -> HeckeElt
    where
        I: IntoIterator<Item = (Perm, Laurent)>,
    {
        let mut h = HeckeElt::zero(n, basis);
        for (w, c) in terms {
            h.add_term(w, &c);
        }
        h
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Perm) -> Laurent {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Terms in length-lex order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Laurent)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Perm> {
        self.coeffs.keys().copied().collect()
    }

    /// Adds `c` to the coefficient of `w`.
    pub fn add_term(&mut self, w: Perm, c: &Laurent) {
        assert_eq!(w.n(), self.n, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, c.clone());
            }
        }
    }

    fn check_compatible(&self, other: &HeckeElt) {
        assert_eq!(self.n, other.n, "rank mismatch");
        assert_eq!(self.basis, other.basis, "basis mismatch");
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        self.check_compatible(other);
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(*w, c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        self.add(&other.scale(&Laurent::constant(-1)))
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElt {
        if c.is_zero() {
            return HeckeElt::zero(self.n, self.basis);
        }
        HeckeElt {
            basis: self.basis,
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, x)| (*w, x * c)).collect(),
        }
    }

    fn expect_t(&self) {
        assert_eq!(self.basis, Basis::T, "operation needs the T-basis");
    }

    /// `T_s * self` for `s = s_i`.
    pub fn t_lmul_gen(&self, i: usize) -> HeckeElt {
        self.expect_t();
        let q = q_diff();
        let mut out = HeckeElt::zero(self.n, Basis::T);
        for (w, c) in &self.coeffs {
            out.add_term(w.lmul_gen(i), c);
            if w.has_left_descent(i) {
                out.add_term(*w, &(c * &q));
            }
        }
        out
    }

    /// `self * T_s` for `s = s_i`.
    pub fn t_rmul_gen(&self, i: usize) -> HeckeElt {
        self.expect_t();
        let q = q_diff();
        let mut out = HeckeElt::zero(self.n, Basis::T);
        for (w, c) in &self.coeffs {
            out.add_term(w.rmul_gen(i), c);
            if w.has_right_descent(i) {
                out.add_term(*w, &(c * &q));
            }
        }
        out
    }

    /// `T_x * self`.
    pub fn t_lmul_basis(&self, x: &Perm) -> HeckeElt {
        let mut out = self.clone();
        for &i in x.reduced_word().iter().rev() {
            out = out.t_lmul_gen(i);
        }
        out
    }

    /// Product of two elements given in the T-basis.
    pub fn t_mul(&self, other: &HeckeElt) -> HeckeElt {
        self.expect_t();
        other.expect_t();
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = HeckeElt::zero(self.n, Basis::T);
        for (x, a) in &self.coeffs {
            for (w, c) in &other.t_lmul_basis(x).coeffs {
                out.add_term(*w, &(a * c));
            }
        }
        out
    }

    /// The symmetrizing trace: the coefficient of `T_1`.
    pub fn tau(&self) -> Laurent {
        self.expect_t();
        self.coeff(&Perm::identity(self.n))
    }

    /// `j(Σ a_w T_w) = Σ ε_w bar(a_w) T_w`.
    pub fn j(&self) -> HeckeElt {
        self.expect_t();
        HeckeElt {
            basis: Basis::T,
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| {
                    let b = c.bar();
                    (*w, if w.sign() < 0 { -b } else { b })
                })
                .collect(),
        }
    }

    /// The A-linear algebra automorphism with `T_s -> -T_s^{-1}`.
    pub fn dagger(&self) -> HeckeElt {
        self.expect_t();
        let q = q_diff();
        let mut out = HeckeElt::zero(self.n, Basis::T);
        for (w, c) in &self.coeffs {
            let mut img = HeckeElt::basis_elt(Basis::T, Perm::identity(self.n)).scale(c);
            for &i in w.reduced_word().iter().rev() {
                // -T_s^{-1} = -T_s + (v - v^-1) T_1
                img = img.t_lmul_gen(i).scale(&Laurent::constant(-1)).add(&img.scale(&q));
            }
            out = out.add(&img);
        }
        out
    }

    /// The bar involution `Σ a_w T_w -> Σ bar(a_w) T_{w^{-1}}^{-1}`,
    /// computed as `j ∘ dagger`.
    pub fn bar(&self) -> HeckeElt {
        self.dagger().j()
    }

    /// The A-linear anti-automorphism `T_w -> T_{w^{-1}}`.
    pub fn flat(&self) -> HeckeElt {
        HeckeElt {
            basis: self.basis,
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.inverse(), c.clone())).collect(),
        }
    }

    /// Text form `(c) X[s1 s2]` with terms joined by ` + `, in length-lex
    /// order of the index. Zero renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(w, c)| format!("({c}) {}[{}]", self.basis.symbol(), w.word_string()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt(S_{}: {})", self.n, self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    fn t(n: usize, word: &[usize]) -> HeckeElt {
        HeckeElt::basis_elt(Basis::T, Perm::from_word(n, word).unwrap())
    }

    #[test]
    fn quadratic_relation() {
        let ts = t(3, &[1]);
        let sq = ts.t_mul(&ts);
        let expected = t(3, &[]).add(&ts.scale(&l("-v^-1 + v")));
        assert_eq!(sq, expected);
        assert_eq!(t(3, &[1]).t_mul(&t(3, &[2])), t(3, &[1, 2]));
    }

    #[test]
    fn c_s_times_cprime_s_vanishes() {
        let one = t(3, &[]);
        let ts = t(3, &[1]);
        let c = ts.sub(&one.scale(&l("v")));
        let cp = ts.add(&one.scale(&l("v^-1")));
        assert!(c.t_mul(&cp).is_zero());
    }

    #[test]
    fn involution_examples() {
        let ts = t(3, &[1]);
        let expected = ts.sub(&t(3, &[]).scale(&l("-v^-1 + v")));
        assert_eq!(ts.bar(), expected);
        assert_eq!(t(3, &[1, 2]).flat(), t(3, &[2, 1]));
        let h = t(3, &[1, 2]).scale(&l("v^2 + 3")).add(&ts.scale(&l("v^-1")));
        assert_eq!(h.bar().bar(), h);
        assert_eq!(h.dagger().dagger(), h);
        assert_eq!(h.j().j(), h);
    }

    #[test]
    fn trace_examples() {
        assert!(t(3, &[]).tau().is_one());
        assert!(t(3, &[1]).tau().is_zero());
        assert!(t(3, &[1]).t_mul(&t(3, &[1])).tau().is_one());
    }

    #[test]
    fn rendering() {
        let h = t(3, &[1, 2]).scale(&l("v")).add(&t(3, &[]));
        assert_eq!(h.render(), "(1) T[1] + (v) T[s1 s2]");
        assert_eq!(HeckeElt::zero(3, Basis::C).render(), "0");
    }
}

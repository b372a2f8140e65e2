//! Exact arithmetic in `Z[v, v^-1]` and its two-variable extension.
//!
//! A [`Laurent`] is a sorted list of `(exponent, coefficient)` pairs with no
//! zero coefficients, so equality is structural. The zero polynomial is the
//! empty list; asking it for its extreme exponents is an error rather than a
//! sentinel value.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::int::Int;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("the zero polynomial has no extreme exponent")]
    ZeroPolynomial,
    #[error("division is not exact in Z[v, v^-1]")]
    DivisionFailure,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse Laurent polynomial {0:?}")]
    Parse(String),
}

/// Element of `A = Z[v, v^-1]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: Vec<(i32, Int)>,
}

/// Summary of a polynomial's support, see [`Laurent::shape`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub min_exp: i32,
    pub max_exp: i32,
    pub constant_term: Int,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: impl Into<Int>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(e, c)] }
        }
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from arbitrary terms; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<Int>,
    {
        let mut v: Vec<(i32, Int)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn terms(&self) -> &[(i32, Int)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Result<i32, LaurentError> {
        self.terms.first().map(|t| t.0).ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn max_exp(&self) -> Result<i32, LaurentError> {
        self.terms.last().map(|t| t.0).ok_or(LaurentError::ZeroPolynomial)
    }

    pub fn coeff(&self, e: i32) -> Int {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(0)
    }

    pub fn shape(&self) -> Result<Shape, LaurentError> {
        Ok(Shape {
            min_exp: self.min_exp()?,
            max_exp: self.max_exp()?,
            constant_term: self.constant_term(),
        })
    }

    /// Membership in `A_{<0} = v^-1 Z[v^-1]`. Zero belongs to it.
    pub fn in_negative_part(&self) -> bool {
        self.max_exp().map_or(true, |e| e < 0)
    }

    /// Membership in `A_{>0} = v Z[v]`. Zero belongs to it.
    pub fn in_positive_part(&self) -> bool {
        self.min_exp().map_or(true, |e| e > 0)
    }

    /// Membership in `Z[v]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> Int {
        let mut s = Int::ZERO;
        for (_, c) in &self.terms {
            s += c;
        }
        s
    }

    /// `self += c * v^k * other`, the workhorse of every basis change.
    pub fn add_scaled_shifted(&mut self, other: &Laurent, c: &Int, k: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let scaled: Vec<(i32, Int)> = other.terms.iter().map(|(e, x)| (e + k, x * c)).collect();
        self.merge_add(&scaled);
    }

    fn merge_add(&mut self, rhs: &[(i32, Int)]) {
        if rhs.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = rhs.to_vec();
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < lhs.len() && j < rhs.len() {
            let (ea, eb) = (lhs[i].0, rhs[j].0);
            if ea < eb {
                out.push(lhs[i].clone());
                i += 1;
            } else if eb < ea {
                out.push(rhs[j].clone());
                j += 1;
            } else {
                let s = &lhs[i].1 + &rhs[j].1;
                if !s.is_zero() {
                    out.push((ea, s));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&lhs[i..]);
        out.extend_from_slice(&rhs[j..]);
        self.terms = out;
    }

    /// Exact quotient `self / divisor` in `Z[v, v^-1]`.
    ///
    /// Both operands are written as `v^k` times a polynomial with non-zero
    /// constant term; the quotient exists iff the second polynomial divides
    /// the first in `Z[v]`, which long division with exact integer leading
    /// quotients decides.
    pub fn div_exact(&self, divisor: &Laurent) -> Result<Laurent, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let a_lo = self.min_exp()?;
        let b_lo = divisor.min_exp()?;
        let dense = |p: &Laurent, lo: i32| -> Vec<Int> {
            let hi = p.max_exp().unwrap_or(lo);
            let mut d = vec![Int::ZERO; (hi - lo + 1) as usize];
            for (e, c) in &p.terms {
                d[(e - lo) as usize] = c.clone();
            }
            d
        };
        let mut rem = dense(self, a_lo);
        let div = dense(divisor, b_lo);
        if rem.len() < div.len() {
            return Err(LaurentError::DivisionFailure);
        }
        let db = div.len() - 1;
        let lead = &div[db];
        let qlen = rem.len() - db;
        let mut quot = vec![Int::ZERO; qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(lead).ok_or(LaurentError::DivisionFailure)?;
            for (i, d) in div.iter().enumerate() {
                if !d.is_zero() {
                    let t = &q * d;
                    rem[k + i] -= &t;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::DivisionFailure);
        }
        let shift = a_lo - b_lo;
        Ok(Laurent::from_terms(
            quot.into_iter().enumerate().map(|(i, c)| (i as i32 + shift, c)),
        ))
    }

    /// Polynomial raised to a non-negative power.
    pub fn pow(&self, k: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl<'a> Add<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.merge_add(&rhs.terms);
        out
    }
}

impl<'a> Sub<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let neg: Vec<(i32, Int)> = rhs.terms.iter().map(|(e, c)| (*e, -c)).collect();
        let mut out = self.clone();
        out.merge_add(&neg);
        out
    }
}

impl<'a> Mul<&'a Laurent> for &'a Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Laurent {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut acc = vec![Int::ZERO; (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let t = ca * cb;
                acc[(ea + eb - lo) as usize] += &t;
            }
        }
        Laurent {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + lo, c))
                .collect(),
        }
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, rhs: Laurent) -> Laurent {
        self.merge_add(&rhs.terms);
        self
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, rhs: Laurent) -> Laurent {
        &self - &rhs
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        self.merge_add(&rhs.terms);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        let neg: Vec<(i32, Int)> = rhs.terms.iter().map(|(e, c)| (*e, -c)).collect();
        self.merge_add(&neg);
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mag: &Int, e: i32, var: &str) -> fmt::Result {
    match e {
        0 => write!(f, "{mag}"),
        _ => {
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
    }
}

/// Text form, ascending exponents: `v^-3 + 2 + v^2`, `-v^-1 + v`, `0`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, &c.abs(), *e, "v")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

/// Parses the text form produced by `Display`. Spaces are optional and a
/// `*` between coefficient and `v` is accepted.
impl FromStr for Laurent {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LaurentError::Parse(s.to_string());
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err());
        }
        let mut pos = 0;
        let mut terms: Vec<(i32, Int)> = Vec::new();
        let read_digits = |pos: &mut usize| -> String {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            chars[start..*pos].iter().collect()
        };
        while pos < chars.len() {
            let mut negative = false;
            if chars[pos] == '+' || chars[pos] == '-' {
                negative = chars[pos] == '-';
                pos += 1;
            } else if !terms.is_empty() {
                return Err(err());
            }
            let digits = read_digits(&mut pos);
            let mut coeff: Int = if digits.is_empty() {
                Int::ONE
            } else {
                digits.parse().map_err(|_| err())?
            };
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
            }
            let mut exp = 0;
            if pos < chars.len() && chars[pos] == 'v' {
                pos += 1;
                exp = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let mut sign = 1;
                    if pos < chars.len() && chars[pos] == '-' {
                        sign = -1;
                        pos += 1;
                    }
                    let d = read_digits(&mut pos);
                    exp = sign * d.parse::<i32>().map_err(|_| err())?;
                }
            } else if digits.is_empty() {
                return Err(err());
            }
            if negative {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(Laurent::from_terms(terms))
    }
}

/// JSON form: array of `[exponent, "coefficient"]` pairs in ascending order.
impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct LaurentVisitor;
        impl<'de> Visitor<'de> for LaurentVisitor {
            type Value = Laurent;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of [exponent, coefficient-string] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Laurent, A::Error> {
                let mut terms = Vec::new();
                let mut last: Option<i32> = None;
                while let Some((e, c)) = seq.next_element::<(i32, String)>()? {
                    let c: Int = c.parse().map_err(de::Error::custom)?;
                    if c.is_zero() || last.is_some_and(|l| l >= e) {
                        return Err(de::Error::custom("terms must be non-zero and strictly ascending"));
                    }
                    last = Some(e);
                    terms.push((e, c));
                }
                Ok(Laurent { terms })
            }
        }
        deserializer.deserialize_seq(LaurentVisitor)
    }
}

/// Element of `Z[v, v^-1, vb, vb^-1]` where `vb` is a second indeterminate.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiLaurent {
    terms: Vec<((i32, i32), Int)>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent { terms: Vec::new() }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), C)>,
        C: Into<Int>,
    {
        let mut v: Vec<((i32, i32), Int)> =
            terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<((i32, i32), Int)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        BiLaurent { terms: out }
    }

    /// Embeds a polynomial in `v` (second exponent zero).
    pub fn from_v(p: &Laurent) -> Self {
        BiLaurent {
            terms: p.terms.iter().map(|(e, c)| ((*e, 0), c.clone())).collect(),
        }
    }

    /// Substitutes `v -> vb`.
    pub fn from_vb(p: &Laurent) -> Self {
        BiLaurent {
            terms: p.terms.iter().map(|(e, c)| ((0, *e), c.clone())).collect(),
        }
    }

    pub fn terms(&self) -> &[((i32, i32), Int)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: (i32, i32)) -> Int {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// `self += p(v) * q(vb)`.
    pub fn add_outer(&mut self, p: &Laurent, q: &Laurent) {
        if p.is_zero() || q.is_zero() {
            return;
        }
        let mut prod = Vec::with_capacity(p.len() * q.len());
        for (ep, cp) in p.terms() {
            for (eq, cq) in q.terms() {
                prod.push(((*ep, *eq), cp * cq));
            }
        }
        prod.sort_by_key(|t| t.0);
        self.merge_add(&prod);
    }

    fn merge_add(&mut self, rhs: &[((i32, i32), Int)]) {
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + rhs.len());
        let (mut i, mut j) = (0, 0);
        while i < lhs.len() && j < rhs.len() {
            let (ea, eb) = (lhs[i].0, rhs[j].0);
            if ea < eb {
                out.push(lhs[i].clone());
                i += 1;
            } else if eb < ea {
                out.push(rhs[j].clone());
                j += 1;
            } else {
                let s = &lhs[i].1 + &rhs[j].1;
                if !s.is_zero() {
                    out.push((ea, s));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&lhs[i..]);
        out.extend_from_slice(&rhs[j..]);
        self.terms = out;
    }
}

impl<'a> Add<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn add(self, rhs: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        out.merge_add(&rhs.terms);
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn sub(self, rhs: &BiLaurent) -> BiLaurent {
        let neg: Vec<_> = rhs.terms.iter().map(|(e, c)| (*e, -c)).collect();
        let mut out = self.clone();
        out.merge_add(&neg);
        out
    }
}

impl<'a> Mul<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn mul(self, rhs: &BiLaurent) -> BiLaurent {
        let mut prod = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a1, a2), ca) in &self.terms {
            for ((b1, b2), cb) in &rhs.terms {
                prod.push(((a1 + b1, a2 + b2), ca * cb));
            }
        }
        BiLaurent::from_terms(prod)
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((e1, e2), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if *e1 == 0 && *e2 == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut parts = Vec::new();
            if *e1 != 0 {
                parts.push(if *e1 == 1 { "v".to_string() } else { format!("v^{e1}") });
            }
            if *e2 != 0 {
                parts.push(if *e2 == 1 { "vb".to_string() } else { format!("vb^{e2}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let q = l("v^-1 + v");
        assert_eq!(&q * &Laurent::one(), q);
        let d = l("-v^-1 + v");
        assert_eq!(&d * &d, l("v^-2 - 2 + v^2"));
        assert_eq!(&d - &d, Laurent::zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(Laurent::v_pow(1).bar(), Laurent::v_pow(-1));
        assert_eq!(Laurent::constant(3).bar(), Laurent::constant(3));
        assert_eq!(l("v^-1 + v^2").bar(), l("v^-2 + v"));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(l("-v^-2 + v^2").div_exact(&l("-v^-1 + v")), Ok(l("v^-1 + v")));
        assert_eq!(l("1 + 2v^2 + 2v^4 + v^6").div_exact(&l("1 + v^2")), Ok(l("1 + v^2 + v^4")));
        assert_eq!(l("1 + v").div_exact(&l("-1 + v")), Err(LaurentError::DivisionFailure));
        assert_eq!(l("v").div_exact(&Laurent::zero()), Err(LaurentError::DivisionByZero));
        assert_eq!(l("2v").div_exact(&l("4")), Err(LaurentError::DivisionFailure));
    }

    #[test]
    fn shape_and_coefficients() {
        let p = l("v^-3 + v^-1");
        let s = p.shape().unwrap();
        assert_eq!((s.min_exp, s.max_exp, s.constant_term), (-3, -1, Int::ZERO));
        assert_eq!(l("v^-1").coeff(-1), Int::ONE);
        let h = l("v^-1 + v");
        assert_eq!(h.constant_term(), Int::ZERO);
        assert_eq!((&Laurent::v_pow(1) * &h).constant_term(), Int::ONE);
        assert_eq!(Laurent::zero().min_exp(), Err(LaurentError::ZeroPolynomial));
        assert_eq!(Laurent::zero().max_exp(), Err(LaurentError::ZeroPolynomial));
    }

    #[test]
    fn sign_predicates() {
        assert!(l("v^-3 + 2v^-1").in_negative_part());
        assert!(!l("v^-1 + 1").in_negative_part());
        assert!(l("v + v^4").in_positive_part());
        assert!(!l("1 + v").in_positive_part());
        assert!(Laurent::zero().in_negative_part() && Laurent::zero().in_positive_part());
    }

    #[test]
    fn text_rendering() {
        assert_eq!(l("v^-3 + 2 + v^2").to_string(), "v^-3 + 2 + v^2");
        assert_eq!(l("v - v^-1").to_string(), "-v^-1 + v");
        assert_eq!(l("-3v^2 - 1").to_string(), "-1 - 3v^2");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(l("2*v^-1").to_string(), "2v^-1");
        assert!("v +".parse::<Laurent>().is_err());
        assert!("".parse::<Laurent>().is_err());
        assert!("v v".parse::<Laurent>().is_err());
    }

    #[test]
    fn json_rendering() {
        let p = l("v^-3 + 2 + v^2");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[[-3,"1"],[0,"2"],[2,"1"]]"#);
        let back: Laurent = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Laurent>(r#"[[1,"1"],[0,"1"]]"#).is_err());
        assert!(serde_json::from_str::<Laurent>(r#"[[1,"0"]]"#).is_err());
    }

    #[test]
    fn bilaurent_outer_products() {
        let p = l("v + v^-1");
        let mut acc = BiLaurent::zero();
        acc.add_outer(&p, &Laurent::one());
        assert_eq!(acc, BiLaurent::from_v(&p));
        let q = l("2 - v");
        let prod = &BiLaurent::from_v(&p) * &BiLaurent::from_vb(&q);
        let mut acc = BiLaurent::zero();
        acc.add_outer(&p, &q);
        assert_eq!(acc, prod);
        assert_eq!(prod.coeff((1, 1)), Int::from(-1));
        assert_eq!((&prod - &acc), BiLaurent::zero());
    }
}

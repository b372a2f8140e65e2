//! Reference implementations used to check the library. They share no
//! code with it: permutations are plain one-line vectors and polynomials
//! are exponent maps.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

/// Laurent polynomial as `exponent -> coefficient`, zeros removed.
pub type Poly = BTreeMap<i32, i64>;

pub fn poly_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += sign * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn poly_bar(a: &Poly) -> Poly {
    a.iter().map(|(e, c)| (-e, *c)).collect()
}

pub fn poly_terms(terms: &[(i32, i64)]) -> Poly {
    poly_add(&Poly::new(), &terms.iter().copied().collect(), 1)
}

/// One-line notation, values `1..=n`.
pub type OPerm = Vec<usize>;

pub fn all_oneline(n: usize) -> Vec<OPerm> {
    fn rec(prefix: &mut OPerm, used: &mut Vec<bool>, out: &mut Vec<OPerm>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// `s_i w`: swaps the values `i` and `i + 1`.
pub fn left_gen(i: usize, w: &[usize]) -> OPerm {
    w.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect()
}

/// A reduced word `[i_1, .., i_k]` with `w = s_{i_1} ... s_{i_k}`, found by
/// bubble sorting.
pub fn bubble_word(w: &[usize]) -> Vec<usize> {
    let mut cur = w.to_vec();
    let mut rev = Vec::new();
    while let Some(k) = (0..cur.len().saturating_sub(1)).find(|&k| cur[k] > cur[k + 1]) {
        cur.swap(k, k + 1);
        rev.push(k + 1);
    }
    rev.reverse();
    rev
}

fn compose_word(n: usize, word: &[usize]) -> OPerm {
    let mut w: OPerm = (1..=n).collect();
    for &i in word.iter().rev() {
        w = left_gen(i, &w);
    }
    w
}

/// Bruhat order by the tableau criterion: `y <= w` iff for every prefix
/// the sorted values of `y` are entrywise at most those of `w`.
pub fn bruhat_tableau(y: &[usize], w: &[usize]) -> bool {
    (1..=y.len()).all(|i| {
        let mut a = y[..i].to_vec();
        let mut b = w[..i].to_vec();
        a.sort();
        b.sort();
        a.iter().zip(&b).all(|(p, q)| p <= q)
    })
}

/// Bruhat order by the subword property of a reduced word of `w`.
pub fn bruhat_subword(y: &[usize], w: &[usize]) -> bool {
    let word = bubble_word(w);
    (0u32..(1 << word.len())).any(|mask| {
        let sub: Vec<usize> =
            word.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &i)| i).collect();
        compose_word(y.len(), &sub) == y
    })
}

/// Hecke algebra element in the T-basis.
type HElt = HashMap<OPerm, Poly>;

fn helt_add_term(h: &mut HElt, w: OPerm, c: &Poly) {
    let e = h.entry(w.clone()).or_default();
    *e = poly_add(e, c, 1);
    if e.is_empty() {
        h.remove(&w);
    }
}

/// `T_s h` with `T_s T_w = T_{sw}` if `sw > w`, else
/// `T_{sw} + (v - v^-1) T_w`.
fn t_left(i: usize, h: &HElt) -> HElt {
    let q = poly_terms(&[(1, 1), (-1, -1)]);
    let mut out = HElt::new();
    for (w, c) in h {
        let sw = left_gen(i, w);
        helt_add_term(&mut out, sw.clone(), c);
        if inversions(&sw) < inversions(w) {
            helt_add_term(&mut out, w.clone(), &poly_mul(c, &q));
        }
    }
    out
}

/// `bar(T_y) = T_{s_1}^{-1} ... T_{s_k}^{-1}` with
/// `T_s^{-1} = T_s - (v - v^-1)`.
fn bar_t(y: &[usize]) -> HElt {
    let n = y.len();
    let q = poly_terms(&[(1, 1), (-1, -1)]);
    let mut h = HElt::new();
    h.insert((1..=n).collect(), poly_terms(&[(0, 1)]));
    for &i in bubble_word(y).iter().rev() {
        let ts = t_left(i, &h);
        let mut next = ts;
        for (w, c) in &h {
            helt_add_term(&mut next, w.clone(), &poly_mul(c, &q).iter().map(|(e, x)| (*e, -x)).collect());
        }
        h = next;
    }
    h
}

/// All `p_{y,w}` by solving `bar(C'_w) = C'_w` directly: with
/// `bar(T_z) = Σ_x r_{x,z} T_x`, the coefficient of `T_y` gives
/// `p_y - bar(p_y) = Σ_{z > y} bar(p_z) r_{y,z}`, and `p_y` is the part of
/// the right side in negative degrees.
pub fn kl_oracle(n: usize) -> HashMap<(OPerm, OPerm), Poly> {
    let mut elts = all_oneline(n);
    elts.sort_by_key(|w| inversions(w));
    let bars: HashMap<OPerm, HElt> = elts.iter().map(|y| (y.clone(), bar_t(y))).collect();
    let mut out = HashMap::new();
    for w in &elts {
        let below: Vec<&OPerm> = elts.iter().filter(|y| bruhat_tableau(y, w)).collect();
        let mut p: HashMap<OPerm, Poly> = HashMap::new();
        p.insert(w.clone(), poly_terms(&[(0, 1)]));
        for y in below.iter().rev() {
            if *y == w {
                continue;
            }
            let mut rhs = Poly::new();
            for (z, pz) in &p {
                if let Some(r) = bars[z].get(*y) {
                    rhs = poly_add(&rhs, &poly_mul(&poly_bar(pz), r), 1);
                }
            }
            let py: Poly = rhs.into_iter().filter(|(e, _)| *e < 0).collect();
            p.insert((*y).clone(), py);
        }
        for (y, py) in p {
            if !py.is_empty() {
                out.insert((y, w.clone()), py);
            }
        }
    }
    out
}

/// Schensted row insertion of `w(1), .., w(n)`: `(P, Q)`.
pub fn schensted(w: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (k, &x) in w.iter().enumerate() {
        let mut x = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![k + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(k + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Number of standard tableaux of the shape, by the hook length formula.
pub fn hook_count(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let mut hooks: u64 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let below = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (len - c - 1 + below + 1) as u64;
        }
    }
    (1..=n as u64).product::<u64>() / hooks
}

/// `χ^λ(μ)` by the Frobenius formula: the coefficient of `x^{λ+δ}` in
/// `a_δ · p_μ` with `ℓ = n` variables.
pub fn frobenius_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let n: usize = lambda.iter().sum();
    let l = n;
    let mut target: Vec<usize> = (0..l).map(|i| lambda.get(i).copied().unwrap_or(0) + (l - 1 - i)).collect();
    let mut poly: HashMap<Vec<usize>, i64> = HashMap::new();
    for sigma in all_oneline(l) {
        let sign = if inversions(&sigma).is_multiple_of(2) { 1 } else { -1 };
        let expo: Vec<usize> = sigma.iter().map(|&s| l - s).collect();
        *poly.entry(expo).or_insert(0) += sign;
    }
    for &k in mu {
        let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
        for (e, c) in &poly {
            for i in 0..l {
                let mut f = e.clone();
                f[i] += k;
                if f.iter().zip(&target).all(|(a, b)| a <= b) {
                    *next.entry(f).or_insert(0) += c;
                }
            }
        }
        poly = next;
    }
    target.truncate(l);
    poly.get(&target).copied().unwrap_or(0)
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

use std::collections::HashMap;

use super::{all_perms, Perm};

/// `S_n` with elements indexed in length-lex order and precomputed
/// multiplication-by-generator tables and Bruhat order.
#[derive(Debug, Clone)]
pub struct SymGroup {
    n: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    lengths: Vec<u32>,
    inverses: Vec<u32>,
    // lmul[i - 1][w] = index of s_i w, rmul[i - 1][w] = index of w s_i
    lmul: Vec<Vec<u32>>,
    rmul: Vec<Vec<u32>>,
    bruhat: Vec<Vec<u64>>,
}

impl SymGroup {
    pub fn new(n: usize) -> SymGroup {
        assert!(n >= 1, "rank must be positive");
        let elements = all_perms(n);
        let index: HashMap<Perm, usize> =
            elements.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        let lengths = elements.iter().map(|w| w.length() as u32).collect();
        let inverses = elements.iter().map(|w| index[&w.inverse()] as u32).collect();
        let lmul = (1..n)
            .map(|i| elements.iter().map(|w| index[&w.lmul_gen(i)] as u32).collect())
            .collect();
        let rmul = (1..n)
            .map(|i| elements.iter().map(|w| index[&w.rmul_gen(i)] as u32).collect())
            .collect();
        let mut g = SymGroup {
            n,
            elements,
            index,
            lengths,
            inverses,
            lmul,
            rmul,
            bruhat: Vec::new(),
        };
        g.bruhat = g.build_bruhat();
        g
    }

    // Row w holds {y : y <= w}. Rows are filled in length order using the
    // lifting property: for w s < w, y <= w iff min(y, y s) <= w s.
    fn build_bruhat(&self) -> Vec<Vec<u64>> {
        let size = self.elements.len();
        let words = size.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; size];
        rows[0][0] = 1;
        for w in 1..size {
            let s = self.first_right_descent(w).unwrap();
            let ws = self.rmul(s, w);
            let mut row = vec![0u64; words];
            for y in 0..size {
                let ys = self.rmul(s, y);
                let m = if self.lengths[ys] < self.lengths[y] { ys } else { y };
                if rows[ws][m / 64] >> (m % 64) & 1 == 1 {
                    row[y / 64] |= 1 << (y % 64);
                }
            }
            rows[w] = row;
        }
        rows
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    #[inline]
    pub fn elt(&self, i: usize) -> Perm {
        self.elements[i]
    }

    #[inline]
    pub fn index_of(&self, w: &Perm) -> usize {
        self.index[w]
    }

    pub fn try_index_of(&self, w: &Perm) -> Option<usize> {
        self.index.get(w).copied()
    }

    #[inline]
    pub fn len(&self, w: usize) -> usize {
        self.lengths[w] as usize
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn inv(&self, w: usize) -> usize {
        self.inverses[w] as usize
    }

    /// Index of `s_i w`.
    #[inline]
    pub fn lmul(&self, i: usize, w: usize) -> usize {
        self.lmul[i - 1][w] as usize
    }

    /// Index of `w s_i`.
    #[inline]
    pub fn rmul(&self, i: usize, w: usize) -> usize {
        self.rmul[i - 1][w] as usize
    }

    #[inline]
    pub fn has_left_descent(&self, i: usize, w: usize) -> bool {
        self.lengths[self.lmul(i, w)] < self.lengths[w]
    }

    #[inline]
    pub fn has_right_descent(&self, i: usize, w: usize) -> bool {
        self.lengths[self.rmul(i, w)] < self.lengths[w]
    }

    pub fn first_left_descent(&self, w: usize) -> Option<usize> {
        (1..self.n).find(|&i| self.has_left_descent(i, w))
    }

    pub fn first_right_descent(&self, w: usize) -> Option<usize> {
        (1..self.n).find(|&i| self.has_right_descent(i, w))
    }

    /// Index of `x * y`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].compose(&self.elements[y])]
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the longest element.
    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    #[inline]
    pub fn bruhat_leq(&self, y: usize, w: usize) -> bool {
        self.bruhat[w][y / 64] >> (y % 64) & 1 == 1
    }

    /// Indices `y <= w`, ascending.
    pub fn bruhat_below(&self, w: usize) -> Vec<usize> {
        (0..=w).filter(|&y| self.bruhat_leq(y, w)).collect()
    }

    #[inline]
    pub fn sign(&self, w: usize) -> i32 {
        if self.lengths[w].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree_with_perm_arithmetic() {
        let g = SymGroup::new(4);
        assert_eq!(g.size(), 24);
        assert_eq!(g.longest(), g.index_of(&Perm::from_one_line(&[4, 3, 2, 1]).unwrap()));
        for w in 0..g.size() {
            let p = g.elt(w);
            assert_eq!(g.len(w), p.length());
            assert_eq!(g.elt(g.inv(w)), p.inverse());
            for i in 1..4 {
                assert_eq!(g.elt(g.lmul(i, w)), p.lmul_gen(i));
                assert_eq!(g.elt(g.rmul(i, w)), p.rmul_gen(i));
            }
        }
    }

    #[test]
    fn bruhat_table_matches_direct_test() {
        let g = SymGroup::new(4);
        for w in 0..g.size() {
            for y in 0..g.size() {
                assert_eq!(g.bruhat_leq(y, w), g.elt(y).bruhat_leq(&g.elt(w)));
            }
        }
    }
}

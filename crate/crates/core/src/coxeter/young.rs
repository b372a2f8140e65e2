use crate::laurent::Laurent;

use super::{all_perms, Partition, Perm};

/// The Young subgroup `S_λ` of `S_n` and the data attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungData {
    pub lambda: Partition,
    /// Indices `i` with `s_i` in `S_λ`: all of `1..n` except partial sums.
    pub generators: Vec<usize>,
    /// Longest element of `S_λ`.
    pub w_lambda: Perm,
    /// `Σ_{w ∈ S_λ} v^{2 l(w)}`.
    pub poincare: Laurent,
}

impl YoungData {
    pub fn new(lambda: &Partition) -> YoungData {
        let n = lambda.n();
        let cuts = lambda.partial_sums();
        let generators: Vec<usize> = (1..n).filter(|i| !cuts.contains(i)).collect();
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in lambda.parts() {
            images.extend((start + 1..=start + len).rev());
            start += len;
        }
        let w_lambda = Perm::from_one_line(&images).unwrap();
        let mut poincare = Laurent::one();
        for &len in lambda.parts() {
            // Poincaré polynomial of S_len: Π_{k=1}^{len} (1 + v^2 + ... + v^{2(k-1)})
            for k in 1..=len as i32 {
                let factor = Laurent::from_terms((0..k).map(|e| (2 * e, 1)));
                poincare = &poincare * &factor;
            }
        }
        YoungData { lambda: lambda.clone(), generators, w_lambda, poincare }
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Position blocks `[a, b)` (0-based) permuted by `S_λ`.
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for &len in self.lambda.parts() {
            out.push((start, start + len));
            start += len;
        }
        out
    }

    pub fn contains(&self, w: &Perm) -> bool {
        self.blocks().iter().all(|&(a, b)| {
            w.images0()[a..b].iter().all(|&x| (x as usize) >= a && (x as usize) < b)
        })
    }

    /// `w` has minimal length in `w S_λ`: equivalently `w . t^λ` is
    /// row-standard, i.e. no right descent lies in the generator set.
    pub fn is_min_coset_rep(&self, w: &Perm) -> bool {
        self.generators.iter().all(|&i| !w.has_right_descent(i))
    }

    /// Elements of `S_λ` in length-lex order.
    pub fn subgroup_elements(&self) -> Vec<Perm> {
        all_perms(self.n()).into_iter().filter(|w| self.contains(w)).collect()
    }

    /// Minimal-length left coset representatives `X_λ` in length-lex order.
    pub fn coset_reps(&self) -> Vec<Perm> {
        all_perms(self.n()).into_iter().filter(|w| self.is_min_coset_rep(w)).collect()
    }

    /// Writes `w = x u` with `x ∈ X_λ`, `u ∈ S_λ` and `l(w) = l(x) + l(u)`.
    /// `x` is `w` with its values sorted inside every position block.
    pub fn coset_decompose(&self, w: &Perm) -> (Perm, Perm) {
        let mut images = w.one_line();
        for (a, b) in self.blocks() {
            images[a..b].sort_unstable();
        }
        let x = Perm::from_one_line(&images).unwrap();
        let u = x.inverse().compose(w);
        (x, u)
    }
}

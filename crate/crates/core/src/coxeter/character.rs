//! Ordinary characters of `S_n` by the Murnaghan–Nakayama rule.

use super::Partition;

/// `χ^λ` evaluated on the class of cycle type `mu`.
///
/// Works on beta-sets: removing a rim hook of length `r` moves one bead
/// from position `b` to the free position `b - r`, with sign given by the
/// parity of the beads jumped over.
pub fn mn_character(lambda: &Partition, mu: &[usize]) -> i64 {
    let k = lambda.num_rows();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
    let mut cycles: Vec<usize> = mu.iter().copied().filter(|&c| c > 0).collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    mn_beta(&beta, &cycles)
}

fn mn_beta(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.to_vec();
        next[idx] = target;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&next, rest);
    }
    total
}

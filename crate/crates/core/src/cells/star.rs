use crate::coxeter::Perm;

/// `w ∈ D_R(s_i, s_j)`: exactly one of `s_i`, `s_j` is a right descent.
pub fn in_star_domain(w: &Perm, i: usize, j: usize) -> bool {
    w.has_right_descent(i) != w.has_right_descent(j)
}

/// The star operation for adjacent generators `s_i, s_j` (`|i - j| = 1`):
/// the unique element of `{w s_i, w s_j}` lying in `D_R(s_i, s_j)`, or
/// `None` when `w` itself is outside the domain.
pub fn star_operation(w: &Perm, i: usize, j: usize) -> Option<Perm> {
    assert!(i.abs_diff(j) == 1, "s{i} and s{j} are not adjacent");
    if !in_star_domain(w, i, j) {
        return None;
    }
    let a = w.rmul_gen(i);
    let b = w.rmul_gen(j);
    match (in_star_domain(&a, i, j), in_star_domain(&b, i, j)) {
        (true, false) => Some(a),
        (false, true) => Some(b),
        _ => unreachable!("exactly one neighbour lies in the domain"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::all_perms;

    #[test]
    fn examples() {
        let s1 = Perm::generator(3, 1);
        assert_eq!(star_operation(&s1, 1, 2), Some(Perm::from_word(3, &[1, 2]).unwrap()));
        assert_eq!(star_operation(&Perm::identity(3), 1, 2), None);
        for w in all_perms(3) {
            if let Some(x) = star_operation(&w, 1, 2) {
                assert_eq!(star_operation(&x, 1, 2), Some(w));
            }
        }
    }
}

use std::collections::BTreeMap;

use crate::coxeter::{mn_character, Partition, Perm, YoungData};
use crate::hecke::KlTable;
use crate::int::Int;
use crate::laurent::Laurent;
use crate::matrix::LMatrix;

use super::{CellError, CellStructure};

/// The module afforded by a left cell (or a suitable union of left cells)
/// with basis `b_x = ε_x C_x` modulo lower terms.
#[derive(Debug, Clone)]
pub struct CellModule {
    pub cell: Vec<Perm>,
    /// Matrix of `C_{s_i}` for `i = 1..n-1`; column `x` holds the image of
    /// `b_x`, so entry `(y, x)` is `-h_{s,x,y}`.
    pub gen_matrices: Vec<LMatrix>,
    n: usize,
}

impl CellModule {
    /// Builds the module on `cell`, which must be convex for the left
    /// preorder: no `w` outside the set may satisfy `x <=_L w <=_L z` with
    /// `x, z` inside it.
    pub fn new(cell: &[Perm], kl: &KlTable, cs: &CellStructure) -> Result<CellModule, CellError> {
        let g = kl.group();
        let idx: Vec<usize> = cell.iter().map(|w| g.index_of(w)).collect();
        let mut member = vec![usize::MAX; g.size()];
        for (k, &x) in idx.iter().enumerate() {
            if member[x] != usize::MAX {
                return Err(CellError::Duplicate(g.elt(x)));
            }
            member[x] = k;
        }
        for w in (0..g.size()).filter(|&w| member[w] == usize::MAX) {
            let above = idx.iter().find(|&&x| cs.left.leq(x, w));
            let below = idx.iter().find(|&&z| cs.left.leq(w, z));
            if let (Some(&x), Some(&z)) = (above, below) {
                return Err(CellError::NotClosed { low: g.elt(x), outside: g.elt(w), high: g.elt(z) });
            }
        }
        let d = idx.len();
        let mut gen_matrices = Vec::with_capacity(kl.n().saturating_sub(1));
        for i in 1..kl.n() {
            let mut m = LMatrix::zeros(d, d);
            for (col, &x) in idx.iter().enumerate() {
                for (y, h) in kl.cprime_s_action(i, x) {
                    if member[y] != usize::MAX {
                        m.set(member[y], col, -h);
                    }
                }
            }
            gen_matrices.push(m);
        }
        Ok(CellModule { cell: cell.to_vec(), gen_matrices, n: kl.n() })
    }

    pub fn dim(&self) -> usize {
        self.cell.len()
    }

    /// Matrix of `T_{s_i} = C_{s_i} + v T_1`.
    pub fn t_matrix(&self, i: usize) -> LMatrix {
        self.gen_matrices[i - 1].add(&LMatrix::scalar(self.dim(), &Laurent::v_pow(1)))
    }

    /// Matrix of `T_w`, the product of generator matrices along a reduced word.
    pub fn t_w_matrix(&self, w: &Perm) -> LMatrix {
        let mut m = LMatrix::identity(self.dim());
        for i in w.reduced_word() {
            m = m.mul(&self.t_matrix(i));
        }
        m
    }

    /// Trace of `T_w`.
    pub fn character(&self, w: &Perm) -> Laurent {
        self.t_w_matrix(w).trace()
    }

    /// Checks the quadratic, braid and commutation relations.
    pub fn check_relations(&self) -> Result<(), CellError> {
        let d = self.dim();
        let ts: Vec<LMatrix> = (1..self.n).map(|i| self.t_matrix(i)).collect();
        let v = LMatrix::scalar(d, &Laurent::v_pow(1));
        let vinv = LMatrix::scalar(d, &Laurent::v_pow(-1));
        for (k, t) in ts.iter().enumerate() {
            if !t.sub(&v).mul(&t.add(&vinv)).is_zero() {
                return Err(CellError::Relation(format!("quadratic relation fails for s{}", k + 1)));
            }
        }
        for a in 0..ts.len() {
            for b in a + 1..ts.len() {
                let (x, y) = (&ts[a], &ts[b]);
                let ok = if b == a + 1 {
                    x.mul(y).mul(x) == y.mul(x).mul(y)
                } else {
                    x.mul(y) == y.mul(x)
                };
                if !ok {
                    return Err(CellError::Relation(format!("s{} and s{} violate the braid relations", a + 1, b + 1)));
                }
            }
        }
        Ok(())
    }
}

/// The left cell containing `w_λ`.
pub fn lambda_left_cell(lambda: &Partition, kl: &KlTable, cs: &CellStructure) -> Vec<Perm> {
    let g = kl.group();
    let wl = g.index_of(&YoungData::new(lambda).w_lambda);
    let c = cs.left_cells.cell_of(wl);
    cs.left_cells.cells[c].iter().map(|&x| g.elt(x)).collect()
}

/// `χ_λ(T_w)`: the trace of `T_w` on the module of the left cell
/// containing `w_λ`.
pub fn irreducible_character(
    lambda: &Partition,
    w: &Perm,
    kl: &KlTable,
    cs: &CellStructure,
) -> Result<Laurent, CellError> {
    let module = CellModule::new(&lambda_left_cell(lambda, kl, cs), kl, cs)?;
    Ok(module.character(w))
}

/// A permutation of the given cycle type, cycles on consecutive integers.
pub fn class_representative(mu: &Partition) -> Perm {
    let mut images = Vec::with_capacity(mu.n());
    let mut start = 1;
    for &len in mu.parts() {
        for k in 0..len {
            images.push(start + (k + 1) % len);
        }
        start += len;
    }
    Perm::from_one_line(&images).unwrap()
}

/// Size of the conjugacy class of cycle type `mu`.
pub fn class_size(mu: &Partition) -> u128 {
    let n = mu.n() as u128;
    let mut z: u128 = 1;
    let mut counts: BTreeMap<usize, u128> = BTreeMap::new();
    for &p in mu.parts() {
        z *= p as u128;
        *counts.entry(p).or_default() += 1;
    }
    for &c in counts.values() {
        z *= (1..=c).product::<u128>();
    }
    (1..=n).product::<u128>() / z
}

/// Values at `v = 1` of all `χ_λ`, one column per conjugacy class, each
/// checked against the Murnaghan–Nakayama value of `χ^{λ*}`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub classes: Vec<Partition>,
    pub labels: Vec<Partition>,
    /// `values[λ][class]`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(kl: &KlTable, cs: &CellStructure) -> Result<CharacterTable, CellError> {
        let n = kl.n();
        let classes = Partition::all(n);
        let labels = Partition::all(n);
        let mut values = Vec::with_capacity(labels.len());
        for lambda in &labels {
            let module = CellModule::new(&lambda_left_cell(lambda, kl, cs), kl, cs)?;
            let mut row = Vec::with_capacity(classes.len());
            for mu in &classes {
                let w = class_representative(mu);
                let cell_value = module.character(&w).eval_one();
                let cell_value = cell_value.to_i64().ok_or(CellError::NonIntegral)?;
                let mn = mn_character(&lambda.conjugate(), mu.parts());
                if cell_value != mn {
                    return Err(CellError::LabelMismatch {
                        lambda: lambda.clone(),
                        class: mu.clone(),
                        cell_value,
                        expected: mn,
                    });
                }
                row.push(cell_value);
            }
            values.push(row);
        }
        Ok(CharacterTable { classes, labels, values })
    }

    /// Multiplicities of the `χ_λ` in the character of `module`, computed at
    /// `v = 1` by orthogonality. Fails unless they are non-negative integers
    /// reproducing the character exactly.
    pub fn decompose(&self, module: &CellModule) -> Result<BTreeMap<Partition, u64>, CellError> {
        let observed: Vec<i64> = self
            .classes
            .iter()
            .map(|mu| {
                module
                    .character(&class_representative(mu))
                    .eval_one()
                    .to_i64()
                    .ok_or(CellError::NonIntegral)
            })
            .collect::<Result<_, _>>()?;
        let order: i128 = (1..=module.n as i128).product();
        let mut out = BTreeMap::new();
        for (lambda, row) in self.labels.iter().zip(&self.values) {
            let mut sum: i128 = 0;
            for ((mu, a), b) in self.classes.iter().zip(&observed).zip(row) {
                sum += class_size(mu) as i128 * *a as i128 * *b as i128;
            }
            if sum % order != 0 || sum < 0 {
                return Err(CellError::NonIntegral);
            }
            if sum > 0 {
                out.insert(lambda.clone(), (sum / order) as u64);
            }
        }
        for (k, &a) in observed.iter().enumerate() {
            let rebuilt: i64 = self
                .labels
                .iter()
                .zip(&self.values)
                .map(|(l, row)| out.get(l).copied().unwrap_or(0) as i64 * row[k])
                .sum();
            if rebuilt != a {
                return Err(CellError::NonIntegral);
            }
        }
        Ok(out)
    }
}

/// Decomposes the character of the module on `cell`.
pub fn decompose_cell_character(
    cell: &[Perm],
    kl: &KlTable,
    cs: &CellStructure,
) -> Result<BTreeMap<Partition, u64>, CellError> {
    let table = CharacterTable::new(kl, cs)?;
    table.decompose(&CellModule::new(cell, kl, cs)?)
}

/// `ε_w v^{-l(w)}` as an [`Int`]-coefficient monomial.
pub fn sign_character(w: &Perm) -> Laurent {
    Laurent::monomial(Int::from(w.sign()), -(w.length() as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_dimensional_cells() {
        let n = 4;
        let kl = KlTable::new(n);
        let cs = CellStructure::new(&kl);
        let g = kl.group();
        let top = CellModule::new(&[g.elt(g.longest())], &kl, &cs).unwrap();
        let q: Laurent = "v^-1 + v".parse().unwrap();
        for m in &top.gen_matrices {
            assert_eq!(m.get(0, 0), &-&q);
        }
        let bottom = CellModule::new(&[Perm::identity(n)], &kl, &cs).unwrap();
        for i in 1..n {
            assert!(bottom.gen_matrices[i - 1].is_zero());
            assert_eq!(bottom.t_matrix(i).get(0, 0), &Laurent::v_pow(1));
        }
    }

    #[test]
    fn lambda_characters() {
        let kl = KlTable::new(3);
        let cs = CellStructure::new(&kl);
        let s = Perm::generator(3, 1);
        assert_eq!(irreducible_character(&pt("1,1,1"), &s, &kl, &cs).unwrap(), Laurent::v_pow(1));
        for w in crate::coxeter::all_perms(3) {
            assert_eq!(irreducible_character(&pt("3"), &w, &kl, &cs).unwrap(), sign_character(&w));
        }
        let e = Perm::identity(3);
        assert_eq!(irreducible_character(&pt("2,1"), &e, &kl, &cs).unwrap(), Laurent::constant(2));
    }

    #[test]
    fn s4_modules_and_decomposition() {
        let kl = KlTable::new(4);
        let cs = CellStructure::new(&kl);
        let cell = lambda_left_cell(&pt("3,1"), &kl, &cs);
        let m = CellModule::new(&cell, &kl, &cs).unwrap();
        assert_eq!(m.dim(), 3);
        m.check_relations().unwrap();
        let table = CharacterTable::new(&kl, &cs).unwrap();
        let single = table.decompose(&m).unwrap();
        assert_eq!(single, BTreeMap::from([(pt("3,1"), 1)]));
        let y = YoungData::new(&pt("3,1"));
        let union: Vec<Perm> = y.coset_reps().iter().map(|x| x.compose(&y.w_lambda)).collect();
        let m = CellModule::new(&union, &kl, &cs).unwrap();
        let dec = table.decompose(&m).unwrap();
        assert_eq!(dec, BTreeMap::from([(pt("3,1"), 1), (pt("4"), 1)]));
        let trivial = decompose_cell_character(&[Perm::identity(4)], &kl, &cs).unwrap();
        assert_eq!(trivial, BTreeMap::from([(pt("1,1,1,1"), 1)]));
    }

    #[test]
    fn non_convex_sets_are_rejected() {
        let kl = KlTable::new(3);
        let cs = CellStructure::new(&kl);
        let g = kl.group();
        let err = CellModule::new(&[Perm::identity(3), g.elt(g.longest())], &kl, &cs).unwrap_err();
        assert!(matches!(err, CellError::NotClosed { .. }));
    }

    #[test]
    fn class_data() {
        assert_eq!(class_size(&pt("2,1,1")), 6);
        assert_eq!(class_size(&pt("2,2")), 3);
        assert_eq!(class_representative(&pt("3,1")).cycle_type(), vec![3, 1]);
    }
}

use cellkit_core::cells::CellStructure;
use cellkit_core::murphy::{
    is_unit, j_alignment_sign, murphy_determinant_blocks, murphy_determinant_full, murphy_element, shape_of,
    IdealBasis, IndexMap, MurphyError, MurphyVariant, TableauPair,
};
use cellkit_core::{Basis, HeckeElt, KlTable, Laurent, Partition, Perm, StdTableau, YoungData};
use rand::{Rng, SeedableRng};

#[test]
fn y_basis_is_j_image_of_x_basis() {
    for n in 1..=5 {
        let kl = KlTable::new(n);
        for lambda in Partition::all(n) {
            for pair in TableauPair::all(&lambda) {
                assert!(j_alignment_sign(&pair, &kl).is_some(), "{lambda} {} {}", pair.s, pair.t);
            }
        }
    }
}

#[test]
fn coset_representatives_land_in_dominating_shapes() {
    for n in 1..=5 {
        let kl = KlTable::new(n);
        let cs = CellStructure::new(&kl);
        for lambda in Partition::all(n) {
            let young = YoungData::new(&lambda);
            let imap = IndexMap::new(&lambda, &kl, &cs).unwrap();
            for x in young.coset_reps() {
                let mu = shape_of(&x.compose(&young.w_lambda));
                assert!(lambda.dominated_by(&mu), "{lambda}: {x}");
                if mu == lambda {
                    assert!(imap.x_list.contains(&x), "{lambda}: {x}");
                }
            }
        }
    }
}

#[test]
fn grid_columns_are_stable_modulo_higher_shapes() {
    for n in 2..=4 {
        let kl = KlTable::new(n);
        let cs = CellStructure::new(&kl);
        for lambda in Partition::all(n) {
            let imap = IndexMap::new(&lambda, &kl, &cs).unwrap();
            let d = imap.dim();
            for j in 0..d {
                let column: Vec<Perm> = (0..d).map(|i| imap.grid[i][j]).collect();
                for s in 1..n {
                    let cs_elt = HeckeElt::basis_elt(Basis::C, Perm::generator(n, s));
                    for w in &column {
                        let prod = kl.mul(&cs_elt, &HeckeElt::basis_elt(Basis::C, *w));
                        for (z, _) in prod.terms() {
                            assert!(
                                column.contains(z) || lambda.strictly_dominated_by(&shape_of(z)),
                                "{lambda}: C_s{s} C_{w} involves C_{z}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn random_ideal_elements_have_dominating_support() {
    let n = 4;
    let kl = KlTable::new(n);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let perms = kl.group().elements().to_vec();
    for lambda in Partition::all(n) {
        let ideal = IdealBasis::new(&lambda, &kl);
        for _ in 0..20 {
            let mut h = HeckeElt::zero(n, Basis::T);
            for _ in 0..3 {
                let pair = &ideal.murphy_basis[rng.random_range(0..ideal.murphy_basis.len())];
                let left = HeckeElt::basis_elt(Basis::T, perms[rng.random_range(0..perms.len())]);
                let right = HeckeElt::basis_elt(Basis::T, perms[rng.random_range(0..perms.len())]);
                let c = Laurent::monomial(rng.random_range(-3i64..=3), rng.random_range(-2..=2));
                let y = murphy_element(pair, MurphyVariant::Y, &kl);
                h = h.add(&left.t_mul(&y).t_mul(&right).scale(&c));
            }
            assert!(ideal.contains(&h, &kl), "{lambda}");
            let c = kl.convert(&h, Basis::C);
            assert!(c.terms().all(|(w, _)| lambda.dominated_by(&shape_of(w))));
        }
    }
}

#[test]
fn j_images_of_x_basis_lie_in_the_ideal() {
    let kl = KlTable::new(4);
    for lambda in Partition::all(4) {
        let ideal = IdealBasis::new(&lambda, &kl);
        for pair in TableauPair::all(&lambda) {
            assert!(ideal.contains(&murphy_element(&pair, MurphyVariant::X, &kl).j(), &kl));
        }
    }
}

#[test]
fn change_of_basis_determinants_are_units() {
    for n in 1..=4 {
        let kl = KlTable::new(n);
        assert!(is_unit(&murphy_determinant_full(&kl).unwrap()), "n = {n}");
        assert!(is_unit(&murphy_determinant_blocks(&kl).unwrap()), "n = {n}");
    }
}

#[test]
fn mismatched_shapes_are_rejected() {
    let s: StdTableau = "[[1,2],[3]]".parse().unwrap();
    let t: StdTableau = "[[1,2,3]]".parse().unwrap();
    assert!(matches!(TableauPair::new(s, t), Err(MurphyError::ShapeMismatch(..))));
}

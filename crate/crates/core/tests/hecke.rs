use std::collections::BTreeMap;

use cellkit_core::coxeter::all_perms;
use cellkit_core::hecke::DescentChoice;
use cellkit_core::{Basis, HTensor, HeckeElt, KlTable, Laurent, Partition, Perm, YoungData};
use proptest::prelude::*;

fn elt(n: usize) -> impl Strategy<Value = HeckeElt> {
    let perms = all_perms(n);
    let k = perms.len();
    prop::collection::vec((0..k, -2i32..=2, -2i64..=2), 0..4).prop_map(move |terms| {
        HeckeElt::from_terms(n, Basis::T, terms.into_iter().map(|(w, e, c)| (perms[w], Laurent::monomial(c, e))))
    })
}

proptest! {
    #[test]
    fn t_products_associate(a in elt(4), b in elt(4), c in elt(4)) {
        prop_assert_eq!(a.t_mul(&b).t_mul(&c), a.t_mul(&b.t_mul(&c)));
    }

    #[test]
    fn involutions(a in elt(4), b in elt(4)) {
        prop_assert_eq!(a.t_mul(&b).bar(), a.bar().t_mul(&b.bar()));
        prop_assert_eq!(a.t_mul(&b).j(), a.j().t_mul(&b.j()));
        prop_assert_eq!(a.t_mul(&b).dagger(), a.dagger().t_mul(&b.dagger()));
        prop_assert_eq!(a.t_mul(&b).flat(), b.flat().t_mul(&a.flat()));
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.bar(), a.dagger().j());
        prop_assert_eq!(a.bar(), a.j().dagger());
    }

    #[test]
    fn basis_conversion_round_trips(a in elt(4)) {
        let kl = KlTable::new(4);
        for b in [Basis::C, Basis::CPrime] {
            prop_assert_eq!(kl.convert(&kl.convert(&a, b), Basis::T), a.clone());
        }
    }
}

#[test]
fn c_basis_products_associate() {
    use rand::{Rng, SeedableRng};
    let kl = KlTable::new(4);
    let g = kl.group();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let [x, y, z] = [0; 3].map(|_| HeckeElt::basis_elt(Basis::C, g.elt(rng.random_range(0..24))));
        assert_eq!(kl.mul(&kl.mul(&x, &y), &z), kl.mul(&x, &kl.mul(&y, &z)));
    }
}

#[test]
fn flat_maps_kl_elements_to_inverses() {
    let kl = KlTable::new(4);
    for w in all_perms(4) {
        for b in [Basis::C, Basis::CPrime] {
            assert_eq!(kl.kl_element(&w, b).flat(), kl.kl_element(&w.inverse(), b));
        }
    }
}

#[test]
fn trace_is_symmetrizing() {
    for x in all_perms(4) {
        for y in all_perms(4) {
            let t = HeckeElt::basis_elt(Basis::T, x).t_mul(&HeckeElt::basis_elt(Basis::T, y)).tau();
            assert_eq!(t.is_one(), y == x.inverse(), "{x} {y}");
            assert!(t.is_one() || t.is_zero());
        }
    }
}

#[test]
fn longest_parabolic_elements() {
    let n = 5;
    let kl = KlTable::new(n);
    for lambda in Partition::all(n) {
        let young = YoungData::new(&lambda);
        let wl = young.w_lambda;
        let c = kl.kl_element(&wl, Basis::C);
        for w in young.subgroup_elements() {
            let tw = HeckeElt::basis_elt(Basis::T, w);
            let expected = c.scale(&Laurent::monomial(w.sign(), -(w.length() as i32)));
            assert_eq!(tw.t_mul(&c), expected, "{lambda} {w}");
        }
        let factor = &Laurent::monomial(wl.sign(), -(wl.length() as i32)) * &young.poincare;
        assert_eq!(c.t_mul(&c), c.scale(&factor), "{lambda}");
    }
}

#[test]
fn descent_choice_does_not_matter() {
    for n in 1..=5 {
        let a = KlTable::with_descent_choice(n, DescentChoice::Smallest);
        let b = KlTable::with_descent_choice(n, DescentChoice::Largest);
        assert_eq!(a.columns(), b.columns());
    }
}

#[test]
fn tensor_matches_direct_products() {
    let kl = KlTable::new(4);
    let tensor = HTensor::build(&kl);
    let g = kl.group();
    for x in 0..g.size() {
        for y in 0..g.size() {
            let direct: BTreeMap<Perm, Laurent> = kl.h_constants(&g.elt(x), &g.elt(y)).into_iter().collect();
            let row: BTreeMap<Perm, Laurent> =
                tensor.row(x, y).iter().map(|(z, h)| (g.elt(*z as usize), h.clone())).collect();
            assert_eq!(row, direct);
        }
    }
}

#[test]
fn c_basis_constants_carry_signs() {
    let kl = KlTable::new(4);
    let tensor = HTensor::build(&kl);
    let g = kl.group();
    for x in 0..g.size() {
        for y in 0..g.size() {
            let prod = kl.mul(&HeckeElt::basis_elt(Basis::C, g.elt(x)), &HeckeElt::basis_elt(Basis::C, g.elt(y)));
            for z in 0..g.size() {
                let sign = g.sign(x) * g.sign(y) * g.sign(z);
                let h = tensor.h(x, y, z);
                let expected = if sign < 0 { -h } else { h };
                assert_eq!(prod.coeff(&g.elt(z)), expected);
            }
        }
    }
}

#[test]
fn serialized_table_reloads() {
    let kl = KlTable::new(4);
    let again = KlTable::from_columns(4, kl.columns().to_vec()).unwrap();
    assert_eq!(again.columns(), kl.columns());
    for w in 0..kl.size() {
        assert_eq!(again.mu_list(w), kl.mu_list(w));
    }
}

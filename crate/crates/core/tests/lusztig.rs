mod common;

use cellkit_core::cells::CellStructure;
use cellkit_core::lusztig::{
    a_function, a_function_restricted, verify_properties, JRing, Lusztig, Property, SamplingConfig, Scope, Status,
};
use cellkit_core::murphy::IndexMap;
use cellkit_core::{HTensor, KlTable, Partition, Perm};

use common::schensted;

struct Setup {
    kl: KlTable,
    tensor: HTensor,
    cs: CellStructure,
}

fn setup(n: usize) -> Setup {
    let kl = KlTable::new(n);
    let tensor = HTensor::build(&kl);
    let cs = CellStructure::new(&kl);
    Setup { kl, tensor, cs }
}

/// `Σ (i - 1) μ_i` for the insertion shape `μ` of `w`.
fn a_oracle(w: &[usize]) -> i32 {
    let (p, _) = schensted(w);
    p.iter().enumerate().map(|(i, row)| (i * row.len()) as i32).sum()
}

#[test]
fn a_matches_shape_formula() {
    for n in 1..=5 {
        let s = setup(n);
        let a = a_function(&s.tensor);
        for (i, w) in s.kl.group().elements().iter().enumerate() {
            assert_eq!(a[i], a_oracle(&w.one_line()), "a({w}) at n = {n}");
        }
    }
}

#[test]
fn a_on_leading_parabolic_equals_a_of_smaller_group() {
    let n = 5;
    let s = setup(n);
    let g = s.kl.group();
    for k in 1..=n {
        let members: Vec<usize> = (0..g.size())
            .filter(|&w| g.elt(w).one_line()[k..].iter().enumerate().all(|(j, &v)| v == k + j + 1))
            .collect();
        let small = setup(k);
        let a_small = a_function(&small.tensor);
        let restricted = a_function_restricted(&s.tensor, &members);
        for (i, w) in small.kl.group().elements().iter().enumerate() {
            let mut line = w.one_line();
            line.extend(k + 1..=n);
            let big = g.index_of(&Perm::from_one_line(&line).unwrap());
            assert_eq!(restricted[big], Some(a_small[i]), "{w} inside S{n}");
        }
        assert_eq!(restricted.iter().filter(|a| a.is_some()).count(), members.len());
    }
}

#[test]
fn gamma_small_values() {
    let s = setup(3);
    let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
    let g = s.kl.group();
    let s1 = g.index_of(&Perm::generator(3, 1));
    let w0 = g.longest();
    assert_eq!(l.gamma.get(s1, s1, s1), 1);
    assert_eq!(l.gamma.get(w0, w0, w0), 1);
    assert_eq!(l.gamma.get(g.identity(), g.identity(), g.identity()), 1);
    assert_eq!(l.gamma.get(s1, w0, w0), 0);
    for ((_, _, _), c) in l.gamma.iter() {
        assert!(c > 0);
    }
}

#[test]
fn distinguished_involutions_are_all_involutions() {
    for n in 1..=5 {
        let s = setup(n);
        let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
        let involutions: Vec<usize> =
            (0..s.kl.group().size()).filter(|&w| s.kl.group().elt(w).is_involution()).collect();
        assert_eq!(l.distinguished, involutions, "n = {n}");
        assert!(l.distinguished.iter().all(|&d| l.adata.n_z[d] == 1));
    }
}

#[test]
fn j_ring_of_s4_is_a_product_of_matrix_rings() {
    let s = setup(4);
    let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
    let j = JRing::new(&l);
    let imaps: Vec<IndexMap> = Partition::all(4).iter().map(|p| IndexMap::new(p, &s.kl, &s.cs).unwrap()).collect();
    assert_eq!(j.check_associativity().unwrap(), 24 * 24 * 24);
    j.check_identity().unwrap();
    j.check_matrix_units(&imaps).unwrap();
    let squares: usize = imaps.iter().map(|m| m.dim() * m.dim()).sum();
    assert_eq!(squares, 24);
}

#[test]
fn every_property_holds_through_rank_four() {
    for n in 1..=4 {
        let s = setup(n);
        let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
        let report = verify_properties(&l, &Property::all(), &SamplingConfig::default()).with_structure(&l);
        for c in report.properties.iter().chain(&report.structure) {
            assert_eq!(c.status, Status::Pass, "{} at n = {n}: {:?}", c.name, c.detail);
        }
    }
}

#[test]
fn p14_at_rank_four() {
    let s = setup(4);
    let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
    let r = verify_properties(&l, &["P14".parse().unwrap()], &SamplingConfig::default());
    assert_eq!(r.properties[0].status, Status::Pass);
    assert_eq!(r.properties[0].checked, 24);
}

#[test]
fn mu_from_the_identity_never_enters_the_tensor() {
    let mut kl = KlTable::new(4);
    kl.inject_mu_fault(&Perm::identity(4), &Perm::generator(4, 2)).unwrap();
    assert_eq!(HTensor::build(&kl).rows(), setup(4).tensor.rows());
}

#[test]
fn corrupted_mu_is_detected_with_a_witness() {
    let mut kl = KlTable::new(4);
    let y = Perm::generator(4, 1);
    let w = Perm::from_word(4, &[2, 1]).unwrap();
    kl.inject_mu_fault(&y, &w).unwrap();
    let tensor = HTensor::build(&kl);
    let cs = CellStructure::new(&kl);
    let l = Lusztig::new(&kl, &tensor, &cs);
    let report = verify_properties(&l, &Property::all(), &SamplingConfig::default()).with_structure(&l);
    assert!(!report.all_pass());
    let first = report.failures().next().unwrap();
    assert_eq!(first.status, Status::Fail);
    assert!(first.witness.as_ref().is_some_and(|w| !w.is_empty()));
}

#[test]
fn sampling_is_reproducible_from_the_seed() {
    let s = setup(4);
    let l = Lusztig::new(&s.kl, &s.tensor, &s.cs);
    let cfg = SamplingConfig { exhaustive_up_to: 3, samples: 2000, seed: 11 };
    let p15 = [Property::new(15).unwrap()];
    let a = verify_properties(&l, &p15, &cfg);
    let b = verify_properties(&l, &p15, &cfg);
    assert_eq!(a.properties[0].scope, Scope::Sampled(2000));
    assert_eq!(a.properties[0].status, Status::Pass);
    assert_eq!(a, b);
}

#[test]
fn property_names_parse() {
    assert_eq!("p7".parse::<Property>().unwrap().number(), 7);
    assert_eq!("12".parse::<Property>().unwrap().to_string(), "P12");
    assert!("P16".parse::<Property>().is_err());
    assert!("Q1".parse::<Property>().is_err());
}

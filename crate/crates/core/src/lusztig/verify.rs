use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::coxeter::Perm;
use crate::laurent::BiLaurent;

use super::{a_function_restricted, Lusztig};

/// Seed used for sampled checks unless overridden.
pub const DEFAULT_SEED: u64 = 0x6365_6c6c_6b69_7431;

/// One of Lusztig's properties P1–P15.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Property(u8);

impl Property {
    pub fn new(k: u8) -> Option<Property> {
        (1..=15).contains(&k).then_some(Property(k))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn all() -> Vec<Property> {
        (1..=15).map(Property).collect()
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.0)
    }
}

impl FromStr for Property {
    type Err = String;
    fn from_str(s: &str) -> Result<Property, String> {
        let t = s.trim();
        let digits = t.strip_prefix(['P', 'p']).unwrap_or(t);
        digits
            .parse::<u8>()
            .ok()
            .and_then(Property::new)
            .ok_or_else(|| format!("unknown property '{s}' (expected P1..P15)"))
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Exhaustive,
    Sampled(u64),
}

/// How P15 is checked: exhaustively up to `exhaustive_up_to`, otherwise on
/// `samples` random quadruples drawn from a ChaCha stream seeded by `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplingConfig {
    pub exhaustive_up_to: usize,
    pub samples: u64,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { exhaustive_up_to: 4, samples: 1_000_000, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub scope: Scope,
    /// Number of instances examined.
    pub checked: u64,
    /// Elements exhibiting a failure, in the order of the statement.
    pub witness: Option<Vec<Perm>>,
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub n: usize,
    pub properties: Vec<CheckResult>,
    /// Statements about `S_n` specifically: `a = α`, `𝒟` = involutions,
    /// `n_d = 1`, the support of `γ`, the monotonicity of `α`.
    pub structure: Vec<CheckResult>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().chain(&self.structure).all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.properties.iter().chain(&self.structure).filter(|c| !c.passed())
    }
}

/// Outcome of one scan: instances examined and the first failing tuple.
struct Scan {
    checked: u64,
    witness: Option<Vec<usize>>,
    detail: Option<String>,
}

impl Scan {
    fn ok(checked: u64) -> Scan {
        Scan { checked, witness: None, detail: None }
    }

    fn fail(checked: u64, witness: Vec<usize>, detail: impl Into<String>) -> Scan {
        Scan { checked, witness: Some(witness), detail: Some(detail.into()) }
    }

    fn from_first(checked: u64, witness: Option<Vec<usize>>, detail: &str) -> Scan {
        match witness {
            Some(w) => Scan::fail(checked, w, detail),
            None => Scan::ok(checked),
        }
    }
}

fn finish(l: &Lusztig, name: String, scope: Scope, scan: Scan) -> CheckResult {
    CheckResult {
        name,
        status: if scan.witness.is_some() { Status::Fail } else { Status::Pass },
        scope,
        checked: scan.checked,
        witness: scan.witness.map(|w| w.into_iter().map(|x| l.perm(x)).collect()),
        detail: scan.detail,
    }
}

/// Checks the requested properties. Failures are reported, never raised.
pub fn verify_properties(l: &Lusztig, which: &[Property], cfg: &SamplingConfig) -> PropertyReport {
    let mut which = which.to_vec();
    which.sort();
    which.dedup();
    let properties = which
        .iter()
        .map(|&p| {
            let (scope, scan) = match p.0 {
                15 => p15(l, cfg),
                k => (Scope::Exhaustive, exhaustive(l, k)),
            };
            finish(l, p.to_string(), scope, scan)
        })
        .collect();
    PropertyReport { n: l.kl.n(), properties, structure: Vec::new() }
}

/// The statements specific to `S_n`, all exhaustive.
pub fn structure_checks(l: &Lusztig) -> Vec<CheckResult> {
    type Check = (&'static str, fn(&Lusztig) -> Scan);
    let checks: [Check; 5] = [
        ("a(w) = l(w_λ)", a_equals_alpha),
        ("𝒟 = involutions", d_is_involutions),
        ("n_d = 1", n_d_one),
        ("γ support", gamma_support),
        ("α monotone on ≤_LR", alpha_monotone),
    ];
    checks.iter().map(|(name, f)| finish(l, name.to_string(), Scope::Exhaustive, f(l))).collect()
}

impl PropertyReport {
    /// Adds the `S_n`-specific statements to the report.
    pub fn with_structure(mut self, l: &Lusztig) -> PropertyReport {
        self.structure = structure_checks(l);
        self
    }
}

fn exhaustive(l: &Lusztig, k: u8) -> Scan {
    match k {
        1 => p1(l),
        2 => p2(l),
        3 => p3(l),
        4 => p4(l),
        5 => p5(l),
        6 => p6(l),
        7 => p7(l),
        8 => p8(l),
        9 => same_a_same_cell(l, &l.cells.left, "z' ≤_L z with a(z') = a(z) but z' ≁_L z"),
        10 => same_a_same_cell(l, &l.cells.right, "z' ≤_R z with a(z') = a(z) but z' ≁_R z"),
        11 => same_a_same_cell(l, &l.cells.two, "z' ≤_LR z with a(z') = a(z) but z' ≁_LR z"),
        12 => p12(l),
        13 => p13(l),
        14 => p14(l),
        _ => unreachable!("property numbers are validated"),
    }
}

fn size(l: &Lusztig) -> usize {
    l.kl.size()
}

fn p1(l: &Lusztig) -> Scan {
    let a = &l.adata;
    let bad = (0..size(l)).find(|&z| a.a[z] > a.delta[z]);
    Scan::from_first(size(l) as u64, bad.map(|z| vec![z]), "a(z) > Δ(z)")
}

fn p2(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let mut checked = 0;
    for ((x, y, d), _) in l.gamma.iter() {
        if !l.is_distinguished(d) {
            continue;
        }
        checked += 1;
        if x != g.inv(y) {
            return Scan::fail(checked, vec![x, y, d], "γ_{x,y,d} ≠ 0 with x ≠ y^-1");
        }
    }
    Scan::ok(checked)
}

fn p3(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    for y in 0..size(l) {
        let hits: Vec<usize> =
            l.distinguished.iter().copied().filter(|&d| l.gamma.get(g.inv(y), y, d) != 0).collect();
        if hits.len() != 1 {
            let mut w = vec![y];
            w.extend(hits.iter().copied());
            return Scan::fail(y as u64 + 1, w, format!("{} distinguished d with γ_{{y^-1,y,d}} ≠ 0", hits.len()));
        }
    }
    Scan::ok(size(l) as u64)
}

fn p4(l: &Lusztig) -> Scan {
    let a = &l.adata.a;
    let n = size(l);
    let bad = (0..n * n)
        .map(|k| (k / n, k % n))
        .find(|&(zp, z)| l.cells.two.leq(zp, z) && a[zp] < a[z]);
    Scan::from_first((n * n) as u64, bad.map(|(zp, z)| vec![zp, z]), "z' ≤_LR z but a(z') < a(z)")
}

fn p5(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let mut checked = 0;
    for &d in &l.distinguished {
        let nd = l.adata.n_z[d];
        for y in 0..size(l) {
            let c = l.gamma.get(g.inv(y), y, d);
            if c == 0 {
                continue;
            }
            checked += 1;
            if c != nd || nd.abs() != 1 {
                return Scan::fail(checked, vec![y, d], format!("γ_{{y^-1,y,d}} = {c}, n_d = {nd}"));
            }
        }
    }
    Scan::ok(checked)
}

fn p6(l: &Lusztig) -> Scan {
    let bad = l.distinguished.iter().copied().find(|&d| !l.perm(d).is_involution());
    Scan::from_first(l.distinguished.len() as u64, bad.map(|d| vec![d]), "d ∈ 𝒟 with d² ≠ 1")
}

fn p7(l: &Lusztig) -> Scan {
    let mut checked = 0;
    for ((x, y, z), c) in l.gamma.iter() {
        checked += 1;
        let rotated = l.gamma.get(y, z, x);
        if rotated != c {
            return Scan::fail(checked, vec![x, y, z], format!("γ_{{x,y,z}} = {c} but γ_{{y,z,x}} = {rotated}"));
        }
    }
    Scan::ok(checked)
}

fn p8(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let left = &l.cells.left_cells;
    let mut checked = 0;
    for ((x, y, z), _) in l.gamma.iter() {
        checked += 1;
        let ok = left.same_cell(x, g.inv(y)) && left.same_cell(y, g.inv(z)) && left.same_cell(z, g.inv(x));
        if !ok {
            return Scan::fail(checked, vec![x, y, z], "γ_{x,y,z} ≠ 0 outside the cell pattern");
        }
    }
    Scan::ok(checked)
}

fn same_a_same_cell(l: &Lusztig, pre: &crate::cells::Preorder, detail: &str) -> Scan {
    let a = &l.adata.a;
    let n = size(l);
    let bad = (0..n * n)
        .map(|k| (k / n, k % n))
        .find(|&(zp, z)| pre.leq(zp, z) && a[zp] == a[z] && !pre.equiv(zp, z));
    Scan::from_first((n * n) as u64, bad.map(|(zp, z)| vec![zp, z]), detail)
}

/// Every parabolic subgroup `W_I`, `I ⊆ S`: `a` computed from products
/// inside `W_I` agrees with `a` in `W`. The witness is `(y, w_I)`.
fn p12(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let rank = g.n().saturating_sub(1);
    let mut checked = 0;
    for mask in 0u32..(1 << rank) {
        let in_i = |i: usize| mask & (1 << (i - 1)) != 0;
        let members: Vec<usize> =
            (0..g.size()).filter(|&w| g.elt(w).reduced_word().into_iter().all(in_i)).collect();
        let longest = *members.iter().max_by_key(|&&w| g.len(w)).expect("W_I contains 1");
        let local = a_function_restricted(l.tensor, &members);
        for &y in &members {
            checked += 1;
            let ai = local[y].expect("members have a value");
            if ai != l.adata.a[y] {
                return Scan::fail(
                    checked,
                    vec![y, longest],
                    format!("a(y) = {} in W_I but {} in W", ai, l.adata.a[y]),
                );
            }
        }
    }
    Scan::ok(checked)
}

fn p13(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let mut checked = 0;
    for cell in &l.cells.left_cells.cells {
        checked += 1;
        let ds: Vec<usize> = cell.iter().copied().filter(|&z| l.is_distinguished(z)).collect();
        if ds.len() != 1 {
            let mut w = vec![cell[0]];
            w.extend(ds.iter().copied());
            return Scan::fail(checked, w, format!("left cell holds {} distinguished elements", ds.len()));
        }
        let d = ds[0];
        for &x in cell {
            checked += 1;
            if l.gamma.get(g.inv(x), x, d) == 0 {
                return Scan::fail(checked, vec![x, d], "γ_{x^-1,x,d} = 0 for x in the cell of d");
            }
        }
    }
    Scan::ok(checked)
}

fn p14(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let bad = (0..size(l)).find(|&z| !l.cells.two.equiv(z, g.inv(z)));
    Scan::from_first(size(l) as u64, bad.map(|z| vec![z]), "z ≁_LR z^-1")
}

/// `Σ_{y'} h̆_{w,x',y'} h_{x,y',y} = Σ_{y'} h_{x,w,y'} h̆_{y',x',y}`.
fn p15_holds(l: &Lusztig, x: usize, x2: usize, y: usize, w: usize) -> bool {
    let t = l.tensor;
    let mut lhs = BiLaurent::zero();
    for (yp, hb) in t.row(w, x2) {
        lhs.add_outer(&t.h(x, *yp as usize, y), hb);
    }
    let mut rhs = BiLaurent::zero();
    for (yp, h) in t.row(x, w) {
        rhs.add_outer(h, &t.h(*yp as usize, x2, y));
    }
    lhs == rhs
}

fn p15(l: &Lusztig, cfg: &SamplingConfig) -> (Scope, Scan) {
    let n = size(l);
    let a = &l.adata.a;
    let pairs: Vec<(usize, usize)> =
        (0..n * n).map(|k| (k / n, k % n)).filter(|&(w, y)| a[w] == a[y]).collect();
    let fail = |q: [usize; 4]| Scan::fail(0, q.to_vec(), "the two sums differ (witness x, x', y, w)");
    if l.kl.n() <= cfg.exhaustive_up_to {
        let total = (pairs.len() * n * n) as u64;
        let bad = pairs.par_iter().find_map_first(|&(w, y)| {
            (0..n * n).map(|k| (k / n, k % n)).find(|&(x, x2)| !p15_holds(l, x, x2, y, w)).map(|(x, x2)| [x, x2, y, w])
        });
        let scan = match bad {
            Some(q) => Scan { checked: total, ..fail(q) },
            None => Scan::ok(total),
        };
        return (Scope::Exhaustive, scan);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let quads: Vec<[usize; 4]> = (0..cfg.samples)
        .map(|_| {
            let (w, y) = pairs[rng.random_range(0..pairs.len())];
            [rng.random_range(0..n), rng.random_range(0..n), y, w]
        })
        .collect();
    let bad = quads.par_iter().find_first(|q| !p15_holds(l, q[0], q[1], q[2], q[3]));
    let scan = match bad {
        Some(q) => Scan { checked: cfg.samples, ..fail(*q) },
        None => Scan::ok(cfg.samples),
    };
    (Scope::Sampled(cfg.samples), scan)
}

fn a_equals_alpha(l: &Lusztig) -> Scan {
    let bad = (0..size(l)).find(|&z| l.adata.a[z] != l.adata.alpha(z));
    Scan::from_first(size(l) as u64, bad.map(|z| vec![z]), "a(z) ≠ l(w_λ) for λ = λ_z")
}

fn d_is_involutions(l: &Lusztig) -> Scan {
    let bad = (0..size(l)).find(|&z| l.is_distinguished(z) != l.perm(z).is_involution());
    Scan::from_first(size(l) as u64, bad.map(|z| vec![z]), "z ∈ 𝒟 differs from z² = 1")
}

fn n_d_one(l: &Lusztig) -> Scan {
    let bad = l.distinguished.iter().copied().find(|&d| l.adata.n_z[d] != 1);
    Scan::from_first(l.distinguished.len() as u64, bad.map(|d| vec![d]), "n_d ≠ 1")
}

/// `γ_{x,y,z} = 1` exactly when `x ~_L y^-1`, `y ~_L z^-1`, `z ~_L x^-1`.
/// For such `x, y` the element `z` is the meeting point of the left cell of
/// `x^-1` and the right cell of `y^-1`.
fn gamma_support(l: &Lusztig) -> Scan {
    let g = l.kl.group();
    let (left, right) = (&l.cells.left_cells, &l.cells.right_cells);
    let n = size(l);
    let mut meet = vec![vec![usize::MAX; right.len()]; left.len()];
    for z in 0..n {
        meet[left.cell_of(z)][right.cell_of(z)] = z;
    }
    let mut expected = 0u64;
    for x in 0..n {
        for y in 0..n {
            if !left.same_cell(x, g.inv(y)) {
                continue;
            }
            expected += 1;
            let z = meet[left.cell_of(g.inv(x))][right.cell_of(g.inv(y))];
            if z == usize::MAX {
                return Scan::fail(expected, vec![x, y], "no z completes the cell pattern");
            }
            let c = l.gamma.get(x, y, z);
            if c != 1 {
                return Scan::fail(expected, vec![x, y, z], format!("γ_{{x,y,z}} = {c} on the cell pattern"));
            }
        }
    }
    if l.gamma.len() as u64 != expected {
        let stray = l.gamma.iter().find(|&((x, y, _), _)| !left.same_cell(x, g.inv(y)));
        let w = stray.map(|((x, y, z), _)| vec![x, y, z]).unwrap_or_default();
        return Scan::fail(expected, w, format!("{} non-zero γ, {} expected", l.gamma.len(), expected));
    }
    Scan::ok(expected)
}

/// `x ≤_LR y ⇒ α_y ≤ α_x`, with equality only if `x ~_LR y`.
fn alpha_monotone(l: &Lusztig) -> Scan {
    let n = size(l);
    let alpha: Vec<i32> = (0..n).map(|z| l.adata.alpha(z)).collect();
    let two = &l.cells.two;
    let bad = (0..n * n).map(|k| (k / n, k % n)).find(|&(x, y)| {
        two.leq(x, y) && (alpha[y] > alpha[x] || (alpha[y] == alpha[x] && !two.equiv(x, y)))
    });
    Scan::from_first((n * n) as u64, bad.map(|(x, y)| vec![x, y]), "α fails to drop along ≤_LR")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::CellStructure;
    use crate::hecke::{HTensor, KlTable};

    #[test]
    fn property_parsing() {
        assert_eq!("P7".parse::<Property>().unwrap().number(), 7);
        assert_eq!("15".parse::<Property>().unwrap().number(), 15);
        assert!("P16".parse::<Property>().is_err());
        assert!("Q1".parse::<Property>().is_err());
    }

    #[test]
    fn s3_everything_passes() {
        let kl = KlTable::new(3);
        let tensor = HTensor::build(&kl);
        let cs = CellStructure::new(&kl);
        let l = Lusztig::new(&kl, &tensor, &cs);
        let report = verify_properties(&l, &Property::all(), &SamplingConfig::default()).with_structure(&l);
        for c in report.properties.iter().chain(&report.structure) {
            assert_eq!(c.status, Status::Pass, "{} failed: {:?}", c.name, c.detail);
            assert_eq!(c.scope, Scope::Exhaustive);
        }
    }

    #[test]
    fn s2_p6() {
        let kl = KlTable::new(2);
        let tensor = HTensor::build(&kl);
        let cs = CellStructure::new(&kl);
        let l = Lusztig::new(&kl, &tensor, &cs);
        let r = verify_properties(&l, &[Property::new(6).unwrap()], &SamplingConfig::default());
        assert_eq!(r.properties[0].status, Status::Pass);
        assert_eq!(r.properties[0].checked, 2);
    }

    #[test]
    fn sampled_mode_reports_sample_count() {
        let kl = KlTable::new(3);
        let tensor = HTensor::build(&kl);
        let cs = CellStructure::new(&kl);
        let l = Lusztig::new(&kl, &tensor, &cs);
        let cfg = SamplingConfig { exhaustive_up_to: 2, samples: 500, seed: 7 };
        let r = verify_properties(&l, &[Property::new(15).unwrap()], &cfg);
        assert_eq!(r.properties[0].scope, Scope::Sampled(500));
        assert_eq!(r.properties[0].status, Status::Pass);
    }
}

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use cellkit_core::cells::{CellStructure, Side};
use cellkit_core::coxeter::rsk;
use cellkit_core::hecke::MAX_KL_RANK;
use cellkit_core::lusztig::{verify_properties, AData, JRing, Lusztig, Property, SamplingConfig, Status};
use cellkit_core::murphy::{murphy_element, shape_of, z_element, IndexMap, MurphyVariant, TableauPair};
use cellkit_core::{Basis, HTensor, HeckeElt, KlTable, Partition, Perm};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::args::{split_pair, Command};
use crate::cache::{Cache, CacheError};
use crate::report::{Failure, Output};

/// Rank from which commands that need the full h-tensor ask for `--force`.
pub const TENSOR_GUARD_RANK: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cache: {0}")]
    Cache(#[from] CacheError),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Shared state of one invocation.
pub struct Ctx {
    pub cache: Cache,
    pub fault: Option<String>,
    pub force: bool,
    pub timings: BTreeMap<String, f64>,
}

impl Ctx {
    fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let t = f();
        self.timings.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        t
    }

    fn kl(&mut self, n: usize) -> Result<KlTable, CliError> {
        let cache = self.cache.clone();
        let mut kl = self.stage("kl_table", || cache.kl_table(n))?;
        if let Some(f) = &self.fault {
            let (y, w) = split_pair(f).ok_or_else(|| usage(format!("expected Y,W, found '{f}'")))?;
            let (y, w) = (parse_perm(y, Some(n))?, parse_perm(w, Some(n))?);
            kl.inject_mu_fault(&y, &w).map_err(|e| usage(e.to_string()))?;
        }
        Ok(kl)
    }

    /// A corrupted table never reads or writes the tensor cache.
    fn tensor(&mut self, kl: &KlTable) -> Result<HTensor, CliError> {
        let cache = if self.fault.is_some() { Cache::new(None, false) } else { self.cache.clone() };
        Ok(self.stage("h_tensor", || cache.h_tensor(kl))?)
    }
}

/// One-line notation with brackets or commas, a reduced word when the rank
/// is known, or bare digits such as `4321`.
pub fn parse_perm(s: &str, n: Option<usize>) -> Result<Perm, CliError> {
    let t = s.trim();
    let digits = !t.is_empty() && t.len() <= 9 && t.chars().all(|c| c.is_ascii_digit());
    let parsed = if digits && (n.is_none() || n == Some(t.len())) && t != "1" {
        let images: Vec<usize> = t.bytes().map(|b| (b - b'0') as usize).collect();
        Perm::from_one_line(&images)
    } else {
        Perm::parse(t, n)
    };
    parsed.map_err(|e| usage(format!("permutation '{s}': {e}")))
}

pub fn check_rank(cmd: &Command, force: bool) -> Result<(), CliError> {
    let Some(n) = cmd.rank() else { return Ok(()) };
    if !(1..=MAX_KL_RANK).contains(&n) {
        return Err(usage(format!("rank {n} outside 1..={MAX_KL_RANK}")));
    }
    if cmd.needs_tensor() && n >= TENSOR_GUARD_RANK && !force {
        return Err(usage(format!(
            "`{}` needs the full h-tensor, which is very large for n = {n}; pass --force to proceed",
            cmd.name()
        )));
    }
    Ok(())
}

pub fn run(cmd: &Command, ctx: &mut Ctx) -> Result<Output, CliError> {
    check_rank(cmd, ctx.force)?;
    match cmd {
        Command::Kl { rank, pair } => kl(ctx, rank.n, pair.as_deref()),
        Command::Cells { rank, side } => cells(ctx, rank.n, *side),
        Command::Murphy { rank, lambda, to_c } => murphy(ctx, rank.n, lambda, *to_c),
        Command::Zelem { rank, w } => zelem(ctx, rank.n, w),
        Command::Afn { rank } => afn(ctx, rank.n),
        Command::Verify { rank, props, sample, seed } => {
            let cfg = SamplingConfig { samples: *sample, seed: *seed, ..SamplingConfig::default() };
            verify(ctx, cmd, rank.n, props.as_deref(), cfg)
        }
        Command::Jring { rank } => jring(ctx, rank.n),
        Command::Rsk { perm } => rsk_cmd(perm),
    }
}

#[derive(Serialize)]
struct KlEntry {
    y: Perm,
    w: Perm,
    p: String,
    mu: i64,
}

fn kl(ctx: &mut Ctx, n: usize, pair: Option<&str>) -> Result<Output, CliError> {
    let kl = ctx.kl(n)?;
    let g = kl.group();
    let entries: Vec<KlEntry> = match pair {
        Some(s) => {
            let (y, w) = split_pair(s).ok_or_else(|| usage(format!("expected Y,W, found '{s}'")))?;
            let (y, w) = (parse_perm(y, Some(n))?, parse_perm(w, Some(n))?);
            let (yi, wi) = (g.index_of(&y), g.index_of(&w));
            vec![KlEntry { y, w, p: kl.p(yi, wi).to_string(), mu: kl.mu(yi, wi) }]
        }
        None => (0..g.size())
            .flat_map(|w| {
                kl.column(w).iter().map(move |(y, p)| (*y as usize, w, p.to_string()))
            })
            .map(|(y, w, p)| KlEntry { y: g.elt(y), w: g.elt(w), p, mu: kl.mu(y, w) })
            .collect(),
    };
    let mut text = String::new();
    for e in &entries {
        let _ = write!(text, "p({}, {}) = {}", e.y, e.w, e.p);
        if e.mu != 0 {
            let _ = write!(text, "   μ = {}", e.mu);
        }
        text.push('\n');
    }
    let rows = entries.iter().map(|e| vec![e.y.to_string(), e.w.to_string(), e.p.clone(), e.mu.to_string()]).collect();
    let result = json!({ "n": n, "count": entries.len(), "entries": entries });
    Ok(Output::new(result, text, vec!["y", "w", "p", "mu"], rows))
}

#[derive(Serialize)]
struct Cell {
    shape: Partition,
    elements: Vec<Perm>,
}

fn cells(ctx: &mut Ctx, n: usize, side: Side) -> Result<Output, CliError> {
    let kl = ctx.kl(n)?;
    let cs = ctx.stage("cells", || CellStructure::new(&kl));
    let list: Vec<Cell> = cs
        .partition(side)
        .cell_perms(&kl)
        .into_iter()
        .map(|elements| Cell { shape: shape_of(&elements[0]), elements })
        .collect();
    let mut text = format!("{} {side} cells of S_{n}\n", list.len());
    let mut rows = Vec::new();
    for (i, c) in list.iter().enumerate() {
        let elems: Vec<String> = c.elements.iter().map(Perm::to_string).collect();
        let _ = writeln!(text, "{:>3}  ({})  {}", i + 1, c.shape, elems.join(" "));
        for e in elems {
            rows.push(vec![(i + 1).to_string(), c.shape.to_string(), e]);
        }
    }
    let result = json!({ "n": n, "side": side, "count": list.len(), "cells": list });
    Ok(Output::new(result, text, vec!["cell", "shape", "element"], rows))
}

#[derive(Serialize)]
struct MurphyEntry {
    s: String,
    t: String,
    d_s: String,
    d_t: String,
    expansion: String,
}

fn murphy(ctx: &mut Ctx, n: usize, lambda: &Partition, to_c: bool) -> Result<Output, CliError> {
    if lambda.n() != n {
        return Err(usage(format!("λ = {lambda} is a partition of {}, not {n}", lambda.n())));
    }
    let kl = ctx.kl(n)?;
    let basis = if to_c { Basis::C } else { Basis::T };
    let entries: Vec<MurphyEntry> = ctx.stage("murphy", || {
        TableauPair::all(lambda)
            .iter()
            .map(|pair| {
                let y = murphy_element(pair, MurphyVariant::Y, &kl);
                let y = if to_c { kl.convert(&y, Basis::C) } else { y };
                MurphyEntry {
                    s: pair.s.to_string(),
                    t: pair.t.to_string(),
                    d_s: pair.s.d().word_string(),
                    d_t: pair.t.d().word_string(),
                    expansion: y.render(),
                }
            })
            .collect()
    });
    let mut text = String::new();
    for e in &entries {
        let _ = writeln!(text, "y({}, {}) = {}", e.d_s, e.d_t, e.expansion);
    }
    let rows = entries
        .iter()
        .map(|e| vec![e.s.clone(), e.t.clone(), e.d_s.clone(), e.d_t.clone(), e.expansion.clone()])
        .collect();
    let result = json!({ "n": n, "lambda": lambda, "basis": basis, "elements": entries });
    Ok(Output::new(result, text, vec!["s", "t", "d_s", "d_t", "expansion"], rows))
}

fn zelem(ctx: &mut Ctx, n: usize, w: &str) -> Result<Output, CliError> {
    let w = parse_perm(w, Some(n))?;
    let kl = ctx.kl(n)?;
    let cs = ctx.stage("cells", || CellStructure::new(&kl));
    let lambda = shape_of(&w);
    let imap = IndexMap::new(&lambda, &kl, &cs).map_err(|e| usage(e.to_string()))?;
    let z = ctx.stage("zelem", || z_element(&w, &imap, &kl)).map_err(|e| usage(e.to_string()))?;
    let diff = z.sub(&HeckeElt::basis_elt(Basis::C, w));
    let mut rows = Vec::new();
    let mut terms = Vec::new();
    let mut failures = Vec::new();
    for (y, c) in z.terms() {
        let mu = shape_of(y);
        rows.push(vec![y.to_string(), y.word_string(), mu.to_string(), c.to_string()]);
        terms.push(json!({ "y": y, "shape": mu, "coefficient": c.to_string() }));
    }
    for (y, _) in diff.terms() {
        if !lambda.strictly_dominated_by(&shape_of(y)) {
            failures.push(format!("C_{} of shape {}", y, shape_of(y)));
        }
    }
    let text = format!("shape ({lambda})\nZ_{w} = {}\n", z.render());
    let result = json!({ "n": n, "w": w, "shape": lambda, "z": z.render(), "terms": terms });
    let mut out = Output::new(result, text, vec!["y", "word", "shape", "coefficient"], rows);
    out.checks = diff.terms().count() as u64;
    if !failures.is_empty() {
        out.failures.push(Failure {
            check: "Z_w - C_w lies above λ_w".into(),
            witness: vec![w.to_string()],
            detail: failures.join(", "),
            reproduce: String::new(),
        });
    }
    Ok(out)
}

fn afn(ctx: &mut Ctx, n: usize) -> Result<Output, CliError> {
    let kl = ctx.kl(n)?;
    let tensor = ctx.tensor(&kl)?;
    let ad = ctx.stage("a_function", || AData::new(&kl, &tensor));
    let g = kl.group();
    let mut text = format!("{:<w$}  {:<10} {:>3} {:>3} {:>3}  D\n", "w", "shape", "a", "Δ", "n", w = 2 * n + 1);
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for z in 0..g.size() {
        let w = g.elt(z);
        let d = ad.a[z] == ad.delta[z];
        let _ = writeln!(
            text,
            "{:<width$}  {:<10} {:>3} {:>3} {:>3}  {}",
            w.to_string(),
            ad.shape[z].to_string(),
            ad.a[z],
            ad.delta[z],
            ad.n_z[z],
            if d { "*" } else { "" },
            width = 2 * n + 1
        );
        rows.push(vec![
            w.to_string(),
            ad.shape[z].to_string(),
            ad.a[z].to_string(),
            ad.delta[z].to_string(),
            ad.n_z[z].to_string(),
            d.to_string(),
        ]);
        entries.push(json!({
            "w": w, "shape": ad.shape[z], "a": ad.a[z], "delta": ad.delta[z], "n": ad.n_z[z], "distinguished": d,
        }));
    }
    let result = json!({ "n": n, "elements": entries });
    Ok(Output::new(result, text, vec!["w", "shape", "a", "delta", "n", "distinguished"], rows))
}

fn verify(
    ctx: &mut Ctx,
    cmd: &Command,
    n: usize,
    props: Option<&[Property]>,
    cfg: SamplingConfig,
) -> Result<Output, CliError> {
    let kl = ctx.kl(n)?;
    let tensor = ctx.tensor(&kl)?;
    let cs = ctx.stage("cells", || CellStructure::new(&kl));
    let l = ctx.stage("lusztig", || Lusztig::new(&kl, &tensor, &cs));
    let which = props.map_or_else(Property::all, <[Property]>::to_vec);
    let report = ctx.stage("verify", || {
        let r = verify_properties(&l, &which, &cfg);
        if props.is_none() {
            r.with_structure(&l)
        } else {
            r
        }
    });
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for c in report.properties.iter().chain(&report.structure) {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        };
        let scope = serde_json::to_value(c.scope).expect("scope serializes");
        let scope = match scope {
            serde_json::Value::String(s) => s,
            other => other.to_string(),
        };
        let witness: Vec<String> = c.witness.iter().flatten().map(Perm::to_string).collect();
        let _ = writeln!(text, "{:<22} {:<7} {:<28} {:>10}", c.name, status, scope, c.checked);
        rows.push(vec![c.name.clone(), status.into(), scope, c.checked.to_string(), witness.join(" ")]);
        if c.status == Status::Fail {
            let fault = ctx.fault.as_deref();
            let reproduce = match c.name.parse::<Property>() {
                Ok(p) => cmd.reproduce_property(p, fault),
                Err(_) => cmd.canonical(fault),
            };
            failures.push(Failure {
                check: c.name.clone(),
                witness,
                detail: c.detail.clone().unwrap_or_default(),
                reproduce,
            });
        }
    }
    let total = report.properties.len() + report.structure.len();
    let _ = writeln!(text, "summary: {} of {total} checks pass", total - failures.len());
    let mut out = Output::new(&report, text, vec!["check", "status", "scope", "checked", "witness"], rows);
    out.checks = total as u64;
    out.failures = failures;
    Ok(out)
}

fn jring(ctx: &mut Ctx, n: usize) -> Result<Output, CliError> {
    let kl = ctx.kl(n)?;
    let tensor = ctx.tensor(&kl)?;
    let cs = ctx.stage("cells", || CellStructure::new(&kl));
    let l = ctx.stage("lusztig", || Lusztig::new(&kl, &tensor, &cs));
    let j = JRing::new(&l);
    let imaps: Vec<IndexMap> = Partition::all(n)
        .iter()
        .map(|p| IndexMap::new(p, &kl, &cs))
        .collect::<Result<_, _>>()
        .map_err(|e| usage(e.to_string()))?;
    let checks = ctx.stage("jring", || {
        vec![
            ("associativity", j.check_associativity().map(|k| format!("{k} triples"))),
            ("identity", j.check_identity().map(|()| format!("{} basis elements", j.size()))),
            ("matrix units", j.check_matrix_units(&imaps).map(|()| format!("{} blocks", imaps.len()))),
        ]
    });
    let blocks: Vec<_> = imaps.iter().map(|m| json!({ "lambda": m.lambda, "dim": m.dim() })).collect();
    let dims: Vec<String> = imaps.iter().map(|m| format!("M_{}", m.dim())).collect();
    let mut text = format!(
        "J(S_{n}): rank {}, {} non-zero γ, 1_J supported on {} elements\nblocks: {}\n",
        j.size(),
        j.gamma.len(),
        j.identity_support.len(),
        dims.join(" + ")
    );
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for (name, r) in &checks {
        let (status, detail) = match r {
            Ok(d) => ("pass", d.clone()),
            Err(e) => ("fail", e.to_string()),
        };
        let _ = writeln!(text, "{name:<14} {status:<5} {detail}");
        rows.push(vec![name.to_string(), status.into(), detail.clone()]);
        results.push(json!({ "name": name, "status": status, "detail": detail }));
        if r.is_err() {
            failures.push(Failure {
                check: name.to_string(),
                witness: Vec::new(),
                detail,
                reproduce: Command::Jring { rank: crate::args::Rank { n } }.canonical(ctx.fault.as_deref()),
            });
        }
    }
    let result = json!({
        "n": n,
        "rank": j.size(),
        "gamma_nonzero": j.gamma.len(),
        "identity_support": j.identity_support,
        "blocks": blocks,
        "checks": results,
    });
    let mut out = Output::new(result, text, vec!["check", "status", "detail"], rows);
    out.checks = checks.len() as u64;
    out.failures = failures;
    Ok(out)
}

fn rsk_cmd(perm: &str) -> Result<Output, CliError> {
    let w = parse_perm(perm, None)?;
    let r = rsk(&w);
    let text = format!("shape ({})\nP {}\nQ {}\n", r.shape, r.p, r.q);
    let rows = vec![vec![w.to_string(), r.shape.to_string(), r.p.to_string(), r.q.to_string()]];
    let result = json!({ "perm": w, "shape": r.shape, "p": r.p, "q": r.q });
    Ok(Output::new(result, text, vec!["perm", "shape", "p", "q"], rows))
}

//! Cross-rule verification sweeps over all triples inside a bounding shape.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr::{coefficient_a, LROptions, LRQuery, LRResult, Rule};
use crate::par;
use crate::puzzles::PieceSet;
use crate::shapes::{Partition, StrictPartition};
use crate::shifted::{lg_bounds, og_coefficient, OGQuery, OGResult};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub bound: Partition,
    pub max_size: usize,
    /// Also run the puzzle rule on `Gr_k(C^n)` for triples that fit.
    pub gr: Option<(usize, usize)>,
    pub pieces: PieceSet,
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(bound: Partition, max_size: usize) -> Self {
        SweepConfig { bound, max_size, gr: None, pieces: PieceSet::default(), jobs: 1 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub triples: usize,
    pub nonzero: usize,
    pub puzzle_checked: usize,
    pub disagreements: usize,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub results: Vec<LRResult>,
}

/// All `(λ, μ, ν)` with `ν ⊆ bound`, `|ν| ≤ max_size` and `λ, μ ⊆ ν`, in a
/// fixed order.
pub fn grassmannian_triples(bound: &Partition, max_size: usize) -> Vec<LRQuery> {
    let mut out = Vec::new();
    for nu in bound.subpartitions().into_iter().filter(|p| p.size() <= max_size) {
        let subs = nu.subpartitions();
        for lambda in &subs {
            for mu in &subs {
                out.push(LRQuery::new(lambda.clone(), mu.clone(), nu.clone()));
            }
        }
    }
    out
}

fn fits(p: &Partition, k: usize, n: usize) -> bool {
    p.fits_in(k, n - k)
}

/// Check that every applicable rule agrees on every triple. The first
/// disagreement (in triple order) is returned as a cross-check error.
pub fn sweep_grassmannian(cfg: &SweepConfig) -> Result<SweepReport> {
    let start = Instant::now();
    let triples = grassmannian_triples(&cfg.bound, cfg.max_size);
    let results = par::map(&triples, cfg.jobs, |q| {
        let gr = cfg
            .gr
            .filter(|&(k, n)| k <= n && [&q.lambda, &q.mu, &q.nu].iter().all(|p| fits(p, k, n)));
        let opts = LROptions { rules: Rule::ALL.to_vec(), gr, witnesses: None, pieces: cfg.pieces.clone() };
        coefficient_a(q, &opts)
    });
    let mut report = SweepReport {
        triples: triples.len(),
        nonzero: 0,
        puzzle_checked: 0,
        disagreements: 0,
        elapsed_ms: 0,
        results: Vec::with_capacity(triples.len()),
    };
    let mut first_err: Option<Error> = None;
    for r in results {
        match r {
            Ok(r) => {
                report.nonzero += usize::from(r.coefficient != 0);
                report.puzzle_checked += usize::from(r.counts.contains_key(&Rule::Puzzle));
                report.results.push(r);
            }
            Err(e) if e.is_cross_check() => {
                report.disagreements += 1;
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    report.elapsed_ms = elapsed_ms(start.elapsed());
    match first_err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftedSweepReport {
    pub triples: usize,
    pub nonzero: usize,
    /// Triples with `|ν| = |λ| + |μ|` on which the Q-count was compared
    /// with `2^(ℓ(λ)+ℓ(μ)-ℓ(ν))` times the P-count.
    pub cohomological_checked: usize,
    pub disagreements: usize,
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub results: Vec<OGResult>,
}

/// All strict `(λ, μ, ν)` inside the staircase `δ_n` with `λ ⊆ ν` and
/// `|μ| ≤ |ν| - |λ|`.
pub fn shifted_triples(n: usize) -> Vec<OGQuery> {
    let all = StrictPartition::staircase(n).substrict();
    let mut out = Vec::new();
    for nu in &all {
        for lambda in all.iter().filter(|l| nu.contains(l)) {
            for mu in all.iter().filter(|m| m.size() + lambda.size() <= nu.size()) {
                out.push(OGQuery::new(lambda.clone(), mu.clone(), nu.clone()));
            }
        }
    }
    out
}

fn check_shifted(q: &OGQuery) -> Result<(OGResult, bool)> {
    let r = og_coefficient(q, false)?;
    if q.nu.size() != q.lambda.size() + q.mu.size() {
        return Ok((r, false));
    }
    let lg = lg_bounds(q);
    let c = lg.cohomological_c.unwrap_or(0);
    if lg.qballot as i64 != c.abs() {
        return Err(Error::CrossCheck(format!(
            "LG triple λ={} μ={} ν={}: qballot={} but 2^(ℓλ+ℓμ-ℓν)·pballot={}",
            q.lambda,
            q.mu,
            q.nu,
            lg.qballot,
            c.abs()
        )));
    }
    Ok((r, true))
}

/// PBallot against shifted rectification on every triple in `δ_n`, plus
/// the cohomological Q-count identity.
pub fn sweep_shifted(n: usize, jobs: usize) -> Result<ShiftedSweepReport> {
    let start = Instant::now();
    let triples = shifted_triples(n);
    let results = par::map(&triples, jobs, check_shifted);
    let mut report = ShiftedSweepReport {
        triples: triples.len(),
        nonzero: 0,
        cohomological_checked: 0,
        disagreements: 0,
        elapsed_ms: 0,
        results: Vec::with_capacity(triples.len()),
    };
    let mut first_err: Option<Error> = None;
    for r in results {
        match r {
            Ok((r, cohom)) => {
                report.nonzero += usize::from(r.coefficient != 0);
                report.cohomological_checked += usize::from(cohom);
                report.results.push(r);
            }
            Err(e) if e.is_cross_check() => {
                report.disagreements += 1;
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    report.elapsed_ms = elapsed_ms(start.elapsed());
    match first_err {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

fn elapsed_ms(d: Duration) -> u128 {
    d.as_millis()
}

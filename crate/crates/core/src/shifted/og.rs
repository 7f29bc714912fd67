//! Structure constants of the maximal orthogonal Grassmannian by two
//! independent counts, and genomic bounds for the Lagrangian Grassmannian.

use serde::Serialize;

use super::jdt::rectifies_to_shifted_superstandard;
use super::tableau::{for_each_shifted_genomic, Kind, ShiftedGenomicTableau};
use crate::error::{Error, Result};
use crate::shapes::{ShiftedSkewShape, StrictPartition};
use crate::tableaux::for_each_increasing_onto;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OGQuery {
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    pub nu: StrictPartition,
}

impl OGQuery {
    pub fn new(lambda: StrictPartition, mu: StrictPartition, nu: StrictPartition) -> Self {
        OGQuery { lambda, mu, nu }
    }

    /// `(-1)^(|ν| - |λ| - |μ|)`.
    pub fn sign(&self) -> i64 {
        let d = self.nu.size() as i64 - self.lambda.size() as i64 - self.mu.size() as i64;
        if d.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// The skew shape ν/λ, or `None` when λ ⊄ ν.
    pub fn shape(&self) -> Option<ShiftedSkewShape> {
        ShiftedSkewShape::new(self.nu.clone(), self.lambda.clone()).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OGResult {
    pub query: OGQuery,
    pub sign: i64,
    /// Ballot genomic P-tableaux of shape ν/λ and content μ.
    pub pballot: u64,
    /// Shifted increasing tableaux of shape ν/λ rectifying to `S_μ`.
    pub ctyrect: u64,
    pub coefficient: i64,
    pub witnesses: Option<Vec<ShiftedGenomicTableau>>,
}

fn ballot_tableaux(shape: &ShiftedSkewShape, kind: Kind, mu: &StrictPartition, mut f: impl FnMut(&ShiftedGenomicTableau)) {
    for_each_shifted_genomic(shape, kind, mu.parts(), |t| {
        if t.is_ballot() {
            f(t);
        }
    });
}

/// Number of ballot genomic P-tableaux of shape ν/λ with content μ.
pub fn count_pballot(q: &OGQuery) -> u64 {
    let Some(shape) = q.shape() else { return 0 };
    let mut n = 0;
    ballot_tableaux(&shape, Kind::P, &q.mu, |_| n += 1);
    n
}

/// Number of shifted increasing tableaux of shape ν/λ that K-rectify to
/// the shifted superstandard tableau of shape μ.
pub fn count_cty(q: &OGQuery) -> u64 {
    let Some(shape) = q.shape() else { return 0 };
    let mut n = 0;
    for_each_increasing_onto(&shape, q.mu.size() as u32, |s| {
        if rectifies_to_shifted_superstandard(s, &q.mu) {
            n += 1;
        }
    });
    n
}

/// `b_{λ,μ}^ν` by the genomic ballot count, cross-checked against the
/// shifted rectification count. `witnesses` keeps the ballot tableaux.
pub fn og_coefficient(q: &OGQuery, witnesses: bool) -> Result<OGResult> {
    let mut found = Vec::new();
    let mut pballot = 0;
    if let Some(shape) = q.shape() {
        ballot_tableaux(&shape, Kind::P, &q.mu, |t| {
            pballot += 1;
            if witnesses {
                found.push(t.clone());
            }
        });
    }
    let ctyrect = count_cty(q);
    if pballot != ctyrect {
        return Err(Error::CrossCheck(format!(
            "OG triple λ={} μ={} ν={}: pballot={pballot} ctyrect={ctyrect}",
            q.lambda, q.mu, q.nu
        )));
    }
    let sign = q.sign();
    Ok(OGResult {
        query: q.clone(),
        sign,
        pballot,
        ctyrect,
        coefficient: sign * pballot as i64,
        witnesses: witnesses.then_some(found),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LGReport {
    pub query: OGQuery,
    pub pballot: u64,
    pub qballot: u64,
    /// Ballot genomic Q-tableaux in which no gene mixes primed and unprimed
    /// letters.
    pub qballot_dagger: u64,
    /// The orthogonal coefficient `b`.
    pub b: i64,
    /// In the cohomological case `|ν| = |λ| + |μ|`, the Lagrangian
    /// coefficient `c = 2^(ℓ(λ)+ℓ(μ)-ℓ(ν)) b`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomological_c: Option<i64>,
}

/// `2^(ℓ(λ)+ℓ(μ)-ℓ(ν))`, or `None` when the exponent is negative.
pub fn cohomological_factor(q: &OGQuery) -> Option<i64> {
    let e = (q.lambda.len() + q.mu.len()).checked_sub(q.nu.len())?;
    Some(1i64 << e)
}

/// Genomic lower and upper bounds for the Lagrangian coefficient.
pub fn lg_bounds(q: &OGQuery) -> LGReport {
    let (mut qballot, mut dagger) = (0, 0);
    if let Some(shape) = q.shape() {
        ballot_tableaux(&shape, Kind::Q, &q.mu, |t| {
            qballot += 1;
            dagger += u64::from(!t.has_mixed_gene());
        });
    }
    let pballot = count_pballot(q);
    let b = q.sign() * pballot as i64;
    let cohomological = q.nu.size() == q.lambda.size() + q.mu.size();
    let cohomological_c = cohomological.then(|| cohomological_factor(q).map_or(0, |f| f * b));
    LGReport { query: q.clone(), pballot, qballot, qballot_dagger: dagger, b, cohomological_c }
}

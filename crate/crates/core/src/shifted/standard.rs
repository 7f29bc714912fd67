//! Shifted K-standardization Γ and K-semistandardization Δ_μ.

use serde::Serialize;

use super::tableau::{is_tableau, DFilling, Kind, ShiftedGenomicTableau};
use super::DLetter;
use crate::kstd::PieriBlocks;
use crate::shapes::{Diagram, ShiftedSkewShape};
use crate::tableaux::{for_each_increasing_onto, ShiftedIncreasingTableau};

/// Γ: number the genes in gene order.
pub fn gamma(t: &ShiftedGenomicTableau) -> ShiftedIncreasingTableau {
    t.gene_ids()
}

/// Why Δ_μ is not defined on a tableau.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "stage", content = "detail", rename_all = "snake_case")]
pub enum Undefined {
    /// An entry exceeds |μ|.
    EntryOutOfRange(u32),
    /// The relabelled filling breaks a P-tableau rule.
    NotPTableau,
    /// The boxes sharing an entry do not form valid genes.
    InvalidGenes(String),
    /// Some entry of `1..=|μ|` is missing, so the content is not μ.
    ContentMismatch(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Delta {
    Defined(ShiftedGenomicTableau),
    Undefined(Undefined),
}

impl Delta {
    pub fn defined(self) -> Option<ShiftedGenomicTableau> {
        match self {
            Delta::Defined(t) => Some(t),
            Delta::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, Delta::Defined(_))
    }
}

/// Δ_μ: entry `i` becomes the family `k` with `i ∈ P_k(μ)`, primed when a
/// larger entry of the same family sits weakly southwest; boxes sharing an
/// entry form one gene.
pub fn delta(s: &ShiftedIncreasingTableau, mu: &[usize]) -> Delta {
    let blocks = PieriBlocks::new(mu);
    let mut fam = Vec::new();
    for (c, &v) in s.iter() {
        match blocks.block_of(v) {
            Some(k) => fam.push((c, v, k)),
            None => return Delta::Undefined(Undefined::EntryOutOfRange(v)),
        }
    }
    let letters = fam.iter().map(|&(b, v, k)| {
        let primed = fam.iter().any(|&(c, w, j)| j == k && w > v && c != b && c.weakly_southwest_of(b));
        (b, DLetter { value: k, primed })
    });
    let base = DFilling::from_cells(s.shape().clone(), letters).expect("same cells as s");
    if !is_tableau(&base, Kind::P) {
        return Delta::Undefined(Undefined::NotPTableau);
    }
    let t = match ShiftedGenomicTableau::from_labels(&base, Kind::P, |c| *s.get(c).expect("cell of s")) {
        Ok(t) => t,
        Err(e) => return Delta::Undefined(Undefined::InvalidGenes(e.to_string())),
    };
    let mut want = mu.to_vec();
    while want.last() == Some(&0) {
        want.pop();
    }
    if t.content() != want {
        return Delta::Undefined(Undefined::ContentMismatch(t.content()));
    }
    Delta::Defined(t)
}

/// μ is admissible for `s` and Γ(Δ_μ(s)) = s.
pub fn is_shifted_pieri_filled(s: &ShiftedIncreasingTableau, mu: &[usize]) -> bool {
    match delta(s, mu) {
        Delta::Defined(t) => &gamma(&t) == s,
        Delta::Undefined(_) => false,
    }
}

/// All μ-Pieri-filled shifted increasing tableaux of `shape`.
pub fn enumerate_shifted_pieri_filled(shape: &ShiftedSkewShape, mu: &[usize]) -> Vec<ShiftedIncreasingTableau> {
    let n: usize = mu.iter().sum();
    let mut out = Vec::new();
    if n > shape.size() {
        return out;
    }
    for_each_increasing_onto(shape, n as u32, |s| {
        if is_shifted_pieri_filled(s, mu) {
            out.push(s.clone());
        }
    });
    out
}

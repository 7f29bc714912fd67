//! Grassmannian K-theory structure constants `a_{λ,μ}^ν` by four independent
//! rules, and the bijection between Buch's set-valued tableaux and ballot
//! genomic tableaux.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::rectifies_to_superstandard;
use crate::puzzles::{for_each_k_puzzle, delta_boundary, PieceSet, Puzzle};
use crate::shapes::{star_shape, Cell, Diagram, Partition, SkewShape};
use crate::tableaux::{
    colword, enumerate_setvalued, for_each_genomic, for_each_increasing_onto, is_reverse_lattice, GenomicTableau,
    IncreasingTableau, SetValuedTableau,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LRQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl LRQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        LRQuery { lambda, mu, nu }
    }

    /// `(-1)^{|ν| - |λ| - |μ|}`.
    pub fn sign(&self) -> i64 {
        let d = self.nu.size() as i64 - self.lambda.size() as i64 - self.mu.size() as i64;
        if d.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    fn skew(&self) -> Option<SkewShape> {
        SkewShape::new(self.nu.clone(), self.lambda.clone()).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Ballot,
    Rect,
    Buch,
    Puzzle,
}

impl Rule {
    pub const TABLEAU: [Rule; 3] = [Rule::Ballot, Rule::Rect, Rule::Buch];
    pub const ALL: [Rule; 4] = [Rule::Ballot, Rule::Rect, Rule::Buch, Rule::Puzzle];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Ballot => "ballot",
            Rule::Rect => "rect",
            Rule::Buch => "buch",
            Rule::Puzzle => "puzzle",
        })
    }
}

impl FromStr for Rule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ballot" => Ok(Rule::Ballot),
            "rect" => Ok(Rule::Rect),
            "buch" => Ok(Rule::Buch),
            "puzzle" => Ok(Rule::Puzzle),
            other => Err(Error::Parse(format!("unknown rule {other:?}"))),
        }
    }
}

/// Witness objects found by each rule, capped at the requested number.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub ballot: Vec<GenomicTableau>,
    pub rect: Vec<IncreasingTableau>,
    pub buch: Vec<SetValuedTableau>,
    pub puzzle: Vec<Puzzle>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LRResult {
    pub query: LRQuery,
    pub sign: i64,
    pub counts: BTreeMap<Rule, u64>,
    pub coefficient: i64,
    pub witnesses: Option<Witnesses>,
}

#[derive(Debug, Clone)]
pub struct LROptions {
    pub rules: Vec<Rule>,
    /// `(k, n)` for the puzzle rule; the puzzle rule is skipped without it.
    pub gr: Option<(usize, usize)>,
    /// Keep at most this many witnesses per rule.
    pub witnesses: Option<usize>,
    pub pieces: PieceSet,
}

impl Default for LROptions {
    fn default() -> Self {
        LROptions { rules: Rule::ALL.to_vec(), gr: None, witnesses: None, pieces: PieceSet::default() }
    }
}

fn push_capped<T: Clone>(v: &mut Vec<T>, cap: Option<usize>, x: &T) {
    if cap.is_some_and(|c| v.len() < c) {
        v.push(x.clone());
    }
}

fn ballot_rule(q: &LRQuery, cap: Option<usize>) -> (u64, Vec<GenomicTableau>) {
    let Some(shape) = q.skew() else { return (0, Vec::new()) };
    let mut n = 0;
    let mut w = Vec::new();
    for_each_genomic(&shape, q.mu.parts(), |t| {
        if t.is_ballot() {
            n += 1;
            push_capped(&mut w, cap, t);
        }
    });
    (n, w)
}

fn rect_rule(q: &LRQuery, cap: Option<usize>) -> (u64, Vec<IncreasingTableau>) {
    let Some(shape) = q.skew() else { return (0, Vec::new()) };
    let total = q.mu.size() as u32;
    if total == 0 {
        if shape.size() != 0 {
            return (0, Vec::new());
        }
        let empty = IncreasingTableau::from_cells(shape, []).expect("empty shape");
        let mut w = Vec::new();
        push_capped(&mut w, cap, &empty);
        return (1, w);
    }
    let mut n = 0;
    let mut w = Vec::new();
    for_each_increasing_onto(&shape, total, |s| {
        if rectifies_to_superstandard(s, &q.mu) {
            n += 1;
            push_capped(&mut w, cap, s);
        }
    });
    (n, w)
}

fn buch_rule(q: &LRQuery, cap: Option<usize>) -> (u64, Vec<SetValuedTableau>) {
    let shape = star_shape(&q.mu, &q.lambda);
    let all = enumerate_setvalued(&shape, q.nu.parts(), true);
    let n = all.len() as u64;
    let w = all.into_iter().take(cap.unwrap_or(0)).collect();
    (n, w)
}

fn puzzle_rule(q: &LRQuery, k: usize, n: usize, pieces: &PieceSet, cap: Option<usize>) -> Result<(u64, Vec<Puzzle>)> {
    let b = delta_boundary(&q.lambda, &q.mu, &q.nu, k, n)?;
    let mut count = 0;
    let mut w = Vec::new();
    for_each_k_puzzle(&b, pieces, |p| {
        count += 1;
        push_capped(&mut w, cap, p);
    });
    Ok((count, w))
}

/// Number of ballot genomic tableaux of shape `ν/λ` and content `μ`.
pub fn count_ballot(q: &LRQuery) -> u64 {
    ballot_rule(q, None).0
}

/// Number of increasing tableaux of shape `ν/λ` that K-rectify to the
/// superstandard tableau of shape `μ`.
pub fn count_incr_rect(q: &LRQuery) -> u64 {
    rect_rule(q, None).0
}

/// Number of set-valued tableaux of shape `μ⋆λ` and content `ν` whose column
/// word is reverse lattice.
pub fn count_buch(q: &LRQuery) -> u64 {
    buch_rule(q, None).0
}

/// Run the selected rules, insist that they agree, and return the signed
/// coefficient.
pub fn coefficient_a(q: &LRQuery, opts: &LROptions) -> Result<LRResult> {
    let cap = opts.witnesses;
    let mut counts = BTreeMap::new();
    let mut wit = Witnesses::default();
    for &rule in &opts.rules {
        match rule {
            Rule::Ballot => {
                let (n, w) = ballot_rule(q, cap);
                counts.insert(rule, n);
                wit.ballot = w;
            }
            Rule::Rect => {
                let (n, w) = rect_rule(q, cap);
                counts.insert(rule, n);
                wit.rect = w;
            }
            Rule::Buch => {
                let (n, w) = buch_rule(q, cap);
                counts.insert(rule, n);
                wit.buch = w;
            }
            Rule::Puzzle => {
                if let Some((k, n)) = opts.gr {
                    let (c, w) = puzzle_rule(q, k, n, &opts.pieces, cap)?;
                    counts.insert(rule, c);
                    wit.puzzle = w;
                }
            }
        }
    }
    let mut values = counts.values();
    let first = values.next().copied().unwrap_or(0);
    if counts.values().any(|&c| c != first) {
        let detail: Vec<String> = counts.iter().map(|(r, c)| format!("{r}={c}")).collect();
        return Err(Error::CrossCheck(format!(
            "lambda=({}) mu=({}) nu=({}): {}",
            q.lambda,
            q.mu,
            q.nu,
            detail.join(" ")
        )));
    }
    let sign = q.sign();
    Ok(LRResult {
        query: q.clone(),
        sign,
        counts,
        coefficient: sign * first as i64,
        witnesses: cap.map(|_| wit),
    })
}

/// Ξ: read the boxes of the `μ` portion column by column from right to left,
/// each column top to bottom. A box in row `i` of `μ` holding `{s_1 < … < s_t}`
/// adds a new gene of family `i` at the end of rows `s_1, …, s_t`.
pub fn xi(b: &SetValuedTableau, lambda: &Partition, mu: &Partition) -> Result<GenomicTableau> {
    let shape = star_shape(mu, lambda);
    if b.shape() != &shape {
        return Err(Error::Malformed(format!("tableau shape {} is not {}", b.shape(), shape)));
    }
    if !is_reverse_lattice(&colword(b)) {
        return Err(Error::Malformed("column word is not reverse lattice".into()));
    }
    let top = lambda.len();
    let mut rows: Vec<usize> = lambda.parts().to_vec();
    let mut cells = Vec::new();
    let mut label = 0;
    for col in (1..=mu.part(1)).rev() {
        for i in 1..=mu.len() {
            let Some(set) = b.get(Cell::new(top + i, col)) else { continue };
            label += 1;
            for &s in set {
                let s = s as usize;
                if rows.len() < s {
                    rows.resize(s, 0);
                }
                rows[s - 1] += 1;
                cells.push((Cell::new(s, rows[s - 1]), i as u32, label));
            }
        }
    }
    let outer = Partition::new(rows).map_err(|e| Error::Malformed(format!("rows do not form a shape: {e}")))?;
    let shape = SkewShape::new(outer, lambda.clone())?;
    GenomicTableau::new(shape, cells).map_err(|e| Error::Malformed(e.to_string()))
}

/// Θ: row `i`, column `j` of the `μ` portion records the rows of the `j`-th
/// rightmost gene of family `i`; the `λ` portion is filled row `r` with `r`.
pub fn theta(t: &GenomicTableau, lambda: &Partition, mu: &Partition) -> Result<SetValuedTableau> {
    if t.shape().inner != *lambda {
        return Err(Error::Malformed(format!("inner shape of {} is not ({lambda})", t.shape())));
    }
    if t.content() != mu.parts() {
        return Err(Error::Malformed(format!("content {:?} is not ({mu})", t.content())));
    }
    if !t.is_ballot() {
        return Err(Error::Malformed("tableau is not ballot".into()));
    }
    let top = lambda.len();
    let offset = mu.part(1);
    let mut cells = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            cells.push((Cell::new(r + 1, offset + 1 + c), vec![r as u32 + 1]));
        }
    }
    let mut by_family: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for g in 1..=t.num_genes() as u32 {
        by_family.entry(t.family(g)).or_default().push(g);
    }
    for (fam, genes) in by_family {
        for (j, &g) in genes.iter().rev().enumerate() {
            let set = t.gene(g).iter().map(|c| c.row as u32).collect();
            cells.push((Cell::new(top + fam as usize, j + 1), set));
        }
    }
    SetValuedTableau::new(star_shape(mu, lambda), cells).map_err(|e| Error::Malformed(e.to_string()))
}

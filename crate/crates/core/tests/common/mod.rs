//! Enumerators shared by the integration tests. Written directly from the
//! definitions, without going through the library's own enumerators.

#![allow(dead_code)]

use genomic_tableaux::shapes::{Partition, ShiftedSkewShape, SkewShape, StrictPartition};
use genomic_tableaux::shifted::{DLetter, PLetter, PWord};
use genomic_tableaux::words::{GenomicWord, Letter};

/// Partitions of `n` with parts at most `max_part`, in decreasing lex order.
fn partitions_of(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max_part)).rev() {
        for rest in partitions_of(n - first, first) {
            out.push([vec![first], rest].concat());
        }
    }
    out
}

/// Every partition of size at most `n`, the empty one included.
pub fn partitions_upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k, k)).map(|p| Partition::new(p).unwrap()).collect()
}

/// Every strict partition of size at most `n`.
pub fn strict_partitions_upto(n: usize) -> Vec<StrictPartition> {
    (0..=n)
        .flat_map(|k| partitions_of(k, k))
        .filter(|p| p.windows(2).all(|w| w[0] > w[1]))
        .map(|p| StrictPartition::new(p).unwrap())
        .collect()
}

fn contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

/// Skew shapes `ν/λ` with `|ν| ≤ max_outer` and `1 ≤ |ν/λ| ≤ max_cells`.
pub fn skew_shapes(max_outer: usize, max_cells: usize) -> Vec<SkewShape> {
    let all = partitions_upto(max_outer);
    let mut out = Vec::new();
    for nu in &all {
        for lambda in &all {
            let cells = nu.size().saturating_sub(lambda.size());
            if contains(nu.parts(), lambda.parts()) && (1..=max_cells).contains(&cells) {
                out.push(SkewShape::new(nu.clone(), lambda.clone()).unwrap());
            }
        }
    }
    out
}

/// Shifted skew shapes with the same size limits.
pub fn shifted_skew_shapes(max_outer: usize, max_cells: usize) -> Vec<ShiftedSkewShape> {
    let all = strict_partitions_upto(max_outer);
    let mut out = Vec::new();
    for nu in &all {
        for lambda in &all {
            let cells = nu.size().saturating_sub(lambda.size());
            if contains(nu.parts(), lambda.parts()) && (1..=max_cells).contains(&cells) {
                out.push(ShiftedSkewShape::new(nu.clone(), lambda.clone()).unwrap());
            }
        }
    }
    out
}

/// Restricted growth strings of length `n`: canonical color patterns.
pub fn color_patterns(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            let top = p.iter().copied().max().unwrap_or(0);
            for c in 1..=top + 1 {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub fn sequences<T: Copy>(alphabet: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.iter().flat_map(|p| alphabet.iter().map(move |&a| [p.clone(), vec![a]].concat())).collect();
    }
    out
}

/// Valid colored words of length `1..=max_len` over `1..=max_value`.
pub fn genomic_words(max_len: usize, max_value: u32) -> Vec<GenomicWord> {
    let values: Vec<u32> = (1..=max_value).collect();
    let mut out = Vec::new();
    for n in 1..=max_len {
        let colors = color_patterns(n);
        for vs in sequences(&values, n) {
            for cs in &colors {
                let w = GenomicWord(vs.iter().zip(cs).map(|(&value, &color)| Letter { value, color }).collect());
                if w.is_valid() {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Valid colored words over the primed alphabet `1' < 1 < … < max_value`.
pub fn p_words(max_len: usize, max_value: u32) -> Vec<PWord> {
    let letters: Vec<DLetter> = (1..=2 * max_value).map(DLetter::from_key).collect();
    let mut out = Vec::new();
    for n in 1..=max_len {
        let colors = color_patterns(n);
        for ls in sequences(&letters, n) {
            for cs in &colors {
                let w = PWord(ls.iter().zip(cs).map(|(&letter, &color)| PLetter { letter, color }).collect());
                if w.is_valid() {
                    out.push(w);
                }
            }
        }
    }
    out
}

/// Classical Littlewood-Richardson number by brute force: semistandard
/// fillings of `ν/λ` with content `μ` whose reverse row reading word
/// (rows top to bottom, each right to left) is a lattice word.
pub fn classical_lr(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    if !contains(nu, lambda) || lambda.iter().sum::<usize>() + mu.iter().sum::<usize>() != nu.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lambda.get(r).copied().unwrap_or(0)..nu[r]).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = nu.iter().map(|&n| vec![0; n]).collect();
    let mut used = vec![0usize; mu.len()];
    fn go(
        i: usize,
        cells: &[(usize, usize)],
        lambda: &[usize],
        mu: &[usize],
        grid: &mut Vec<Vec<u32>>,
        used: &mut Vec<usize>,
    ) -> u64 {
        if i == cells.len() {
            let mut seen = vec![0usize; mu.len() + 1];
            for row in grid.iter().enumerate() {
                let start = lambda.get(row.0).copied().unwrap_or(0);
                for &v in row.1[start..].iter().rev() {
                    let v = v as usize;
                    seen[v] += 1;
                    if v > 1 && seen[v] > seen[v - 1] {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 1..=mu.len() as u32 {
            let k = v as usize - 1;
            if used[k] == mu[k] {
                continue;
            }
            let start = lambda.get(r).copied().unwrap_or(0);
            if c > start && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && c >= lambda.get(r - 1).copied().unwrap_or(0) && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            used[k] += 1;
            total += go(i + 1, cells, lambda, mu, grid, used);
            used[k] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, lambda, mu, &mut grid, &mut used)
}

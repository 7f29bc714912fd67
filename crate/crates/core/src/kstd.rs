//! K-standardization of genomic tableaux and its inverse on Pieri-filled
//! increasing tableaux.

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::{for_each_increasing_onto, GenomicTableau, IncreasingTableau};

/// The consecutive blocks `1..=μ1`, `μ1+1..=μ1+μ2`, … of `1..=|μ|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieriBlocks {
    // block[v] = k for v in 1..=|μ|; index 0 unused
    block: Vec<u32>,
    mu: Vec<usize>,
}

impl PieriBlocks {
    pub fn new(mu: &[usize]) -> Self {
        let mut block = vec![0];
        for (k, &m) in mu.iter().enumerate() {
            block.extend(std::iter::repeat_n(k as u32 + 1, m));
        }
        PieriBlocks { block, mu: mu.to_vec() }
    }

    pub fn total(&self) -> usize {
        self.block.len() - 1
    }

    /// The `k` with `v` in block `k`, if `1 ≤ v ≤ |μ|`.
    pub fn block_of(&self, v: u32) -> Option<u32> {
        self.block.get(v as usize).copied().filter(|&k| k > 0)
    }

    /// Block `k` as an inclusive range (empty when `μ_k = 0`).
    pub fn interval(&self, k: usize) -> std::ops::RangeInclusive<u32> {
        let start: usize = self.mu[..k - 1].iter().sum::<usize>() + 1;
        start as u32..=(start + self.mu[k - 1]) as u32 - 1
    }
}

/// Φ: replace every box by the index of its gene in the gene order.
pub fn k_standardize(t: &GenomicTableau) -> IncreasingTableau {
    t.gene_ids()
}

fn block_cells(s: &IncreasingTableau, blocks: &PieriBlocks, k: u32) -> Vec<(Cell, u32)> {
    let mut cells: Vec<(Cell, u32)> = s.iter().filter(|(_, &v)| blocks.block_of(v) == Some(k)).map(|(c, &v)| (c, v)).collect();
    cells.sort_by_key(|(c, _)| c.col);
    cells
}

/// The cells with entries in block `k` lie in distinct columns.
pub fn block_is_horizontal_strip(s: &IncreasingTableau, mu: &[usize], k: usize) -> bool {
    let cells = block_cells(s, &PieriBlocks::new(mu), k as u32);
    cells.windows(2).all(|w| w[0].0.col != w[1].0.col)
}

/// The entries of block `k`, read by column from west to east, weakly
/// increase.
pub fn block_is_weakly_increasing(s: &IncreasingTableau, mu: &[usize], k: usize) -> bool {
    let cells = block_cells(s, &PieriBlocks::new(mu), k as u32);
    cells.windows(2).all(|w| w[0].1 <= w[1].1)
}

/// Whether `s` is μ-Pieri-filled: increasing with entry set exactly
/// `1..=|μ|`, and each block is a horizontal strip read weakly increasing
/// from southwest to northeast.
pub fn is_pieri_filled(s: &IncreasingTableau, mu: &[usize]) -> bool {
    let total: usize = mu.iter().sum();
    if !s.is_increasing() || s.max_entry() as usize != total || !s.uses_initial_segment() {
        return false;
    }
    (1..=mu.len()).all(|k| block_is_horizontal_strip(s, mu, k) && block_is_weakly_increasing(s, mu, k))
}

/// Ψ: replace entry `i` by the block containing it; equal entries form a gene.
pub fn k_semistandardize(s: &IncreasingTableau, mu: &[usize]) -> Result<GenomicTableau> {
    if !is_pieri_filled(s, mu) {
        return Err(Error::NotPieriFilled(format!("{mu:?}")));
    }
    let blocks = PieriBlocks::new(mu);
    let cells: Vec<(Cell, u32, u32)> =
        s.iter().map(|(c, &v)| (c, blocks.block_of(v).expect("entry within |mu|"), v)).collect();
    GenomicTableau::new(s.shape().clone(), cells)
}

/// All μ-Pieri-filled increasing tableaux of `shape`.
pub fn enumerate_pieri_filled(shape: &SkewShape, mu: &[usize]) -> Vec<IncreasingTableau> {
    let mut out = Vec::new();
    let total = mu.iter().sum::<usize>() as u32;
    if total == 0 {
        if crate::shapes::Diagram::size(shape) == 0 {
            out.push(IncreasingTableau::from_cells(shape.clone(), []).expect("empty shape"));
        }
        return out;
    }
    for_each_increasing_onto(shape, total, |s| {
        if is_pieri_filled(s, mu) {
            out.push(s.clone());
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;
    use crate::tableaux::{enumerate_genomic, superstandard};
    use std::collections::HashSet;

    fn shape(o: &str, i: &str) -> SkewShape {
        SkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    fn section2_example() -> GenomicTableau {
        // blue gene {(1,3),(2,2)}, red (2,1), green family 2
        GenomicTableau::new(
            shape("4,3,1", "2"),
            [
                (Cell::new(1, 3), 1, 10),
                (Cell::new(1, 4), 2, 30),
                (Cell::new(2, 1), 1, 20),
                (Cell::new(2, 2), 1, 10),
                (Cell::new(2, 3), 2, 30),
                (Cell::new(3, 1), 2, 30),
            ],
        )
        .unwrap()
    }

    #[test]
    fn standardization_example() {
        let t = section2_example();
        let s = k_standardize(&t);
        let expected = IncreasingTableau::from_rows(shape("4,3,1", "2"), vec![vec![2, 3], vec![1, 2, 3], vec![3]]).unwrap();
        assert_eq!(s, expected);
        assert_eq!(k_semistandardize(&s, &t.content()).unwrap(), t);
    }

    #[test]
    fn pieri_filled_examples() {
        let s = IncreasingTableau::from_rows(shape("4,3,2", "2,1"), vec![vec![2, 3], vec![1, 4], vec![1, 3]]).unwrap();
        assert!(!is_pieri_filled(&s, &[2, 2]));
        assert!(is_pieri_filled(&s, &[2, 1, 1]));
        assert!(k_semistandardize(&s, &[2, 2]).is_err());
        for mu in ["3,1", "2,2,1", "4"] {
            let mu: Partition = mu.parse().unwrap();
            let sm = superstandard(&mu);
            assert!(is_pieri_filled(&sm, mu.parts()));
            let hw = GenomicTableau::highest_weight(&mu);
            assert_eq!(k_standardize(&hw), sm);
            assert_eq!(k_semistandardize(&sm, mu.parts()).unwrap(), hw);
        }
    }

    #[test]
    fn blocks() {
        let b = PieriBlocks::new(&[2, 0, 3]);
        assert_eq!(b.interval(1), 1..=2);
        assert!(b.interval(2).is_empty());
        assert_eq!(b.interval(3), 3..=5);
        assert_eq!(b.block_of(3), Some(3));
        assert_eq!(b.block_of(6), None);
    }

    #[test]
    fn bijection_on_antidiagonal() {
        let sh = shape("3,2,1", "2,1");
        let gen = enumerate_genomic(&sh, &[1, 1]);
        let pf = enumerate_pieri_filled(&sh, &[1, 1]);
        assert_eq!(pf.len(), 6);
        let image: HashSet<_> = gen.iter().map(k_standardize).collect();
        assert_eq!(image, pf.iter().cloned().collect());
        for t in &gen {
            assert_eq!(&k_semistandardize(&k_standardize(t), &[1, 1]).unwrap(), t);
        }
        assert!(enumerate_pieri_filled(&sh, &[]).is_empty());
    }
}

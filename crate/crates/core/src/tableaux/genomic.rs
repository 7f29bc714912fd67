//! Genomic tableaux: semistandard tableaux whose boxes are grouped into genes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_ballot_word, Filling, Tableau};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition, SkewShape};

/// A box of a genomic tableau: its entry (the family) and its gene id.
///
/// Gene ids are `1..=num_genes`, ordered by family and then west to east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneCell {
    pub value: u32,
    pub gene: u32,
}

impl fmt::Display for GeneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.value, self.gene)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenomicTableau {
    filling: Filling<SkewShape, GeneCell>,
    // genes[g - 1]: cells of gene g sorted west to east.
    genes: Vec<Vec<Cell>>,
}

/// One chosen box per gene, indexed by gene id - 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genotype {
    pub chosen: Vec<Cell>,
}

/// How ballotness over all genotypes is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BallotCheck {
    /// Iterate every genotype.
    Exhaustive,
    /// Depth-first search over gene choices in reading order, pruning on the
    /// first violated prefix.
    #[default]
    Pruned,
}

impl GenomicTableau {
    /// Validate a filling with arbitrary gene labels and relabel genes
    /// canonically.
    pub fn new(shape: SkewShape, cells: impl IntoIterator<Item = (Cell, u32, u32)>) -> Result<Self> {
        let mut labels = BTreeMap::new();
        let mut values = Vec::new();
        for (c, v, g) in cells {
            values.push((c, v));
            labels.insert(c, g);
        }
        let base = Tableau::from_cells(shape, values)?;
        if !base.is_semistandard() {
            return Err(Error::InvalidTableau("entries are not semistandard".into()));
        }
        Self::from_labels(&base, |c| labels[&c])
    }

    /// Attach genes to a semistandard filling; `label` names each box's gene.
    pub fn from_labels(base: &Tableau<SkewShape>, label: impl Fn(Cell) -> u32) -> Result<Self> {
        // family -> boxes in column order with their labels
        let mut families: BTreeMap<u32, Vec<(Cell, u32)>> = BTreeMap::new();
        for (c, &v) in base.iter() {
            families.entry(v).or_default().push((c, label(c)));
        }
        let mut gene_of: BTreeMap<Cell, u32> = BTreeMap::new();
        let mut genes: Vec<Vec<Cell>> = Vec::new();
        let mut seen_labels: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, mut boxes) in families {
            boxes.sort_by_key(|(c, _)| c.col);
            let mut prev: Option<u32> = None;
            for (c, l) in boxes {
                if prev != Some(l) {
                    if let Some(fam) = seen_labels.insert(l, v) {
                        let msg = if fam != v {
                            format!("gene {l} mixes entries {fam} and {v}")
                        } else {
                            format!("gene {l} is not consecutive in family {v}")
                        };
                        return Err(Error::InvalidTableau(msg));
                    }
                    genes.push(Vec::new());
                    prev = Some(l);
                }
                let gene = genes.last_mut().expect("pushed above");
                if gene.iter().any(|d| d.row == c.row) {
                    return Err(Error::InvalidTableau(format!("gene {l} has two boxes in row {}", c.row)));
                }
                gene.push(c);
                gene_of.insert(c, genes.len() as u32);
            }
        }
        let filling = base.map(|c, &v| GeneCell { value: v, gene: gene_of[&c] });
        Ok(GenomicTableau { filling, genes })
    }

    /// Every box its own gene.
    pub fn from_singletons(base: &Tableau<SkewShape>) -> Result<Self> {
        if !base.is_semistandard() {
            return Err(Error::InvalidTableau("entries are not semistandard".into()));
        }
        Self::from_labels(base, |c| (c.row * 10_000 + c.col) as u32)
    }

    /// Build from trusted parts: `gene_cells[g-1]` sorted west to east.
    pub(crate) fn from_parts_unchecked(shape: SkewShape, gene_cells: Vec<(u32, Vec<Cell>)>) -> Self {
        let mut cells = Vec::new();
        for (g, (v, cs)) in gene_cells.iter().enumerate() {
            for &c in cs {
                cells.push((c, GeneCell { value: *v, gene: g as u32 + 1 }));
            }
        }
        let filling = Filling::from_cells(shape, cells).expect("trusted genomic parts");
        GenomicTableau { filling, genes: gene_cells.into_iter().map(|(_, c)| c).collect() }
    }

    /// The highest-weight tableau: row `i` of shape μ filled with `i`, every
    /// box its own gene.
    pub fn highest_weight(mu: &Partition) -> Self {
        let rows = mu.parts().iter().enumerate().map(|(i, &p)| vec![i as u32 + 1; p]).collect();
        let base = Tableau::from_rows(SkewShape::straight(mu.clone()), rows).expect("straight shape");
        Self::from_singletons(&base).expect("highest weight tableau is semistandard")
    }

    pub fn shape(&self) -> &SkewShape {
        self.filling.shape()
    }

    pub fn get(&self, c: Cell) -> Option<GeneCell> {
        self.filling.get(c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, GeneCell)> + '_ {
        self.filling.iter().map(|(c, &g)| (c, g))
    }

    pub fn filling(&self) -> &Filling<SkewShape, GeneCell> {
        &self.filling
    }

    pub fn num_genes(&self) -> usize {
        self.genes.len()
    }

    /// Cells of gene `g` (1-based), west to east.
    pub fn gene(&self, g: u32) -> &[Cell] {
        &self.genes[g as usize - 1]
    }

    pub fn family(&self, g: u32) -> u32 {
        self.get(self.gene(g)[0]).expect("gene cell").value
    }

    /// Number of genes of each family, trailing zeros removed.
    pub fn content(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for g in 1..=self.num_genes() as u32 {
            let f = self.family(g) as usize;
            if out.len() < f {
                out.resize(f, 0);
            }
            out[f - 1] += 1;
        }
        out
    }

    /// The underlying semistandard filling.
    pub fn entries(&self) -> Tableau<SkewShape> {
        self.filling.map(|_, g| g.value)
    }

    /// Replace each box by its gene id.
    pub fn gene_ids(&self) -> Tableau<SkewShape> {
        self.filling.map(|_, g| g.gene)
    }

    /// Genotypes in odometer order (last gene varies fastest).
    pub fn genotypes(&self) -> impl Iterator<Item = Genotype> + '_ {
        let sizes: Vec<usize> = self.genes.iter().map(Vec::len).collect();
        Odometer::new(sizes).map(move |idx| Genotype {
            chosen: idx.iter().enumerate().map(|(g, &i)| self.genes[g][i]).collect(),
        })
    }

    pub fn genotype_count(&self) -> usize {
        self.genes.iter().map(Vec::len).product()
    }

    /// Reading word of the boxes chosen by a genotype.
    pub fn genotype_seq(&self, g: &Genotype) -> Vec<u32> {
        let mut cells = g.chosen.clone();
        cells.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
        cells.iter().map(|&c| self.get(c).expect("chosen cell").value).collect()
    }

    /// Boxes in reading order as `(gene index from 0, value)`.
    pub(crate) fn reading_letters(&self) -> Vec<(usize, u32)> {
        self.filling
            .reading_word()
            .into_iter()
            .map(|g| (g.gene as usize - 1, g.value))
            .collect()
    }

    pub fn is_ballot(&self) -> bool {
        self.is_ballot_with(BallotCheck::default())
    }

    pub fn is_ballot_with(&self, check: BallotCheck) -> bool {
        match check {
            BallotCheck::Exhaustive => self.genotypes().all(|g| is_ballot_word(&self.genotype_seq(&g))),
            BallotCheck::Pruned => all_genotypes_ballot(&self.reading_letters(), self.num_genes()),
        }
    }
}

impl fmt::Display for GenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.filling, f)
    }
}

impl fmt::Debug for GenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.shape(), self.filling)
    }
}

/// Mixed-radix counter over `0..sizes[i]`.
pub(crate) struct Odometer {
    sizes: Vec<usize>,
    cur: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(sizes: Vec<usize>) -> Self {
        let cur = if sizes.contains(&0) { None } else { Some(vec![0; sizes.len()]) };
        Odometer { sizes, cur }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().expect("checked");
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.sizes[i] {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// Whether every one-letter-per-gene subword of `letters` is ballot.
///
/// `letters` lists `(gene, value)` in reading order. Searches for a
/// violating genotype, choosing or skipping each letter in turn.
pub(crate) fn all_genotypes_ballot(letters: &[(usize, u32)], ngenes: usize) -> bool {
    let mut last = vec![usize::MAX; ngenes];
    for (i, &(g, _)) in letters.iter().enumerate() {
        last[g] = i;
    }
    let maxv = letters.iter().map(|l| l.1).max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; maxv + 2];
    let mut chosen = vec![false; ngenes];
    !find_violation(letters, &last, 0, &mut counts, &mut chosen)
}

fn find_violation(
    letters: &[(usize, u32)],
    last: &[usize],
    i: usize,
    counts: &mut [usize],
    chosen: &mut [bool],
) -> bool {
    if i == letters.len() {
        return false;
    }
    let (g, v) = letters[i];
    if chosen[g] {
        return find_violation(letters, last, i + 1, counts, chosen);
    }
    let v = v as usize;
    if v > 1 && counts[v] + 1 > counts[v - 1] {
        return true;
    }
    counts[v] += 1;
    chosen[g] = true;
    let found = find_violation(letters, last, i + 1, counts, chosen);
    chosen[g] = false;
    counts[v] -= 1;
    if found {
        return true;
    }
    last[g] != i && find_violation(letters, last, i + 1, counts, chosen)
}

/// Split `n` ordered boxes into exactly `k` consecutive blocks in which every
/// pair `(a, b)` satisfies `can_join(a, b)`. Block sizes are produced in
/// lexicographic order.
pub(crate) fn consecutive_splits(n: usize, k: usize, can_join: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        can_join: &dyn Fn(usize, usize) -> bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == 0 {
            if start == n {
                out.push(cur.clone());
            }
            return;
        }
        for end in start..n {
            // block is start..=end; the new box `end` must be compatible
            // with every earlier box of the block
            if (start..end).any(|j| !can_join(j, end)) {
                break;
            }
            if n - end - 1 < k - 1 {
                break;
            }
            cur.push(end - start + 1);
            rec(end + 1, n, k - 1, can_join, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, can_join, &mut cur, &mut out);
    out
}

/// Visit every genomic tableau of `shape` with content `mu` (zero entries
/// allowed, meaning no genes of that family).
pub fn for_each_genomic(shape: &SkewShape, mu: &[usize], mut f: impl FnMut(&GenomicTableau)) {
    let m = mu.len();
    if mu.iter().sum::<usize>() > shape.size() {
        return;
    }
    super::for_each_ssyt(shape, m as u32, |t| {
        let mut boxes: Vec<Vec<Cell>> = vec![Vec::new(); m];
        for (c, &v) in t.iter() {
            boxes[v as usize - 1].push(c);
        }
        let mut options = Vec::with_capacity(m);
        for (i, bs) in boxes.iter_mut().enumerate() {
            if bs.len() < mu[i] || (mu[i] == 0) != bs.is_empty() {
                return;
            }
            bs.sort_by_key(|c| c.col);
            let splits = consecutive_splits(bs.len(), mu[i], &|a, b| bs[a].row != bs[b].row);
            if splits.is_empty() {
                return;
            }
            options.push(splits);
        }
        let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
        for choice in Odometer::new(sizes) {
            let mut genes = Vec::new();
            for (i, &ci) in choice.iter().enumerate() {
                let mut start = 0;
                for &len in &options[i][ci] {
                    genes.push((i as u32 + 1, boxes[i][start..start + len].to_vec()));
                    start += len;
                }
            }
            f(&GenomicTableau::from_parts_unchecked(shape.clone(), genes));
        }
    });
}

/// Visit every genomic tableau of `shape` with entries at most `max`, for
/// every content.
pub fn for_each_genomic_upto(shape: &SkewShape, max: u32, mut f: impl FnMut(&GenomicTableau)) {
    let m = max as usize;
    super::for_each_ssyt(shape, max, |t| {
        let mut boxes: Vec<Vec<Cell>> = vec![Vec::new(); m];
        for (c, &v) in t.iter() {
            boxes[v as usize - 1].push(c);
        }
        let mut options = Vec::with_capacity(m);
        for bs in boxes.iter_mut() {
            bs.sort_by_key(|c| c.col);
            let splits: Vec<Vec<usize>> = if bs.is_empty() {
                vec![Vec::new()]
            } else {
                (1..=bs.len()).flat_map(|k| consecutive_splits(bs.len(), k, &|a, b| bs[a].row != bs[b].row)).collect()
            };
            options.push(splits);
        }
        let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
        for choice in Odometer::new(sizes) {
            let mut genes = Vec::new();
            for (i, &ci) in choice.iter().enumerate() {
                let mut start = 0;
                for &len in &options[i][ci] {
                    genes.push((i as u32 + 1, boxes[i][start..start + len].to_vec()));
                    start += len;
                }
            }
            f(&GenomicTableau::from_parts_unchecked(shape.clone(), genes));
        }
    });
}

/// All genomic tableaux of `shape` with content `mu`, in enumeration order.
pub fn enumerate_genomic(shape: &SkewShape, mu: &[usize]) -> Vec<GenomicTableau> {
    let mut out = Vec::new();
    for_each_genomic(shape, mu, |t| out.push(t.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_1_1() -> GenomicTableau {
        // red = 1, green = 2, blue = 3
        let shape = SkewShape::new("4,3,1".parse().unwrap(), "2".parse().unwrap()).unwrap();
        GenomicTableau::new(
            shape,
            [
                (Cell::new(1, 3), 1, 1),
                (Cell::new(1, 4), 2, 2),
                (Cell::new(2, 1), 1, 3),
                (Cell::new(2, 2), 1, 1),
                (Cell::new(2, 3), 2, 2),
                (Cell::new(3, 1), 2, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_content_and_genotypes() {
        let t = example_1_1();
        assert_eq!(t.content(), vec![2, 1]);
        assert_eq!(t.genotype_count(), 6);
        let mut seqs: Vec<String> = t
            .genotypes()
            .map(|g| t.genotype_seq(&g).iter().map(|v| v.to_string()).collect())
            .collect();
        seqs.sort();
        let mut expected = vec!["112", "112", "211", "121", "211", "211"];
        expected.sort();
        assert_eq!(seqs, expected);
        assert!(!t.is_ballot_with(BallotCheck::Exhaustive));
        assert!(!t.is_ballot_with(BallotCheck::Pruned));
    }

    #[test]
    fn canonical_gene_order() {
        let t = example_1_1();
        // family 1: (2,1) is west of the red gene
        assert_eq!(t.get(Cell::new(2, 1)).unwrap().gene, 1);
        assert_eq!(t.get(Cell::new(1, 3)).unwrap().gene, 2);
        assert_eq!(t.get(Cell::new(3, 1)).unwrap().gene, 3);
    }

    #[test]
    fn invalid_genes_are_rejected() {
        let shape = SkewShape::straight("2".parse().unwrap());
        let same_row = GenomicTableau::new(shape.clone(), [(Cell::new(1, 1), 1, 7), (Cell::new(1, 2), 1, 7)]);
        assert!(same_row.is_err());
        let shape = SkewShape::new("3,2,1".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
        // boxes of value 1 at columns 1, 2, 3 with labels a b a
        let gap = GenomicTableau::new(
            shape,
            [(Cell::new(1, 3), 1, 1), (Cell::new(2, 2), 1, 2), (Cell::new(3, 1), 1, 1)],
        );
        assert!(gap.is_err());
    }

    #[test]
    fn highest_weight_is_ballot() {
        for mu in ["3,1", "2,2,1", "1"] {
            let t = GenomicTableau::highest_weight(&mu.parse().unwrap());
            assert!(t.is_ballot());
            assert_eq!(t.content(), mu.parse::<Partition>().unwrap().parts());
        }
    }

    #[test]
    fn enumeration_edge_cases() {
        let row = SkewShape::straight("2".parse().unwrap());
        assert!(enumerate_genomic(&row, &[1]).is_empty());
        assert_eq!(enumerate_genomic(&row, &[2]).len(), 1);
        assert!(enumerate_genomic(&row, &[2, 1]).is_empty());
        let anti = SkewShape::new("3,2,1".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
        assert_eq!(enumerate_genomic(&anti, &[1, 1]).len(), 6);
        assert_eq!(enumerate_genomic(&anti, &[0, 1]).len(), 1);
    }

    #[test]
    fn enumeration_round_trips_through_validator() {
        let shape = SkewShape::new("4,3,2".parse().unwrap(), "2,1".parse().unwrap()).unwrap();
        for mu in [vec![2, 1], vec![3, 2], vec![2, 2, 1], vec![1, 1, 1]] {
            let all = enumerate_genomic(&shape, &mu);
            let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for t in &all {
                assert_eq!(t.content(), mu);
                let again = GenomicTableau::new(
                    shape.clone(),
                    t.iter().map(|(c, g)| (c, g.value, g.gene * 3 + 1)),
                )
                .unwrap();
                assert_eq!(&again, t);
                assert_eq!(t.is_ballot_with(BallotCheck::Exhaustive), t.is_ballot_with(BallotCheck::Pruned));
            }
        }
    }

    #[test]
    fn singleton_genes_match_classical_ballot() {
        let shape = SkewShape::new("3,2,1".parse().unwrap(), "1".parse().unwrap()).unwrap();
        super::super::for_each_ssyt(&shape, 3, |t| {
            let g = GenomicTableau::from_singletons(t).unwrap();
            assert_eq!(g.genotype_count(), 1);
            assert_eq!(g.is_ballot(), is_ballot_word(&super::super::seq(t)));
        });
    }

    #[test]
    fn odometer_counts() {
        assert_eq!(Odometer::new(vec![2, 3]).count(), 6);
        assert_eq!(Odometer::new(vec![]).count(), 1);
        assert_eq!(Odometer::new(vec![2, 0]).count(), 0);
    }
}

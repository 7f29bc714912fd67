//! Genomic P- and Q-tableaux of shifted skew shape.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{doubleseq, is_ballot_dword, DLetter};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, ShiftedSkewShape};
use crate::tableaux::{consecutive_splits, Filling, Genotype, Odometer, ShiftedIncreasingTableau};

pub type DFilling = Filling<ShiftedSkewShape, DLetter>;

/// Which row/column/diagonal rules a filling obeys and how genes may sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Every primed `k'` has an unprimed `k` weakly southwest of it; genes
    /// never repeat a row or column, and every primed box has a same-family
    /// box of another gene weakly southwest of it.
    P,
    /// No primes on the main diagonal; a gene may repeat a row or column
    /// only with different letters.
    Q,
}

/// Letter and gene id of one box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SGeneCell {
    pub letter: DLetter,
    pub gene: u32,
}

impl fmt::Display for SGeneCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.letter, self.gene)
    }
}

fn southwest_strict(c: Cell, b: Cell) -> bool {
    c != b && c.weakly_southwest_of(b)
}

/// Rows and columns weakly increase, no unprimed letter twice in a column,
/// no primed letter twice in a row, plus the kind's diagonal rule.
pub fn is_tableau(f: &DFilling, kind: Kind) -> bool {
    let shape = f.shape();
    for (c, &a) in f.iter() {
        if let Some(&b) = f.get(Cell::new(c.row, c.col + 1)) {
            if b < a || (a == b && a.primed) {
                return false;
            }
        }
        if let Some(&b) = f.get(Cell::new(c.row + 1, c.col)) {
            if b < a || (a == b && !a.primed) {
                return false;
            }
        }
        if a.primed {
            let ok = match kind {
                Kind::P => f.iter().any(|(d, &x)| x == DLetter::unprimed(a.value) && southwest_strict(d, c)),
                Kind::Q => !shape.is_diagonal(c),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Boxes of family `k` in ≺ order: primed boxes top to bottom, then
/// unprimed boxes left to right.
fn prec_order(boxes: &mut [(Cell, DLetter)]) {
    boxes.sort_by_key(|(c, a)| if a.primed { (0, c.row, c.col) } else { (1, c.col, c.row) });
}

fn may_share_gene(kind: Kind, (c, a): (Cell, DLetter), (d, b): (Cell, DLetter)) -> bool {
    let line = c.row == d.row || c.col == d.col;
    match kind {
        Kind::P => !line,
        Kind::Q => !(line && a == b),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftedGenomicTableau {
    kind: Kind,
    filling: Filling<ShiftedSkewShape, SGeneCell>,
    // genes[g - 1]: cells of gene g in ≺ order
    genes: Vec<Vec<Cell>>,
}

impl ShiftedGenomicTableau {
    /// Validate a filling with arbitrary gene labels; genes are renumbered
    /// by family and ≺ order.
    pub fn new(shape: ShiftedSkewShape, kind: Kind, cells: impl IntoIterator<Item = (Cell, DLetter, u32)>) -> Result<Self> {
        let mut labels = HashMap::new();
        let mut letters = Vec::new();
        for (c, a, g) in cells {
            letters.push((c, a));
            labels.insert(c, g);
        }
        let base = DFilling::from_cells(shape, letters)?;
        Self::from_labels(&base, kind, |c| labels[&c])
    }

    /// Attach genes to a P- or Q-tableau; `label` names each box's gene.
    pub fn from_labels(base: &DFilling, kind: Kind, label: impl Fn(Cell) -> u32) -> Result<Self> {
        if !is_tableau(base, kind) {
            return Err(Error::InvalidTableau(format!("not a {kind:?}-tableau")));
        }
        let mut families: BTreeMap<u32, Vec<(Cell, DLetter)>> = BTreeMap::new();
        for (c, &a) in base.iter() {
            families.entry(a.value).or_default().push((c, a));
        }
        let mut genes: Vec<Vec<Cell>> = Vec::new();
        let mut seen: HashMap<u32, u32> = HashMap::new();
        for (k, mut boxes) in families {
            prec_order(&mut boxes);
            let mut prev = None;
            let mut members: Vec<(Cell, DLetter)> = Vec::new();
            for (c, a) in boxes {
                let l = label(c);
                if prev != Some(l) {
                    if let Some(fam) = seen.insert(l, k) {
                        let msg = if fam != k {
                            format!("gene {l} mixes families {fam} and {k}")
                        } else {
                            format!("gene {l} is not consecutive in family {k}")
                        };
                        return Err(Error::InvalidTableau(msg));
                    }
                    genes.push(Vec::new());
                    members.clear();
                    prev = Some(l);
                }
                if let Some(&(d, _)) = members.iter().find(|&&m| !may_share_gene(kind, m, (c, a))) {
                    return Err(Error::InvalidTableau(format!("gene {l} has boxes {d} and {c} in one line")));
                }
                members.push((c, a));
                genes.last_mut().expect("pushed above").push(c);
            }
        }
        let t = Self::assemble(base, kind, genes);
        if kind == Kind::P {
            if let Some(c) = t.unsupported_primed_box() {
                return Err(Error::InvalidTableau(format!(
                    "primed box {c} has no box of another gene of its family weakly southwest"
                )));
            }
        }
        Ok(t)
    }

    /// Every box its own gene.
    pub fn from_singletons(base: &DFilling, kind: Kind) -> Result<Self> {
        Self::from_labels(base, kind, |c| (c.row * 10_000 + c.col) as u32)
    }

    fn assemble(base: &DFilling, kind: Kind, genes: Vec<Vec<Cell>>) -> Self {
        let mut gene_of = HashMap::new();
        for (g, cs) in genes.iter().enumerate() {
            for &c in cs {
                gene_of.insert(c, g as u32 + 1);
            }
        }
        let filling = base.map(|c, &letter| SGeneCell { letter, gene: gene_of[&c] });
        ShiftedGenomicTableau { kind, filling, genes }
    }

    /// A primed box with no same-family box of a different gene weakly
    /// southwest of it.
    fn unsupported_primed_box(&self) -> Option<Cell> {
        self.iter().find_map(|(b, x)| {
            let ok = !x.letter.primed
                || self.iter().any(|(c, y)| {
                    y.gene != x.gene && y.letter.value == x.letter.value && southwest_strict(c, b)
                });
            (!ok).then_some(b)
        })
    }

    /// The highest-weight tableau of shifted shape μ: row `i` holds `i`,
    /// every box its own gene.
    pub fn highest_weight(mu: &crate::shapes::StrictPartition) -> Self {
        let rows = mu.parts().iter().enumerate().map(|(i, &p)| vec![DLetter::unprimed(i as u32 + 1); p]).collect();
        let base = DFilling::from_rows(ShiftedSkewShape::straight(mu.clone()), rows).expect("straight shape");
        Self::from_singletons(&base, Kind::P).expect("highest weight tableau is valid")
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn shape(&self) -> &ShiftedSkewShape {
        self.filling.shape()
    }

    pub fn get(&self, c: Cell) -> Option<SGeneCell> {
        self.filling.get(c).copied()
    }

    pub fn letter(&self, c: Cell) -> Option<DLetter> {
        self.get(c).map(|x| x.letter)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, SGeneCell)> + '_ {
        self.filling.iter().map(|(c, &x)| (c, x))
    }

    pub fn filling(&self) -> &Filling<ShiftedSkewShape, SGeneCell> {
        &self.filling
    }

    pub fn letters(&self) -> DFilling {
        self.filling.map(|_, x| x.letter)
    }

    pub fn num_genes(&self) -> usize {
        self.genes.len()
    }

    /// Cells of gene `g` (1-based) in ≺ order.
    pub fn gene(&self, g: u32) -> &[Cell] {
        &self.genes[g as usize - 1]
    }

    pub fn family(&self, g: u32) -> u32 {
        self.letter(self.gene(g)[0]).expect("gene cell").value
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

    /// Each box replaced by its gene id.
    pub fn gene_ids(&self) -> ShiftedIncreasingTableau {
        self.filling.map(|_, x| x.gene)
    }

    /// Some gene holds both a primed and an unprimed letter.
    pub fn has_mixed_gene(&self) -> bool {
        self.genes.iter().any(|cs| {
            let primed = cs.iter().filter(|&&c| self.letter(c).expect("gene cell").primed).count();
            primed != 0 && primed != cs.len()
        })
    }

    /// Whether the same boxes and genes also form a genomic P-tableau.
    pub fn is_p_valid(&self) -> bool {
        self.kind == Kind::P
            || Self::from_labels(&self.letters(), Kind::P, |c| self.get(c).expect("cell").gene).is_ok()
    }

    /// The same tableau reinterpreted as the other kind, if valid.
    pub fn with_kind(&self, kind: Kind) -> Result<Self> {
        Self::from_labels(&self.letters(), kind, |c| self.get(c).expect("cell").gene)
    }

    pub fn genotypes(&self) -> impl Iterator<Item = Genotype> + '_ {
        let sizes: Vec<usize> = self.genes.iter().map(Vec::len).collect();
        Odometer::new(sizes).map(move |idx| Genotype {
            chosen: idx.iter().enumerate().map(|(g, &i)| self.genes[g][i]).collect(),
        })
    }

    pub fn genotype_count(&self) -> usize {
        self.genes.iter().map(Vec::len).product()
    }

    /// Reading word (rows top to bottom, each right to left) of a genotype.
    pub fn genotype_seq(&self, g: &Genotype) -> Vec<DLetter> {
        let mut cells = g.chosen.clone();
        cells.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
        cells.iter().map(|&c| self.letter(c).expect("chosen cell")).collect()
    }

    /// Every genotype's doubleseq is ballot.
    pub fn is_ballot(&self) -> bool {
        self.genotypes().all(|g| is_ballot_dword(&doubleseq(&self.genotype_seq(&g))))
    }
}

impl fmt::Display for ShiftedGenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.filling, f)
    }
}

impl fmt::Debug for ShiftedGenomicTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}\n{}", self.kind, self.shape(), self.filling)
    }
}

/// Visit every P- or Q-tableau of `shape` with letters at most `max`
/// (unprimed), in lexicographic row-major order.
pub fn for_each_ptableau(shape: &ShiftedSkewShape, kind: Kind, max: u32, mut f: impl FnMut(&DFilling)) {
    let cells = shape.cells();
    let mut vals: Vec<DLetter> = Vec::with_capacity(cells.len());
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    fn rec(
        shape: &ShiftedSkewShape,
        kind: Kind,
        max: u32,
        cells: &[Cell],
        index: &HashMap<Cell, usize>,
        vals: &mut Vec<DLetter>,
        f: &mut dyn FnMut(&DFilling),
    ) {
        let i = vals.len();
        if i == cells.len() {
            let filling = DFilling::from_cells(shape.clone(), cells.iter().copied().zip(vals.iter().copied()))
                .expect("every cell filled");
            if kind == Kind::Q || is_tableau(&filling, Kind::P) {
                f(&filling);
            }
            return;
        }
        let c = cells[i];
        let left = c.col.checked_sub(1).and_then(|col| index.get(&Cell::new(c.row, col))).map(|&j| vals[j]);
        let up = c.row.checked_sub(1).and_then(|row| index.get(&Cell::new(row, c.col))).map(|&j| vals[j]);
        let lo = left.into_iter().chain(up).map(DLetter::key).max().unwrap_or(1);
        for key in lo..=2 * max {
            let a = DLetter::from_key(key);
            if a.primed && (left == Some(a) || shape.is_diagonal(c)) {
                continue;
            }
            if !a.primed && up == Some(a) {
                continue;
            }
            vals.push(a);
            rec(shape, kind, max, cells, index, vals, f);
            vals.pop();
        }
    }
    rec(shape, kind, max, &cells, &index, &mut vals, &mut f);
}

/// Split each family of `base` into genes, `counts[k-1]` of them for family
/// `k`, or every possible number when `counts` is `None`.
fn for_each_gene_split(base: &DFilling, kind: Kind, counts: Option<&[usize]>, f: &mut dyn FnMut(&ShiftedGenomicTableau)) {
    let max = base.iter().map(|(_, a)| a.value).max().unwrap_or(0) as usize;
    let families = counts.map_or(max, |m| m.len().max(max));
    let mut boxes: Vec<Vec<(Cell, DLetter)>> = vec![Vec::new(); families];
    for (c, &a) in base.iter() {
        boxes[a.value as usize - 1].push((c, a));
    }
    let mut options = Vec::with_capacity(families);
    for (i, bs) in boxes.iter_mut().enumerate() {
        prec_order(bs);
        let join = |a: usize, b: usize| may_share_gene(kind, bs[a], bs[b]);
        let splits: Vec<Vec<usize>> = match counts {
            Some(m) => {
                let want = m.get(i).copied().unwrap_or(0);
                if bs.is_empty() != (want == 0) || bs.len() < want {
                    return;
                }
                if want == 0 {
                    vec![Vec::new()]
                } else {
                    consecutive_splits(bs.len(), want, &join)
                }
            }
            None if bs.is_empty() => vec![Vec::new()],
            None => (1..=bs.len()).flat_map(|k| consecutive_splits(bs.len(), k, &join)).collect(),
        };
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
                genes.push(boxes[i][start..start + len].iter().map(|&(c, _)| c).collect());
                start += len;
            }
        }
        let t = ShiftedGenomicTableau::assemble(base, kind, genes);
        if kind == Kind::Q || t.unsupported_primed_box().is_none() {
            f(&t);
        }
    }
}

/// Visit every genomic tableau of `kind`, shifted shape `shape` and content
/// `mu` (zero parts allowed).
pub fn for_each_shifted_genomic(shape: &ShiftedSkewShape, kind: Kind, mu: &[usize], mut f: impl FnMut(&ShiftedGenomicTableau)) {
    if mu.iter().sum::<usize>() > shape.size() {
        return;
    }
    for_each_ptableau(shape, kind, mu.len() as u32, |base| for_each_gene_split(base, kind, Some(mu), &mut f));
}

/// Visit every genomic tableau of `kind` and shape `shape` with letters at
/// most `max`, for every content.
pub fn for_each_shifted_genomic_upto(shape: &ShiftedSkewShape, kind: Kind, max: u32, mut f: impl FnMut(&ShiftedGenomicTableau)) {
    for_each_ptableau(shape, kind, max, |base| for_each_gene_split(base, kind, None, &mut f));
}

pub fn enumerate_shifted_genomic(shape: &ShiftedSkewShape, kind: Kind, mu: &[usize]) -> Vec<ShiftedGenomicTableau> {
    let mut out = Vec::new();
    for_each_shifted_genomic(shape, kind, mu, |t| out.push(t.clone()));
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn sshape(o: &str, i: &str) -> ShiftedSkewShape {
        ShiftedSkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    pub(crate) fn l(s: &str) -> DLetter {
        s.parse().unwrap()
    }

    /// Shape (6,4,1)/(4,2), content (2,1,1), two genotypes.
    pub(crate) fn two_genotype_example() -> ShiftedGenomicTableau {
        ShiftedGenomicTableau::new(
            sshape("6,4,1", "4,2"),
            Kind::P,
            [
                (Cell::new(1, 5), l("1'"), 1),
                (Cell::new(1, 6), l("2"), 3),
                (Cell::new(2, 4), l("1"), 2),
                (Cell::new(2, 5), l("2"), 3),
                (Cell::new(3, 3), l("3"), 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn tableau_rules() {
        let sh = sshape("3,1", "");
        let ok = DFilling::from_rows(sh.clone(), vec![vec![l("1"), l("2'"), l("3")], vec![l("2")]]).unwrap();
        assert!(is_tableau(&ok, Kind::P));
        let sh = sshape("4,2,1", "");
        let bad = vec![vec![l("2"), l("3'"), l("4"), l("4")], vec![l("3'"), l("6")], vec![l("7")]];
        // primes on the diagonal and no unprimed 3 southwest of either 3'
        assert!(!is_tableau(&DFilling::from_rows(sh.clone(), bad.clone()).unwrap(), Kind::P));
        let mut fixed = bad;
        fixed[1][0] = l("3");
        assert!(is_tableau(&DFilling::from_rows(sh, fixed).unwrap(), Kind::P));
    }

    #[test]
    fn gene_consecutiveness() {
        // ≺ order of the 1s: 1'(1,4), 1'(2,3), 1(3,3), 1(1,5)
        let sh = sshape("5,2,1", "3,1");
        let cells = |labels: [u32; 4]| {
            [
                (Cell::new(1, 4), l("1'"), labels[0]),
                (Cell::new(1, 5), l("1"), labels[1]),
                (Cell::new(2, 3), l("1'"), labels[2]),
                (Cell::new(3, 3), l("1"), labels[3]),
            ]
        };
        assert!(ShiftedGenomicTableau::new(sh.clone(), Kind::P, cells([3, 1, 1, 4])).is_err());
        assert!(ShiftedGenomicTableau::new(sh.clone(), Kind::P, cells([1, 2, 3, 4])).is_ok());
        assert!(ShiftedGenomicTableau::new(sh, Kind::P, cells([1, 2, 1, 2])).is_ok());
    }

    #[test]
    fn example_content_and_genotypes() {
        let t = two_genotype_example();
        assert_eq!(t.content(), vec![2, 1, 1]);
        assert_eq!(t.genotype_count(), 2);
        let mut seqs: Vec<String> =
            t.genotypes().map(|g| super::super::fmt_dword(&doubleseq(&t.genotype_seq(&g)))).collect();
        seqs.sort();
        assert_eq!(seqs, vec!["1' 2 1 3 4' 2' 3' 1", "2 1' 1 3 4' 2' 1 3'"]);
        assert!(!t.is_ballot());
    }

    #[test]
    fn enumeration_round_trips_through_validator() {
        let sh = sshape("4,3,1", "2");
        for kind in [Kind::P, Kind::Q] {
            for mu in [vec![2, 1], vec![3], vec![1, 1, 1], vec![2, 2]] {
                let all = enumerate_shifted_genomic(&sh, kind, &mu);
                let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                for t in &all {
                    assert_eq!(t.content(), mu);
                    let again =
                        ShiftedGenomicTableau::new(sh.clone(), kind, t.iter().map(|(c, x)| (c, x.letter, x.gene * 7)))
                            .unwrap();
                    assert_eq!(&again, t);
                }
            }
        }
    }

    #[test]
    fn p_tableaux_are_q_tableaux() {
        let sh = sshape("4,2,1", "1");
        for mu in [vec![2, 1], vec![1, 2], vec![3, 1]] {
            let q: std::collections::HashSet<_> = enumerate_shifted_genomic(&sh, Kind::Q, &mu)
                .into_iter()
                .map(|t| t.letters().iter().map(|(c, &a)| (c, a, t.get(c).unwrap().gene)).collect::<Vec<_>>())
                .collect();
            for t in enumerate_shifted_genomic(&sh, Kind::P, &mu) {
                let key: Vec<_> = t.letters().iter().map(|(c, &a)| (c, a, t.get(c).unwrap().gene)).collect();
                assert!(q.contains(&key));
            }
        }
    }
}

//! Partitions, skew and shifted skew shapes.
//!
//! Cells use 1-based `(row, col)` coordinates in English notation. Shifted
//! shapes use absolute columns: row `i` starts at column `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The (up to four) edge-adjacent cells with positive coordinates.
    pub fn neighbors(self) -> impl Iterator<Item = Cell> {
        let Cell { row, col } = self;
        let up = (row > 1).then(|| Cell::new(row - 1, col));
        let left = (col > 1).then(|| Cell::new(row, col - 1));
        [up, Some(Cell::new(row + 1, col)), left, Some(Cell::new(row, col + 1))]
            .into_iter()
            .flatten()
    }

    /// Weakly southwest of `other`: weakly below and weakly left.
    pub fn weakly_southwest_of(self, other: Cell) -> bool {
        self.row >= other.row && self.col <= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
        })
        .collect()
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return write!(f, "0");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `other ⊆ self` componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// All partitions contained in `self`, ordered by size and then in
    /// decreasing lexicographic order within a size.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(bound: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == bound.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in 0..=max.min(bound[i]) {
                cur.push(p);
                rec(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    /// The staircase `(n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        StrictPartition((1..=n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Part `k` is at most `n - k + 1`.
    pub fn fits_in_staircase(&self, n: usize) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i < n && p + i <= n)
    }

    /// All strict partitions contained in `self`, by size then decreasing lex.
    pub fn substrict(&self) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        fn rec(bound: &[usize], i: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition(cur.clone()));
            if i == bound.len() {
                return;
            }
            for p in 1..=bound[i].min(prev.saturating_sub(1)) {
                cur.push(p);
                rec(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// Geometry shared by ordinary and shifted skew shapes.
///
/// Rows are described by their lengths; row `r` of the outer shape covers
/// columns `row_start(r) .. row_start(r) + outer_len(r)`.
pub trait Diagram: Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + Send + Sync {
    const SHIFTED: bool;

    fn outer_parts(&self) -> &[usize];
    fn inner_parts(&self) -> &[usize];

    /// Rebuild a shape of this kind from row lengths (zeros allowed).
    fn from_parts(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self>;

    fn row_start(&self, row: usize) -> usize {
        if Self::SHIFTED {
            row
        } else {
            1
        }
    }

    fn num_rows(&self) -> usize {
        self.outer_parts().len()
    }

    /// Largest column index used by the outer shape.
    fn width(&self) -> usize {
        self.outer_parts().first().copied().unwrap_or(0)
    }

    fn outer_len(&self, row: usize) -> usize {
        self.outer_parts().get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    fn inner_len(&self, row: usize) -> usize {
        self.inner_parts().get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    fn in_outer(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= self.row_start(c.row) && c.col < self.row_start(c.row) + self.outer_len(c.row)
    }

    fn in_inner(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= self.row_start(c.row) && c.col < self.row_start(c.row) + self.inner_len(c.row)
    }

    /// Whether `c` is a cell of the skew shape.
    fn contains(&self, c: Cell) -> bool {
        self.in_outer(c) && !self.in_inner(c)
    }

    /// Skew cells in row-major order.
    fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.num_rows() {
            let s = self.row_start(r);
            for c in s + self.inner_len(r)..s + self.outer_len(r) {
                out.push(Cell::new(r, c));
            }
        }
        out
    }

    fn size(&self) -> usize {
        self.outer_parts().iter().sum::<usize>() - self.inner_parts().iter().sum::<usize>()
    }

    /// Maximally southeast cells of the inner shape.
    fn inner_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.inner_parts().len() {
            let len = self.inner_len(r);
            if len == 0 {
                continue;
            }
            let c = Cell::new(r, self.row_start(r) + len - 1);
            if !self.in_inner(Cell::new(r + 1, c.col)) {
                out.push(c);
            }
        }
        out
    }

    /// Cells of the outer shape whose removal leaves a valid outer shape.
    fn outer_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.num_rows() {
            let len = self.outer_len(r);
            if len == 0 {
                continue;
            }
            let c = Cell::new(r, self.row_start(r) + len - 1);
            if !self.in_outer(Cell::new(r + 1, c.col)) {
                out.push(c);
            }
        }
        out
    }

    fn is_diagonal(&self, c: Cell) -> bool {
        Self::SHIFTED && c.row == c.col
    }

    fn is_straight(&self) -> bool {
        self.inner_parts().is_empty()
    }
}

/// An ordinary skew shape `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// True iff no column contains two cells.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|r| self.outer.part(r + 1) <= self.inner.part(r))
    }
}

impl Diagram for SkewShape {
    const SHIFTED: bool = false;

    fn outer_parts(&self) -> &[usize] {
        self.outer.parts()
    }

    fn inner_parts(&self) -> &[usize] {
        self.inner.parts()
    }

    fn from_parts(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// A shifted skew shape `outer / inner` of strict partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedSkewShape {
    pub outer: StrictPartition,
    pub inner: StrictPartition,
}

impl ShiftedSkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn straight(outer: StrictPartition) -> Self {
        ShiftedSkewShape { outer, inner: StrictPartition::empty() }
    }
}

impl Diagram for ShiftedSkewShape {
    const SHIFTED: bool = true;

    fn outer_parts(&self) -> &[usize] {
        self.outer.parts()
    }

    fn inner_parts(&self) -> &[usize] {
        self.inner.parts()
    }

    fn from_parts(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self> {
        ShiftedSkewShape::new(StrictPartition::new(outer)?, StrictPartition::new(inner)?)
    }
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "shifted ({})/({})", self.outer, self.inner)
    }
}

/// `(μ1+λ1, …, μ1+λℓ, μ1, …, μℓ(μ)) / (μ1^ℓ(λ))`: λ sits northeast of μ.
pub fn star_shape(mu: &Partition, lambda: &Partition) -> SkewShape {
    let m1 = mu.part(1);
    let mut outer: Vec<usize> = lambda.parts().iter().map(|l| l + m1).collect();
    outer.extend_from_slice(mu.parts());
    let inner = vec![m1; lambda.len()];
    SkewShape::from_parts(outer, inner).expect("star shape is a valid skew shape")
}

/// Lattice-path encoding of `λ ⊆ k × (n-k)`.
///
/// Walk from the upper-right corner of the rectangle to the lower-left
/// corner along the boundary of λ, writing 0 for a step left and 1 for a
/// step down.
pub fn boundary_string(lambda: &Partition, k: usize, n: usize) -> Result<String> {
    if k > n || !lambda.fits_in(k, n - k) {
        return Err(Error::ShapeTooLarge {
            shape: lambda.to_string(),
            rows: k,
            cols: n.saturating_sub(k),
        });
    }
    let mut out = String::with_capacity(n);
    let mut x = n - k;
    for i in 1..=k {
        while x > lambda.part(i) {
            out.push('0');
            x -= 1;
        }
        out.push('1');
    }
    while x > 0 {
        out.push('0');
        x -= 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(p("3,2,1").parts(), &[3, 2, 1]);
        assert!(p("").is_empty());
        assert!(p("0").is_empty());
        assert_eq!(p("2,1,0,0").parts(), &[2, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,1,x".parse::<Partition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert_eq!(p("").to_string(), "0");
    }

    #[test]
    fn skew_cells_in_row_major_order() {
        let s = SkewShape::new(p("3,2,1"), p("2,1")).unwrap();
        assert_eq!(s.cells(), vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        let e = SkewShape::new(p("2,1"), p("2,1")).unwrap();
        assert!(e.cells().is_empty());
        let t = ShiftedSkewShape::new(sp("5,3,1"), sp("3,1")).unwrap();
        assert_eq!(
            t.cells(),
            vec![Cell::new(1, 4), Cell::new(1, 5), Cell::new(2, 3), Cell::new(2, 4), Cell::new(3, 3)]
        );
    }

    #[test]
    fn star_shape_examples() {
        let s = star_shape(&p("3,1"), &p("2,2"));
        assert_eq!((s.outer.parts(), s.inner.parts()), (&[5, 5, 3, 1][..], &[3, 3][..]));
        let s = star_shape(&p("1,1"), &p("2,1"));
        assert_eq!((s.outer.parts(), s.inner.parts()), (&[3, 2, 1, 1][..], &[1, 1][..]));
        let s = star_shape(&p(""), &p("2"));
        assert_eq!((s.outer.parts(), s.inner.parts()), (&[2][..], &[][..]));
    }

    #[test]
    fn boundary_strings() {
        assert_eq!(boundary_string(&p("3,2"), 2, 6).unwrap(), "010100");
        assert_eq!(boundary_string(&p(""), 2, 6).unwrap(), "000011");
        assert_eq!(boundary_string(&p("1"), 1, 2).unwrap(), "10");
        assert!(boundary_string(&p("5"), 2, 6).is_err());
        assert!(boundary_string(&p("1,1,1"), 2, 6).is_err());
    }

    #[test]
    fn boundary_string_is_injective_with_k_ones() {
        let all = Partition::new(vec![4, 4]).unwrap().subpartitions();
        let strings: std::collections::BTreeSet<String> =
            all.iter().map(|l| boundary_string(l, 2, 6).unwrap()).collect();
        assert_eq!(strings.len(), all.len());
        assert!(strings.iter().all(|s| s.chars().filter(|&c| c == '1').count() == 2));
    }

    #[test]
    fn horizontal_strips() {
        assert!(SkewShape::new(p("2,1"), p("1")).unwrap().is_horizontal_strip());
        assert!(!SkewShape::straight(p("2,2")).is_horizontal_strip());
        assert!(SkewShape::new(p("4,2"), p("2")).unwrap().is_horizontal_strip());
    }

    #[test]
    fn corners() {
        let s = SkewShape::new(p("4,4,3,1"), p("3,2")).unwrap();
        assert_eq!(s.inner_corners(), vec![Cell::new(1, 3), Cell::new(2, 2)]);
        assert!(SkewShape::straight(p("2")).inner_corners().is_empty());
        let t = ShiftedSkewShape::new(sp("5,3,1"), sp("3,1")).unwrap();
        assert_eq!(t.inner_corners(), vec![Cell::new(1, 3), Cell::new(2, 2)]);
        let u = ShiftedSkewShape::new(sp("3,2"), sp("3,2")).unwrap();
        assert_eq!(u.inner_corners(), vec![Cell::new(2, 3)]);
    }

    #[test]
    fn subpartition_counts() {
        // Partitions in an a×b box number C(a+b, a).
        assert_eq!(p("3,3,3").subpartitions().len(), 20);
        assert_eq!(p("2,2").subpartitions().len(), 6);
        assert_eq!(StrictPartition::staircase(4).substrict().len(), 16);
        assert!(StrictPartition::staircase(4).fits_in_staircase(4));
        assert!(!sp("4").fits_in_staircase(3));
    }

    #[test]
    fn star_shape_cell_count() {
        for mu in p("3,2").subpartitions() {
            for lambda in p("2,2,1").subpartitions() {
                assert_eq!(star_shape(&mu, &lambda).size(), mu.size() + lambda.size());
            }
        }
    }
}

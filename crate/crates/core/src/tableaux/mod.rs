//! Fillings of skew shapes: semistandard, increasing, set-valued and genomic
//! tableaux, together with reading words and ballot tests.

mod enumerate;
mod genomic;
mod setvalued;

pub use enumerate::{enumerate_increasing, enumerate_ssyt, for_each_increasing, for_each_increasing_onto, for_each_ssyt};
pub(crate) use genomic::{all_genotypes_ballot, consecutive_splits, Odometer};
pub use genomic::{enumerate_genomic, for_each_genomic, for_each_genomic_upto, BallotCheck, GeneCell, GenomicTableau, Genotype};
pub use setvalued::{colword, enumerate_setvalued, SetValuedTableau};

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition, ShiftedSkewShape, SkewShape, StrictPartition};

/// Values stored cell by cell over a skew shape. Every cell of the skew
/// shape is filled; cells outside it are empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling<D: Diagram, V> {
    shape: D,
    width: usize,
    data: Vec<Option<V>>,
}

/// An integer filling (semistandard or increasing depending on context).
pub type Tableau<D = SkewShape> = Filling<D, u32>;
pub type IncreasingTableau = Tableau<SkewShape>;
pub type ShiftedIncreasingTableau = Tableau<ShiftedSkewShape>;

impl<D: Diagram, V> Filling<D, V> {
    fn empty(shape: D) -> Self {
        let width = shape.width();
        let rows = shape.num_rows();
        let mut data = Vec::with_capacity(rows * width);
        data.resize_with(rows * width, || None);
        Filling { shape, width, data }
    }

    fn index(&self, c: Cell) -> Option<usize> {
        (c.row >= 1 && c.col >= 1 && c.row <= self.shape.num_rows() && c.col <= self.width)
            .then(|| (c.row - 1) * self.width + c.col - 1)
    }

    /// Build from `(cell, value)` pairs covering every skew cell exactly once.
    pub fn from_cells(shape: D, cells: impl IntoIterator<Item = (Cell, V)>) -> Result<Self> {
        let mut f = Filling::empty(shape);
        let mut n = 0;
        for (c, v) in cells {
            if !f.shape.contains(c) {
                return Err(Error::InvalidTableau(format!("cell {c} is not in the shape")));
            }
            let i = f.index(c).expect("contained cells are in range");
            if f.data[i].replace(v).is_some() {
                return Err(Error::InvalidTableau(format!("cell {c} filled twice")));
            }
            n += 1;
        }
        if n != f.shape.size() {
            return Err(Error::InvalidTableau("not every cell is filled".into()));
        }
        Ok(f)
    }

    /// Build from rows of values listed left to right over the skew cells.
    pub fn from_rows(shape: D, rows: Vec<Vec<V>>) -> Result<Self> {
        let mut cells = Vec::new();
        if rows.len() > shape.num_rows() && rows[shape.num_rows()..].iter().any(|r| !r.is_empty()) {
            return Err(Error::InvalidTableau("too many rows".into()));
        }
        for (i, row) in rows.into_iter().enumerate() {
            let r = i + 1;
            let start = shape.row_start(r) + shape.inner_len(r);
            let len = shape.outer_len(r) - shape.inner_len(r);
            if row.len() != len {
                return Err(Error::InvalidTableau(format!("row {r} needs {len} entries")));
            }
            cells.extend(row.into_iter().enumerate().map(|(j, v)| (Cell::new(r, start + j), v)));
        }
        Filling::from_cells(shape, cells)
    }

    pub fn shape(&self) -> &D {
        &self.shape
    }

    pub fn get(&self, c: Cell) -> Option<&V> {
        self.index(c).and_then(|i| self.data[i].as_ref())
    }

    /// Cells with their values in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, &V)> + '_ {
        self.data.iter().enumerate().filter_map(move |(i, v)| {
            v.as_ref().map(|v| (Cell::new(i / self.width + 1, i % self.width + 1), v))
        })
    }

    pub fn map<W>(&self, mut f: impl FnMut(Cell, &V) -> W) -> Filling<D, W> {
        let mut out = Filling::empty(self.shape.clone());
        for (c, v) in self.iter() {
            let i = out.index(c).expect("same shape");
            out.data[i] = Some(f(c, v));
        }
        out
    }

    /// Values in reading order: rows top to bottom, each right to left.
    pub fn reading_word(&self) -> Vec<V>
    where
        V: Clone,
    {
        let mut w = Vec::with_capacity(self.shape.size());
        for r in 1..=self.shape.num_rows() {
            for c in (1..=self.width).rev() {
                if let Some(v) = self.get(Cell::new(r, c)) {
                    w.push(v.clone());
                }
            }
        }
        w
    }
}

impl<D: Diagram> Tableau<D> {
    pub fn max_entry(&self) -> u32 {
        self.iter().map(|(_, &v)| v).max().unwrap_or(0)
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.iter().all(|(c, &v)| {
            v >= 1
                && self.get(Cell::new(c.row, c.col + 1)).is_none_or(|&w| v <= w)
                && self.get(Cell::new(c.row + 1, c.col)).is_none_or(|&w| v < w)
        })
    }

    /// Rows and columns strictly increase.
    pub fn is_increasing(&self) -> bool {
        self.iter().all(|(c, &v)| {
            v >= 1
                && self.get(Cell::new(c.row, c.col + 1)).is_none_or(|&w| v < w)
                && self.get(Cell::new(c.row + 1, c.col)).is_none_or(|&w| v < w)
        })
    }

    /// Every value in `1..=max_entry` occurs.
    pub fn uses_initial_segment(&self) -> bool {
        let m = self.max_entry() as usize;
        let mut seen = vec![false; m + 1];
        for (_, &v) in self.iter() {
            seen[v as usize] = true;
        }
        seen[1..].iter().all(|&s| s)
    }
}

fn fmt_grid<D: Diagram, V>(f: &Filling<D, V>, out: &mut fmt::Formatter<'_>, cell: impl Fn(&V) -> String) -> fmt::Result {
    for r in 1..=f.shape.num_rows() {
        let mut parts = Vec::new();
        for _ in 1..f.shape.row_start(r) {
            parts.push(" ".to_string());
        }
        let s = f.shape.row_start(r);
        for c in s..s + f.shape.outer_len(r) {
            let c = Cell::new(r, c);
            parts.push(match f.get(c) {
                Some(v) => cell(v),
                None => ".".to_string(),
            });
        }
        writeln!(out, "{}", parts.join(" "))?;
    }
    Ok(())
}

impl<D: Diagram, V: fmt::Display> fmt::Display for Filling<D, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_grid(self, f, |v| v.to_string())
    }
}

impl<D: Diagram, V: fmt::Debug> fmt::Debug for Filling<D, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?}", self.shape)?;
        fmt_grid(self, f, |v| format!("{v:?}"))
    }
}

/// The row reading word of an integer filling.
pub fn seq<D: Diagram>(t: &Tableau<D>) -> Vec<u32> {
    t.reading_word()
}

/// Every prefix has at least as many `i`s as `(i+1)`s.
pub fn is_ballot_word(w: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in w {
        let v = v as usize;
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return false;
        }
    }
    true
}

/// Every suffix has partition content.
pub fn is_reverse_lattice(w: &[u32]) -> bool {
    let rev: Vec<u32> = w.iter().rev().copied().collect();
    is_ballot_word(&rev)
}

/// The superstandard tableau of shape μ: row `i` holds the next `μ_i`
/// consecutive integers.
pub fn superstandard(mu: &Partition) -> IncreasingTableau {
    let mut next = 0;
    let rows = mu
        .parts()
        .iter()
        .map(|&p| {
            (0..p)
                .map(|_| {
                    next += 1;
                    next
                })
                .collect()
        })
        .collect();
    Tableau::from_rows(SkewShape::straight(mu.clone()), rows).expect("superstandard shape")
}

/// The shifted superstandard tableau of shifted shape μ.
pub fn shifted_superstandard(mu: &StrictPartition) -> ShiftedIncreasingTableau {
    let mut next = 0;
    let rows = mu
        .parts()
        .iter()
        .map(|&p| {
            (0..p)
                .map(|_| {
                    next += 1;
                    next
                })
                .collect()
        })
        .collect();
    Tableau::from_rows(ShiftedSkewShape::straight(mu.clone()), rows).expect("superstandard shape")
}

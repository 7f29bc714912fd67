//! Set-valued tableaux and their column reading words.

use std::fmt;

use super::{is_reverse_lattice, Filling};
use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, SkewShape};

/// A filling of a skew shape by nonempty sets of positive integers such that
/// every choice of one label per box is semistandard.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    filling: Filling<SkewShape, Vec<u32>>,
}

impl SetValuedTableau {
    pub fn new(shape: SkewShape, cells: impl IntoIterator<Item = (Cell, Vec<u32>)>) -> Result<Self> {
        let cells = cells.into_iter().map(|(c, mut s)| {
            s.sort_unstable();
            s.dedup();
            (c, s)
        });
        let filling = Filling::from_cells(shape, cells)?;
        let t = SetValuedTableau { filling };
        if t.filling.iter().any(|(_, s)| s.is_empty() || s[0] == 0) {
            return Err(Error::InvalidTableau("empty or zero label set".into()));
        }
        if !t.is_semistandard() {
            return Err(Error::InvalidTableau("label sets violate row/column conditions".into()));
        }
        Ok(t)
    }

    fn is_semistandard(&self) -> bool {
        self.filling.iter().all(|(c, s)| {
            let hi = *s.last().expect("nonempty");
            self.filling.get(Cell::new(c.row, c.col + 1)).is_none_or(|t| hi <= t[0])
                && self.filling.get(Cell::new(c.row + 1, c.col)).is_none_or(|t| hi < t[0])
        })
    }

    pub fn shape(&self) -> &SkewShape {
        self.filling.shape()
    }

    pub fn get(&self, c: Cell) -> Option<&[u32]> {
        self.filling.get(c).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, &[u32])> + '_ {
        self.filling.iter().map(|(c, s)| (c, s.as_slice()))
    }

    /// Number of occurrences of each label, trailing zeros removed.
    pub fn content(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (_, s) in self.iter() {
            for &v in s {
                if out.len() < v as usize {
                    out.resize(v as usize, 0);
                }
                out[v as usize - 1] += 1;
            }
        }
        out
    }
}

impl fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.filling.map(|_, s| {
            if s.len() == 1 {
                s[0].to_string()
            } else {
                format!("{{{}}}", s.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            }
        });
        fmt::Display::fmt(&shown, f)
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\n{}", self.shape(), self)
    }
}

/// Column reading word: columns left to right, each read bottom to top,
/// labels within a box in increasing order.
pub fn colword(t: &SetValuedTableau) -> Vec<u32> {
    let shape = t.shape();
    let mut w = Vec::new();
    for c in 1..=shape.width() {
        for r in (1..=shape.num_rows()).rev() {
            if let Some(s) = t.get(Cell::new(r, c)) {
                w.extend_from_slice(s);
            }
        }
    }
    w
}

/// All set-valued tableaux of `shape` whose label multiset is `content`
/// (label `i` used `content[i-1]` times), optionally keeping only those with
/// a reverse-lattice column word.
pub fn enumerate_setvalued(shape: &SkewShape, content: &[usize], reverse_lattice_only: bool) -> Vec<SetValuedTableau> {
    let labels = content.len();
    let total: usize = content.iter().sum();
    let ncells = shape.size();
    let mut out = Vec::new();
    if total < ncells || labels > 16 {
        return out;
    }
    let mut subsets: Vec<Vec<u32>> = (1u32..(1 << labels))
        .map(|m| (0..labels as u32).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect())
        .collect();
    subsets.sort();
    let cells = shape.cells();
    let mut work: Filling<SkewShape, Vec<u32>> = Filling::empty(shape.clone());
    let mut remaining = content.to_vec();
    rec(0, &cells, &subsets, &mut work, &mut remaining, total, labels, reverse_lattice_only, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn rec(
    i: usize,
    cells: &[Cell],
    subsets: &[Vec<u32>],
    work: &mut Filling<SkewShape, Vec<u32>>,
    remaining: &mut [usize],
    left: usize,
    labels: usize,
    reverse_lattice_only: bool,
    out: &mut Vec<SetValuedTableau>,
) {
    let cells_left = cells.len() - i;
    if left < cells_left || left > cells_left * labels {
        return;
    }
    if i == cells.len() {
        let t = SetValuedTableau { filling: work.clone() };
        if !reverse_lattice_only || is_reverse_lattice(&colword(&t)) {
            out.push(t);
        }
        return;
    }
    let c = cells[i];
    let left_max = work.get(Cell::new(c.row, c.col.wrapping_sub(1))).map_or(0, |s| *s.last().expect("nonempty"));
    let above_max = if c.row > 1 {
        work.get(Cell::new(c.row - 1, c.col)).map_or(0, |s| *s.last().expect("nonempty"))
    } else {
        0
    };
    let lo = left_max.max(above_max + 1);
    let idx = work.index(c).expect("cell in range");
    for s in subsets {
        if s[0] < lo || s.iter().any(|&v| remaining[v as usize - 1] == 0) {
            continue;
        }
        for &v in s {
            remaining[v as usize - 1] -= 1;
        }
        work.data[idx] = Some(s.clone());
        rec(i + 1, cells, subsets, work, remaining, left - s.len(), labels, reverse_lattice_only, out);
        for &v in s {
            remaining[v as usize - 1] += 1;
        }
    }
    work.data[idx] = None;
}

//! K-theoretic puzzles: tilings of a side-`n` triangle by unit triangles,
//! rhombi and a fixed-orientation K-piece, with boundaries read from
//! partitions.
//!
//! Grid conventions: row `r = 0..n` counts from the apex. Row `r` holds up
//! triangles `(r, 0..=r)` and down triangles `(r, 0..r)`, with down `(r, j)`
//! between up `(r, j)` and up `(r, j+1)`. Every edge belongs to exactly one up
//! triangle: its bottom `H`, its left side `L` (`/`) or its right side `R`
//! (`\`). Down `(r, j)` has top `H(r-1, j)`, left `R(r, j)` and right
//! `L(r, j+1)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{boundary_string, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeKind {
    H,
    L,
    R,
}

/// An edge, named by the up triangle `(row, pos)` it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub kind: EdgeKind,
    pub row: usize,
    pub pos: usize,
}

/// Edge of a K-piece relative to its top-left down triangle `(r, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeOffset {
    pub kind: EdgeKind,
    pub drow: isize,
    pub dpos: isize,
}

/// The non-rotatable piece: a side-2 downward triangle covering down
/// `(r, j)`, up `(r, j+1)`, down `(r, j+1)` and down `(r+1, j+1)`, with
/// prescribed labels on its six boundary edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPiece {
    pub boundary: Vec<(EdgeOffset, u8)>,
}

const fn off(kind: EdgeKind, drow: isize, dpos: isize) -> EdgeOffset {
    EdgeOffset { kind, drow, dpos }
}

/// Top `0 1`, left side `1` over `0`, right side `0` over `1`.
const K_PIECE_BOUNDARY: [(EdgeOffset, u8); 6] = [
    (off(EdgeKind::H, -1, 0), 0),
    (off(EdgeKind::H, -1, 1), 1),
    (off(EdgeKind::R, 0, 0), 1),
    (off(EdgeKind::R, 1, 1), 0),
    (off(EdgeKind::L, 0, 2), 0),
    (off(EdgeKind::L, 1, 2), 1),
];

impl Default for KPiece {
    fn default() -> Self {
        KPiece { boundary: K_PIECE_BOUNDARY.to_vec() }
    }
}

/// The piece data used by the filler.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PieceSet {
    pub k_piece: KPiece,
}

/// The three boundary strings of a puzzle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundarySpec {
    /// Read bottom to top along the left side.
    pub left: String,
    /// Read top to bottom along the right side.
    pub right: String,
    /// Read left to right along the bottom.
    pub bottom: String,
}

impl BoundarySpec {
    pub fn new(left: &str, right: &str, bottom: &str) -> Result<Self> {
        let n = left.len();
        if right.len() != n || bottom.len() != n {
            return Err(Error::Malformed("boundary strings differ in length".into()));
        }
        if [left, right, bottom].iter().any(|s| s.bytes().any(|b| b != b'0' && b != b'1')) {
            return Err(Error::Malformed("boundary strings must be binary".into()));
        }
        Ok(BoundarySpec { left: left.into(), right: right.into(), bottom: bottom.into() })
    }

    pub fn side(&self) -> usize {
        self.left.len()
    }
}

/// Boundary of the puzzle computing the coefficient of `ν` in the product of
/// the classes of `λ` and `μ` on `Gr_k(C^n)`.
pub fn delta_boundary(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize, n: usize) -> Result<BoundarySpec> {
    BoundarySpec::new(&boundary_string(lambda, k, n)?, &boundary_string(mu, k, n)?, &boundary_string(nu, k, n)?)
}

/// What covers a unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tile {
    Zero,
    One,
    Rhombus,
    K,
}

impl Tile {
    fn glyph(self) -> char {
        match self {
            Tile::Zero => '0',
            Tile::One => '1',
            Tile::Rhombus => 'g',
            Tile::K => 'K',
        }
    }
}

/// A completed filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Puzzle {
    pub side: usize,
    /// `up[r][j]` and `down[r][j]` give the tile of each unit triangle.
    pub up: Vec<Vec<Tile>>,
    pub down: Vec<Vec<Tile>>,
}

impl Puzzle {
    pub fn k_pieces(&self) -> usize {
        self.down.iter().flatten().filter(|&&t| t == Tile::K).count() / 3
    }
}

/// One character per unit triangle, rows centred.
impl fmt::Display for Puzzle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.side {
            let mut line = " ".repeat(self.side - 1 - r);
            for j in 0..=r {
                line.push(self.up[r][j].glyph());
                if j < r {
                    line.push(self.down[r][j].glyph());
                }
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Unit {
    Up(usize, usize),
    Down(usize, usize),
}

/// Units covered, the tile, and the edge labels it fixes.
type Placement = (Vec<Unit>, Tile, Vec<(Edge, u8)>);

struct Filler<'a> {
    n: usize,
    pieces: &'a PieceSet,
    labels: Vec<Option<u8>>,
    up: Vec<Vec<Option<Tile>>>,
    down: Vec<Vec<Option<Tile>>>,
    order: Vec<Unit>,
}

impl Filler<'_> {
    fn edge_index(&self, e: Edge) -> usize {
        let kind = match e.kind {
            EdgeKind::H => 0,
            EdgeKind::L => 1,
            EdgeKind::R => 2,
        };
        3 * (e.row * (e.row + 1) / 2 + e.pos) + kind
    }

    fn edge(kind: EdgeKind, row: usize, pos: usize) -> Edge {
        Edge { kind, row, pos }
    }

    /// Assign labels, returning the edges newly set, or `None` on conflict
    /// (after undoing its own assignments).
    fn assign(&mut self, want: &[(Edge, u8)]) -> Option<Vec<usize>> {
        let mut set = Vec::new();
        for &(e, l) in want {
            let i = self.edge_index(e);
            match self.labels[i] {
                Some(x) if x != l => {
                    self.unassign(&set);
                    return None;
                }
                Some(_) => {}
                None => {
                    self.labels[i] = Some(l);
                    set.push(i);
                }
            }
        }
        Some(set)
    }

    fn unassign(&mut self, set: &[usize]) {
        for &i in set {
            self.labels[i] = None;
        }
    }

    fn up_edges(r: usize, j: usize) -> [Edge; 3] {
        [Self::edge(EdgeKind::H, r, j), Self::edge(EdgeKind::L, r, j), Self::edge(EdgeKind::R, r, j)]
    }

    fn down_edges(r: usize, j: usize) -> [Edge; 3] {
        [Self::edge(EdgeKind::H, r - 1, j), Self::edge(EdgeKind::R, r, j), Self::edge(EdgeKind::L, r, j + 1)]
    }

    fn free(&self, u: Unit) -> bool {
        match u {
            Unit::Up(r, j) => r < self.n && j <= r && self.up[r][j].is_none(),
            Unit::Down(r, j) => r < self.n && r >= 1 && j < r && self.down[r][j].is_none(),
        }
    }

    fn put(&mut self, u: Unit, t: Option<Tile>) {
        match u {
            Unit::Up(r, j) => self.up[r][j] = t,
            Unit::Down(r, j) => self.down[r][j] = t,
        }
    }

    /// Candidate placements whose first unit (in search order) is `u`.
    fn candidates(&self, u: Unit) -> Vec<Placement> {
        let mut out = Vec::new();
        let edges = match u {
            Unit::Up(r, j) => Self::up_edges(r, j),
            Unit::Down(r, j) => Self::down_edges(r, j),
        };
        for (tile, l) in [(Tile::Zero, 0u8), (Tile::One, 1u8)] {
            out.push((vec![u], tile, edges.iter().map(|&e| (e, l)).collect()));
        }
        let e = Self::edge;
        match u {
            Unit::Up(r, j) => {
                // across the right side: internal `\`, so `H` edges are 1 and `/` edges 0
                let d = Unit::Down(r, j);
                if self.free(d) {
                    out.push((
                        vec![u, d],
                        Tile::Rhombus,
                        vec![(e(EdgeKind::H, r, j), 1), (e(EdgeKind::L, r, j), 0), (e(EdgeKind::H, r - 1, j), 1), (e(EdgeKind::L, r, j + 1), 0)],
                    ));
                }
                // across the bottom: internal `-`, so `/` edges are 1 and `\` edges 0
                let d = Unit::Down(r + 1, j);
                if self.free(d) {
                    out.push((
                        vec![u, d],
                        Tile::Rhombus,
                        vec![(e(EdgeKind::L, r, j), 1), (e(EdgeKind::R, r, j), 0), (e(EdgeKind::R, r + 1, j), 0), (e(EdgeKind::L, r + 1, j + 1), 1)],
                    ));
                }
            }
            Unit::Down(r, j) => {
                // across the right side: internal `/`, so `\` edges are 1 and `H` edges 0
                let v = Unit::Up(r, j + 1);
                if self.free(v) {
                    out.push((
                        vec![u, v],
                        Tile::Rhombus,
                        vec![(e(EdgeKind::H, r - 1, j), 0), (e(EdgeKind::R, r, j), 1), (e(EdgeKind::R, r, j + 1), 1), (e(EdgeKind::H, r, j + 1), 0)],
                    ));
                }
                let foot = [Unit::Down(r, j), Unit::Up(r, j + 1), Unit::Down(r, j + 1), Unit::Down(r + 1, j + 1)];
                if foot.iter().all(|&f| self.free(f)) {
                    let labels: Option<Vec<(Edge, u8)>> = self
                        .pieces
                        .k_piece
                        .boundary
                        .iter()
                        .map(|(o, l)| {
                            let row = r as isize + o.drow;
                            let pos = j as isize + o.dpos;
                            (row >= 0 && pos >= 0 && pos <= row).then(|| (e(o.kind, row as usize, pos as usize), *l))
                        })
                        .collect();
                    if let Some(labels) = labels {
                        out.push((foot.to_vec(), Tile::K, labels));
                    }
                }
            }
        }
        out
    }

    fn search(&mut self, idx: usize, f: &mut dyn FnMut(&Puzzle)) {
        let Some(pos) = (idx..self.order.len()).find(|&i| self.free(self.order[i])) else {
            let p = Puzzle {
                side: self.n,
                up: self.up.iter().map(|row| row.iter().map(|t| t.expect("covered")).collect()).collect(),
                down: self.down.iter().map(|row| row.iter().map(|t| t.expect("covered")).collect()).collect(),
            };
            f(&p);
            return;
        };
        let u = self.order[pos];
        for (units, tile, labels) in self.candidates(u) {
            let Some(set) = self.assign(&labels) else { continue };
            for &v in &units {
                self.put(v, Some(tile));
            }
            self.search(pos + 1, f);
            for &v in &units {
                self.put(v, None);
            }
            self.unassign(&set);
        }
    }
}

/// Visit every K-puzzle with boundary `b`, in a fixed deterministic order.
pub fn for_each_k_puzzle(b: &BoundarySpec, pieces: &PieceSet, mut f: impl FnMut(&Puzzle)) {
    let n = b.side();
    if n == 0 {
        return;
    }
    let mut filler = Filler {
        n,
        pieces,
        labels: vec![None; 3 * n * (n + 1) / 2],
        up: (0..n).map(|r| vec![None; r + 1]).collect(),
        down: (0..n).map(|r| vec![None; r]).collect(),
        order: Vec::new(),
    };
    for r in 0..n {
        for j in 0..=r {
            filler.order.push(Unit::Up(r, j));
            if j < r {
                filler.order.push(Unit::Down(r, j));
            }
        }
    }
    let bit = |s: &str, i: usize| s.as_bytes()[i] - b'0';
    for i in 0..n {
        // left side bottom to top: L(n-1-i, 0)
        let e = filler.edge_index(Filler::edge(EdgeKind::L, n - 1 - i, 0));
        filler.labels[e] = Some(bit(&b.left, i));
        let e = filler.edge_index(Filler::edge(EdgeKind::R, i, i));
        filler.labels[e] = Some(bit(&b.right, i));
        let e = filler.edge_index(Filler::edge(EdgeKind::H, n - 1, i));
        filler.labels[e] = Some(bit(&b.bottom, i));
    }
    filler.search(0, &mut f);
}

pub fn enumerate_k_puzzles(b: &BoundarySpec, pieces: &PieceSet) -> Vec<Puzzle> {
    let mut out = Vec::new();
    for_each_k_puzzle(b, pieces, |p| out.push(p.clone()));
    out
}

/// Number of K-puzzles for the triple on `Gr_k(C^n)`.
pub fn puzzle_count(lambda: &Partition, mu: &Partition, nu: &Partition, k: usize, n: usize) -> Result<u64> {
    puzzle_count_with(lambda, mu, nu, k, n, &PieceSet::default())
}

pub fn puzzle_count_with(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    k: usize,
    n: usize,
    pieces: &PieceSet,
) -> Result<u64> {
    let b = delta_boundary(lambda, mu, nu, k, n)?;
    let mut count = 0;
    for_each_k_puzzle(&b, pieces, |_| count += 1);
    Ok(count)
}

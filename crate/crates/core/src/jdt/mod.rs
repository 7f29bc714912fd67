//! Jeu de taquin: K-theoretic slides of increasing tableaux, genomic slides
//! gene by gene, rectification, infusion and Bender-Knuth involutions.

mod infusion;

pub use infusion::{bender_knuth, infusion, LayeredPair};

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition, SkewShape};
use crate::tableaux::{superstandard, GenomicTableau, IncreasingTableau, Tableau};

/// How a cell came to belong to its group after one switch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Origin {
    Stayed,
    /// Was a bullet; lists the group's cells adjacent to it before the switch.
    Entered(Vec<Cell>),
}

pub(crate) struct Slid<D> {
    pub shape: D,
    /// Per input group, its new cells (row-major) with their origins.
    pub groups: Vec<Vec<(Cell, Origin)>>,
    /// Bullets left over at the end, i.e. the vacated outer cells.
    pub vacated: Vec<Cell>,
}

/// Check that `corners` is a nonempty set of inner corners of `shape`.
pub(crate) fn check_corners<D: Diagram>(shape: &D, corners: &[Cell]) -> Result<BTreeSet<Cell>> {
    if corners.is_empty() {
        return Err(Error::InvalidCorner("no corners given".into()));
    }
    let valid: HashSet<Cell> = shape.inner_corners().into_iter().collect();
    let set: BTreeSet<Cell> = corners.iter().copied().collect();
    if let Some(c) = set.iter().find(|c| !valid.contains(c)) {
        return Err(Error::InvalidCorner(format!("{c} is not an inner corner of {shape:?}")));
    }
    Ok(set)
}

/// Run the switches for `groups` in order. Each switch is simultaneous:
/// group cells next to a bullet become bullets while bullets next to the
/// group join it, both computed from the state before the switch.
pub(crate) fn slide_groups<D: Diagram>(shape: &D, groups: &[Vec<Cell>], corners: &[Cell]) -> Result<Slid<D>> {
    let corners = check_corners(shape, corners)?;
    let mut bullets: HashSet<Cell> = corners.iter().copied().collect();
    let mut out = Vec::with_capacity(groups.len());
    for group in groups {
        let members: HashSet<Cell> = group.iter().copied().collect();
        let leaving: Vec<Cell> =
            group.iter().copied().filter(|c| c.neighbors().any(|n| bullets.contains(&n))).collect();
        let entering: Vec<(Cell, Vec<Cell>)> = bullets
            .iter()
            .filter_map(|&b| {
                let adj: Vec<Cell> = b.neighbors().filter(|n| members.contains(n)).collect();
                (!adj.is_empty()).then_some((b, adj))
            })
            .collect();
        let mut cells: Vec<(Cell, Origin)> = group
            .iter()
            .copied()
            .filter(|c| !leaving.contains(c))
            .map(|c| (c, Origin::Stayed))
            .collect();
        for (b, adj) in entering {
            bullets.remove(&b);
            cells.push((b, Origin::Entered(adj)));
        }
        bullets.extend(leaving);
        cells.sort_by_key(|(c, _)| *c);
        out.push(cells);
    }
    // rebuild the shape row by row
    let rows = shape.num_rows();
    let mut inner: Vec<usize> = (1..=rows).map(|r| shape.inner_len(r)).collect();
    for c in &corners {
        inner[c.row - 1] -= 1;
    }
    let mut outer = inner.clone();
    for (c, _) in out.iter().flatten() {
        outer[c.row - 1] += 1;
    }
    let new_shape = D::from_parts(outer, inner)?;
    let all = out.iter().flatten();
    if let Some((c, _)) = all.clone().find(|(c, _)| !new_shape.contains(*c)) {
        return Err(Error::InvalidTableau(format!("slide left {c} outside {new_shape:?}")));
    }
    let mut vacated: Vec<Cell> = bullets.into_iter().collect();
    vacated.sort();
    Ok(Slid { shape: new_shape, groups: out, vacated })
}

/// Objects that support a forward slide into a set of inner corners.
pub trait Slide: Sized {
    type Shape: Diagram;

    fn slide_shape(&self) -> &Self::Shape;

    /// Slide into `corners`, returning the result and the vacated cells.
    fn slide_into(&self, corners: &[Cell]) -> Result<(Self, Vec<Cell>)>;
}

impl<D: Diagram> Slide for Tableau<D> {
    type Shape = D;

    fn slide_shape(&self) -> &D {
        self.shape()
    }

    fn slide_into(&self, corners: &[Cell]) -> Result<(Self, Vec<Cell>)> {
        let max = self.max_entry();
        let mut groups = vec![Vec::new(); max as usize];
        for (c, &v) in self.iter() {
            groups[v as usize - 1].push(c);
        }
        let slid = slide_groups(self.shape(), &groups, corners)?;
        let cells = slid
            .groups
            .iter()
            .enumerate()
            .flat_map(|(i, g)| g.iter().map(move |(c, _)| (*c, i as u32 + 1)));
        Ok((Tableau::from_cells(slid.shape, cells)?, slid.vacated))
    }
}

impl Slide for GenomicTableau {
    type Shape = SkewShape;

    fn slide_shape(&self) -> &SkewShape {
        self.shape()
    }

    fn slide_into(&self, corners: &[Cell]) -> Result<(Self, Vec<Cell>)> {
        let groups: Vec<Vec<Cell>> = (1..=self.num_genes() as u32).map(|g| self.gene(g).to_vec()).collect();
        let slid = slide_groups(self.shape(), &groups, corners)?;
        let cells = slid.groups.iter().enumerate().flat_map(|(i, g)| {
            let value = self.family(i as u32 + 1);
            g.iter().map(move |(c, _)| (*c, value, i as u32 + 1))
        });
        Ok((GenomicTableau::new(slid.shape, cells)?, slid.vacated))
    }
}

/// K-jeu de taquin of an increasing tableau into the inner corners `corners`:
/// for `v = 1, 2, …` swap the bullets with their `v`-neighbors.
pub fn kjdt<D: Diagram>(s: &Tableau<D>, corners: &[Cell]) -> Result<Tableau<D>> {
    s.slide_into(corners).map(|(t, _)| t)
}

/// Genomic jeu de taquin: switch the genes in increasing gene order.
pub fn genomic_jdt(t: &GenomicTableau, corners: &[Cell]) -> Result<GenomicTableau> {
    t.slide_into(corners).map(|(t, _)| t)
}

/// Rectify by sliding into all inner corners at each step.
pub fn rectify<T: Slide + Clone>(t: &T) -> Result<T> {
    rectify_with(t, |corners| corners.to_vec())
}

/// Rectify, choosing the corners of each slide with `strategy` (given the
/// current inner corners, it must return a nonempty subset).
pub fn rectify_with<T: Slide + Clone>(t: &T, mut strategy: impl FnMut(&[Cell]) -> Vec<Cell>) -> Result<T> {
    let mut cur = t.clone();
    while !cur.slide_shape().is_straight() {
        let corners = cur.slide_shape().inner_corners();
        let chosen = strategy(&corners);
        cur = cur.slide_into(&chosen)?.0;
    }
    Ok(cur)
}

/// Whether `s` K-rectifies to the superstandard tableau of shape `mu`.
pub fn rectifies_to_superstandard(s: &IncreasingTableau, mu: &Partition) -> bool {
    if !s.is_increasing() {
        return false;
    }
    rectify(s).is_ok_and(|r| r == superstandard(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kstd::k_standardize;
    use crate::tableaux::enumerate_genomic;

    fn shape(o: &str, i: &str) -> SkewShape {
        SkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    // inner (4,2); bullets at (1,4) and (2,2)
    fn slide_example() -> GenomicTableau {
        GenomicTableau::new(
            shape("4,4,3,1", "4,2"),
            [
                (Cell::new(2, 3), 1, 20),
                (Cell::new(2, 4), 2, 30),
                (Cell::new(3, 1), 1, 10),
                (Cell::new(3, 2), 1, 20),
                (Cell::new(3, 3), 2, 30),
                (Cell::new(4, 1), 2, 30),
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_genomic_slide() {
        let t = slide_example();
        let corners = [Cell::new(1, 4), Cell::new(2, 2)];
        let out = genomic_jdt(&t, &corners).unwrap();
        let expected = GenomicTableau::new(
            shape("4,3,2,1", "3,1"),
            [
                (Cell::new(1, 4), 2, 30),
                (Cell::new(2, 2), 1, 20),
                (Cell::new(2, 3), 2, 30),
                (Cell::new(3, 1), 1, 10),
                (Cell::new(3, 2), 2, 30),
                (Cell::new(4, 1), 2, 30),
            ],
        )
        .unwrap();
        assert_eq!(out, expected);
        assert_eq!(k_standardize(&out), kjdt(&k_standardize(&t), &corners).unwrap());
    }

    #[test]
    fn intermediate_switches() {
        let t = slide_example();
        let groups: Vec<Vec<Cell>> = (1..=3).map(|g| t.gene(g).to_vec()).collect();
        // the first gene has no bullet neighbour
        let one = slide_groups(t.shape(), &groups[..1], &[Cell::new(1, 4), Cell::new(2, 2)]).unwrap();
        assert_eq!(one.groups[0], vec![(Cell::new(3, 1), Origin::Stayed)]);
        let two = slide_groups(t.shape(), &groups[..2], &[Cell::new(1, 4), Cell::new(2, 2)]).unwrap();
        let red: Vec<Cell> = two.groups[1].iter().map(|(c, _)| *c).collect();
        assert_eq!(red, vec![Cell::new(2, 2)]);
        assert_eq!(two.vacated, vec![Cell::new(1, 4), Cell::new(2, 3), Cell::new(3, 2)]);
    }

    #[test]
    fn corner_validation() {
        let t = slide_example();
        assert!(genomic_jdt(&t, &[]).is_err());
        assert!(genomic_jdt(&t, &[Cell::new(1, 3)]).is_err());
        let s = superstandard(&"2,1".parse().unwrap());
        assert!(kjdt(&s, &[]).is_err());
    }

    #[test]
    fn single_box_translates() {
        let s = IncreasingTableau::from_rows(shape("2", "1"), vec![vec![1]]).unwrap();
        let out = kjdt(&s, &[Cell::new(1, 1)]).unwrap();
        assert_eq!(out, IncreasingTableau::from_rows(shape("1", ""), vec![vec![1]]).unwrap());
    }

    #[test]
    fn k_slide_merges_equal_entries() {
        // . 1      1 2
        // 1 2  ->  2
        let s = IncreasingTableau::from_rows(shape("2,2", "1"), vec![vec![1], vec![1, 2]]).unwrap();
        let out = kjdt(&s, &[Cell::new(1, 1)]).unwrap();
        assert_eq!(out, IncreasingTableau::from_rows(shape("2,1", ""), vec![vec![1, 2], vec![2]]).unwrap());
    }

    #[test]
    fn ballot_tableaux_rectify_to_highest_weight() {
        let sh = shape("3,2,1", "2,1");
        let mu: Partition = "1,1".parse().unwrap();
        let mut ballot = 0;
        for t in enumerate_genomic(&sh, mu.parts()) {
            let r = rectify(&t).unwrap();
            assert_eq!(r.content(), t.content());
            if t.is_ballot() {
                ballot += 1;
                assert_eq!(r, GenomicTableau::highest_weight(&mu));
                assert!(rectifies_to_superstandard(&k_standardize(&t), &mu));
            }
        }
        assert_eq!(ballot, 2);
    }

    #[test]
    fn straight_input_is_fixed() {
        let mu: Partition = "3,1".parse().unwrap();
        let s = superstandard(&mu);
        assert_eq!(rectify(&s).unwrap(), s);
        assert!(rectifies_to_superstandard(&s, &mu));
        let t = GenomicTableau::highest_weight(&mu);
        assert_eq!(rectify(&t).unwrap(), t);
    }

    #[test]
    fn non_pieri_filled_does_not_rectify_to_superstandard() {
        // 1 and 2 in one column: block {1,2} of (2) is not a horizontal strip
        let s = IncreasingTableau::from_rows(shape("2,1", "1"), vec![vec![1], vec![2]]).unwrap();
        assert!(!rectifies_to_superstandard(&s, &"2".parse().unwrap()));
        assert!(rectifies_to_superstandard(&s, &"1,1".parse().unwrap()));
    }
}

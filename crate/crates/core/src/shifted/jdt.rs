//! Shifted genomic jeu de taquin and shifted K-rectification.

use super::tableau::ShiftedGenomicTableau;
use super::DLetter;
use crate::error::Result;
use crate::jdt::{rectify, slide_groups, Origin, Slide};
use crate::shapes::{Cell, Diagram, ShiftedSkewShape, StrictPartition};
use crate::tableaux::{shifted_superstandard, ShiftedIncreasingTableau};

/// How boxes of a switched gene get their primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimeRule {
    /// A box entering gene `G` of family `k` gets `k` if one of its
    /// `G`-neighbours held `k` or it lies on the diagonal, `k'` otherwise;
    /// boxes that stay keep their letters.
    Local,
    /// After all genes have moved, a box is primed exactly when a box of a
    /// later gene of the same family sits weakly southwest of it (the Δ_μ
    /// rule applied to the slid gene positions).
    #[default]
    Reprime,
}

/// Slide the genes of `t` into `corners`, assigning primes by `rule`.
pub fn shifted_genomic_slide(
    t: &ShiftedGenomicTableau,
    corners: &[Cell],
    rule: PrimeRule,
) -> Result<(ShiftedGenomicTableau, Vec<Cell>)> {
    let groups: Vec<Vec<Cell>> = (1..=t.num_genes() as u32).map(|g| t.gene(g).to_vec()).collect();
    let slid = slide_groups(t.shape(), &groups, corners)?;
    let mut cells = Vec::new();
    for (i, g) in slid.groups.iter().enumerate() {
        let k = t.family(i as u32 + 1);
        for (c, origin) in g {
            let primed = match (rule, origin) {
                (PrimeRule::Local, Origin::Stayed) => t.letter(*c).expect("gene cell").primed,
                (PrimeRule::Local, Origin::Entered(adj)) => {
                    !(slid.shape.is_diagonal(*c) || adj.iter().any(|&a| t.letter(a) == Some(DLetter::unprimed(k))))
                }
                (PrimeRule::Reprime, _) => slid.groups[i + 1..]
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| t.family((i + 1 + j) as u32 + 1) == k)
                    .any(|(_, later)| later.iter().any(|(d, _)| d != c && d.weakly_southwest_of(*c))),
            };
            cells.push((*c, DLetter { value: k, primed }, i as u32 + 1));
        }
    }
    Ok((ShiftedGenomicTableau::new(slid.shape, t.kind(), cells)?, slid.vacated))
}

impl Slide for ShiftedGenomicTableau {
    type Shape = ShiftedSkewShape;

    fn slide_shape(&self) -> &ShiftedSkewShape {
        self.shape()
    }

    fn slide_into(&self, corners: &[Cell]) -> Result<(Self, Vec<Cell>)> {
        shifted_genomic_slide(self, corners, PrimeRule::default())
    }
}

/// One shifted genomic slide into the inner corners `corners`.
pub fn shifted_genomic_jdt(t: &ShiftedGenomicTableau, corners: &[Cell]) -> Result<ShiftedGenomicTableau> {
    t.slide_into(corners).map(|(t, _)| t)
}

/// K-rectify a shifted increasing tableau, sliding into all inner corners
/// at each step.
pub fn shifted_kjdt_rectify(s: &ShiftedIncreasingTableau) -> Result<ShiftedIncreasingTableau> {
    rectify(s)
}

pub fn rectifies_to_shifted_superstandard(s: &ShiftedIncreasingTableau, mu: &StrictPartition) -> bool {
    s.is_increasing() && shifted_kjdt_rectify(s).is_ok_and(|r| r == shifted_superstandard(mu))
}

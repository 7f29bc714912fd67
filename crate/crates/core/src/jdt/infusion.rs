//! Genomic infusion and the genomic Bender-Knuth involutions.

use super::Slide;
use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition, SkewShape};
use crate::tableaux::GenomicTableau;

/// Two genomic tableaux, `inner` on `α` and `outer` on `β/α`, where `α` may
/// itself be skew. The outer tableau's inner shape is the inner tableau's
/// outer shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredPair {
    pub inner: GenomicTableau,
    pub outer: GenomicTableau,
}

impl LayeredPair {
    pub fn new(inner: GenomicTableau, outer: GenomicTableau) -> Result<Self> {
        if outer.shape().inner != inner.shape().outer {
            return Err(Error::InvalidShape(format!(
                "{} does not sit on top of {}",
                outer.shape(),
                inner.shape()
            )));
        }
        Ok(LayeredPair { inner, outer })
    }
}

/// Slide the outer tableau through the inner one, largest inner gene first.
/// Each inner gene's cells serve as the corners of one slide and the gene is
/// then placed into the cells that slide vacates.
///
/// Returns the pair with the slid outer tableau now inside.
pub fn infusion(pair: &LayeredPair) -> Result<LayeredPair> {
    let t = &pair.inner;
    let mut u = pair.outer.clone();
    let mut placed: Vec<(Cell, u32, u32)> = Vec::new();
    for g in (1..=t.num_genes() as u32).rev() {
        let (next, vacated) = u.slide_into(t.gene(g))?;
        placed.extend(vacated.into_iter().map(|c| (c, t.family(g), g)));
        u = next;
    }
    let beta = pair.outer.shape().outer.clone();
    let t_star = GenomicTableau::new(SkewShape::new(beta, u.shape().outer.clone())?, placed)?;
    LayeredPair::new(u, t_star)
}

/// Swap the roles of families `i` and `i + 1`: infuse the `i+1` genes through
/// the `i` genes, then exchange the two labels.
pub fn bender_knuth(v: &GenomicTableau, i: u32) -> Result<GenomicTableau> {
    if i == 0 {
        return Err(Error::Malformed("family index starts at 1".into()));
    }
    let shape = v.shape();
    let rows = shape.num_rows();
    let mut below = vec![0usize; rows];
    let mut at_i = vec![0usize; rows];
    let mut at_next = vec![0usize; rows];
    for (c, g) in v.iter() {
        let r = c.row - 1;
        if g.value < i {
            below[r] += 1;
        } else if g.value == i {
            at_i[r] += 1;
        } else if g.value == i + 1 {
            at_next[r] += 1;
        }
    }
    let alpha_in: Vec<usize> = (0..rows).map(|r| shape.inner_len(r + 1) + below[r]).collect();
    let alpha_out: Vec<usize> = (0..rows).map(|r| alpha_in[r] + at_i[r]).collect();
    let beta: Vec<usize> = (0..rows).map(|r| alpha_out[r] + at_next[r]).collect();
    let cells_of = |value: u32| -> Vec<(Cell, u32, u32)> {
        v.iter().filter(|(_, g)| g.value == value).map(|(c, g)| (c, g.value, g.gene)).collect()
    };
    let alpha_out = Partition::new(alpha_out)?;
    let t = GenomicTableau::new(SkewShape::new(alpha_out.clone(), Partition::new(alpha_in)?)?, cells_of(i))?;
    let u = GenomicTableau::new(SkewShape::new(Partition::new(beta)?, alpha_out)?, cells_of(i + 1))?;
    let swapped = infusion(&LayeredPair::new(t, u)?)?;
    // labels only need to be distinct per gene; offset the two halves apart
    let offset = v.num_genes() as u32 + 1;
    let mut cells: Vec<(Cell, u32, u32)> =
        v.iter().filter(|(_, g)| g.value != i && g.value != i + 1).map(|(c, g)| (c, g.value, g.gene)).collect();
    cells.extend(swapped.inner.iter().map(|(c, g)| (c, i, offset + g.gene)));
    cells.extend(swapped.outer.iter().map(|(c, g)| (c, i + 1, 2 * offset + g.gene)));
    GenomicTableau::new(shape.clone(), cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jdt::rectify;
    use crate::tableaux::{enumerate_genomic, for_each_genomic_upto};

    fn shape(o: &str, i: &str) -> SkewShape {
        SkewShape::new(o.parse().unwrap(), i.parse().unwrap()).unwrap()
    }

    fn empty_on(p: &str) -> GenomicTableau {
        GenomicTableau::new(shape(p, p), []).unwrap()
    }

    #[test]
    fn empty_inner_tableau() {
        let u = enumerate_genomic(&shape("2,1", ""), &[2, 1]).remove(0);
        let pair = LayeredPair::new(empty_on(""), u.clone()).unwrap();
        let out = infusion(&pair).unwrap();
        assert_eq!(out.inner, u);
        assert_eq!(out.outer, empty_on("2,1"));
    }

    #[test]
    fn straight_inner_gives_rectification() {
        let t = GenomicTableau::highest_weight(&"2,1".parse().unwrap());
        for u in enumerate_genomic(&shape("3,2,1", "2,1"), &[1, 1]) {
            let out = infusion(&LayeredPair::new(t.clone(), u.clone()).unwrap()).unwrap();
            assert_eq!(out.inner.content(), u.content());
            assert!(out.inner.shape().inner.is_empty());
            if u.is_ballot() {
                assert_eq!(out.inner, rectify(&u).unwrap());
            }
        }
    }

    #[test]
    fn infusion_is_an_involution_small() {
        let beta = shape("3,2", "");
        for alpha in ["1", "2", "1,1", "2,1"] {
            let a = shape(alpha, "");
            let outer = SkewShape::new(beta.outer.clone(), alpha.parse().unwrap()).unwrap();
            let mut ts = Vec::new();
            for_each_genomic_upto(&a, 2, |t| ts.push(t.clone()));
            let mut us = Vec::new();
            for_each_genomic_upto(&outer, 2, |u| us.push(u.clone()));
            for t in &ts {
                for u in &us {
                    let pair = LayeredPair::new(t.clone(), u.clone()).unwrap();
                    let once = infusion(&pair).unwrap();
                    assert_eq!(infusion(&once).unwrap(), pair);
                }
            }
        }
    }

    #[test]
    fn bender_knuth_swaps_content() {
        let sh = shape("3,2", "1");
        let mut n = 0;
        for_each_genomic_upto(&sh, 3, |v| {
            for i in 1..=2 {
                let b = bender_knuth(v, i).unwrap();
                let mut c = v.content();
                c.resize(3, 0);
                c.swap(i as usize - 1, i as usize);
                let mut got = b.content();
                got.resize(3, 0);
                assert_eq!(got, c);
                assert_eq!(&bender_knuth(&b, i).unwrap(), v);
            }
            n += 1;
        });
        assert!(n > 0);
        let v = GenomicTableau::highest_weight(&"2".parse().unwrap());
        assert_eq!(bender_knuth(&v, 2).unwrap(), v);
    }
}

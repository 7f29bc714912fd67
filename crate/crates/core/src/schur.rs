//! Genomic Schur functions, their Schur expansions, and structure constants
//! of the basis they form.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::{for_each_genomic_upto, for_each_ssyt};

/// A polynomial in `nvars` variables: exponent vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonomialPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: i64) -> Result<()> {
        debug_assert_eq!(exp.len(), self.nvars);
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(c).ok_or(Error::Overflow)?;
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(slot) => {
                if c != 0 {
                    slot.insert(c);
                }
            }
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, other: &MonomialPoly, c: i64) -> Result<()> {
        for (e, &v) in &other.terms {
            self.add_term(e.clone(), v.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn mul(&self, other: &MonomialPoly) -> Result<MonomialPoly> {
        let mut out = MonomialPoly::zero(self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x.checked_mul(y).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Invariant under every swap of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, &c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(&c)
            })
        })
    }

    /// Largest total degree of a term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }
}

fn exponent_of(content: &[usize], nvars: usize) -> Vec<u32> {
    let mut e = vec![0u32; nvars];
    for (i, &c) in content.iter().enumerate() {
        e[i] = c as u32;
    }
    e
}

/// `U_{ν/λ}` in `nvars` variables: the sum over genomic tableaux with entries
/// at most `nvars` of `x^T`, where `x_i` counts the genes of family `i`.
/// Returns the polynomial and the number of tableaux summed.
pub fn genomic_schur(shape: &SkewShape, nvars: usize) -> Result<(MonomialPoly, u64)> {
    let mut p = MonomialPoly::zero(nvars);
    let mut count = 0u64;
    let mut err = None;
    for_each_genomic_upto(shape, nvars as u32, |t| {
        count += 1;
        if let Err(e) = p.add_term(exponent_of(&t.content(), nvars), 1) {
            err.get_or_insert(e);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok((p, count)),
    }
}

/// The Schur polynomial `s_λ(x_1, …, x_nvars)`.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Result<MonomialPoly> {
    let mut p = MonomialPoly::zero(nvars);
    if lambda.len() > nvars {
        return Ok(p);
    }
    if lambda.is_empty() {
        return Ok(MonomialPoly::one(nvars));
    }
    let mut err = None;
    for_each_ssyt(&SkewShape::straight(lambda.clone()), nvars as u32, |t| {
        let mut e = vec![0u32; nvars];
        for (_, &v) in t.iter() {
            e[v as usize - 1] += 1;
        }
        if let Err(x) = p.add_term(e, 1) {
            err.get_or_insert(x);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(p),
    }
}

/// Coefficients of a symmetric polynomial in the Schur basis.
pub type SchurExpansion = BTreeMap<Partition, i64>;

/// Expand a symmetric polynomial in Schur polynomials by repeatedly
/// subtracting the Schur polynomial of the lexicographically leading
/// exponent.
pub fn expand_in_schur(p: &MonomialPoly) -> Result<SchurExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = SchurExpansion::new();
    let mut cache: HashMap<Vec<u32>, MonomialPoly> = HashMap::new();
    while let Some((lead, &c)) = rest.terms.iter().next_back() {
        let lead = lead.clone();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonPartitionLeadingTerm(lead));
        }
        let lambda = Partition::new(lead.iter().map(|&x| x as usize).collect()).expect("checked decreasing");
        if !cache.contains_key(&lead) {
            cache.insert(lead.clone(), schur_poly(&lambda, p.nvars)?);
        }
        rest.add_scaled(&cache[&lead], -c)?;
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Rebuild a polynomial from its Schur expansion.
pub fn schur_sum(e: &SchurExpansion, nvars: usize) -> Result<MonomialPoly> {
    let mut p = MonomialPoly::zero(nvars);
    for (lambda, &c) in e {
        p.add_scaled(&schur_poly(lambda, nvars)?, c)?;
    }
    Ok(p)
}

/// Schur expansion of `U_λ` for a straight shape.
pub fn genomic_schur_expansion(lambda: &Partition, nvars: usize) -> Result<SchurExpansion> {
    expand_in_schur(&genomic_schur(&SkewShape::straight(lambda.clone()), nvars)?.0)
}

/// Matrix `M` with `U_λ = Σ_μ M[λ][μ] s_μ`, rows and columns indexed by the
/// nonempty partitions inside a bounding shape (by size, then decreasing
/// lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub nvars: usize,
    pub shapes: Vec<Partition>,
    pub entries: Vec<Vec<i64>>,
}

impl TransitionMatrix {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = self.shapes.iter().position(|p| p == lambda)?;
        let j = self.shapes.iter().position(|p| p == mu)?;
        Some(self.entries[i][j])
    }

    /// Tab-separated, one header row of column shapes, one row per shape.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("lambda\\mu");
        for p in &self.shapes {
            write!(s, "\t{p}").expect("string write");
        }
        s.push('\n');
        for (p, row) in self.shapes.iter().zip(&self.entries) {
            s.push_str(&p.to_string());
            for v in row {
                write!(s, "\t{v}").expect("string write");
            }
            s.push('\n');
        }
        s
    }
}

pub fn transition_matrix(max_shape: &Partition, nvars: usize) -> Result<TransitionMatrix> {
    let shapes: Vec<Partition> = max_shape.subpartitions().into_iter().filter(|p| !p.is_empty()).collect();
    let rows = crate::par::map(&shapes, 1, |lambda| genomic_schur_expansion(lambda, nvars));
    let mut entries = Vec::with_capacity(shapes.len());
    for (lambda, row) in shapes.iter().zip(rows) {
        let row = row?;
        let mut line = vec![0; shapes.len()];
        for (mu, c) in row {
            let j = shapes.iter().position(|p| *p == mu).ok_or_else(|| {
                Error::InvalidShape(format!("U_({lambda}) has a term s_({mu}) outside the bounding shape"))
            })?;
            line[j] = c;
        }
        entries.push(line);
    }
    Ok(TransitionMatrix { nvars, shapes, entries })
}

/// Expand `U_λ · U_μ` in the basis `{U_ν}`, working in `|λ| + |μ|` variables
/// so that no basis element vanishes.
pub fn u_structure_constants(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    let nvars = (lambda.size() + mu.size()).max(1);
    u_structure_constants_in(lambda, mu, nvars)
}

/// As `u_structure_constants`, in a chosen number of variables. With fewer
/// than `|λ| + |μ|` variables, terms with too many rows are lost.
pub fn u_structure_constants_in(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<BTreeMap<Partition, i64>> {
    let ul = genomic_schur(&SkewShape::straight(lambda.clone()), nvars)?.0;
    let um = genomic_schur(&SkewShape::straight(mu.clone()), nvars)?.0;
    let mut rest = expand_in_schur(&ul.mul(&um)?)?;
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Partition, SchurExpansion> = HashMap::new();
    // U_ν = s_ν + lower degree terms, so peel off the top degree first
    while let Some(top) = rest
        .iter()
        .filter(|(_, &c)| c != 0)
        .map(|(p, _)| p.clone())
        .max_by(|a, b| a.size().cmp(&b.size()).then(a.cmp(b)))
    {
        let c = rest[&top];
        if !cache.contains_key(&top) {
            cache.insert(top.clone(), genomic_schur_expansion(&top, nvars)?);
        }
        for (p, &d) in &cache[&top] {
            let e = rest.entry(p.clone()).or_insert(0);
            *e = e.checked_sub(d.checked_mul(c).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
        }
        rest.retain(|_, v| *v != 0);
        out.insert(top, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> MonomialPoly {
        let mut m = MonomialPoly::zero(nvars);
        for (e, c) in terms {
            m.add_term(e.to_vec(), *c).unwrap();
        }
        m
    }

    #[test]
    fn u31_in_two_variables() {
        let (u, n) = genomic_schur(&SkewShape::straight(p("3,1")), 2).unwrap();
        assert_eq!(n, 5);
        let expected = poly(2, &[(&[3, 1], 1), (&[2, 2], 1), (&[1, 3], 1), (&[1, 2], 1), (&[2, 1], 1)]);
        assert_eq!(u, expected);
        let e = expand_in_schur(&u).unwrap();
        assert_eq!(e, BTreeMap::from([(p("3,1"), 1), (p("2,1"), 1)]));
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_poly(&p("3,1"), 2).unwrap(), poly(2, &[(&[3, 1], 1), (&[2, 2], 1), (&[1, 3], 1)]));
        assert_eq!(schur_poly(&p(""), 3).unwrap(), MonomialPoly::one(3));
        assert_eq!(schur_poly(&p("2,1"), 2).unwrap(), poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert!(schur_poly(&p("1,1,1"), 2).unwrap().is_zero());
        let (u1, _) = genomic_schur(&SkewShape::straight(p("1")), 3).unwrap();
        assert_eq!(u1, schur_poly(&p("1"), 3).unwrap());
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(expand_in_schur(&poly(2, &[(&[1, 0], 1)])), Err(Error::NotSymmetric));
        let e = expand_in_schur(&schur_poly(&p("2,1"), 3).unwrap()).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2,1"), 1)]));
    }

    #[test]
    fn round_trip_and_overflow() {
        let (u, _) = genomic_schur(&SkewShape::straight(p("2,2")), 3).unwrap();
        let e = expand_in_schur(&u).unwrap();
        assert_eq!(schur_sum(&e, 3).unwrap(), u);
        let mut big = poly(1, &[(&[1], i64::MAX)]);
        assert_eq!(big.add_term(vec![1], 1), Err(Error::Overflow));
    }

    #[test]
    fn small_table_rows() {
        let m = transition_matrix(&p("3,2,1"), 3).unwrap();
        let row = |l: &str| -> Vec<(String, i64)> {
            let lambda = p(l);
            m.shapes.iter().filter_map(|mu| {
                let v = m.get(&lambda, mu).unwrap();
                (v != 0).then(|| (mu.to_string(), v))
            }).collect()
        };
        assert_eq!(row("2,1"), vec![("1,1".to_string(), 1), ("2,1".to_string(), 1)]);
        assert_eq!(
            row("3,2,1"),
            vec![("1,1,1".into(), 1), ("2,1,1".into(), 2), ("3,1,1".into(), 1), ("2,2,1".into(), 2), ("3,2,1".into(), 1)]
        );
        assert!(m.to_tsv().starts_with("lambda\\mu\t1\t2\t1,1\t3\t2,1"));
    }

    #[test]
    fn trivial_structure_constants() {
        assert_eq!(u_structure_constants(&p(""), &p("2,1")).unwrap(), BTreeMap::from([(p("2,1"), 1)]));
        assert_eq!(u_structure_constants(&p("1"), &p("1")).unwrap()[&p("2")], 1);
    }
}

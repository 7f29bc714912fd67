//! Shifted genomic tableaux over the primed alphabet `1' < 1 < 2' < 2 < …`:
//! P- and Q-tableaux with genes, doubleseq ballotness, shifted
//! K-standardization, shifted jeu de taquin, genomic P-Knuth moves, and the
//! orthogonal / Lagrangian counting rules.

mod jdt;
mod og;
mod standard;
mod tableau;
mod words;

pub use jdt::{rectifies_to_shifted_superstandard, shifted_genomic_jdt, shifted_genomic_slide, shifted_kjdt_rectify, PrimeRule};
pub use og::{cohomological_factor, count_cty, count_pballot, lg_bounds, og_coefficient, LGReport, OGQuery, OGResult};
pub use standard::{delta, enumerate_shifted_pieri_filled, gamma, is_shifted_pieri_filled, Delta, Undefined};
pub use tableau::{
    enumerate_shifted_genomic, for_each_ptableau, for_each_shifted_genomic, for_each_shifted_genomic_upto, is_tableau,
    DFilling, Kind, SGeneCell, ShiftedGenomicTableau,
};
pub use words::{apply_gp_moves, pword_is_ballot, word_gamma, GPRules, PLetter, PWord};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A letter of the primed alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DLetter {
    pub value: u32,
    pub primed: bool,
}

impl DLetter {
    pub const fn unprimed(value: u32) -> Self {
        DLetter { value, primed: false }
    }

    pub const fn primed(value: u32) -> Self {
        DLetter { value, primed: true }
    }

    /// Position in the total order: `1' -> 1`, `1 -> 2`, `2' -> 3`, …
    pub fn key(self) -> u32 {
        2 * self.value - u32::from(self.primed)
    }

    pub fn from_key(key: u32) -> Self {
        DLetter { value: key.div_ceil(2), primed: key % 2 == 1 }
    }
}

impl Ord for DLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for DLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

impl FromStr for DLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v > 0 => Ok(DLetter { value: v, primed }),
            _ => Err(Error::Parse(format!("bad primed letter {s:?}"))),
        }
    }
}

/// Parse a space-separated word such as `"2 1' 1 3"`.
pub fn parse_dword(s: &str) -> Result<Vec<DLetter>> {
    s.split_whitespace().map(str::parse).collect()
}

pub fn fmt_dword(w: &[DLetter]) -> String {
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// The image of one letter under the hat map: `k' -> k`, `k -> (k+1)'`.
pub fn hat_letter(a: DLetter) -> DLetter {
    if a.primed {
        DLetter::unprimed(a.value)
    } else {
        DLetter::primed(a.value + 1)
    }
}

/// Reverse `w` and apply [`hat_letter`] to every letter.
pub fn hat(w: &[DLetter]) -> Vec<DLetter> {
    w.iter().rev().copied().map(hat_letter).collect()
}

/// `w` followed by its hat.
pub fn doubleseq(w: &[DLetter]) -> Vec<DLetter> {
    let mut out = w.to_vec();
    out.extend(hat(w));
    out
}

/// Index of the first letter at which `w` is not locally ballot.
///
/// A letter with value `k > 1` is locally ballot when strictly fewer
/// unprimed `k` than unprimed `k-1` precede it.
pub fn first_ballot_violation(w: &[DLetter]) -> Option<usize> {
    let mut unprimed: Vec<usize> = Vec::new();
    for (i, a) in w.iter().enumerate() {
        let k = a.value as usize;
        if unprimed.len() <= k {
            unprimed.resize(k + 1, 0);
        }
        if k > 1 && unprimed[k] >= unprimed[k - 1] {
            return Some(i);
        }
        if !a.primed {
            unprimed[k] += 1;
        }
    }
    None
}

/// Whether a doubleseq is locally ballot at every letter.
pub fn is_ballot_dword(w: &[DLetter]) -> bool {
    first_ballot_violation(w).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<DLetter> {
        parse_dword(s).unwrap()
    }

    #[test]
    fn letter_order() {
        let mut v = w("2 1 2' 1' 3'");
        v.sort();
        assert_eq!(fmt_dword(&v), "1' 1 2' 2 3'");
        for key in 1..10 {
            assert_eq!(DLetter::from_key(key).key(), key);
        }
        assert!("0".parse::<DLetter>().is_err());
        assert!("x'".parse::<DLetter>().is_err());
    }

    #[test]
    fn hat_rules() {
        assert!(hat(&[]).is_empty());
        assert_eq!(hat(&w("3")), w("4'"));
        assert_eq!(hat(&w("2 1' 1 3")), w("4' 2' 1 3'"));
    }

    #[test]
    fn doubleseqs_of_two_genotypes() {
        let g1 = doubleseq(&w("2 1' 1 3"));
        assert_eq!(fmt_dword(&g1), "2 1' 1 3 4' 2' 1 3'");
        assert_eq!(first_ballot_violation(&g1), Some(0));
        let g2 = doubleseq(&w("1' 2 1 3"));
        assert_eq!(fmt_dword(&g2), "1' 2 1 3 4' 2' 3' 1");
        assert_eq!(first_ballot_violation(&g2), Some(1));
        // without primes the same letters form an ordinary ballot word
        let plain: Vec<u32> = g2.iter().map(|a| a.value).collect();
        assert!(crate::tableaux::is_ballot_word(&plain));
    }
}

//! Genomic words: colored letters whose same-color letters share a value and
//! are consecutive among the letters of that value.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use super::RewriteSystem;
use crate::error::{Error, Result};
use crate::tableaux::GenomicTableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub value: u32,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenomicWord(pub Vec<Letter>);

impl GenomicWord {
    /// Validate and renumber colors by first appearance.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let w = GenomicWord(letters);
        if !w.is_valid() {
            return Err(Error::Malformed(format!("{w} is not a genomic word")));
        }
        Ok(w.canonical())
    }

    /// Build from `(value, color)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        GenomicWord::new(pairs.iter().map(|&(value, color)| Letter { value, color }).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.value).collect()
    }

    pub fn is_valid(&self) -> bool {
        let mut value_of: HashMap<u32, u32> = HashMap::new();
        for l in &self.0 {
            if l.value == 0 || *value_of.entry(l.color).or_insert(l.value) != l.value {
                return false;
            }
        }
        // among the letters of each value, each color forms one run
        let mut last_color: HashMap<u32, u32> = HashMap::new();
        let mut closed: std::collections::HashSet<u32> = std::collections::HashSet::new();
        for l in &self.0 {
            match last_color.insert(l.value, l.color) {
                Some(prev) if prev == l.color => {}
                Some(prev) => {
                    closed.insert(prev);
                    if closed.contains(&l.color) {
                        return false;
                    }
                }
                None => {
                    if closed.contains(&l.color) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Colors renumbered `1, 2, …` by first appearance.
    pub fn canonical(&self) -> Self {
        let mut map: HashMap<u32, u32> = HashMap::new();
        GenomicWord(
            self.0
                .iter()
                .map(|l| {
                    let n = map.len() as u32 + 1;
                    Letter { value: l.value, color: *map.entry(l.color).or_insert(n) }
                })
                .collect(),
        )
    }

    pub fn num_colors(&self) -> usize {
        self.0.iter().map(|l| l.color).collect::<std::collections::HashSet<_>>().len()
    }
}

impl fmt::Display for GenomicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}@{}", l.value, l.color)?;
        }
        Ok(())
    }
}

/// Parses `value@color` tokens separated by spaces; colors are arbitrary
/// names.
impl FromStr for GenomicWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut names: HashMap<String, u32> = HashMap::new();
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (v, c) = tok.split_once('@').ok_or_else(|| Error::Parse(format!("expected value@color, got {tok:?}")))?;
            let value = v.parse().map_err(|_| Error::Parse(format!("bad letter value {v:?}")))?;
            let n = names.len() as u32 + 1;
            let color = *names.entry(c.to_string()).or_insert(n);
            letters.push(Letter { value, color });
        }
        GenomicWord::new(letters)
    }
}

/// The colored row reading word of a genomic tableau (colors are gene ids).
pub fn genomicseq(t: &GenomicTableau) -> GenomicWord {
    GenomicWord(
        t.filling()
            .reading_word()
            .into_iter()
            .map(|g| Letter { value: g.value, color: g.gene })
            .collect(),
    )
    .canonical()
}

/// Every one-letter-per-color subword is ballot.
pub fn word_is_ballot(w: &GenomicWord) -> bool {
    let w = w.canonical();
    let letters: Vec<(usize, u32)> = w.0.iter().map(|l| (l.color as usize - 1, l.value)).collect();
    crate::tableaux::all_genotypes_ballot(&letters, w.num_colors())
}

/// Which of the four genomic moves are enabled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GMoves {
    pub g1: bool,
    pub g2: bool,
    pub g3: bool,
    pub g4: bool,
}

impl GMoves {
    pub const ALL: GMoves = GMoves { g1: true, g2: true, g3: true, g4: true };
    /// Only the two Knuth-type moves.
    pub const KNUTH: GMoves = GMoves { g1: false, g2: false, g3: true, g4: true };
}

fn splice(w: &[Letter], p: usize, old: usize, new: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() + new.len() - old);
    out.extend_from_slice(&w[..p]);
    out.extend_from_slice(new);
    out.extend_from_slice(&w[p + old..]);
    out
}

/// All genomic words one move away from `w`, canonicalized and deduplicated.
///
/// * `u ii v ~ u i v` for two same-color letters;
/// * `u i j i v ~ u j i j v`, the outer letters sharing a color and the
///   inner ones sharing another;
/// * `u j i k v ~ u j k i v` with `i ≤ j < k`, distinct colors;
/// * `u p q j v ~ u q p j v` with `p < j ≤ q`, distinct colors.
pub fn apply_g_moves(w: &GenomicWord, moves: GMoves) -> Vec<GenomicWord> {
    let s = &w.0;
    let n = s.len();
    let mut out: Vec<Vec<Letter>> = Vec::new();
    if moves.g1 {
        for p in 0..n {
            if p + 1 < n && s[p] == s[p + 1] {
                out.push(splice(s, p, 2, &[s[p]]));
            }
            out.push(splice(s, p, 1, &[s[p], s[p]]));
        }
    }
    for p in 0..n.saturating_sub(2) {
        let (a, b, c) = (s[p], s[p + 1], s[p + 2]);
        let distinct = a.color != b.color && b.color != c.color && a.color != c.color;
        if moves.g2 && a == c && a.color != b.color && a.value != b.value {
            out.push(splice(s, p, 3, &[b, a, b]));
        }
        if moves.g3 && distinct {
            // j i k -> j k i  and  j k i -> j i k, with i ≤ j < k
            let (j, x, y) = (a.value, b.value, c.value);
            if x <= j && j < y {
                out.push(splice(s, p, 3, &[a, c, b]));
            }
            if y <= j && j < x {
                out.push(splice(s, p, 3, &[a, c, b]));
            }
        }
        if moves.g4 && distinct {
            // p q j <-> q p j, with p < j ≤ q
            let (x, y, j) = (a.value, b.value, c.value);
            if (x < j && j <= y) || (y < j && j <= x) {
                out.push(splice(s, p, 3, &[b, a, c]));
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.into_iter()
        .map(GenomicWord)
        .filter(GenomicWord::is_valid)
        .map(|w| w.canonical())
        .filter(|w| seen.insert(w.clone()))
        .collect()
}

/// Genomic Knuth equivalence as a rewrite system.
#[derive(Debug, Clone, Copy)]
pub struct GenomicRules(pub GMoves);

impl Default for GenomicRules {
    fn default() -> Self {
        GenomicRules(GMoves::ALL)
    }
}

impl RewriteSystem for GenomicRules {
    type Word = GenomicWord;

    fn neighbors(&self, w: &GenomicWord) -> Vec<GenomicWord> {
        apply_g_moves(w, self.0)
    }

    fn word_len(&self, w: &GenomicWord) -> usize {
        w.len()
    }

    fn canonical(&self, w: &GenomicWord) -> GenomicWord {
        w.canonical()
    }
}

/// Φ on words: place the letters on an antidiagonal of disconnected boxes
/// from northeast to southwest, standardize, and read back.
///
/// Genes are ordered by value and then west to east; on the antidiagonal a
/// later letter lies further west.
pub fn word_k_standardize(s: &GenomicWord) -> Vec<u32> {
    // color -> (value, last position)
    let mut key: BTreeMap<u32, (u32, usize)> = BTreeMap::new();
    for (p, l) in s.0.iter().enumerate() {
        key.insert(l.color, (l.value, p));
    }
    let mut colors: Vec<(u32, (u32, usize))> = key.into_iter().collect();
    colors.sort_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.1 .1.cmp(&a.1 .1)));
    let rank: HashMap<u32, u32> = colors.iter().enumerate().map(|(i, (c, _))| (*c, i as u32 + 1)).collect();
    s.0.iter().map(|l| rank[&l.color]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Cell, SkewShape};
    use crate::tableaux::{seq, GenomicTableau};

    fn w(s: &str) -> GenomicWord {
        s.parse().unwrap()
    }

    fn section2_example() -> GenomicTableau {
        let shape = SkewShape::new("4,3,1".parse().unwrap(), "2".parse().unwrap()).unwrap();
        GenomicTableau::new(
            shape,
            [
                (Cell::new(1, 3), 1, 10),
                (Cell::new(1, 4), 2, 30),
                (Cell::new(2, 1), 1, 20),
                (Cell::new(2, 2), 1, 10),
                (Cell::new(2, 3), 2, 30),
                (Cell::new(3, 1), 2, 30),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parse_and_validity() {
        assert_eq!(w("2@g 1@r 2@g"), w("2@a 1@b 2@a"));
        assert!("1@r 2@r".parse::<GenomicWord>().is_err());
        assert!("1@r 1@b 1@r".parse::<GenomicWord>().is_err());
        assert!("1@r 2@b 1@r".parse::<GenomicWord>().is_ok());
        assert!("x@r".parse::<GenomicWord>().is_err());
    }

    #[test]
    fn example_word_is_not_ballot() {
        let t = section2_example();
        let s = genomicseq(&t);
        assert_eq!(s, w("2@g 1@r 2@g 1@r 1@b 2@g"));
        assert!(!word_is_ballot(&s));
        assert!(word_is_ballot(&w("")));
        assert!(word_is_ballot(&w("1@r 2@b")));
    }

    #[test]
    fn highest_weight_word() {
        let t = GenomicTableau::highest_weight(&"2,1".parse().unwrap());
        // row 1 right to left, then row 2
        assert_eq!(genomicseq(&t), w("1@b 1@a 2@c"));
    }

    #[test]
    fn standardize_words() {
        let t = section2_example();
        assert_eq!(word_k_standardize(&genomicseq(&t)), seq(&crate::kstd::k_standardize(&t)));
        assert_eq!(word_k_standardize(&genomicseq(&t)), vec![3, 2, 3, 2, 1, 3]);
        assert_eq!(word_k_standardize(&w("5@a")), vec![1]);
        assert_eq!(word_k_standardize(&w("1@a 1@a")), vec![1, 1]);
    }

    #[test]
    fn single_moves() {
        let m = apply_g_moves(&w("1@r 1@r"), GMoves::ALL);
        assert!(m.contains(&w("1@r")));
        let m = apply_g_moves(&w("1@r 2@b 1@r"), GMoves::ALL);
        assert!(m.contains(&w("2@b 1@r 2@b")));
        let m = apply_g_moves(&w("2@a 1@b 3@c"), GMoves::ALL);
        assert!(m.contains(&w("2@a 3@c 1@b")));
        let m = apply_g_moves(&w("1@a 3@b 2@c"), GMoves::ALL);
        assert!(m.contains(&w("3@b 1@a 2@c")));
        for x in &m {
            assert!(x.is_valid());
        }
    }
}

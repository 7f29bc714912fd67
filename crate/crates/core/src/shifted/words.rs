//! Genomic P-words: colored words over the primed alphabet, their ballot
//! test and the genomic P-Knuth moves.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::tableau::ShiftedGenomicTableau;
use super::{hat_letter, is_ballot_dword, DLetter};
use crate::error::{Error, Result};
use crate::tableaux::Odometer;
use crate::words::RewriteSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLetter {
    pub letter: DLetter,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PWord(pub Vec<PLetter>);

impl PWord {
    /// Validate and renumber colors by first appearance.
    pub fn new(letters: Vec<PLetter>) -> Result<Self> {
        let w = PWord(letters);
        if !w.is_valid() {
            return Err(Error::Malformed(format!("{w} is not a genomic P-word")));
        }
        Ok(w.canonical())
    }

    pub fn letters(&self) -> &[PLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word followed by its hat, colors kept.
    pub fn double(&self) -> Vec<PLetter> {
        let mut out = self.0.clone();
        out.extend(self.0.iter().rev().map(|l| PLetter { letter: hat_letter(l.letter), color: l.color }));
        out
    }

    /// Each color has one family, and in the doubled word the unprimed
    /// letters of each value form one run per color.
    pub fn is_valid(&self) -> bool {
        let mut family: HashMap<u32, u32> = HashMap::new();
        for l in &self.0 {
            if l.letter.value == 0 || *family.entry(l.color).or_insert(l.letter.value) != l.letter.value {
                return false;
            }
        }
        let mut last: HashMap<u32, u32> = HashMap::new();
        let mut closed: BTreeSet<(u32, u32)> = BTreeSet::new();
        for l in self.double().into_iter().filter(|l| !l.letter.primed) {
            let v = l.letter.value;
            match last.insert(v, l.color) {
                Some(prev) if prev == l.color => {}
                Some(prev) => {
                    closed.insert((v, prev));
                    if closed.contains(&(v, l.color)) {
                        return false;
                    }
                }
                None => {}
            }
        }
        true
    }

    /// Colors renumbered `1, 2, …` by first appearance.
    pub fn canonical(&self) -> Self {
        let mut map: HashMap<u32, u32> = HashMap::new();
        PWord(
            self.0
                .iter()
                .map(|l| {
                    let n = map.len() as u32 + 1;
                    PLetter { letter: l.letter, color: *map.entry(l.color).or_insert(n) }
                })
                .collect(),
        )
    }

    pub fn colors(&self) -> Vec<u32> {
        self.0.iter().map(|l| l.color).collect::<BTreeSet<_>>().into_iter().collect()
    }

    /// The colored reading word of a shifted genomic tableau.
    pub fn from_tableau(t: &ShiftedGenomicTableau) -> Self {
        PWord(t.filling().reading_word().into_iter().map(|x| PLetter { letter: x.letter, color: x.gene }).collect())
            .canonical()
    }
}

impl fmt::Display for PWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}@{}", l.letter, l.color)?;
        }
        Ok(())
    }
}

/// Parses `letter@color` tokens such as `1'@r 2@g`.
impl FromStr for PWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut names: HashMap<String, u32> = HashMap::new();
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (v, c) = tok.split_once('@').ok_or_else(|| Error::Parse(format!("expected letter@color, got {tok:?}")))?;
            let n = names.len() as u32 + 1;
            let color = *names.entry(c.to_string()).or_insert(n);
            letters.push(PLetter { letter: v.parse()?, color });
        }
        PWord::new(letters)
    }
}

/// Every P-genotype (one letter per color, then its hat) is ballot.
pub fn pword_is_ballot(w: &PWord) -> bool {
    let colors = w.colors();
    let positions: Vec<Vec<usize>> =
        colors.iter().map(|&c| (0..w.len()).filter(|&i| w.0[i].color == c).collect()).collect();
    Odometer::new(positions.iter().map(Vec::len).collect()).all(|choice| {
        let mut picked: Vec<usize> = choice.iter().enumerate().map(|(g, &i)| positions[g][i]).collect();
        picked.sort_unstable();
        let x: Vec<DLetter> = picked.iter().map(|&i| w.0[i].letter).collect();
        is_ballot_dword(&super::doubleseq(&x))
    })
}

fn splice(w: &[PLetter], p: usize, old: usize, new: &[PLetter]) -> Vec<PLetter> {
    let mut out = Vec::with_capacity(w.len() + new.len() - old);
    out.extend_from_slice(&w[..p]);
    out.extend_from_slice(new);
    out.extend_from_slice(&w[p + old..]);
    out
}

// β α γ ~ β γ α
fn gp3(beta: DLetter, alpha: DLetter, gamma: DLetter) -> bool {
    if beta.primed {
        alpha < beta && beta <= gamma
    } else {
        alpha <= beta && beta < gamma
    }
}

// α γ β ~ γ α β
fn gp4(alpha: DLetter, gamma: DLetter, beta: DLetter) -> bool {
    if beta.primed {
        alpha <= beta && beta < gamma
    } else {
        alpha < beta && beta <= gamma
    }
}

/// All genomic P-words one move away from `w`, canonicalized and
/// deduplicated.
///
/// * `u αα v ~ u α v` for two equal letters of one color;
/// * `u α β α v ~ u β α β v`, the outer letters sharing a color and the
///   inner ones sharing another;
/// * `u β α γ v ~ u β γ α v` when `α ≤ β < γ` with `β` unprimed, or
///   `α < β ≤ γ` with `β` primed;
/// * `u α γ β v ~ u γ α β v` when `α ≤ β < γ` with `β` primed, or
///   `α < β ≤ γ` with `β` unprimed;
/// * `u i j ~ u j† i` at the end of the word for unprimed `i`, `j`, where
///   `j† = j'` if `i = j` and `j† = j` otherwise.
pub fn apply_gp_moves(w: &PWord) -> Vec<PWord> {
    let s = &w.0;
    let n = s.len();
    let mut out: Vec<Vec<PLetter>> = Vec::new();
    for p in 0..n {
        if p + 1 < n && s[p] == s[p + 1] {
            out.push(splice(s, p, 2, &[s[p]]));
        }
        out.push(splice(s, p, 1, &[s[p], s[p]]));
    }
    for p in 0..n.saturating_sub(2) {
        let (a, b, c) = (s[p], s[p + 1], s[p + 2]);
        if a == c && a.color != b.color && a.letter != b.letter {
            out.push(splice(s, p, 3, &[b, a, b]));
        }
        if a.color == b.color || b.color == c.color || a.color == c.color {
            continue;
        }
        let (x, y, z) = (a.letter, b.letter, c.letter);
        if gp3(x, y, z) || gp3(x, z, y) {
            out.push(splice(s, p, 3, &[a, c, b]));
        }
        if gp4(x, y, z) || gp4(y, x, z) {
            out.push(splice(s, p, 3, &[b, a, c]));
        }
    }
    if n >= 2 && s[n - 2].color != s[n - 1].color {
        let (x, y) = (s[n - 2], s[n - 1]);
        let dagger = |i: DLetter, j: DLetter| DLetter { value: j.value, primed: i.value == j.value };
        if !x.letter.primed && !y.letter.primed {
            out.push(splice(s, n - 2, 2, &[PLetter { letter: dagger(x.letter, y.letter), color: y.color }, x]));
        }
        if x.letter.primed && !y.letter.primed && x.letter.value == y.letter.value {
            out.push(splice(s, n - 2, 2, &[y, PLetter { letter: DLetter::unprimed(x.letter.value), color: x.color }]));
        }
    }
    let mut seen = BTreeSet::new();
    out.into_iter()
        .map(PWord)
        .filter(PWord::is_valid)
        .map(|w| w.canonical())
        .filter(|w| seen.insert(w.clone()))
        .collect()
}

/// Genomic P-Knuth equivalence as a rewrite system.
#[derive(Debug, Clone, Copy, Default)]
pub struct GPRules;

impl RewriteSystem for GPRules {
    type Word = PWord;

    fn neighbors(&self, w: &PWord) -> Vec<PWord> {
        apply_gp_moves(w)
    }

    fn word_len(&self, w: &PWord) -> usize {
        w.len()
    }

    fn canonical(&self, w: &PWord) -> PWord {
        w.canonical()
    }
}

/// Γ on words: lay the letters on an antidiagonal from northeast to
/// southwest and number the colors in gene order (family, then primed
/// letters earliest first, then unprimed letters latest first).
pub fn word_gamma(w: &PWord) -> Vec<u32> {
    let n = w.len();
    let mut key: HashMap<u32, (u32, u8, usize)> = HashMap::new();
    for (p, l) in w.0.iter().enumerate() {
        let k = if l.letter.primed { (l.letter.value, 0, p) } else { (l.letter.value, 1, n - p) };
        key.entry(l.color).and_modify(|old| *old = (*old).min(k)).or_insert(k);
    }
    let mut colors: Vec<(u32, (u32, u8, usize))> = key.into_iter().collect();
    colors.sort_by_key(|&(_, k)| k);
    let rank: HashMap<u32, u32> = colors.iter().enumerate().map(|(i, (c, _))| (*c, i as u32 + 1)).collect();
    w.0.iter().map(|l| rank[&l.color]).collect()
}

#[cfg(test)]
mod tests {
    use super::super::tableau::tests::two_genotype_example;
    use super::*;

    fn w(s: &str) -> PWord {
        s.parse().unwrap()
    }

    #[test]
    fn reading_word_of_example() {
        let p = PWord::from_tableau(&two_genotype_example());
        assert_eq!(p.to_string(), "2@1 1'@2 2@1 1@3 3@4");
        let doubled: Vec<String> = p.double().iter().map(|l| l.letter.to_string()).collect();
        assert_eq!(doubled.join(" "), "2 1' 2 1 3 4' 2' 3' 1 3'");
        assert!(!pword_is_ballot(&p));
    }

    #[test]
    fn validity() {
        assert!(w("1@a 1@a 1@b").is_valid());
        assert!("1@a 1@b 1@a".parse::<PWord>().is_err());
        assert!("1@a 2@a".parse::<PWord>().is_err());
        // the hat of a's 1' is an unprimed 1 after b's run
        assert!("1@a 1'@a 1@b".parse::<PWord>().is_err());
        assert!("1@b 1'@a".parse::<PWord>().is_ok());
    }

    #[test]
    fn moves() {
        let has = |from: &str, to: &str| apply_gp_moves(&w(from)).contains(&w(to));
        assert!(has("1@a 1@a", "1@a"));
        assert!(has("2@a 1@b 3@c", "2@a 3@c 1@b"));
        assert!(has("2'@a 1@b 2@c", "2'@a 2@c 1@b"));
        assert!(!has("2'@a 2@b 3@c 1@d", "2'@a 3@c 2@b 1@d"));
        assert!(has("1@a 3@b 2@c", "3@b 1@a 2@c"));
        assert!(has("2@a 1@b", "1@b 2@a"));
        assert!(has("1@a 1@b", "1'@b 1@a"));
        assert!(has("1'@b 1@a", "1@a 1@b"));
    }

    #[test]
    fn gamma_on_words() {
        // antidiagonal of 2, 1', 1, 3: family 1 first (the 1' before the 1)
        assert_eq!(word_gamma(&w("2@a 1'@b 1@c 3@d")), vec![3, 1, 2, 4]);
        assert_eq!(word_gamma(&w("1@a 1@b")), vec![2, 1]);
    }
}

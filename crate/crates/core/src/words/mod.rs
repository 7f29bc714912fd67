//! Words, Knuth-type rewriting relations and bounded equivalence search.

mod genomic;
mod knuth;

pub use genomic::{apply_g_moves, genomicseq, word_is_ballot, word_k_standardize, GMoves, GenomicRules, GenomicWord, Letter};
pub use knuth::{KKnuth, WeakKKnuth};

use std::collections::HashMap;
use std::hash::Hash;

/// A set of symmetric rewriting moves on words.
pub trait RewriteSystem {
    type Word: Clone + Eq + Hash;

    /// Every word reachable from `w` by one move, in either direction.
    fn neighbors(&self, w: &Self::Word) -> Vec<Self::Word>;

    fn word_len(&self, w: &Self::Word) -> usize;

    /// Representative used for comparisons (e.g. color renumbering).
    fn canonical(&self, w: &Self::Word) -> Self::Word {
        w.clone()
    }
}

/// Outcome of a bounded search. Only `Equivalent` is definitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equivalent { steps: usize },
    NotFoundWithinBounds,
}

impl Verdict {
    pub fn is_equivalent(self) -> bool {
        matches!(self, Verdict::Equivalent { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_len: usize,
    pub max_states: usize,
}

impl SearchBounds {
    /// Two letters of slack over the longer word, one million states.
    pub fn for_words(len_a: usize, len_b: usize) -> Self {
        SearchBounds { max_len: len_a.max(len_b) + 2, max_states: 1_000_000 }
    }
}

/// Bidirectional breadth-first search for a chain of moves from `a` to `b`
/// through words of length at most `max_len`, visiting at most
/// `max_states` words in total.
pub fn equivalent_within<R: RewriteSystem>(sys: &R, a: &R::Word, b: &R::Word, bounds: SearchBounds) -> Verdict {
    let a = sys.canonical(a);
    let b = sys.canonical(b);
    if a == b {
        return Verdict::Equivalent { steps: 0 };
    }
    let mut dist = [HashMap::new(), HashMap::new()];
    dist[0].insert(a.clone(), 0usize);
    dist[1].insert(b.clone(), 0usize);
    let mut frontier = [vec![a], vec![b]];
    let mut depth = [0usize, 0usize];
    let mut visited = 2;
    while !frontier[0].is_empty() && !frontier[1].is_empty() {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        let other = 1 - side;
        depth[side] += 1;
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for w in std::mem::take(&mut frontier[side]) {
            for n in sys.neighbors(&w) {
                if sys.word_len(&n) > bounds.max_len {
                    continue;
                }
                let n = sys.canonical(&n);
                if dist[side].contains_key(&n) {
                    continue;
                }
                if let Some(&d) = dist[other].get(&n) {
                    let total = depth[side] + d;
                    best = Some(best.map_or(total, |b: usize| b.min(total)));
                }
                dist[side].insert(n.clone(), depth[side]);
                next.push(n);
                visited += 1;
                if visited > bounds.max_states {
                    return match best {
                        Some(steps) => Verdict::Equivalent { steps },
                        None => Verdict::NotFoundWithinBounds,
                    };
                }
            }
        }
        if let Some(steps) = best {
            return Verdict::Equivalent { steps };
        }
        frontier[side] = next;
    }
    Verdict::NotFoundWithinBounds
}

/// Every word reachable from `start` within the bounds (the start included).
pub fn closure<R: RewriteSystem>(sys: &R, start: &R::Word, bounds: SearchBounds) -> Vec<R::Word> {
    let start = sys.canonical(start);
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.clone());
    let mut order = vec![start];
    let mut i = 0;
    while i < order.len() && seen.len() < bounds.max_states {
        for n in sys.neighbors(&order[i]) {
            if sys.word_len(&n) <= bounds.max_len {
                let n = sys.canonical(&n);
                if seen.insert(n.clone()) {
                    order.push(n);
                }
            }
        }
        i += 1;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_k_knuth_search() {
        let sys = KKnuth;
        let a = vec![2, 1, 3];
        let b = vec![2, 3, 1];
        assert_eq!(equivalent_within(&sys, &a, &b, SearchBounds::for_words(3, 3)), Verdict::Equivalent { steps: 1 });
        assert_eq!(equivalent_within(&sys, &a, &a, SearchBounds::for_words(3, 3)), Verdict::Equivalent { steps: 0 });
        let c = vec![1, 2, 3];
        assert!(!equivalent_within(&sys, &a, &c, SearchBounds::for_words(3, 3)).is_equivalent());
    }

    #[test]
    fn budget_exhaustion_is_a_verdict() {
        let sys = KKnuth;
        let bounds = SearchBounds { max_len: 6, max_states: 3 };
        assert_eq!(equivalent_within(&sys, &vec![1, 2, 3], &vec![3, 2, 1], bounds), Verdict::NotFoundWithinBounds);
    }
}

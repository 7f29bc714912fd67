//! K-Knuth and weak K-Knuth relations on plain words.

use super::RewriteSystem;

/// K-Knuth moves, for `i < j < k`:
/// `ii ~ i`, `iji ~ jij`, `jik ~ jki`, `ikj ~ kij`.
#[derive(Debug, Clone, Copy, Default)]
pub struct KKnuth;

/// Weak K-Knuth moves, for `a < b < c`:
/// `aa ~ a`, `aba ~ bab`, `bac ~ bca`, `acb ~ cab`, and `ab ~ ba` as the
/// last two letters of the word.
#[derive(Debug, Clone, Copy, Default)]
pub struct WeakKKnuth;

fn with_window(w: &[u32], p: usize, old: usize, new: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.len() + new.len() - old);
    out.extend_from_slice(&w[..p]);
    out.extend_from_slice(new);
    out.extend_from_slice(&w[p + old..]);
    out
}

fn idempotent_moves(w: &[u32], out: &mut Vec<Vec<u32>>) {
    for p in 0..w.len() {
        if p + 1 < w.len() && w[p] == w[p + 1] {
            out.push(with_window(w, p, 2, &[w[p]]));
        }
        out.push(with_window(w, p, 1, &[w[p], w[p]]));
    }
}

fn braid_moves(w: &[u32], out: &mut Vec<Vec<u32>>) {
    for p in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        if a == c && a != b {
            out.push(with_window(w, p, 3, &[b, a, b]));
        }
    }
}

/// `y x z ~ y z x` when `x < y < z`, and `x z y ~ z x y` when `x < y < z`.
fn knuth_moves(w: &[u32], out: &mut Vec<Vec<u32>>) {
    for p in 0..w.len().saturating_sub(2) {
        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
        // a b c with b < a < c, or a c b reversed: first letter is the middle value
        if (b < a && a < c) || (c < a && a < b) {
            out.push(with_window(w, p, 3, &[a, c, b]));
        }
        // last letter is the middle value: a < c < b or b < c < a
        if (a < c && c < b) || (b < c && c < a) {
            out.push(with_window(w, p, 3, &[b, a, c]));
        }
    }
}

impl RewriteSystem for KKnuth {
    type Word = Vec<u32>;

    fn neighbors(&self, w: &Vec<u32>) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        idempotent_moves(w, &mut out);
        braid_moves(w, &mut out);
        knuth_moves(w, &mut out);
        out
    }

    fn word_len(&self, w: &Vec<u32>) -> usize {
        w.len()
    }
}

impl RewriteSystem for WeakKKnuth {
    type Word = Vec<u32>;

    fn neighbors(&self, w: &Vec<u32>) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        idempotent_moves(w, &mut out);
        braid_moves(w, &mut out);
        knuth_moves(w, &mut out);
        let n = w.len();
        if n >= 2 && w[n - 2] != w[n - 1] {
            out.push(with_window(w, n - 2, 2, &[w[n - 1], w[n - 2]]));
        }
        out
    }

    fn word_len(&self, w: &Vec<u32>) -> usize {
        w.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(sys: &impl RewriteSystem<Word = Vec<u32>>, w: &[u32], target: &[u32]) -> bool {
        sys.neighbors(&w.to_vec()).iter().any(|n| n == target)
    }

    #[test]
    fn k_knuth_moves() {
        assert!(has(&KKnuth, &[1, 1], &[1]));
        assert!(has(&KKnuth, &[1], &[1, 1]));
        assert!(has(&KKnuth, &[1, 2, 1], &[2, 1, 2]));
        assert!(has(&KKnuth, &[2, 1, 2], &[1, 2, 1]));
        assert!(has(&KKnuth, &[2, 1, 3], &[2, 3, 1]));
        assert!(has(&KKnuth, &[2, 3, 1], &[2, 1, 3]));
        assert!(has(&KKnuth, &[1, 3, 2], &[3, 1, 2]));
        assert!(has(&KKnuth, &[3, 1, 2], &[1, 3, 2]));
        assert!(!has(&KKnuth, &[1, 2, 3], &[1, 3, 2]));
        assert!(!has(&KKnuth, &[2, 1], &[1, 2]));
    }

    #[test]
    fn weak_moves_swap_the_final_pair() {
        assert!(has(&WeakKKnuth, &[3, 1, 2], &[3, 2, 1]));
        assert!(!has(&WeakKKnuth, &[1, 2, 3], &[2, 1, 3]));
    }
}

//! Dehn's algorithm for presentations whose relators satisfy C′(1/6), such as
//! the genus-2 surface relator `[A,B][C,D]` (pieces have length 1, relator
//! length 8).
//!
//! Letters are pushed onto a freely reduced stack. After each push, the
//! suffixes of the stack are compared with prefixes of the cyclic
//! permutations of every relator and its inverse; a match longer than half
//! the relator is replaced by the inverse of the remaining part of that
//! permutation, which is strictly shorter. Ties are broken by the longest
//! match, then by the fixed permutation order (relators in order, each with
//! its rotations of `r` before those of `r⁻¹`).

use super::{Letter, Word};

#[derive(Clone, Debug, Default)]
pub struct DehnReducer {
    /// Every cyclic permutation of every relator and its inverse.
    perms: Vec<Vec<Letter>>,
}

impl DehnReducer {
    pub fn new(relators: &[Word]) -> Self {
        let mut perms = Vec::new();
        for r in relators {
            for rr in [r.letters().to_vec(), r.inverse().into_letters()] {
                for k in 0..rr.len() {
                    let mut p = rr[k..].to_vec();
                    p.extend_from_slice(&rr[..k]);
                    perms.push(p);
                }
            }
        }
        DehnReducer { perms }
    }

    /// Longest (> half) match of a permutation prefix against a suffix of `stack`.
    fn best_match(&self, stack: &[Letter]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (pi, p) in self.perms.iter().enumerate() {
            let half = p.len() / 2;
            let max_k = p.len().min(stack.len());
            if max_k <= half {
                continue;
            }
            // the last stack letter must equal p[k-1]; scan k downward
            for k in (half + 1..=max_k).rev() {
                if best.is_some_and(|(_, bk)| bk >= k) {
                    break;
                }
                if stack[stack.len() - k..] == p[..k] {
                    best = Some((pi, k));
                    break;
                }
            }
        }
        best
    }

    /// Linear reduction: no subword of the result is more than half of a
    /// relator. Represents the same group element as the input.
    fn reduce_linear(&self, letters: impl DoubleEndedIterator<Item = Letter>) -> Vec<Letter> {
        let mut stack: Vec<Letter> = Vec::new();
        let mut pending: Vec<Letter> = letters.rev().collect();
        while let Some(x) = pending.pop() {
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
                continue;
            }
            stack.push(x);
            if let Some((pi, k)) = self.best_match(&stack) {
                stack.truncate(stack.len() - k);
                // (p[k..])^-1 is pushed so that its first letter is on top
                let p = &self.perms[pi];
                pending.extend(p[k..].iter().map(|l| l.inverse()));
            }
        }
        stack
    }

    /// Same element, no long relator pieces along the linear word.
    pub fn shorten(&self, w: &Word) -> Word {
        Word(self.reduce_linear(w.letters().iter().copied()))
    }

    /// Decides triviality. Works up to conjugacy: the word is cyclically
    /// reduced between passes and pieces wrapping around the end are found by
    /// rotation.
    pub fn is_trivial(&self, w: &Word) -> bool {
        let mut cur = self.reduce_linear(w.letters().iter().copied());
        loop {
            cur = Word(cur).cyclic_reduce().into_letters();
            if cur.is_empty() {
                return true;
            }
            match self.wraparound_start(&cur) {
                Some(start) => {
                    let rotated = cur[start..].iter().chain(cur[..start].iter()).copied();
                    let before = cur.len();
                    cur = self.reduce_linear(rotated.collect::<Vec<_>>().into_iter());
                    debug_assert!(cur.len() < before);
                }
                None => return false,
            }
        }
    }

    /// A start position whose long piece crosses the end of the cyclic word.
    fn wraparound_start(&self, w: &[Letter]) -> Option<usize> {
        let n = w.len();
        for start in 1..n {
            for p in &self.perms {
                let half = p.len() / 2;
                let limit = p.len().min(n);
                let mut k = 0;
                while k < limit && w[(start + k) % n] == p[k] {
                    k += 1;
                }
                if k > half && start + k > n {
                    return Some(start);
                }
            }
        }
        None
    }
}

//! Braid moves and the literal braid-orbit reduction procedure.
//!
//! A word is reduced exactly when no word in its braid orbit contains two equal adjacent
//! letters; reduced words of one element form a single orbit. [`reduce_by_braid_moves`]
//! applies that directly: search the orbit for `s s`, delete it, start over, and finally
//! return the shortlex-least member of the last orbit. It is exponential and serves as the
//! reference for [`crate::engine::WordEngine`] on short words.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{CoxeterError, Result};
use crate::matrix::{CoxeterMatrix, Label};
use crate::word::{CanonicalElement, Word};

/// Default bound on the size of one braid orbit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// All words reachable from `w` by braid moves, in breadth-first discovery order.
fn orbit_in_bfs_order(w: &Word, m: &CoxeterMatrix, cap: usize) -> Result<Vec<Vec<u8>>> {
    w.validate(m)?;
    let start = w.letters().to_vec();
    let mut seen: HashSet<Vec<u8>> = HashSet::from([start.clone()]);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(word) = queue.pop_front() {
        for next in braid_neighbors(&word, m) {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(CoxeterError::CapExceeded { cap });
                }
                order.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

/// Words obtained from `word` by a single braid move.
fn braid_neighbors(word: &[u8], m: &CoxeterMatrix) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a == b {
            continue;
        }
        let Label::Finite(k) = m.label(a as usize, b as usize) else {
            continue;
        };
        let k = k as usize;
        if i + k > word.len() {
            continue;
        }
        let alternates = word[i..i + k]
            .iter()
            .enumerate()
            .all(|(j, &l)| l == if j % 2 == 0 { a } else { b });
        if alternates {
            let mut next = word.to_vec();
            for (j, l) in next[i..i + k].iter_mut().enumerate() {
                *l = if j % 2 == 0 { b } else { a };
            }
            out.push(next);
        }
    }
    out
}

/// The braid orbit of `w`: every word of the same length reachable by braid moves.
pub fn braid_orbit(w: &Word, m: &CoxeterMatrix, cap: usize) -> Result<BTreeSet<Word>> {
    Ok(orbit_in_bfs_order(w, m, cap)?
        .into_iter()
        .map(Word::from_bytes)
        .collect())
}

/// Canonical form via braid-orbit search and `s s` deletion.
pub fn reduce_by_braid_moves(w: &Word, m: &CoxeterMatrix, cap: usize) -> Result<CanonicalElement> {
    let mut current = w.clone();
    loop {
        let orbit = orbit_in_bfs_order(&current, m, cap)?;
        let pair = orbit.iter().find_map(|word| {
            word.windows(2)
                .position(|p| p[0] == p[1])
                .map(|i| (word, i))
        });
        match pair {
            Some((word, i)) => {
                let mut shorter = word.clone();
                shorter.drain(i..i + 2);
                current = Word::from_bytes(shorter);
            }
            None => {
                let least = orbit.into_iter().min().unwrap_or_default();
                return Ok(CanonicalElement::from_canonical(least));
            }
        }
    }
}

//! The word problem: canonical forms, multiplication, inversion and right descents.
//!
//! Every element is stored under its shortlex normal form together with its right descent
//! set. Right multiplication by a generator `s` on an element `c` either goes down (when `s`
//! is a right descent) or up to `y = c·s`. Both directions are resolved with the dihedral
//! criterion: for `y = c·s` reduced and `b != s`, `b` is a right descent of `y` exactly when
//! `m(b, s)` is finite and `c` admits `m(b, s) - 1` alternating down-steps `b, s, b, ...`.
//! In that case `y` ends in the longest element of `W_{b,s}`, and `y·b` is recovered by
//! walking down to the coset-minimal `u` and back up along the alternating word of length
//! `m(b, s) - 1` that ends in `s`.
//!
//! The normal form of `y` is then the least of `NF(y·b)·b` over its right descents `b`, since
//! every reduced word of `y` ends in one of them.
//!
//! Results agree with the braid-move procedure in [`crate::braid`]; that module is the
//! literal reference and is exercised against this one in the tests.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{CoxeterError, Result};
use crate::matrix::{CoxeterMatrix, GenSet, Label};
use crate::word::{CanonicalElement, Word};

/// Default bound on the number of distinct elements one engine may memoize.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

type Key = Rc<[u8]>;

struct Node {
    descents: GenSet,
    /// `next[s]` caches the normal form of `self·s` once known.
    next: Vec<Option<Key>>,
}

/// Memoizing solver for the word problem of one Coxeter system.
///
/// The cache only ever holds facts about the group, so results never depend on the order of
/// calls. An engine is cheap to create; reuse one when doing many operations on the same
/// system.
pub struct WordEngine<'m> {
    matrix: &'m CoxeterMatrix,
    nodes: HashMap<Key, Node>,
    identity: Key,
    cap: usize,
}

impl<'m> WordEngine<'m> {
    pub fn new(matrix: &'m CoxeterMatrix) -> Self {
        Self::with_cap(matrix, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(matrix: &'m CoxeterMatrix, cap: usize) -> Self {
        let identity: Key = Rc::from(Vec::new());
        let mut nodes = HashMap::new();
        nodes.insert(
            identity.clone(),
            Node {
                descents: GenSet::EMPTY,
                next: vec![None; matrix.rank()],
            },
        );
        WordEngine {
            matrix,
            nodes,
            identity,
            cap,
        }
    }

    pub fn matrix(&self) -> &'m CoxeterMatrix {
        self.matrix
    }

    /// Number of elements memoized so far.
    pub fn cached_elements(&self) -> usize {
        self.nodes.len()
    }

    /// Canonical form of the element represented by `w`.
    pub fn reduce(&mut self, w: &Word) -> Result<CanonicalElement> {
        w.validate(self.matrix)?;
        let key = self.locate(w.letters())?;
        Ok(CanonicalElement::from_canonical(key.to_vec()))
    }

    pub fn multiply(&mut self, a: &CanonicalElement, b: &CanonicalElement) -> Result<CanonicalElement> {
        self.check_letters(a.letters())?;
        self.check_letters(b.letters())?;
        let mut key = self.locate(a.letters())?;
        for &s in b.letters() {
            key = self.step(&key, s)?;
        }
        Ok(CanonicalElement::from_canonical(key.to_vec()))
    }

    /// `a·s` for a single generator `s`.
    pub fn multiply_generator(&mut self, a: &CanonicalElement, s: usize) -> Result<CanonicalElement> {
        self.check_letters(a.letters())?;
        self.matrix.check_index(s)?;
        let key = self.locate(a.letters())?;
        let key = self.step(&key, s as u8)?;
        Ok(CanonicalElement::from_canonical(key.to_vec()))
    }

    /// `s·a` for a single generator `s`.
    pub fn left_multiply_generator(&mut self, s: usize, a: &CanonicalElement) -> Result<CanonicalElement> {
        self.matrix.check_index(s)?;
        let mut letters = Vec::with_capacity(a.length() + 1);
        letters.push(s as u8);
        letters.extend_from_slice(a.letters());
        self.reduce(&Word::from_bytes(letters))
    }

    pub fn invert(&mut self, a: &CanonicalElement) -> Result<CanonicalElement> {
        self.reduce(&a.to_word().reversed())
    }

    /// Generators `t` with `ℓ(a·t) < ℓ(a)`.
    pub fn right_descents(&mut self, a: &CanonicalElement) -> Result<GenSet> {
        self.check_letters(a.letters())?;
        let key = self.locate(a.letters())?;
        Ok(self.nodes[&key].descents)
    }

    fn check_letters(&self, letters: &[u8]) -> Result<()> {
        letters
            .iter()
            .try_for_each(|&l| self.matrix.check_index(l as usize))
    }

    fn locate(&mut self, letters: &[u8]) -> Result<Key> {
        if let Some((k, _)) = self.nodes.get_key_value(letters) {
            return Ok(k.clone());
        }
        let mut key = self.identity.clone();
        for &s in letters {
            key = self.step(&key, s)?;
        }
        Ok(key)
    }

    fn descents(&self, key: &Key) -> GenSet {
        self.nodes[key].descents
    }

    fn step(&mut self, key: &Key, s: u8) -> Result<Key> {
        if let Some(n) = &self.nodes[key].next[s as usize] {
            return Ok(n.clone());
        }
        let result = if self.descents(key).contains(s as usize) {
            self.down(key, s)?
        } else {
            self.up(key, s)?
        };
        self.link(key, s, &result);
        Ok(result)
    }

    fn link(&mut self, a: &Key, s: u8, b: &Key) {
        if let Some(node) = self.nodes.get_mut(a) {
            node.next[s as usize] = Some(b.clone());
        }
        if let Some(node) = self.nodes.get_mut(b) {
            node.next[s as usize] = Some(a.clone());
        }
    }

    /// `key·r` where `r` is a right descent of `key`.
    fn down(&mut self, key: &Key, r: u8) -> Result<Key> {
        let (&last, prefix) = key.split_last().expect("identity has no descents");
        let prefix = self
            .nodes
            .get_key_value(prefix)
            .map(|(k, _)| k.clone())
            .expect("prefixes of cached normal forms are cached");
        if r == last {
            return Ok(prefix);
        }
        Ok(self
            .dihedral_neighbor(&prefix, last, r)?
            .expect("descent set disagrees with the dihedral walk"))
    }

    /// For `y = c·s` reduced, returns the normal form of `y·b` when `b` is a right descent of
    /// `y`, and `None` otherwise.
    fn dihedral_neighbor(&mut self, c: &Key, s: u8, b: u8) -> Result<Option<Key>> {
        let m = match self.matrix.label(b as usize, s as usize) {
            Label::Finite(m) => m as usize,
            Label::Infinity => return Ok(None),
        };
        let mut x = c.clone();
        let mut letter = b;
        for _ in 0..m - 1 {
            if !self.descents(&x).contains(letter as usize) {
                return Ok(None);
            }
            x = self.step(&x, letter)?;
            letter = if letter == b { s } else { b };
        }
        // x is now coset-minimal; climb the alternating word of length m - 1 ending in s.
        let mut letter = if (m - 1) % 2 == 1 { s } else { b };
        for _ in 0..m - 1 {
            x = self.step(&x, letter)?;
            letter = if letter == b { s } else { b };
        }
        Ok(Some(x))
    }

    /// `c·s` where `s` is not a right descent of `c`.
    fn up(&mut self, c: &Key, s: u8) -> Result<Key> {
        let mut candidate = c.to_vec();
        candidate.push(s);
        if let Some((k, _)) = self.nodes.get_key_value(candidate.as_slice()) {
            return Ok(k.clone());
        }

        let mut descents = GenSet::singleton(s as usize);
        let mut below: Vec<(u8, Key)> = vec![(s, c.clone())];
        let mut best = candidate;
        for b in 0..self.matrix.rank() as u8 {
            if b == s {
                continue;
            }
            if let Some(n) = self.dihedral_neighbor(c, s, b)? {
                descents.insert(b as usize);
                let mut word = n.to_vec();
                word.push(b);
                if word < best {
                    best = word;
                }
                below.push((b, n));
            }
        }

        let key = match self.nodes.get_key_value(best.as_slice()) {
            Some((k, _)) => k.clone(),
            None => {
                if self.nodes.len() >= self.cap {
                    return Err(CoxeterError::CapExceeded { cap: self.cap });
                }
                let key: Key = Rc::from(best);
                self.nodes.insert(
                    key.clone(),
                    Node {
                        descents,
                        next: vec![None; self.matrix.rank()],
                    },
                );
                key
            }
        };
        for (b, n) in below {
            self.link(&key, b, &n);
        }
        Ok(key)
    }
}

/// Canonical form of `w` over `m`.
pub fn reduce(w: &Word, m: &CoxeterMatrix) -> Result<CanonicalElement> {
    WordEngine::new(m).reduce(w)
}

pub fn multiply(a: &CanonicalElement, b: &CanonicalElement, m: &CoxeterMatrix) -> Result<CanonicalElement> {
    WordEngine::new(m).multiply(a, b)
}

pub fn invert(a: &CanonicalElement, m: &CoxeterMatrix) -> Result<CanonicalElement> {
    WordEngine::new(m).invert(a)
}

pub fn right_descents(a: &CanonicalElement, m: &CoxeterMatrix) -> Result<GenSet> {
    WordEngine::new(m).right_descents(a)
}

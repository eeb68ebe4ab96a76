//! Words over the generators and their canonical (shortlex-minimal reduced) forms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::matrix::{CoxeterMatrix, GenSet, MAX_SUPPORTED_RANK};

/// A finite sequence of generator indices. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// Panics if a letter does not fit the supported rank.
    pub fn new<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        Word(
            letters
                .into_iter()
                .map(|l| {
                    assert!(l < MAX_SUPPORTED_RANK, "generator index {l} too large");
                    l as u8
                })
                .collect(),
        )
    }

    pub(crate) fn from_bytes(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn letter_set(&self) -> GenSet {
        self.0.iter().map(|&l| l as usize).collect()
    }

    /// Checks every letter against the rank of `m`.
    pub fn validate(&self, m: &CoxeterMatrix) -> Result<()> {
        for &l in &self.0 {
            m.check_index(l as usize)?;
        }
        Ok(())
    }
}

impl From<&[usize]> for Word {
    fn from(letters: &[usize]) -> Self {
        Word::new(letters.iter().copied())
    }
}

/// Parse error for space-separated index lists.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid generator index {token:?}")]
pub struct ParseWordError {
    pub token: String,
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Parses space-separated generator indices; the empty string is the identity.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<u8>()
                    .ok()
                    .filter(|&v| (v as usize) < MAX_SUPPORTED_RANK)
                    .ok_or_else(|| ParseWordError {
                        token: tok.to_string(),
                    })
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[u8]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Compares by length first, then lexicographically by generator index.
pub fn shortlex_cmp(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The shortlex-least reduced word of a group element.
///
/// Two canonical elements of the same system are equal exactly when they represent the same
/// group element. Values are produced by [`crate::reduce`] and friends; the ordering is
/// shortlex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CanonicalElement {
    letters: Vec<u8>,
}

impl CanonicalElement {
    pub fn identity() -> Self {
        CanonicalElement::default()
    }

    /// Wraps letters that are already known to be the shortlex-least reduced word.
    pub(crate) fn from_canonical(letters: Vec<u8>) -> Self {
        CanonicalElement { letters }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// The Coxeter length of the element.
    pub fn length(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word(self.letters.clone())
    }

    /// Letters with generator indices renamed through `map` (new index -> old index).
    pub fn relabeled(&self, map: &[usize]) -> CanonicalElement {
        CanonicalElement {
            letters: self.letters.iter().map(|&l| map[l as usize] as u8).collect(),
        }
    }
}

impl PartialOrd for CanonicalElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalElement {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex_cmp(&self.letters, &other.letters)
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// The set of generators appearing in `a`.
///
/// Every reduced word of an element uses the same letters, so this is a function of the
/// element.
pub fn support(a: &CanonicalElement) -> GenSet {
    a.letters.iter().map(|&l| l as usize).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: Word = "0 1  2".parse().unwrap();
        assert_eq!(w.letters(), &[0, 1, 2]);
        assert_eq!(w.to_string(), "0 1 2");
        assert_eq!("".parse::<Word>().unwrap(), Word::identity());
        assert!("0 x".parse::<Word>().is_err());
        assert!("-1".parse::<Word>().is_err());
    }

    #[test]
    fn shortlex_orders_length_first() {
        assert_eq!(shortlex_cmp(&[1], &[0, 0]), Ordering::Less);
        assert_eq!(shortlex_cmp(&[0, 1], &[1, 0]), Ordering::Less);
    }

    #[test]
    fn support_reads_letters() {
        assert!(support(&CanonicalElement::identity()).is_empty());
        let e = CanonicalElement::from_canonical(vec![0, 1, 0]);
        assert_eq!(support(&e), GenSet::from_iter([0, 1]));
        let e = CanonicalElement::from_canonical(vec![2]);
        assert_eq!(support(&e), GenSet::singleton(2));
    }
}

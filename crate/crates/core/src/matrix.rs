//! Coxeter matrices, edge labels and generator subsets.

use std::fmt;

use crate::error::{CoxeterError, Result};

/// Default upper bound on the rank accepted by [`validate_matrix`].
pub const DEFAULT_MAX_RANK: usize = 10;

/// Hard limit imposed by the [`GenSet`] bitmask.
pub const MAX_SUPPORTED_RANK: usize = 32;

/// An entry `m(s, t)` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }

    /// True when the pair is joined by an edge of the Coxeter diagram (`m >= 3` or `m = ∞`).
    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m >= 3,
            Label::Infinity => true,
        }
    }

    /// Decodes the on-disk convention where `0` stands for infinity.
    pub fn from_encoded(value: u32) -> Self {
        if value == 0 {
            Label::Infinity
        } else {
            Label::Finite(value)
        }
    }

    pub fn encoded(self) -> u32 {
        self.finite().unwrap_or(0)
    }
}

impl From<u32> for Label {
    fn from(m: u32) -> Self {
        Label::Finite(m)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A set of generator indices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_bits(bits: u32) -> Self {
        GenSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All generators `0..rank`.
    pub fn full(rank: usize) -> Self {
        debug_assert!(rank <= MAX_SUPPORTED_RANK);
        if rank >= 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        GenSet(1 << index)
    }

    pub fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1 << index);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (!self.is_empty()).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> GenSet {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: GenSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GenSet(cur))
        })
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GenSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GenSet {
    /// Space-separated indices, the same form the command line accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// A validated Coxeter matrix: symmetric, ones on the diagonal, off-diagonal labels `>= 2` or `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Label>,
}

/// Validates a raw label array against the default rank bound.
pub fn validate_matrix(raw: &[Vec<Label>]) -> Result<CoxeterMatrix> {
    validate_matrix_with_max_rank(raw, DEFAULT_MAX_RANK)
}

pub fn validate_matrix_with_max_rank(raw: &[Vec<Label>], max_rank: usize) -> Result<CoxeterMatrix> {
    let rank = raw.len();
    for (row, entries) in raw.iter().enumerate() {
        if entries.len() != rank {
            return Err(CoxeterError::NotSquare {
                row,
                len: entries.len(),
                expected: rank,
            });
        }
    }
    if rank == 0 {
        return Err(CoxeterError::EmptyMatrix);
    }
    let max = max_rank.min(MAX_SUPPORTED_RANK);
    if rank > max {
        return Err(CoxeterError::RankTooLarge { rank, max });
    }
    for (i, row) in raw.iter().enumerate() {
        for (j, &label) in row.iter().enumerate() {
            if i == j {
                if label != Label::Finite(1) {
                    return Err(CoxeterError::DiagonalNotOne { index: i });
                }
                continue;
            }
            if matches!(label, Label::Finite(m) if m < 2) {
                return Err(CoxeterError::OffDiagonalTooSmall { row: i, col: j });
            }
            if label != raw[j][i] {
                return Err(CoxeterError::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(CoxeterMatrix {
        rank,
        entries: raw.iter().flatten().copied().collect(),
    })
}

impl CoxeterMatrix {
    /// Builds a matrix from integer rows where `0` encodes infinity.
    pub fn from_encoded(rows: &[Vec<u32>]) -> Result<Self> {
        let raw: Vec<Vec<Label>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Label::from_encoded(v)).collect())
            .collect();
        validate_matrix(&raw)
    }

    /// Rank-`rank` matrix with every off-diagonal label 2 except the listed edges.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, Label)]) -> Result<Self> {
        let mut raw = vec![vec![Label::Finite(2); rank]; rank];
        for (i, row) in raw.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(i, j, label) in edges {
            if i >= rank || j >= rank {
                return Err(CoxeterError::IndexOutOfRange {
                    index: i.max(j),
                    rank,
                });
            }
            raw[i][j] = label;
            raw[j][i] = label;
        }
        validate_matrix_with_max_rank(&raw, MAX_SUPPORTED_RANK)
    }

    /// Linear diagram `0 - 1 - ... - (n-1)` with the given consecutive labels.
    pub fn chain(labels: &[Label]) -> Result<Self> {
        let edges: Vec<_> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (i, i + 1, l))
            .collect();
        Self::from_edges(labels.len() + 1, &edges)
    }

    pub fn dihedral(label: Label) -> Self {
        Self::from_edges(2, &[(0, 1, label)]).expect("dihedral label must be >= 2")
    }

    pub fn type_a(n: usize) -> Self {
        Self::chain(&vec![Label::Finite(3); n.saturating_sub(1)]).expect("A_n")
    }

    /// `B_n`; the label 4 sits on the edge `0 - 1`.
    pub fn type_b(n: usize) -> Self {
        assert!(n >= 2);
        let mut labels = vec![Label::Finite(3); n - 1];
        labels[0] = Label::Finite(4);
        Self::chain(&labels).expect("B_n")
    }

    /// `D_n`: a chain `0 - ... - (n-2)` with `n-1` also attached to `n-3`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4);
        let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, Label::Finite(3))).collect();
        edges.push((n - 3, n - 1, Label::Finite(3)));
        Self::from_edges(n, &edges).expect("D_n")
    }

    /// `E_n` for n in 6..=8: chain `0 - ... - (n-2)` with `n-1` attached to vertex 2.
    pub fn type_e(n: usize) -> Self {
        assert!((6..=8).contains(&n));
        let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, Label::Finite(3))).collect();
        edges.push((2, n - 1, Label::Finite(3)));
        Self::from_edges(n, &edges).expect("E_n")
    }

    pub fn type_f4() -> Self {
        Self::chain(&[3, 4, 3].map(Label::Finite)).expect("F4")
    }

    /// `H_3` or `H_4`; the label 5 sits on the edge `0 - 1`.
    pub fn type_h(n: usize) -> Self {
        assert!(n == 3 || n == 4);
        let mut labels = vec![Label::Finite(3); n - 1];
        labels[0] = Label::Finite(5);
        Self::chain(&labels).expect("H_n")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, s: usize, t: usize) -> Label {
        self.entries[s * self.rank + t]
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank)
    }

    pub fn rows(&self) -> Vec<Vec<Label>> {
        self.entries.chunks(self.rank).map(<[Label]>::to_vec).collect()
    }

    /// Rows in the on-disk encoding (`0` for infinity).
    pub fn encoded_rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.rank)
            .map(|r| r.iter().map(|l| l.encoded()).collect())
            .collect()
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.rank {
            Ok(())
        } else {
            Err(CoxeterError::IndexOutOfRange {
                index,
                rank: self.rank,
            })
        }
    }

    pub fn check_subset(&self, subset: GenSet) -> Result<()> {
        match subset.max() {
            Some(i) => self.check_index(i),
            None => Ok(()),
        }
    }

    /// The Coxeter matrix of the parabolic subsystem on `subset`, re-indexed densely from 0
    /// in increasing order. The second component maps new indices to old ones.
    ///
    /// Returns `None` for the empty subset, whose parabolic subgroup is trivial.
    pub fn restrict(&self, subset: GenSet) -> Result<Option<(CoxeterMatrix, Vec<usize>)>> {
        self.check_subset(subset)?;
        if subset.is_empty() {
            return Ok(None);
        }
        let map: Vec<usize> = subset.iter().collect();
        let n = map.len();
        let entries = map
            .iter()
            .flat_map(|&i| map.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.label(i, j))
            .collect();
        Ok(Some((CoxeterMatrix { rank: n, entries }, map)))
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.rank) {
            let cells: Vec<String> = row.iter().map(Label::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

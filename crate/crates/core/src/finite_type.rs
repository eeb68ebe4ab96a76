//! Diagram components, recognition of finite type, longest elements and group orders.
//!
//! Finiteness is decided by matching each connected diagram against the classification
//! templates (`A_n`, `B_n`, `D_n`, `E_6..8`, `F_4`, `H_3`, `H_4`, `I_2(m)`), using only
//! integer data.

use std::fmt;

use crate::engine::WordEngine;
use crate::error::{CoxeterError, Result};
use crate::matrix::{CoxeterMatrix, GenSet, Label};
use crate::word::CanonicalElement;

/// A connected component of the Coxeter diagram restricted to some subset of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramComponent {
    pub members: GenSet,
    /// Pairs `(s, t)` with `s < t` joined by an edge, with their label.
    pub edges: Vec<(usize, usize, Label)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTypeTag {
    pub family: Family,
    /// Rank for `A`, `B`, `D`, `E`, `F`, `H`; the edge label for `I2`.
    pub parameter: u32,
}

impl FiniteTypeTag {
    /// Builds a tag, normalizing `I2(3)` to `A2` and `I2(4)` to `B2`. Returns `None` for pairs
    /// outside the classification.
    pub fn new(family: Family, parameter: u32) -> Option<Self> {
        let tag = match (family, parameter) {
            (Family::I2, 3) => FiniteTypeTag { family: Family::A, parameter: 2 },
            (Family::I2, 4) => FiniteTypeTag { family: Family::B, parameter: 2 },
            _ => FiniteTypeTag { family, parameter },
        };
        let legal = match tag.family {
            Family::A => tag.parameter >= 1,
            Family::B => tag.parameter >= 2,
            Family::D => tag.parameter >= 4,
            Family::E => (6..=8).contains(&tag.parameter),
            Family::F => tag.parameter == 4,
            Family::H => tag.parameter == 3 || tag.parameter == 4,
            Family::I2 => tag.parameter >= 5,
        };
        legal.then_some(tag)
    }

    /// Number of generators of the type.
    pub fn rank(self) -> usize {
        match self.family {
            Family::I2 => 2,
            _ => self.parameter as usize,
        }
    }
}

impl fmt::Display for FiniteTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.parameter),
            family => write!(f, "{:?}{}", family, self.parameter),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Finite(FiniteTypeTag),
    Infinite,
}

impl Classification {
    pub fn is_finite(self) -> bool {
        matches!(self, Classification::Finite(_))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Finite(tag) => tag.fmt(f),
            Classification::Infinite => f.write_str("infinite"),
        }
    }
}

/// Connected components of the diagram induced on `subset`, sorted by least member.
pub fn components(m: &CoxeterMatrix, subset: GenSet) -> Result<Vec<DiagramComponent>> {
    m.check_subset(subset)?;
    let mut remaining = subset;
    let mut out = Vec::new();
    while let Some(start) = remaining.min() {
        let mut members = GenSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in remaining.iter() {
                if !members.contains(u) && m.label(v, u).is_edge() {
                    members.insert(u);
                    stack.push(u);
                }
            }
        }
        remaining = remaining.difference(members);
        let edges = members
            .iter()
            .flat_map(|s| members.iter().filter(move |&t| t > s).map(move |t| (s, t)))
            .filter_map(|(s, t)| {
                let l = m.label(s, t);
                l.is_edge().then_some((s, t, l))
            })
            .collect();
        out.push(DiagramComponent { members, edges });
    }
    Ok(out)
}

/// Finite type of a connected component, or [`Classification::Infinite`].
pub fn classify_component(c: &DiagramComponent, m: &CoxeterMatrix) -> Classification {
    classify_diagram(c, m).map_or(Classification::Infinite, Classification::Finite)
}

fn classify_diagram(c: &DiagramComponent, m: &CoxeterMatrix) -> Option<FiniteTypeTag> {
    let n = c.members.len();
    if n == 1 {
        return FiniteTypeTag::new(Family::A, 1);
    }
    // finite types are trees with finite labels
    if c.edges.len() != n - 1 || c.edges.iter().any(|e| e.2 == Label::Infinity) {
        return None;
    }
    if n == 2 {
        return FiniteTypeTag::new(Family::I2, c.edges[0].2.finite()?);
    }
    if c.edges.iter().any(|e| !matches!(e.2, Label::Finite(3..=5))) {
        return None;
    }

    let vertices: Vec<usize> = c.members.iter().collect();
    let neighbors = |v: usize| -> Vec<usize> {
        vertices
            .iter()
            .copied()
            .filter(|&u| u != v && m.label(u, v).is_edge())
            .collect()
    };
    let degrees: Vec<usize> = vertices.iter().map(|&v| neighbors(v).len()).collect();
    let branch: Vec<usize> = vertices
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d >= 3)
        .map(|(&v, _)| v)
        .collect();

    match branch.as_slice() {
        [] => {
            // a path: read labels from one end to the other
            let end = vertices[degrees.iter().position(|&d| d == 1)?];
            let mut labels = Vec::with_capacity(n - 1);
            let (mut prev, mut cur) = (usize::MAX, end);
            loop {
                let next = neighbors(cur).into_iter().find(|&u| u != prev);
                match next {
                    Some(u) => {
                        labels.push(m.label(cur, u).finite()?);
                        prev = cur;
                        cur = u;
                    }
                    None => break,
                }
            }
            classify_path(&labels)
        }
        [center] => {
            if degrees.iter().any(|&d| d > 3) || c.edges.iter().any(|e| e.2 != Label::Finite(3)) {
                return None;
            }
            let mut arms: Vec<usize> = neighbors(*center)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*center, start, 1);
                    while let Some(u) = neighbors(cur).into_iter().find(|&u| u != prev) {
                        prev = cur;
                        cur = u;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => FiniteTypeTag::new(Family::D, (*k + 3) as u32),
                [1, 2, k @ 2..=4] => FiniteTypeTag::new(Family::E, (*k + 4) as u32),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Path diagrams with labels in 3..=5, read end to end.
fn classify_path(labels: &[u32]) -> Option<FiniteTypeTag> {
    let n = (labels.len() + 1) as u32;
    let special: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, l)| l != 3)
        .collect();
    let at_end = |i: usize| i == 0 || i == labels.len() - 1;
    match special.as_slice() {
        [] => FiniteTypeTag::new(Family::A, n),
        [(i, 4)] if at_end(*i) => FiniteTypeTag::new(Family::B, n),
        [(1, 4)] if n == 4 => FiniteTypeTag::new(Family::F, 4),
        [(i, 5)] if at_end(*i) && n <= 4 => FiniteTypeTag::new(Family::H, n),
        _ => None,
    }
}

/// True when every component of the induced diagram has finite type. The empty set is
/// spherical.
pub fn is_spherical(m: &CoxeterMatrix, subset: GenSet) -> Result<bool> {
    Ok(components(m, subset)?
        .iter()
        .all(|c| classify_component(c, m).is_finite()))
}

/// Longest element of the finite parabolic subgroup on `subset`, by greedy ascent.
pub fn longest_element(m: &CoxeterMatrix, subset: GenSet) -> Result<CanonicalElement> {
    longest_element_with(&mut WordEngine::new(m), subset)
}

/// [`longest_element`] reusing an existing engine.
pub fn longest_element_with(engine: &mut WordEngine<'_>, subset: GenSet) -> Result<CanonicalElement> {
    if !is_spherical(engine.matrix(), subset)? {
        return Err(CoxeterError::NotSpherical);
    }
    let mut w = CanonicalElement::identity();
    loop {
        let descents = engine.right_descents(&w)?;
        match subset.difference(descents).min() {
            Some(t) => w = engine.multiply_generator(&w, t)?,
            None => return Ok(w),
        }
    }
}

/// Order of the irreducible finite group of the given type.
pub fn coxeter_order(tag: FiniteTypeTag) -> u64 {
    let factorial = |n: u64| (1..=n).product::<u64>();
    let n = tag.parameter as u64;
    match tag.family {
        Family::A => factorial(n + 1),
        Family::B => (1u64 << n) * factorial(n),
        Family::D => (1u64 << (n - 1)) * factorial(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::H => {
            if n == 3 {
                120
            } else {
                14_400
            }
        }
        Family::I2 => 2 * n,
    }
}

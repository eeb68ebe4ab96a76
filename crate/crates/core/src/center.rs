//! The center of a Coxeter group and the essential parabolic subgroup.
//!
//! A central element is the longest element of a spherical subset that splits off as a
//! direct factor, so the center is assembled per irreducible component: each finite
//! component contributes its longest element when that element is central in it, and
//! infinite components contribute nothing. The result is elementary abelian of rank equal to
//! the number of contributing components.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::engine::WordEngine;
use crate::error::{CoxeterError, Result};
use crate::finite_type::{classify_component, components, longest_element_with, DiagramComponent};
use crate::matrix::{CoxeterMatrix, GenSet};
use crate::word::CanonicalElement;

/// Split of the generators into the union of infinite components (`members`) and the union
/// of finite ones (`complement`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EssentialSubset {
    pub members: GenSet,
    pub complement: GenSet,
}

pub fn essential_subset(m: &CoxeterMatrix) -> EssentialSubset {
    let mut split = EssentialSubset {
        members: GenSet::EMPTY,
        complement: GenSet::EMPTY,
    };
    for c in components(m, m.generators()).expect("full generator set is in range") {
        if classify_component(&c, m).is_finite() {
            split.complement = split.complement.union(c.members);
        } else {
            split.members = split.members.union(c.members);
        }
    }
    split
}

/// The center of `W`: `2^rank_n` elements generated by commuting involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterDescription {
    pub rank_n: usize,
    /// Central longest elements, ordered by least support member.
    pub generators: Vec<CanonicalElement>,
    /// All subset products of `generators`, in shortlex order.
    pub elements: Vec<CanonicalElement>,
    /// Support of each generator, in the same order.
    pub supports: Vec<GenSet>,
}

/// The central longest element of a finite irreducible component, or `None` when its center
/// is trivial.
pub fn component_center(m: &CoxeterMatrix, c: &DiagramComponent) -> Result<Option<CanonicalElement>> {
    component_center_with(&mut WordEngine::new(m), c)
}

fn component_center_with(engine: &mut WordEngine<'_>, c: &DiagramComponent) -> Result<Option<CanonicalElement>> {
    if !classify_component(c, engine.matrix()).is_finite() {
        return Err(CoxeterError::NotSpherical);
    }
    let w0 = longest_element_with(engine, c.members)?;
    for t in c.members.iter() {
        let right = engine.multiply_generator(&w0, t)?;
        let left = engine.left_multiply_generator(t, &w0)?;
        if right != left {
            return Ok(None);
        }
    }
    Ok(Some(w0))
}

pub fn center(m: &CoxeterMatrix) -> Result<CenterDescription> {
    center_with(&mut WordEngine::new(m))
}

/// [`center`] reusing an existing engine.
pub fn center_with(engine: &mut WordEngine<'_>) -> Result<CenterDescription> {
    let m = engine.matrix();
    let mut generators = Vec::new();
    let mut supports = Vec::new();
    for c in components(m, m.generators())? {
        if !classify_component(&c, m).is_finite() {
            continue;
        }
        if let Some(z) = component_center_with(engine, &c)? {
            generators.push(z);
            supports.push(c.members);
        }
    }
    let rank_n = generators.len();
    let mut elements = Vec::with_capacity(1 << rank_n);
    for mask in 0u32..(1 << rank_n) {
        let mut product = CanonicalElement::identity();
        for (i, g) in generators.iter().enumerate() {
            if mask & (1 << i) != 0 {
                product = engine.multiply(&product, g)?;
            }
        }
        elements.push(product);
    }
    elements.sort();
    Ok(CenterDescription {
        rank_n,
        generators,
        elements,
        supports,
    })
}

/// Outcome of checking `Z(W) = Z(W_{S∖S̃})` and `Z(W_{S̃}) = 1` on one system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    /// Every center generator is supported inside the finite part.
    pub supports_in_finite_part: bool,
    /// The center of the finite part, mapped back, equals the center of `W`.
    pub finite_part_center_matches: bool,
    /// The center of the essential parabolic subgroup is trivial.
    pub essential_center_trivial: bool,
    /// New index -> original index for the finite part.
    pub finite_part_index_map: Vec<usize>,
    /// New index -> original index for the essential part.
    pub essential_index_map: Vec<usize>,
}

impl Theorem2Report {
    pub fn all_hold(&self) -> bool {
        self.supports_in_finite_part && self.finite_part_center_matches && self.essential_center_trivial
    }
}

/// Center of the parabolic subsystem on `subset`, written in the original indices.
fn parabolic_center(m: &CoxeterMatrix, subset: GenSet) -> Result<(Vec<CanonicalElement>, Vec<usize>)> {
    match m.restrict(subset)? {
        None => Ok((vec![CanonicalElement::identity()], Vec::new())),
        Some((sub, map)) => {
            let z = center(&sub)?;
            let elements = z.elements.iter().map(|e| e.relabeled(&map)).collect();
            Ok((elements, map))
        }
    }
}

pub fn check_theorem2(m: &CoxeterMatrix) -> Result<Theorem2Report> {
    let split = essential_subset(m);
    let z = center(m)?;
    let supports_in_finite_part = z.supports.iter().all(|s| s.is_subset(split.complement));

    let (finite_center, finite_part_index_map) = parabolic_center(m, split.complement)?;
    let finite_part_center_matches = finite_center.iter().collect::<BTreeSet<_>>()
        == z.elements.iter().collect::<BTreeSet<_>>();

    let (essential_center, essential_index_map) = parabolic_center(m, split.members)?;
    let essential_center_trivial = essential_center == [CanonicalElement::identity()];

    Ok(Theorem2Report {
        supports_in_finite_part,
        finite_part_center_matches,
        essential_center_trivial,
        finite_part_index_map,
        essential_index_map,
    })
}

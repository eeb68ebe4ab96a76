//! Brute-force verification machinery, independent of the word-problem engine.
//!
//! Group elements are modelled by matrices of the (faithful) geometric representation.
//! Breadth-first search from the identity, expanding each layer in shortlex order of its
//! words and trying generators in increasing order, reaches every element first along its
//! shortlex-least word; those words are what the enumeration reports. Commutation is tested
//! on the matrices. Nothing here calls into [`crate::engine`].

mod representation;

use nalgebra::DMatrix;

use crate::error::{CoxeterError, Result};
use crate::matrix::{CoxeterMatrix, GenSet};
use crate::word::{CanonicalElement, Word};

use representation::{bilinear_entry, reflections, Mat, MatIndex};

/// Default cap on enumerated elements.
pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

/// Default radius for ball searches in infinite groups.
pub const DEFAULT_BALL_RADIUS: usize = 8;

/// Eigenvalue threshold for [`gram_positive_definite`].
pub const GRAM_TOLERANCE: f64 = 1e-9;

/// Elements found by breadth-first search, sorted shortlex.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub elements: Vec<CanonicalElement>,
    /// False when the search stopped at the cap or radius before the group closed.
    pub complete: bool,
    matrices: Vec<Mat>,
    model: GeometricModel,
}

/// `W` acting by reflections on the span of the simple roots. The action is faithful, so two
/// words are equal in `W` iff their matrices agree.
#[derive(Clone, Debug)]
pub struct GeometricModel {
    generators: Vec<Mat>,
}

impl GeometricModel {
    pub fn new(m: &CoxeterMatrix) -> Self {
        GeometricModel {
            generators: reflections(m),
        }
    }

    fn evaluate(&self, w: &Word) -> Mat {
        w.letters()
            .iter()
            .fold(Mat::identity(self.generators.len()), |acc, &s| {
                acc.mul(&self.generators[s as usize])
            })
    }

    pub fn same_element(&self, u: &Word, v: &Word) -> bool {
        self.evaluate(u).approx_eq(&self.evaluate(v))
    }

    pub fn is_identity(&self, w: &Word) -> bool {
        self.same_element(w, &Word::identity())
    }

    /// Whether `w` commutes with every generator.
    pub fn is_central(&self, w: &Word) -> bool {
        self.commutes_with_generators(&self.evaluate(w))
    }

    fn commutes_with_generators(&self, x: &Mat) -> bool {
        self.generators
            .iter()
            .all(|g| x.mul(g).approx_eq(&g.mul(x)))
    }
}

impl EnumerationResult {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of the element represented by `w`, when it lies in the enumerated set.
    pub fn position_of(&self, w: &Word) -> Option<usize> {
        let x = self.evaluate(w);
        self.matrices.iter().position(|y| y.approx_eq(&x))
    }

    pub fn model(&self) -> &GeometricModel {
        &self.model
    }

    /// Whether two words represent the same group element, decided in the representation.
    pub fn same_element(&self, u: &Word, v: &Word) -> bool {
        self.model.same_element(u, v)
    }

    fn evaluate(&self, w: &Word) -> Mat {
        self.model.evaluate(w)
    }
}

fn search(m: &CoxeterMatrix, cap: usize, radius: usize, strict: bool) -> Result<EnumerationResult> {
    let model = GeometricModel::new(m);
    let generators = &model.generators;
    let rank = m.rank();
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut matrices = vec![Mat::identity(rank)];
    let mut index = MatIndex::new();
    index.insert(&matrices[0], 0);

    let mut layer = 0..1;
    let mut depth = 0;
    let mut complete = true;
    'outer: while !layer.is_empty() {
        if depth == radius {
            // closed only if nothing lies beyond this layer
            complete = layer.clone().all(|i| {
                generators
                    .iter()
                    .all(|g| index.find(&matrices[i].mul(g), &matrices).is_some())
            });
            break;
        }
        let start = matrices.len();
        for i in layer.clone() {
            for (s, g) in generators.iter().enumerate() {
                let x = matrices[i].mul(g);
                if index.find(&x, &matrices).is_some() {
                    continue;
                }
                if matrices.len() == cap {
                    if strict {
                        return Err(CoxeterError::CapExceeded { cap });
                    }
                    complete = false;
                    break 'outer;
                }
                let mut w = words[i].clone();
                w.push(s as u8);
                index.insert(&x, matrices.len());
                words.push(w);
                matrices.push(x);
            }
        }
        layer = start..matrices.len();
        depth += 1;
    }

    // layers come out in shortlex order already; keep the matrices aligned regardless
    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_by(|&a, &b| crate::word::shortlex_cmp(&words[a], &words[b]));
    Ok(EnumerationResult {
        elements: order
            .iter()
            .map(|&i| CanonicalElement::from_canonical(words[i].clone()))
            .collect(),
        matrices: order.iter().map(|&i| matrices[i].clone()).collect(),
        complete,
        model,
    })
}

/// Breadth-first enumeration of `W` up to `cap` elements.
pub fn enumerate_group(m: &CoxeterMatrix, cap: usize) -> EnumerationResult {
    search(m, cap, usize::MAX, false).expect("non-strict search does not fail")
}

/// Like [`enumerate_group`], but hitting the cap is an error.
pub fn enumerate_group_strict(m: &CoxeterMatrix, cap: usize) -> Result<EnumerationResult> {
    search(m, cap, usize::MAX, true)
}

/// All elements of length at most `radius`, with matrices kept for [`brute_center`].
/// `complete` reports whether the ball already contains the whole group.
pub fn ball_enumeration(m: &CoxeterMatrix, radius: usize) -> EnumerationResult {
    search(m, usize::MAX, radius, false).expect("non-strict search does not fail")
}

/// All canonical elements of length at most `radius`, shortlex sorted.
pub fn ball(m: &CoxeterMatrix, radius: usize) -> Vec<CanonicalElement> {
    ball_enumeration(m, radius).elements
}

/// Elements of `scope` commuting with every generator. On a complete enumeration this is the
/// center; on a ball it is the center intersected with the ball.
pub fn brute_center(scope: &EnumerationResult) -> Vec<CanonicalElement> {
    scope
        .elements
        .iter()
        .zip(&scope.matrices)
        .filter(|(_, x)| scope.model.commutes_with_generators(x))
        .map(|(e, _)| e.clone())
        .collect()
}

/// Gram matrix `B[s][t] = -cos(π / m(s, t))` restricted to `subset`, in increasing index order.
pub fn gram_matrix(m: &CoxeterMatrix, subset: GenSet) -> DMatrix<f64> {
    let idx: Vec<usize> = subset.iter().collect();
    DMatrix::from_fn(idx.len(), idx.len(), |i, j| bilinear_entry(m.label(idx[i], idx[j])))
}

/// Eigenvalues of [`gram_matrix`], ascending.
pub fn gram_eigenvalues(m: &CoxeterMatrix, subset: GenSet) -> Vec<f64> {
    let g = gram_matrix(m, subset);
    if g.is_empty() {
        return Vec::new();
    }
    let mut values: Vec<f64> = g.symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

/// True iff the Gram matrix on `subset` is positive definite, i.e. `W_subset` is finite.
pub fn gram_positive_definite(m: &CoxeterMatrix, subset: GenSet) -> bool {
    gram_eigenvalues(m, subset)
        .first()
        .is_none_or(|&least| least > GRAM_TOLERANCE)
}

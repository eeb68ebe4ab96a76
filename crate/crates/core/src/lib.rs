//! Exact computation of the center of a Coxeter group.
//!
//! Given a Coxeter matrix, this crate solves the word problem (canonical shortlex reduced
//! words), recognizes finite parabolic subgroups from the diagram, computes longest
//! elements, the essential parabolic subgroup and the center `Z(W) ≅ (Z_2)^n`. A separate
//! [`oracle`] module re-derives the same objects by brute force in a floating-point
//! reflection representation.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run --example word_problem
//! cargo run --example classify_diagrams
//! cargo run --example longest_elements
//! cargo run --example center_gallery
//! cargo run --example essential_subgroup
//! cargo run --example oracle_crosscheck
//! cargo run --example load_document -- examples/systems/b2.json
//! ```

pub mod braid;
pub mod center;
pub mod cli;
pub mod engine;
pub mod error;
pub mod finite_type;
pub mod matrix;
pub mod oracle;
pub mod word;

pub use braid::{braid_orbit, reduce_by_braid_moves};
pub use center::{
    center, center_with, check_theorem2, component_center, essential_subset, CenterDescription,
    EssentialSubset, Theorem2Report,
};
pub use engine::{invert, multiply, reduce, right_descents, WordEngine};
pub use error::{CoxeterError, Result};
pub use finite_type::{
    classify_component, components, coxeter_order, is_spherical, longest_element,
    longest_element_with, Classification, DiagramComponent, Family, FiniteTypeTag,
};
pub use matrix::{validate_matrix, validate_matrix_with_max_rank, CoxeterMatrix, GenSet, Label};
pub use word::{support, CanonicalElement, Word};

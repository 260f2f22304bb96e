//! Invariants of tiled orders presented by exponent matrices.
//!
//! A tiled order is encoded by a quasi-metric: an integer matrix with zero
//! diagonal satisfying the triangle inequality. This crate computes the
//! structure attached to such matrices and machine-verifies the small
//! classification statements built on it:
//!
//! - validation, diagonal conjugation, relabeling, and decision procedures
//!   for conjugacy and isomorphism ([`matrix`]);
//! - the Nakayama permutation, b-invariants and Gorenstein parameters, plus
//!   the cyclic family ([`gorenstein`]);
//! - finite posets with Hasse quivers, isomorphism testing, and projective
//!   dimensions over incidence algebras by explicit minimal resolutions in
//!   exact rational arithmetic ([`poset`], [`homology`]);
//! - the stable poset of truncation vectors and its behavior under
//!   one-index conjugation ([`stable`]);
//! - coverings of tiled orders and of numerical semigroup algebras, with
//!   transported Nakayama data ([`covering`]);
//! - realization of any poset with maximum as a Gorenstein exponent matrix
//!   with all b-invariants 1 or 2 ([`realize`]);
//! - exhaustive enumeration up to relabeling and verification of the
//!   classified families within stated bounds ([`classify`]).
//!
//! Everything is exact integer or rational arithmetic; no floating point.
//! All values are immutable after construction and every operation is a pure
//! function, so the API is safe to call from concurrent contexts.
//!
//! The `tiled-orders` binary exposes the same operations behind stable JSON
//! wire formats; see [`json`] for the formats and [`cli`] for the commands.

pub mod classify;
pub mod cli;
pub mod covering;
pub mod error;
pub mod gorenstein;
pub mod homology;
pub mod json;
mod linalg;
pub mod matrix;
pub mod poset;
pub mod realize;
pub mod stable;

pub use classify::{
    enumerate, instantiate, match_family, stable_shape, verify_classification,
    ClassificationTarget, EnumerationOptions, EnumerationReport, Enumerator, Family, FamilyTag,
    StableShape,
};
pub use covering::{
    compatibility_holds, cover, frobenius, predicted_cover_gorenstein, semigroup_cover, CoverIndex,
    NumericalSemigroup,
};
pub use error::{Error, Result};
pub use gorenstein::{cyclic_order, is_cyclic, nakayama, GorensteinData};
pub use homology::{homology, homology_with_bound, is_hereditary, HomologicalReport};
pub use matrix::{
    are_conjugate, are_isomorphic, conjugate_permutation, conjugate_shifts, validate,
    ExponentMatrix, Permutation, ShiftVector, ValidationReport,
};
pub use poset::{Extrema, FinitePoset, HasseQuiver, DEFAULT_HOMOLOGY_BOUND};
pub use realize::{realize_poset, realize_quiver};
pub use stable::{
    gamma_poset, predicted_conjugacy_poset, truncation_poset, truncation_vector, v_poset,
    ShiftDirection, TruncationVector, VPoset,
};

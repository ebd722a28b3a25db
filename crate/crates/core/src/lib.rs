//! Warping degrees of signed Gauss codes for knot and link diagrams.
//!
//! A [`LinkDiagram`] is a list of component words over crossing passages.
//! From it the crate computes based and minimal warping degrees, the
//! linking warping degree and its matrix form, linking numbers, the
//! inequalities relating them, and interval bounds for splitting numbers.

pub mod diagram;
pub mod error;
pub mod generators;
pub mod matrix;
pub mod normalize;
pub mod split;
pub mod verify;
pub mod warping;

pub use diagram::{Crossing, CrossingId, LinkDiagram, Passage, Sign, Site, Strand, Warning};
pub use error::{Error, Result};
pub use matrix::{build_matrix, LinkingMatrix};
pub use normalize::{normalize, OuWord};
pub use split::{complete_splitting_bounds, splitting_bounds, BoundInterval};
pub use verify::{verify_all, verify_claim, Claim, HalfInteger, VerificationReport};
pub use warping::{d_min, d_unoriented, ld_min, BaseSequence, Limits};

//! Combinatorics of the geometric Satake correspondence.
//!
//! Starting from a reductive root datum this crate builds the Langlands dual
//! datum, the dimension calculus of orbits in the loop Grassmannian, weight
//! multiplicities of the dual group (which count Mirković–Vilonen cycles),
//! the height-graded fiber functor, and tensor product decompositions.
//!
//! All arithmetic is exact.

pub mod checks;
pub mod datum;
pub mod engine;
pub mod error;
pub mod fusion;
pub mod grassmannian;
mod linalg;
pub mod multiplicity;
pub mod weyl;

pub use datum::{CartanType, Coweight, Family, Isogeny, RootDatum, ValidationIssue, ValidationReport, Weight};
pub use engine::Satake;
pub use error::{Result, SatakeError};
pub use fusion::{Character, CheckOutcome, GradedDims, SatakeReport};
pub use grassmannian::{ConvolutionBound, IntersectionDim, OrbitId, SemiInfiniteOrbitId, Side};
pub use multiplicity::{DecompositionTable, InvariantForm};
pub use weyl::{PositiveRoot, RootSystem, WeylWord, DEFAULT_WEYL_CAP};

//! Prelog Chow groups of simple normal crossing varieties.
//!
//! The input is combinatorial intersection data: components with divisor
//! lattices and intersection pairings, pairwise curves with their classes on
//! both sides, and triple points. From it the crate assembles the maps
//!
//! ```text
//!   ⊕ CH(X_ij) --delta--> ⊕ CH(X_i) --nu--> CH(X) -> 0
//!       |rho'                 |rho
//!   ⊕ CH(X_ijk) --delta'--> ⊕ CH(X_ij)
//! ```
//!
//! and computes the compatible classes `ker rho`, the Chow group
//! `coker delta`, the prelog group (image of `ker rho` in `coker delta`), and
//! its saturation in the torsion-free quotient. All arithmetic is exact.
//!
//! Matrices act on column vectors throughout.

pub mod engine;
pub mod error;
pub mod exec;
pub mod gallery;
pub mod json_int;
pub mod lattice;
pub mod snc;

pub use engine::{DiagramMatrices, PrelogReport};
pub use error::{EngineError, LatticeError, ParseError};
pub use lattice::{AbelianGroupPresentation, IntegerMatrix, LatticeBasis};
pub use snc::{ClassTuple, SncComplex};

//! Exact integer linear algebra: normal forms, kernels, cokernels,
//! saturation and ranks over prime fields.

mod basis;
mod group;
mod hermite;
mod matrix;
mod modp;
mod smith;

pub use basis::{is_saturated, kernel_basis, member, saturate, solve_integer, LatticeBasis};
pub use group::{
    cokernel, relation_lattice, subgroup_structure, AbelianGroupPresentation, GroupElement,
    GroupType, SubgroupStructure,
};
pub use hermite::{hnf, row_lattice_basis};
pub use matrix::{big_vec, dot, IntegerMatrix};
pub use modp::{is_prime, rank_mod_p};
pub use smith::{snf, SmithDecomposition};

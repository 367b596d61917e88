use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::diagram::{verify_square, DiagramMatrices};
use crate::error::{EngineError, LatticeError, ParseError};
use crate::exec::{self, Execution};
use crate::json_int;
use crate::lattice::{
    cokernel, kernel_basis, rank_mod_p, saturate, snf, subgroup_structure,
    AbelianGroupPresentation, GroupElement, GroupType, IntegerMatrix, LatticeBasis,
};
use crate::snc::io::{canonical_text, decode};
use crate::snc::ClassTuple;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub delta_rank: usize,
    pub delta_injective: bool,
    /// `coker delta` is torsion free.
    pub delta_image_saturated: bool,
    pub rho_rank: usize,
    pub rho_surjective: bool,
    pub square_commutes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularRank {
    pub characteristic: u64,
    pub rank: usize,
}

/// Group types of the numerical pipeline and how the prelog group maps in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalSummary {
    #[serde(rename = "chow_of_X")]
    pub chow_of_x: GroupType,
    pub compatible_rank: usize,
    pub prelog_group: GroupType,
    #[serde(with = "json_int::one")]
    pub saturation_index: BigInt,
    pub induced_injective: bool,
    pub induced_surjective: bool,
}

/// Everything computed from one diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrelogReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub working_grade: Option<u32>,
    /// Basis of `R(X) = ker rho`.
    pub compatible_basis: LatticeBasis,
    /// `coker delta`.
    #[serde(rename = "chow_of_X")]
    pub chow_of_x: AbelianGroupPresentation,
    /// Images of the compatible basis in `coker delta`.
    pub prelog_generators: Vec<GroupElement>,
    /// Isomorphism type of the image, presented on the compatible-basis
    /// coefficients.
    pub prelog_group: AbelianGroupPresentation,
    /// Image of the prelog group in the free quotient of `coker delta`.
    pub prelog_free_image: LatticeBasis,
    /// Saturation of `prelog_free_image`.
    pub saturated_basis: LatticeBasis,
    #[serde(with = "json_int::one")]
    pub saturation_index: BigInt,
    /// Free part of `nu` restricted to `ker rho`, one column per compatible
    /// basis vector.
    pub prelog_matrix: IntegerMatrix,
    pub rational_rank: usize,
    #[serde(default)]
    pub modular_ranks: Vec<ModularRank>,
    pub diagnostics: Diagnostics,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerical: Option<NumericalSummary>,
}

/// Basis of the compatible classes `ker rho`.
pub fn compatible_classes(d: &DiagramMatrices) -> LatticeBasis {
    kernel_basis(&d.rho)
}

/// Computes `R(X)`, `coker delta`, the prelog group and its saturation.
pub fn prelog_group(d: &DiagramMatrices) -> Result<PrelogReport, EngineError> {
    let compatible = compatible_classes(d);
    let chow = cokernel(&d.delta);
    let gens: Vec<GroupElement> = compatible
        .generators()
        .row_iter()
        .map(|g| chow.project(g))
        .collect::<Result<_, _>>()?;
    let sub = subgroup_structure(&gens, &chow)?;
    let saturated = saturate(&sub.free_image);
    let index = sub.free_image.index_in_saturation();

    let mut prelog_matrix = IntegerMatrix::zeros(chow.free_rank, gens.len());
    for (j, g) in gens.iter().enumerate() {
        for (i, x) in g.free.iter().enumerate() {
            prelog_matrix[(i, j)] = x.clone();
        }
    }
    let rational_rank = prelog_matrix.rational_rank();

    let delta_rank = snf(&d.delta).rank();
    let rho_snf = snf(&d.rho);
    let diagnostics = Diagnostics {
        delta_rank,
        delta_injective: delta_rank == d.delta.cols(),
        delta_image_saturated: chow.torsion.is_empty(),
        rho_rank: rho_snf.rank(),
        rho_surjective: rho_snf.rank() == d.rho.rows()
            && rho_snf.invariants.iter().all(|x| x == &BigInt::from(1)),
        square_commutes: verify_square(d)?,
    };

    Ok(PrelogReport {
        working_grade: d.working_grade,
        compatible_basis: compatible,
        chow_of_x: chow,
        prelog_generators: gens,
        prelog_group: sub.group,
        prelog_free_image: sub.free_image,
        saturated_basis: saturated,
        saturation_index: index,
        prelog_matrix,
        rational_rank,
        modular_ranks: Vec::new(),
        diagnostics,
        numerical: None,
    })
}

/// The saturated prelog lattice in the free quotient of `coker delta`.
pub fn saturated_prelog_group(report: &PrelogReport) -> LatticeBasis {
    saturate(&report.prelog_free_image)
}

impl PrelogReport {
    /// Records the rank of `prelog_matrix` over each prime field, replacing
    /// any earlier entries. Output order follows `primes`.
    pub fn add_modular_ranks(
        &mut self,
        primes: &[u64],
        exec: Execution,
    ) -> Result<(), LatticeError> {
        let ranks = exec::map(exec, primes, |&p| rank_mod_p(&self.prelog_matrix, p));
        self.modular_ranks = primes
            .iter()
            .zip(ranks)
            .map(|(&p, r)| {
                r.map(|rank| ModularRank {
                    characteristic: p,
                    rank,
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(())
    }

    /// `nu_*(v)` in `coker delta` coordinates.
    pub fn class_of(&self, v: &ClassTuple) -> Result<GroupElement, EngineError> {
        let n = self.chow_of_x.ambient_rank();
        if v.len() != n {
            return Err(EngineError::TupleDimension {
                expected: n,
                found: v.len(),
            });
        }
        Ok(self.chow_of_x.project(v.as_slice())?)
    }

    /// Free-quotient coordinates of `nu_*(v)`.
    pub fn free_class_of(&self, v: &ClassTuple) -> Result<Vec<BigInt>, EngineError> {
        Ok(self.class_of(v)?.free)
    }
}

/// Canonical JSON form of a report; `parse_report` inverts it exactly.
pub fn serialize_report(report: &PrelogReport) -> String {
    canonical_text(report)
}

pub fn parse_report(text: &str) -> Result<PrelogReport, ParseError> {
    decode(text)
}

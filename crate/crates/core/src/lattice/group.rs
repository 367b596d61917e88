use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::basis::{kernel_basis, solve_integer, LatticeBasis};
use super::smith::snf;
use super::IntegerMatrix;
use crate::error::LatticeError;
use crate::json_int;

/// `Z^free_rank ⊕ ⊕ Z/d_i` together with a surjection from an ambient
/// lattice `Z^n` onto it.
///
/// Normal-form coordinates list the free part first, then one residue per
/// torsion factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
    /// `(free_rank + torsion.len()) × n`; torsion rows are reduced modulo
    /// their factor when applied.
    pub projection: IntegerMatrix,
    /// `n × (free_rank + torsion.len())`; a section of `projection` on
    /// normal-form coordinates.
    pub lift: IntegerMatrix,
}

/// Group element in normal-form coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    #[serde(with = "json_int::vec")]
    pub free: Vec<BigInt>,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(Zero::is_zero)
    }

    pub fn free_only(free: Vec<BigInt>) -> Self {
        Self {
            free,
            torsion: Vec::new(),
        }
    }
}

/// Isomorphism type only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub free_rank: usize,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl AbelianGroupPresentation {
    pub fn trivial(ambient: usize) -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
            projection: IntegerMatrix::zeros(0, ambient),
            lift: IntegerMatrix::zeros(ambient, 0),
        }
    }

    pub fn group_type(&self) -> GroupType {
        GroupType {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.projection.cols()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Image of an ambient vector.
    pub fn project(&self, x: &[BigInt]) -> Result<GroupElement, LatticeError> {
        let y = self.projection.apply(x)?;
        let (free, tors) = y.split_at(self.free_rank);
        Ok(GroupElement {
            free: free.to_vec(),
            torsion: tors
                .iter()
                .zip(&self.torsion)
                .map(|(t, d)| t.mod_floor(d))
                .collect(),
        })
    }

    /// Ambient preimage of an element.
    pub fn lift_element(&self, e: &GroupElement) -> Result<Vec<BigInt>, LatticeError> {
        self.check(e)?;
        let y: Vec<BigInt> = e.free.iter().chain(&e.torsion).cloned().collect();
        self.lift.apply(&y)
    }

    /// Canonical representative (torsion residues in `[0, d)`).
    pub fn normalize(&self, e: &GroupElement) -> Result<GroupElement, LatticeError> {
        self.check(e)?;
        Ok(GroupElement {
            free: e.free.clone(),
            torsion: e
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(t, d)| t.mod_floor(d))
                .collect(),
        })
    }

    fn check(&self, e: &GroupElement) -> Result<(), LatticeError> {
        if e.free.len() != self.free_rank {
            return Err(LatticeError::DimensionMismatch {
                expected: self.free_rank,
                found: e.free.len(),
            });
        }
        if e.torsion.len() != self.torsion.len() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.torsion.len(),
                found: e.torsion.len(),
            });
        }
        Ok(())
    }

    /// Element matrix (normal-form coordinates as columns) and the
    /// relation columns `d_i · e_{free_rank + i}`.
    fn columns(
        &self,
        gens: &[GroupElement],
    ) -> Result<(IntegerMatrix, IntegerMatrix), LatticeError> {
        let dim = self.free_rank + self.torsion.len();
        let mut g = IntegerMatrix::zeros(dim, gens.len());
        for (j, e) in gens.iter().enumerate() {
            self.check(e)?;
            for (i, x) in e.free.iter().chain(&e.torsion).enumerate() {
                g[(i, j)] = x.clone();
            }
        }
        let mut rel = IntegerMatrix::zeros(dim, self.torsion.len());
        for (k, d) in self.torsion.iter().enumerate() {
            rel[(self.free_rank + k, k)] = d.clone();
        }
        Ok((g, rel))
    }

    /// Integer coefficients `c` with `Σ c_j · gens_j = target` in the group.
    pub fn express(
        &self,
        target: &GroupElement,
        gens: &[GroupElement],
    ) -> Result<Option<Vec<BigInt>>, LatticeError> {
        self.check(target)?;
        let (g, rel) = self.columns(gens)?;
        let a = g.hconcat(&rel)?;
        let b: Vec<BigInt> = target.free.iter().chain(&target.torsion).cloned().collect();
        Ok(solve_integer(&a, &b)?.map(|mut x| {
            x.truncate(gens.len());
            x
        }))
    }
}

/// `Z^rows / im(A)`.
pub fn cokernel(a: &IntegerMatrix) -> AbelianGroupPresentation {
    let d = snf(a);
    let r = d.rank();
    let n = a.rows();
    let torsion_idx: Vec<usize> = (0..r).filter(|&i| !d.invariants[i].is_one()).collect();
    let coords: Vec<usize> = (r..n).chain(torsion_idx.iter().copied()).collect();
    AbelianGroupPresentation {
        free_rank: n - r,
        torsion: torsion_idx
            .iter()
            .map(|&i| d.invariants[i].clone())
            .collect(),
        projection: d.u.select_rows(coords.iter().copied()),
        lift: d.u_inv.select_cols(coords),
    }
}

/// Subgroup generated by some elements of an ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupStructure {
    /// Presented with the generator coefficients as ambient lattice.
    pub group: AbelianGroupPresentation,
    /// Image in the free quotient of the ambient group.
    pub free_image: LatticeBasis,
}

/// Coefficient vectors `c` with `Σ c_j · gens_j = 0` in the ambient group.
pub fn relation_lattice(
    gens: &[GroupElement],
    ambient: &AbelianGroupPresentation,
) -> Result<LatticeBasis, LatticeError> {
    let (g, rel) = ambient.columns(gens)?;
    let k = kernel_basis(&g.hconcat(&rel)?);
    Ok(LatticeBasis::span_rows(
        &k.generators().select_cols(0..gens.len()),
    ))
}

pub fn subgroup_structure(
    gens: &[GroupElement],
    ambient: &AbelianGroupPresentation,
) -> Result<SubgroupStructure, LatticeError> {
    let relations = relation_lattice(gens, ambient)?;
    let group = cokernel(&relations.generators().transpose());
    let free_rows: Vec<Vec<BigInt>> = gens.iter().map(|e| e.free.clone()).collect();
    let free_image = LatticeBasis::span(ambient.free_rank, &free_rows)?;
    Ok(SubgroupStructure { group, free_image })
}

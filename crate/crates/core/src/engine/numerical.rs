use serde::{Deserialize, Serialize};

use super::diagram::DiagramMatrices;
use super::report::{prelog_group, NumericalSummary, PrelogReport};
use crate::error::EngineError;
use crate::lattice::{kernel_basis, relation_lattice, snf, GroupElement, IntegerMatrix};
use crate::snc::{ChowLattice, ClassTuple, SncComplex};

/// Quotient of a lattice by the radical of its pairing: the map `q` onto the
/// quotient, a section `s` with `q·s = 1`, and the induced pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalQuotient {
    pub quotient: IntegerMatrix,
    pub section: IntegerMatrix,
    pub pairing: IntegerMatrix,
}

pub fn radical_quotient(pairing: &IntegerMatrix) -> RadicalQuotient {
    let n = pairing.cols();
    let radical = kernel_basis(pairing);
    let k = radical.rank();
    // radical rows span the first k rows of V^-1, so the remaining
    // coordinates of x·V give the quotient
    let d = snf(radical.generators());
    let quotient = d.v.select_cols(k..n).transpose();
    let section = d.v_inv.select_rows(k..n).transpose();
    let induced = &(&section.transpose() * pairing) * &section;
    RadicalQuotient {
        quotient,
        section,
        pairing: induced,
    }
}

/// Result of the numerical pipeline together with the comparison map from
/// the prelog group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalPrelog {
    pub report: PrelogReport,
    /// Block-diagonal quotient `⊕ CH(X_i) -> ⊕ Num(X_i)`.
    pub quotient: IntegerMatrix,
    /// Images of the compatible basis in the numerical `coker delta`.
    pub induced_images: Vec<GroupElement>,
    pub induced_injective: bool,
    pub induced_surjective: bool,
}

impl NumericalPrelog {
    pub fn summary(&self) -> NumericalSummary {
        NumericalSummary {
            chow_of_x: self.report.chow_of_x.group_type(),
            compatible_rank: self.report.compatible_basis.rank(),
            prelog_group: self.report.prelog_group.group_type(),
            saturation_index: self.report.saturation_index.clone(),
            induced_injective: self.induced_injective,
            induced_surjective: self.induced_surjective,
        }
    }
}

/// Replaces every component lattice by its quotient modulo the radical of
/// the intersection pairing.
pub fn numerical_complex(complex: &SncComplex) -> Result<(SncComplex, IntegerMatrix), EngineError> {
    let grade = complex.working_grade;
    let mut out = complex.clone();
    let mut blocks = Vec::with_capacity(complex.components.len());
    let mut quotients = Vec::with_capacity(complex.components.len());
    for (k, c) in complex.components.iter().enumerate() {
        let pairing = c
            .lattice(grade)
            .and_then(|l| l.pairing.as_ref())
            .ok_or_else(|| EngineError::MissingPairing(c.name.clone()))?;
        let rq = radical_quotient(pairing);
        let names = (0..rq.pairing.rows())
            .map(|r| format!("{}:n{r}", c.name))
            .collect();
        out.components[k].lattices.insert(
            grade,
            ChowLattice {
                basis_names: names,
                pairing: Some(rq.pairing.clone()),
            },
        );
        blocks.push(rq.quotient.clone());
        quotients.push(rq);
    }
    for p in &mut out.pairs {
        p.class_in_i = quotients[p.i].quotient.apply(&p.class_in_i)?;
        p.class_in_j = quotients[p.j].quotient.apply(&p.class_in_j)?;
    }
    Ok((out, IntegerMatrix::block_diagonal(&blocks)))
}

/// Runs the pipeline on numerical classes and compares with the prelog
/// group of `complex`.
pub fn numerical_prelog_group(complex: &SncComplex) -> Result<NumericalPrelog, EngineError> {
    let base = prelog_group(&DiagramMatrices::from_complex(complex)?)?;
    numerical_against(complex, &base)
}

pub(crate) fn numerical_against(
    complex: &SncComplex,
    base: &PrelogReport,
) -> Result<NumericalPrelog, EngineError> {
    let (num_complex, quotient) = numerical_complex(complex)?;
    let report = prelog_group(&DiagramMatrices::from_complex(&num_complex)?)?;
    let chow_num = &report.chow_of_x;

    let images: Vec<GroupElement> = base
        .compatible_basis
        .generators()
        .row_iter()
        .map(|g| chow_num.project(&quotient.apply(g)?))
        .collect::<Result<_, _>>()?;

    // injective iff every relation among the images already holds upstairs
    let relations = relation_lattice(&images, chow_num)?;
    let mut injective = true;
    for c in relations.generators().row_iter() {
        let combo: Vec<_> = (0..base.compatible_basis.ambient_rank())
            .map(|i| {
                c.iter()
                    .zip(base.compatible_basis.generators().row_iter())
                    .map(|(x, g)| x * &g[i])
                    .sum()
            })
            .collect();
        if !base.class_of(&ClassTuple(combo))?.is_zero() {
            injective = false;
            break;
        }
    }
    let mut surjective = true;
    for g in &report.prelog_generators {
        if chow_num.express(g, &images)?.is_none() {
            surjective = false;
            break;
        }
    }

    Ok(NumericalPrelog {
        report,
        quotient,
        induced_images: images,
        induced_injective: injective,
        induced_surjective: surjective,
    })
}

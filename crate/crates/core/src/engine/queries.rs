use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::diagram::DiagramMatrices;
use super::report::PrelogReport;
use crate::error::{EngineError, LatticeError};
use crate::exec::{self, Execution};
use crate::lattice::{cokernel, dot, member, GroupElement};
use crate::snc::{ClassTuple, SncComplex};

fn check_len(d: &DiagramMatrices, v: &ClassTuple) -> Result<(), EngineError> {
    if v.len() != d.ambient_rank() {
        return Err(EngineError::TupleDimension {
            expected: d.ambient_rank(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Whether `rho · v = 0`: the restrictions to every pair curve agree.
pub fn is_prelog_class(d: &DiagramMatrices, v: &ClassTuple) -> Result<bool, EngineError> {
    check_len(d, v)?;
    Ok(d.rho.apply(v.as_slice())?.iter().all(Zero::is_zero))
}

pub fn batch_is_prelog(
    d: &DiagramMatrices,
    tuples: &[ClassTuple],
    exec: Execution,
) -> Result<Vec<bool>, EngineError> {
    exec::map(exec, tuples, |v| is_prelog_class(d, v))
        .into_iter()
        .collect()
}

/// `nu_*(v)` in the normal-form coordinates of `coker delta`.
pub fn class_in_cokernel(d: &DiagramMatrices, v: &ClassTuple) -> Result<GroupElement, EngineError> {
    check_len(d, v)?;
    Ok(cokernel(&d.delta).project(v.as_slice())?)
}

/// Degree of `<alpha, beta>`: `Σ_i alpha_i · beta_i` under the component
/// pairings. Defined on `coker delta` only for prelog `alpha`.
pub fn pairing_total(
    d: &DiagramMatrices,
    complex: &SncComplex,
    alpha: &ClassTuple,
    beta: &ClassTuple,
) -> Result<BigInt, EngineError> {
    check_len(d, beta)?;
    if !is_prelog_class(d, alpha)? {
        return Err(EngineError::NotPrelog);
    }
    if complex.ambient_rank() != d.ambient_rank() {
        return Err(EngineError::TupleDimension {
            expected: d.ambient_rank(),
            found: complex.ambient_rank(),
        });
    }
    let offs = complex.block_offsets();
    let mut total = BigInt::zero();
    for (k, c) in complex.components.iter().enumerate() {
        let range = offs[k]..offs[k + 1];
        if range.is_empty() {
            continue;
        }
        let p = c
            .lattice(complex.working_grade)
            .and_then(|l| l.pairing.as_ref())
            .ok_or_else(|| EngineError::MissingPairing(c.name.clone()))?;
        let b = p.apply(&beta.as_slice()[range.clone()])?;
        total += dot(&alpha.as_slice()[range], &b);
    }
    Ok(total)
}

/// Coefficients expressing `target` in the subgroup of `coker delta`
/// generated by `generators`.
pub fn membership_query(
    report: &PrelogReport,
    target: &GroupElement,
    generators: &[GroupElement],
) -> Result<Option<Vec<BigInt>>, EngineError> {
    Ok(report.chow_of_x.express(target, generators)?)
}

/// `w` with `r · w = v` in the saturated prelog lattice, for `v` in
/// free-quotient coordinates.
pub fn divisibility_query(
    report: &PrelogReport,
    v: &[BigInt],
    r: &BigInt,
) -> Result<Option<Vec<BigInt>>, EngineError> {
    if !r.is_positive() {
        return Err(EngineError::ZeroDivisor);
    }
    let sat = &report.saturated_basis;
    if v.len() != sat.ambient_rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: sat.ambient_rank(),
            found: v.len(),
        }
        .into());
    }
    if member(sat, v)?.is_none() {
        return Ok(None);
    }
    // the saturated lattice is saturated, so v / r lies in it iff integral
    let mut w = Vec::with_capacity(v.len());
    for x in v {
        let (q, rem) = x.div_rem(r);
        if !rem.is_zero() {
            return Ok(None);
        }
        w.push(q);
    }
    Ok(Some(w))
}

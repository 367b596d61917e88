use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{EngineError, LatticeError};
use crate::lattice::{dot, IntegerMatrix};
use crate::snc::{has_errors, validate, RawDiagram, SncComplex};

/// Coordinate ranges of each component, pair and triple block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTable {
    /// Component `k` occupies `components[k]..components[k + 1]`.
    pub components: Vec<usize>,
    pub pairs: Vec<usize>,
    pub triples: Vec<usize>,
}

/// The four maps around the lower square:
///
/// ```text
///   Z^pairs  --delta-->  Z^comp
///     |rho'               |rho
///   Z^triples --delta'--> Z^pairs
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramMatrices {
    pub delta: IntegerMatrix,
    pub rho: IntegerMatrix,
    pub delta_prime: IntegerMatrix,
    pub rho_prime: IntegerMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlockTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub working_grade: Option<u32>,
}

pub fn ensure_valid(complex: &SncComplex) -> Result<(), EngineError> {
    let diags = validate(complex);
    if has_errors(&diags) {
        let first = diags
            .iter()
            .find(|d| d.severity == crate::snc::Severity::Error)
            .expect("has errors");
        return Err(EngineError::InvalidComplex(first.to_string()));
    }
    Ok(())
}

/// Geometric assembly covers divisors on surfaces with rank-one pair strata.
pub fn ensure_surface_case(complex: &SncComplex) -> Result<(), EngineError> {
    ensure_valid(complex)?;
    if complex.working_grade != 1 {
        return Err(EngineError::UnsupportedGrade(format!(
            "working grade {} (only divisors are assembled)",
            complex.working_grade
        )));
    }
    if let Some(c) = complex.components.iter().find(|c| c.dimension != 2) {
        return Err(EngineError::UnsupportedGrade(format!(
            "component `{}` has dimension {}",
            c.name, c.dimension
        )));
    }
    if let Some(p) = complex.pairs.iter().find(|p| p.stratum_rank != 1) {
        return Err(EngineError::UnsupportedGrade(format!(
            "pair ({}, {}) has stratum rank {}",
            p.i, p.j, p.stratum_rank
        )));
    }
    Ok(())
}

fn pairing(complex: &SncComplex, k: usize) -> Result<&IntegerMatrix, EngineError> {
    let c = &complex.components[k];
    c.lattice(complex.working_grade)
        .and_then(|l| l.pairing.as_ref())
        .ok_or_else(|| EngineError::MissingPairing(c.name.clone()))
}

/// Pushforward from the pair strata: column per pair, `+class_in_i` in the
/// block of `i` and `-class_in_j` in the block of `j`.
pub fn build_delta(complex: &SncComplex) -> Result<IntegerMatrix, EngineError> {
    ensure_surface_case(complex)?;
    let offs = complex.block_offsets();
    let mut m = IntegerMatrix::zeros(complex.ambient_rank(), complex.pairs.len());
    for (k, p) in complex.pairs.iter().enumerate() {
        for (r, x) in p.class_in_i.iter().enumerate() {
            m[(offs[p.i] + r, k)] = x.clone();
        }
        for (r, x) in p.class_in_j.iter().enumerate() {
            m[(offs[p.j] + r, k)] = -x;
        }
    }
    Ok(m)
}

/// Restriction to the pair strata: row per pair; a divisor `D` on `X_i`
/// maps to `D · class_in_i`, a divisor on `X_j` to `-(D · class_in_j)`.
pub fn build_rho(complex: &SncComplex) -> Result<IntegerMatrix, EngineError> {
    ensure_surface_case(complex)?;
    let offs = complex.block_offsets();
    let mut m = IntegerMatrix::zeros(complex.pairs.len(), complex.ambient_rank());
    for (k, p) in complex.pairs.iter().enumerate() {
        let pi = pairing(complex, p.i)?.apply(&p.class_in_i)?;
        let pj = pairing(complex, p.j)?.apply(&p.class_in_j)?;
        for (r, x) in pi.into_iter().enumerate() {
            m[(k, offs[p.i] + r)] = x;
        }
        for (r, x) in pj.into_iter().enumerate() {
            m[(k, offs[p.j] + r)] = -x;
        }
    }
    Ok(m)
}

/// Column per triple `(a,b,c)`: `-1` into `(a,b)`, `+1` into `(a,c)`, `-1`
/// into `(b,c)`.
pub fn build_delta_prime(complex: &SncComplex) -> Result<IntegerMatrix, EngineError> {
    ensure_surface_case(complex)?;
    let mut m = IntegerMatrix::zeros(complex.pairs.len(), complex.triples.len());
    for (t, tr) in complex.triples.iter().enumerate() {
        for ((i, j), sign) in tr.pairs().into_iter().zip([-1, 1, -1]) {
            let p = complex.pair_index(i, j).expect("validated");
            m[(p, t)] = BigInt::from(sign);
        }
    }
    Ok(m)
}

/// Row per triple `(a,b,c)`: `+1` from `(a,b)`, `-1` from `(a,c)`, `+1` from
/// `(b,c)`, each triple point counted with multiplicity one.
pub fn build_rho_prime(complex: &SncComplex) -> Result<IntegerMatrix, EngineError> {
    ensure_surface_case(complex)?;
    let mut m = IntegerMatrix::zeros(complex.triples.len(), complex.pairs.len());
    for (t, tr) in complex.triples.iter().enumerate() {
        for ((i, j), sign) in tr.pairs().into_iter().zip([1, -1, 1]) {
            let p = complex.pair_index(i, j).expect("validated");
            m[(t, p)] = BigInt::from(sign);
        }
    }
    Ok(m)
}

impl DiagramMatrices {
    pub fn from_complex(complex: &SncComplex) -> Result<Self, EngineError> {
        let n_pairs = complex.pairs.len();
        let n_triples = complex.triples.len();
        Ok(Self {
            delta: build_delta(complex)?,
            rho: build_rho(complex)?,
            delta_prime: build_delta_prime(complex)?,
            rho_prime: build_rho_prime(complex)?,
            blocks: Some(BlockTable {
                components: complex.block_offsets(),
                pairs: (0..=n_pairs).collect(),
                triples: (0..=n_triples).collect(),
            }),
            working_grade: Some(complex.working_grade),
        })
    }

    /// Adopts user-supplied matrices after checking that their shapes fit
    /// together.
    pub fn from_raw(raw: &RawDiagram) -> Result<Self, EngineError> {
        let comp = raw.delta.rows();
        let pairs = raw.delta.cols();
        let triples = raw.delta_prime.cols();
        let checks = [
            (&raw.rho, (pairs, comp)),
            (&raw.delta_prime, (pairs, triples)),
            (&raw.rho_prime, (triples, pairs)),
        ];
        for (m, (r, c)) in checks {
            if (m.rows(), m.cols()) != (r, c) {
                return Err(LatticeError::ShapeMismatch {
                    left: (m.rows(), m.cols()),
                    right: (r, c),
                }
                .into());
            }
        }
        Ok(Self {
            delta: raw.delta.clone(),
            rho: raw.rho.clone(),
            delta_prime: raw.delta_prime.clone(),
            rho_prime: raw.rho_prime.clone(),
            blocks: None,
            working_grade: raw.working_grade,
        })
    }

    /// Dimension of `⊕ CH(X_i)`.
    pub fn ambient_rank(&self) -> usize {
        self.delta.rows()
    }

    pub fn pair_rank(&self) -> usize {
        self.delta.cols()
    }
}

/// `rho · delta == delta' · rho'`.
pub fn verify_square(d: &DiagramMatrices) -> Result<bool, EngineError> {
    let left = d.rho.checked_mul(&d.delta)?;
    let right = d.delta_prime.checked_mul(&d.rho_prime)?;
    Ok(left == right)
}

/// Numerical form of the Friedman condition on one pair curve: the two
/// self-intersections plus the number of triple points on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriedmanResult {
    pub i: usize,
    pub j: usize,
    #[serde(with = "crate::json_int::one")]
    pub self_intersection_in_i: BigInt,
    #[serde(with = "crate::json_int::one")]
    pub self_intersection_in_j: BigInt,
    pub triple_points: usize,
    pub passes: bool,
}

pub fn friedman_check(complex: &SncComplex) -> Result<Vec<FriedmanResult>, EngineError> {
    ensure_valid(complex)?;
    complex
        .pairs
        .iter()
        .map(|p| {
            let si = dot(&p.class_in_i, &pairing(complex, p.i)?.apply(&p.class_in_i)?);
            let sj = dot(&p.class_in_j, &pairing(complex, p.j)?.apply(&p.class_in_j)?);
            let t = p.triples_on.len();
            let passes = (&si + &sj + BigInt::from(t)) == BigInt::from(0);
            Ok(FriedmanResult {
                i: p.i,
                j: p.j,
                self_intersection_in_i: si,
                self_intersection_in_j: sj,
                triple_points: t,
                passes,
            })
        })
        .collect()
}

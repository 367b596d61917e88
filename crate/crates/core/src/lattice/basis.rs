use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::hermite::row_lattice_basis;
use super::smith::snf;
use super::IntegerMatrix;
use crate::error::LatticeError;

/// A sublattice of `Z^ambient_rank`, one generator per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    ambient_rank: usize,
    generators: IntegerMatrix,
}

impl LatticeBasis {
    /// Wraps generators that must be independent over the rationals.
    pub fn new(generators: IntegerMatrix) -> Result<Self, LatticeError> {
        if generators.rational_rank() != generators.rows() {
            return Err(LatticeError::DependentGenerators);
        }
        Ok(Self {
            ambient_rank: generators.cols(),
            generators,
        })
    }

    /// The lattice spanned by arbitrary rows, reduced to its Hermite basis.
    pub fn span(ambient_rank: usize, vectors: &[Vec<BigInt>]) -> Result<Self, LatticeError> {
        let m = IntegerMatrix::from_big_rows(ambient_rank, vectors.to_vec())?;
        Ok(Self::span_rows(&m))
    }

    pub fn span_rows(m: &IntegerMatrix) -> Self {
        Self {
            ambient_rank: m.cols(),
            generators: row_lattice_basis(m),
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            generators: IntegerMatrix::zeros(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            generators: IntegerMatrix::identity(ambient_rank),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &IntegerMatrix {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.generators.row_vec(i)
    }

    /// Hermite-reduced copy; equal lattices give equal canonical forms.
    pub fn canonical(&self) -> Self {
        Self::span_rows(&self.generators)
    }

    pub fn same_lattice(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.canonical() == other.canonical()
    }

    pub fn contains_lattice(&self, other: &Self) -> bool {
        other
            .generators
            .row_iter()
            .all(|r| member(self, r).ok().flatten().is_some())
    }

    /// `[saturate(L) : L]`, the product of the invariant factors of the
    /// generator matrix.
    pub fn index_in_saturation(&self) -> BigInt {
        snf(&self.generators).invariants.iter().product()
    }
}

/// Saturated basis of `{x in Z^cols : A·x = 0}`.
pub fn kernel_basis(a: &IntegerMatrix) -> LatticeBasis {
    let d = snf(a);
    let r = d.rank();
    let gens = d.v.transpose().select_rows(r..a.cols());
    LatticeBasis::span_rows(&gens)
}

/// `(L ⊗ Q) ∩ Z^n`.
pub fn saturate(l: &LatticeBasis) -> LatticeBasis {
    let d = snf(&l.generators);
    let r = d.rank();
    LatticeBasis::span_rows(&d.v_inv.select_rows(0..r))
}

/// Whether the gcd of the maximal minors of the generators is one.
pub fn is_saturated(l: &LatticeBasis) -> Result<bool, LatticeError> {
    let d = snf(&l.generators);
    if d.rank() != l.rank() {
        return Err(LatticeError::DependentGenerators);
    }
    Ok(d.invariants.iter().all(One::is_one))
}

/// Coefficients `c` with `Σ c_i · generator_i = v`, if `v` lies in `L`.
pub fn member(l: &LatticeBasis, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
    if v.len() != l.ambient_rank {
        return Err(LatticeError::DimensionMismatch {
            expected: l.ambient_rank,
            found: v.len(),
        });
    }
    solve_integer(&l.generators.transpose(), v)
}

/// An integer solution of `A·x = b`, or `None` if none exists.
pub fn solve_integer(a: &IntegerMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
    if b.len() != a.rows() {
        return Err(LatticeError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let d = snf(a);
    let ub = d.u.apply(b)?;
    let r = d.rank();
    if ub[r..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..r {
        let (q, rem) = ub[i].div_rem(&d.invariants[i]);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    Ok(Some(d.v.apply(&y)?))
}

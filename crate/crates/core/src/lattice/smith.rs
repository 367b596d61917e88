use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

/// Smith normal form `U·A·V = S` together with the inverses of both
/// transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    /// Diagonal of `S`, length `min(rows, cols)`, each dividing the next,
    /// zeros at the end.
    pub invariants: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariants.iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

/// Working state: the matrix plus the accumulated transforms.
struct Reducer {
    a: IntegerMatrix,
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

impl Reducer {
    fn row_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
        self.u_inv.add_col_multiple(src, dst, &-f);
    }

    fn col_add(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
        self.v_inv.add_row_multiple(src, dst, &-f);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest nonzero |entry| in the lower-right block from `t`, ties to the
    /// lowest `(row, col)`.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let m = x.abs();
                if best.as_ref().is_none_or(|(_, b)| m < *b) {
                    best = Some(((i, j), m));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// One elimination pass on row and column `t`; returns whether nonzero
    /// remainders were left behind.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut dirty = false;
        let p = self.a[(t, t)].clone();
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = self.a[(i, t)].div_floor(&p);
            self.row_add(i, t, &-q);
            dirty |= !self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = self.a[(t, j)].div_floor(&p);
            self.col_add(j, t, &-q);
            dirty |= !self.a[(t, j)].is_zero();
        }
        dirty
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a[(i, j)].is_multiple_of(p)))
    }
}

/// Smith normal form of `a` with the smallest-absolute-value pivot rule.
pub fn snf(a: &IntegerMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: IntegerMatrix::identity(m),
        u_inv: IntegerMatrix::identity(m),
        v: IntegerMatrix::identity(n),
        v_inv: IntegerMatrix::identity(n),
    };
    let k = m.min(n);
    for t in 0..k {
        let Some((pi, pj)) = r.pivot(t) else { break };
        r.row_swap(t, pi);
        r.col_swap(t, pj);
        loop {
            if r.clear_cross(t) {
                let (pi, pj) = r.pivot(t).expect("remainder is nonzero");
                r.row_swap(t, pi);
                r.col_swap(t, pj);
                continue;
            }
            match r.non_divisible_row(t) {
                Some(i) => r.row_add(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.row_negate(t);
        }
    }
    let invariants = (0..k).map(|i| r.a[(i, i)].clone()).collect();
    SmithDecomposition {
        u: r.u,
        u_inv: r.u_inv,
        s: r.a,
        v: r.v,
        v_inv: r.v_inv,
        invariants,
    }
}

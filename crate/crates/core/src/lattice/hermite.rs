use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`.
///
/// Nonzero rows of `H` come first, pivots are positive and strictly move
/// right, and entries above a pivot lie in `[0, pivot)`.
pub fn hnf(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        while let Some(p) = min_row(&h, r, c) {
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for k in 0..r {
            let q = -h[(k, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(k, r, &q);
            u.add_row_multiple(k, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Row `>= from` with the smallest nonzero |entry| in column `c`.
fn min_row(h: &IntegerMatrix, from: usize, c: usize) -> Option<usize> {
    let mut best: Option<(usize, BigInt)> = None;
    for i in from..h.rows() {
        let x = &h[(i, c)];
        if x.is_zero() {
            continue;
        }
        let m = x.abs();
        if best.as_ref().is_none_or(|(_, b)| m < *b) {
            best = Some((i, m));
        }
    }
    best.map(|(i, _)| i)
}

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
pub fn row_lattice_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let (h, _) = hnf(a);
    let nonzero: Vec<usize> = (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .collect();
    h.select_rows(nonzero)
}

#![allow(dead_code)]

//! Shared strategies, brute-force oracles and property bodies for the
//! integration suites and the acceptance harness.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub mod criteria;

use prelog::engine::{pairing_total, prelog_group, DiagramMatrices, PrelogReport};
use prelog::gallery::blown_up_plane;
use prelog::lattice::{
    is_saturated, kernel_basis, member, saturate, snf, IntegerMatrix, LatticeBasis,
};
use prelog::snc::{parse, serialize, ClassTuple, PairStratum, SncComplex, TripleStratum};

pub const SEED: u64 = 20_260_514;
pub const CASES: u32 = 128;

pub fn config() -> Config {
    Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

// ---------------------------------------------------------------- strategies

pub fn small_matrix(max_rows: usize, max_cols: usize, bound: i64) -> BoxedStrategy<IntegerMatrix> {
    (0..=max_rows, 0..=max_cols)
        .prop_flat_map(move |(r, c)| {
            prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
                IntegerMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
        .boxed()
}

fn assemble(blowups: &[usize], entries: Vec<Option<(Vec<i64>, Vec<i64>)>>) -> SncComplex {
    let n = blowups.len();
    let mut c = SncComplex::empty();
    for (k, &b) in blowups.iter().enumerate() {
        let mut comp = blown_up_plane(b);
        comp.name = format!("C{k}");
        c.components.push(comp);
    }
    let mut it = entries.into_iter();
    for i in 0..n {
        for j in i + 1..n {
            if let Some((ci, cj)) = it.next().flatten() {
                let big = |v: Vec<i64>| v.into_iter().map(BigInt::from).collect();
                c.pairs.push(PairStratum::new(i, j, big(ci), big(cj)));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let has = |x, y| c.pair_index(x, y).is_some();
                if has(a, b) && has(a, d) && has(b, d) {
                    c.triples.push(TripleStratum::new(a, b, d));
                }
            }
        }
    }
    c.canonicalize();
    c.attach_triples();
    c
}

/// Up to four blown-up planes with random pair classes; every triangle of
/// pairs carries a triple point.
pub fn small_complex() -> BoxedStrategy<SncComplex> {
    prop::collection::vec(0usize..=3, 1..=4)
        .prop_flat_map(|blowups| {
            let n = blowups.len();
            let mut pair_strats = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let ci = prop::collection::vec(-2i64..=2, blowups[i] + 1);
                    let cj = prop::collection::vec(-2i64..=2, blowups[j] + 1);
                    pair_strats.push(prop::option::weighted(0.7, (ci, cj)).boxed());
                }
            }
            (Just(blowups), pair_strats)
        })
        .prop_map(|(blowups, entries)| assemble(&blowups, entries))
        .boxed()
}

/// A complex with a permutation of its components.
pub fn complex_and_permutation() -> BoxedStrategy<(SncComplex, Vec<usize>)> {
    small_complex()
        .prop_flat_map(|c| {
            let n = c.components.len();
            (Just(c), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
        .boxed()
}

/// A complex with coefficients for a combination of `ker rho` generators
/// and the index of a pair (if any).
pub fn complex_and_coefficients() -> BoxedStrategy<(SncComplex, Vec<i64>, usize)> {
    small_complex()
        .prop_flat_map(|c| {
            let n = c.ambient_rank();
            (Just(c), prop::collection::vec(-3i64..=3, n), 0usize..16)
        })
        .boxed()
}

// ------------------------------------------------------------------ oracles

pub fn to_i64_rows(m: &IntegerMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
        .collect()
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Laplace expansion along the first row.
pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det_i128(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors; zero when all vanish.
pub fn minors_gcd(a: &[Vec<i64>], cols: usize, k: usize) -> i128 {
    let mut g = 0;
    for rs in subsets(a.len(), k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| a[r][c] as i128).collect())
                .collect();
            g = gcd_i128(g, det_i128(&sub));
        }
    }
    g
}

/// Rank over the rationals by exhaustive minors.
pub fn minors_rank(a: &[Vec<i64>], cols: usize) -> usize {
    (1..=a.len().min(cols))
        .rev()
        .find(|&k| minors_gcd(a, cols, k) != 0)
        .unwrap_or(0)
}

/// Primitive integer basis of the rational kernel, by fraction-free
/// reduction to echelon form and back-substitution per free column.
pub fn rational_kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i128>> {
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..m.len() {
            if r != row && m[r][c] != 0 {
                let (f, g) = (m[row][c], m[r][c]);
                let pivot = m[row].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot) {
                    *x = f * *x - g * p;
                }
                let content = m[r].iter().fold(0, |acc, &x| gcd_i128(acc, x));
                if content > 1 {
                    m[r].iter_mut().for_each(|x| *x /= content);
                }
            }
        }
        pivots.push((row, c));
        row += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let lcm = pivots.iter().fold(1i128, |acc, &(r, c)| {
        let p = m[r][c].abs();
        acc / gcd_i128(acc, p) * p
    });
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![0i128; cols];
        x[f] = lcm;
        for &(r, c) in &pivots {
            x[c] = -m[r][f] * (lcm / m[r][c]);
        }
        let content = x.iter().fold(0, |acc, &v| gcd_i128(acc, v));
        out.push(x.into_iter().map(|v| v / content).collect());
    }
    out
}

// ---------------------------------------------------------- property bodies

/// Invariant factors against the brute-force determinantal divisors.
pub fn check_snf(m: &IntegerMatrix) -> Result<(), TestCaseError> {
    let d = snf(m);
    prop_assert_eq!(&(&(&d.u * m) * &d.v), &d.s);
    prop_assert_eq!(&(&d.u * &d.u_inv), &IntegerMatrix::identity(m.rows()));
    prop_assert_eq!(&(&d.v * &d.v_inv), &IntegerMatrix::identity(m.cols()));
    let rows = to_i64_rows(m);
    let rank = minors_rank(&rows, m.cols());
    prop_assert_eq!(d.rank(), rank);
    prop_assert_eq!(m.rational_rank(), rank);
    let mut prod = BigInt::from(1);
    for k in 1..=rank {
        prod *= &d.invariants[k - 1];
        prop_assert_eq!(prod.clone(), BigInt::from(minors_gcd(&rows, m.cols(), k)));
        if k > 1 {
            prop_assert!((&d.invariants[k - 1] % &d.invariants[k - 2]).is_zero());
        }
    }
    Ok(())
}

/// The kernel basis spans the oracle's rational kernel and is saturated.
pub fn check_kernel(m: &IntegerMatrix) -> Result<(), TestCaseError> {
    let k = kernel_basis(m);
    let oracle = rational_kernel(&to_i64_rows(m), m.cols());
    prop_assert_eq!(k.rank(), oracle.len());
    for g in k.generators().row_iter() {
        prop_assert!(m.apply(g).unwrap().iter().all(Zero::is_zero));
    }
    for x in &oracle {
        let v: Vec<BigInt> = x.iter().map(|&y| BigInt::from(y)).collect();
        prop_assert!(member(&k, &v).unwrap().is_some());
    }
    if k.rank() > 0 {
        prop_assert!(is_saturated(&k).unwrap());
    }
    Ok(())
}

/// `saturate` is extensive and idempotent and yields a saturated lattice.
pub fn check_saturate(m: &IntegerMatrix) -> Result<(), TestCaseError> {
    let l = LatticeBasis::span_rows(m);
    let s = saturate(&l);
    prop_assert_eq!(s.rank(), l.rank());
    prop_assert!(s.contains_lattice(&l));
    prop_assert!(saturate(&s).same_lattice(&s));
    if s.rank() > 0 {
        prop_assert!(is_saturated(&s).unwrap());
    }
    Ok(())
}

pub fn check_roundtrip(c: &SncComplex) -> Result<(), TestCaseError> {
    let text = serialize(c);
    let back = parse(&text).unwrap();
    prop_assert_eq!(&back, &c.canonical());
    prop_assert_eq!(serialize(&back), text);
    Ok(())
}

/// `<alpha, delta column> = 0` for every compatible `alpha`.
pub fn check_pairing_descent(
    c: &SncComplex,
    coeffs: &[i64],
    pair: usize,
) -> Result<(), TestCaseError> {
    let d = DiagramMatrices::from_complex(c).unwrap();
    let r = prelog_group(&d).unwrap();
    let basis = r.compatible_basis.generators();
    let mut alpha = vec![BigInt::zero(); d.ambient_rank()];
    for (g, &x) in basis.row_iter().zip(coeffs) {
        for (a, y) in alpha.iter_mut().zip(g) {
            *a += y * x;
        }
    }
    let alpha = ClassTuple(alpha);
    if d.delta.cols() == 0 {
        return Ok(());
    }
    let beta = ClassTuple(d.delta.col_vec(pair % d.delta.cols()));
    prop_assert_eq!(pairing_total(&d, c, &alpha, &beta).unwrap(), BigInt::zero());
    Ok(())
}

pub fn fingerprint(r: &PrelogReport) -> impl PartialEq + std::fmt::Debug {
    (
        r.chow_of_x.group_type(),
        r.compatible_basis.rank(),
        r.prelog_group.group_type(),
        r.saturation_index.clone(),
        r.rational_rank,
    )
}

/// Relabelling components (which reorients pairs) preserves every group
/// isomorphism type.
pub fn check_orientation(c: &SncComplex, perm: &[usize]) -> Result<(), TestCaseError> {
    let p = c.permute_components(perm);
    let a = prelog_group(&DiagramMatrices::from_complex(c).unwrap()).unwrap();
    let b = prelog_group(&DiagramMatrices::from_complex(&p).unwrap()).unwrap();
    prop_assert_eq!(fingerprint(&a), fingerprint(&b));
    prop_assert_eq!(a.diagnostics, b.diagnostics);
    Ok(())
}

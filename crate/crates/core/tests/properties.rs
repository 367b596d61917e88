mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use prelog::engine::{friedman_check, verify_square, DiagramMatrices};
use prelog::gallery;
use prelog::lattice::{cokernel, is_prime, rank_mod_p, snf, solve_integer, IntegerMatrix};

use common::*;

proptest! {
    #![proptest_config(config())]

    #[test]
    fn snf_matches_determinantal_divisors(m in small_matrix(4, 4, 6)) {
        check_snf(&m)?;
    }

    #[test]
    fn kernel_is_saturated_rational_kernel(m in small_matrix(4, 5, 4)) {
        check_kernel(&m)?;
    }

    #[test]
    fn saturate_is_idempotent_and_extensive(m in small_matrix(3, 4, 6)) {
        check_saturate(&m)?;
    }

    #[test]
    fn complexes_round_trip(c in small_complex()) {
        check_roundtrip(&c)?;
    }

    #[test]
    fn pairing_descends((c, coeffs, pair) in complex_and_coefficients()) {
        check_pairing_descent(&c, &coeffs, pair)?;
    }

    #[test]
    fn orientation_does_not_change_groups((c, perm) in complex_and_permutation()) {
        check_orientation(&c, &perm)?;
    }

    #[test]
    fn cokernel_rank_law(m in small_matrix(4, 4, 5)) {
        let c = cokernel(&m);
        prop_assert_eq!(c.free_rank + snf(&m).rank(), m.rows());
        for j in 0..m.cols() {
            prop_assert!(c.project(&m.col_vec(j)).unwrap().is_zero());
        }
    }

    #[test]
    fn cokernel_projection_kernel_is_image(m in small_matrix(4, 3, 4), x in prop::collection::vec(-5i64..=5, 4)) {
        let x: Vec<BigInt> = x.into_iter().take(m.rows()).map(BigInt::from).collect();
        prop_assume!(x.len() == m.rows());
        let c = cokernel(&m);
        let back = c.lift_element(&c.project(&x).unwrap()).unwrap();
        let diff: Vec<BigInt> = x.iter().zip(&back).map(|(a, b)| a - b).collect();
        prop_assert!(solve_integer(&m, &diff).unwrap().is_some());
    }

    #[test]
    fn modular_rank_bounded_and_generic(m in small_matrix(4, 4, 6), p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 1_000_000_007])) {
        let d = snf(&m);
        let r = rank_mod_p(&m, p).unwrap();
        prop_assert!(r <= d.rank());
        let p_big = BigInt::from(p);
        if d.invariants[..d.rank()].iter().all(|x| x % &p_big != BigInt::from(0)) {
            prop_assert_eq!(r, d.rank());
        }
        let expected = d.invariants[..d.rank()].iter().filter(|x| *x % &p_big != BigInt::from(0)).count();
        prop_assert_eq!(r, expected);
    }

    #[test]
    fn gallery_relabelings_commute(k in 0usize..3, seed in any::<u64>()) {
        let c = [gallery::cubic_degeneration(), gallery::elliptic_product_degeneration(), gallery::p2_f1_example()][k].clone();
        let n = c.components.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = c.permute_components(&perm);
        prop_assert!(friedman_check(&p).unwrap().iter().all(|r| r.passes));
        prop_assert!(verify_square(&DiagramMatrices::from_complex(&p).unwrap()).unwrap());
        check_orientation(&c, &perm)?;
    }
}

#[test]
fn primality_of_probe_primes() {
    for p in [2u64, 3, 5, 7, 11, 13, 1_000_000_007] {
        assert!(is_prime(p));
    }
    assert!(rank_mod_p(&IntegerMatrix::identity(2), 4).is_err());
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::IntegerMatrix;
use crate::error::LatticeError;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(p: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if p < 2 {
        return false;
    }
    for w in WITNESSES {
        if p.is_multiple_of(w) {
            return p == w;
        }
    }
    let s = (p - 1).trailing_zeros();
    let d = (p - 1) >> s;
    'witness: for w in WITNESSES {
        let mut x = pow_mod(w, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of `a` over the field with `p` elements.
pub fn rank_mod_p(a: &IntegerMatrix, p: u64) -> Result<usize, LatticeError> {
    if !is_prime(p) {
        return Err(LatticeError::NotPrime(p));
    }
    let modulus = BigInt::from(p);
    let (m, n) = (a.rows(), a.cols());
    let mut w: Vec<u64> = a
        .entries()
        .iter()
        .map(|x| x.mod_floor(&modulus).to_u64().expect("residue below p"))
        .collect();
    let pm = p as u128;
    let mut rank = 0;
    for c in 0..n {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&i| w[i * n + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..n {
                w.swap(piv * n + j, rank * n + j);
            }
        }
        let inv = inverse_mod(w[rank * n + c], p) as u128;
        for i in rank + 1..m {
            let f = w[i * n + c] as u128 * inv % pm;
            if f == 0 {
                continue;
            }
            for j in c..n {
                let sub = f * w[rank * n + j] as u128 % pm;
                w[i * n + j] = ((w[i * n + j] as u128 + pm - sub) % pm) as u64;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

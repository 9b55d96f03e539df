use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactpoly::IntPoly;

pub const DEFAULT_MR_ROUNDS: usize = 64;
pub const DEFAULT_COHN_SCAN: u64 = 10_000;

/// The first `count` primes.
pub fn small_primes(count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= c).all(|&p| c % p != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Strong probable-prime test to the bases given by the first `rounds`
/// primes.
pub fn is_probable_prime(n: &BigInt, rounds: usize) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    let bases = small_primes(rounds.max(1));
    for &p in &bases {
        let p = BigInt::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1: BigInt = n - 1u32;
    let s = n1.trailing_zeros().expect("n > 2");
    let d = &n1 >> s;
    'bases: for &a in &bases {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x).mod_floor(n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohnWitness {
    #[serde(serialize_with = "as_string")]
    pub h: BigInt,
    #[serde(serialize_with = "as_string")]
    pub n: BigInt,
    #[serde(serialize_with = "as_string")]
    pub value: BigInt,
    pub prime: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Largest absolute value among the non-leading coefficients.
pub fn cohn_height(f: &IntPoly) -> BigInt {
    f.coeffs()[..f.deg()].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

/// Scans `n = H + 2, H + 3, ...` (at most `scan` values) for the first `n`
/// with `f(n)` a strong probable prime. A hit proves `f` irreducible.
pub fn cohn_check(f: &IntPoly, scan: u64, rounds: usize) -> Option<CohnWitness> {
    if !f.is_monic() || f.deg() == 0 {
        return None;
    }
    let h = cohn_height(f);
    let start = &h + 2;
    (0..scan).find_map(|k| {
        let n = &start + k;
        let value = f.eval(&n);
        is_probable_prime(&value, rounds).then(|| CohnWitness { h: h.clone(), n, value, prime: true })
    })
}

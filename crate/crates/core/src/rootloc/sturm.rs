use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// Sturm chain `p, p', -rem(p, p'), ...` with every member scaled by a
/// positive integer, which leaves the sign pattern unchanged.
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![p.clone()];
    if p.deg() == 0 {
        return seq;
    }
    let mut a = p.clone();
    let mut b = p.derivative();
    while !b.is_zero() {
        seq.push(b.clone());
        let r = a.pseudo_rem(&b).expect("nonzero divisor");
        let c = r.content();
        let next = if c.is_zero() { r } else { -r.div_scalar(&c) };
        a = b;
        b = next;
    }
    seq
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut prev = Sign::NoSign;
    let mut count = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if prev != Sign::NoSign && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn variations_at(seq: &[IntPoly], x: &BigRational) -> usize {
    variations(seq.iter().map(|q| q.sign_at(x)))
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Precondition("zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::Precondition("empty interval".into()));
    }
    if p.sign_at(lo) == Sign::NoSign || p.sign_at(hi) == Sign::NoSign {
        return Err(Error::EndpointRoot);
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, lo) - variations_at(&seq, hi))
}

/// A power of two strictly above every root modulus (Cauchy bound).
pub fn root_bound(p: &IntPoly) -> BigInt {
    let lead = p.lead().abs();
    let max = p.coeffs()[..p.deg()].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    // 1 + max/lead <= 1 + ceil(max/lead)
    let bound = BigInt::one() + (&max + &lead - BigInt::one()) / &lead;
    let mut b = BigInt::one();
    while b <= bound {
        b <<= 1;
    }
    b
}

/// Distinct real roots of `p` in `(0, inf)` and `(-inf, 0)`; zero must not be a root.
pub fn count_signed_roots(p: &IntPoly) -> Result<(usize, usize)> {
    let b = BigRational::from_integer(root_bound(p));
    let zero = BigRational::zero();
    Ok((sturm_count(p, &zero, &b)?, sturm_count(p, &-b, &zero)?))
}

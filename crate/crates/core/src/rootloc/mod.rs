//! Certified root location for reciprocal polynomials: Sturm counting,
//! exact isolation, root profiles, factorization, Salem classification,
//! growth rates and Cohn's irreducibility criterion.

mod classify;
mod cohn;
mod factor;
mod interval;
mod profile;
mod sturm;
mod transform;

pub use classify::{classify_salem, roots_above_one, SalemClass, SalemReport};
pub use cohn::{cohn_check, cohn_height, is_probable_prime, small_primes, CohnWitness, DEFAULT_COHN_SCAN, DEFAULT_MR_ROUNDS};
pub use factor::{factor_reciprocal, factor_reciprocal_with, is_irreducible, DEFAULT_PRECISION_CAP};
pub use interval::{format_decimal, isolate_real_roots, to_f64, IsolatingInterval, Rounding};
pub use profile::{profile_kempner, profile_trace, root_profile, RootProfile};
pub use sturm::{count_signed_roots, root_bound, sturm_count, sturm_sequence};
pub use transform::{kempner_transform, kempner_transform_param, trace_lift, trace_transform};

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// Growth rate `tau = 1/R`, where `R` is the smallest positive root of the
/// denominator `q`. The returned interval encloses `tau` with width below
/// `10^-12` and isolates it as a root of the reversed polynomial.
pub fn growth_rate(q: &IntPoly) -> Result<IsolatingInterval> {
    growth_rate_digits(q, 12)
}

pub fn growth_rate_digits(q: &IntPoly, digits: u32) -> Result<IsolatingInterval> {
    let zero = BigRational::zero();
    let mut smallest = None;
    for mut r in isolate_real_roots(q) {
        if r.hi() <= &zero {
            continue;
        }
        if r.lo() < &zero || r.lo() == &zero {
            if r.poly().sign_at(&zero) == Sign::NoSign {
                continue;
            }
            while r.lo() <= &zero && r.hi() > &zero {
                let w = r.width() / BigRational::from_integer(2.into());
                r.refine_to(&w);
            }
            if r.hi() <= &zero {
                continue;
            }
        }
        smallest = Some(r);
        break;
    }
    let mut r = smallest.ok_or_else(|| Error::Precondition("no positive root".into()))?;
    let target = BigRational::new(One::one(), num_bigint::BigInt::from(10).pow(digits));
    loop {
        let tau = r.reciprocal()?;
        if tau.width() < target {
            return Ok(tau);
        }
        let w = r.width() / BigRational::from_integer(2.into());
        r.refine_to(&w);
    }
}

#[cfg(test)]
mod tests;

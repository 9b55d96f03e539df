use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::sturm::{count_signed_roots, root_bound, sturm_count};
use super::transform::{kempner_transform, trace_transform};
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// Distribution of the roots of a palindromic polynomial between the unit
/// circle and the real line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootProfile {
    pub degree: usize,
    pub circle_pairs: usize,
    pub real_pairs: usize,
    pub unresolved: usize,
}

fn check_input(f: &IntPoly) -> Result<()> {
    if f.is_zero() || !f.is_palindromic() || f.deg() % 2 == 1 {
        return Err(Error::Precondition("root profile needs a palindromic polynomial of even degree".into()));
    }
    if f.eval(&BigInt::one()).is_zero() || f.eval(&-BigInt::one()).is_zero() {
        return Err(Error::Precondition("root at 1 or -1".into()));
    }
    if !f.is_squarefree() {
        return Err(Error::Multiplicity);
    }
    Ok(())
}

fn profile(degree: usize, circle_pairs: usize, real_pairs: usize) -> RootProfile {
    RootProfile { degree, circle_pairs, real_pairs, unresolved: degree - 2 * (circle_pairs + real_pairs) }
}

/// Counts through the Kempner transform: positive roots in `u` are pairs
/// on the circle, negative ones pairs of real roots.
pub fn profile_kempner(f: &IntPoly) -> Result<RootProfile> {
    check_input(f)?;
    let g = kempner_transform(f)?;
    let (pos, neg) = count_signed_roots(&g)?;
    Ok(profile(f.deg(), pos, neg))
}

/// Counts through the trace transform: roots of `h` in `(-2, 2)` are
/// pairs on the circle, roots outside `[-2, 2]` pairs of real roots.
pub fn profile_trace(f: &IntPoly) -> Result<RootProfile> {
    check_input(f)?;
    let h = trace_transform(f)?;
    let two = BigRational::from_integer(2.into());
    let b = BigRational::from_integer(root_bound(&h).max(BigInt::from(4)));
    let inside = sturm_count(&h, &-two.clone(), &two)?;
    let outside = sturm_count(&h, &two, &b)? + sturm_count(&h, &-b, &-two)?;
    Ok(profile(f.deg(), inside, outside))
}

/// Root profile computed by both routes, which must agree.
pub fn root_profile(f: &IntPoly) -> Result<RootProfile> {
    let k = profile_kempner(f)?;
    let t = profile_trace(f)?;
    if k != t {
        return Err(Error::RouteDisagreement(format!("Kempner {k:?} vs trace {t:?}")));
    }
    Ok(k)
}

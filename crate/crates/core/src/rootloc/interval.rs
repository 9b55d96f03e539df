use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::sturm::{root_bound, sturm_count};
use crate::exactpoly::IntPoly;

/// Rational interval `(lo, hi)` containing exactly one root of a
/// squarefree polynomial, with nonzero values at both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl IsolatingInterval {
    /// Checks the isolation claim with a Sturm count.
    pub fn new(poly: IntPoly, lo: BigRational, hi: BigRational) -> crate::Result<Self> {
        let poly = poly.squarefree_part();
        if sturm_count(&poly, &lo, &hi)? != 1 {
            return Err(crate::Error::Precondition("interval does not isolate a single root".into()));
        }
        Ok(IsolatingInterval { poly, lo, hi })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Whether the closed interval lies strictly between two integers.
    pub fn strictly_within(&self, lo: i64, hi: i64) -> bool {
        self.lo > BigRational::from_integer(lo.into()) && self.hi < BigRational::from_integer(hi.into())
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        BigRational::from_float(x).is_some_and(|x| self.contains(&x))
    }

    /// Bisects until the width is below `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        let two = BigRational::from_integer(2.into());
        let s_lo = self.poly.sign_at(&self.lo);
        while &self.width() >= width {
            let mid = (&self.lo + &self.hi) / &two;
            match self.poly.sign_at(&mid) {
                Sign::NoSign => {
                    let mut d = width / BigRational::from_integer(4.into());
                    let quarter = self.width() / BigRational::from_integer(4.into());
                    if quarter < d {
                        d = quarter;
                    }
                    self.lo = &mid - &d;
                    self.hi = &mid + &d;
                    return;
                }
                s if s == s_lo => self.lo = mid,
                _ => self.hi = mid,
            }
        }
    }

    /// Refines to width below `10^-digits`.
    pub fn refine_digits(&mut self, digits: u32) {
        let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(digits));
        self.refine_to(&w);
    }

    /// The interval as a closed decimal enclosure with `digits` fractional
    /// digits: the lower end rounded toward zero, the upper away from zero.
    pub fn decimal_bounds(&self, digits: u32) -> (String, String) {
        (
            format_decimal(&self.lo, digits, Rounding::TowardZero),
            format_decimal(&self.hi, digits, Rounding::AwayFromZero),
        )
    }

    /// Interval `(1/hi, 1/lo)` for the reciprocal root; the interval must
    /// not contain zero.
    pub fn reciprocal(&self) -> crate::Result<IsolatingInterval> {
        if self.lo.is_negative() != self.hi.is_negative() || self.lo.is_zero() || self.hi.is_zero() {
            return Err(crate::Error::Precondition("interval contains zero".into()));
        }
        let poly = self.poly.reciprocal(self.poly.deg())?;
        Ok(IsolatingInterval { poly, lo: self.hi.recip(), hi: self.lo.recip() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    TowardZero,
    AwayFromZero,
}

/// Fixed-point decimal rendering of an exact rational.
pub fn format_decimal(x: &BigRational, digits: u32, mode: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let q = if mode == Rounding::AwayFromZero && !r.is_zero() { q + 1 } else { q };
    let (int, frac) = q.div_rem(&scale);
    let sign = if x.is_negative() && !(int.is_zero() && frac.is_zero()) { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.decimal_bounds(12);
        write!(f, "[{lo}, {hi}]")
    }
}

#[derive(Serialize)]
struct IntervalRepr {
    lo: String,
    hi: String,
}

impl Serialize for IsolatingInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (lo, hi) = self.decimal_bounds(12);
        IntervalRepr { lo, hi }.serialize(s)
    }
}

/// Isolating intervals for all distinct real roots, in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<IsolatingInterval> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let sqf = p.squarefree_part();
    let b = BigRational::from_integer(root_bound(&sqf));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm_count(&sqf, &lo, &hi).expect("endpoints avoid roots");
        match count {
            0 => {}
            1 => out.push(IsolatingInterval { poly: sqf.clone(), lo, hi }),
            _ => {
                let mid = split_point(&sqf, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// A point near the middle of `(lo, hi)` that is not a root.
fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mut k: i64 = 0;
    loop {
        // 1/2, 1/2 + 1/2^j, 1/2 - 1/2^j, ...
        let frac = if k == 0 {
            BigRational::new(1.into(), 2.into())
        } else {
            let j = (k + 1) / 2 + 2;
            let step = BigRational::new(1.into(), BigInt::one() << j);
            let half = BigRational::new(1.into(), 2.into());
            if k % 2 == 1 { half + step } else { half - step }
        };
        let mid = lo + &w * frac;
        if p.sign_at(&mid) != Sign::NoSign {
            return mid;
        }
        k += 1;
    }
}

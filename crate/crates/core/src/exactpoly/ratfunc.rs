use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::affine::{AffineForm, ParamPoly};
use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// Reduced quotient of integer polynomials. The pair is canonical: the
/// polynomial gcd (content included) is cancelled and the denominator has
/// positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Degenerate("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        if den.lead().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc { num: p, den: IntPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn into_parts(self) -> (IntPoly, IntPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::Degenerate("reciprocal of zero".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.num.scale(s), self.den.clone()).expect("nonzero denominator")
    }

    /// `f(1/t)` written back over integer polynomials.
    pub fn reciprocal_argument(&self) -> Self {
        let n = self.num.deg().max(self.den.deg());
        Self::new(
            self.num.reciprocal(n).expect("bound covers degree"),
            self.den.reciprocal(n).expect("bound covers degree"),
        )
        .expect("reciprocal of nonzero denominator is nonzero")
    }
}

/// Exact sum of `scalar * term` with a reduced result.
pub fn combine(terms: &[(BigInt, RatFunc)]) -> RatFunc {
    terms
        .iter()
        .fold(RatFunc::zero(), |acc, (s, r)| &acc + &r.scale(s))
}

/// Sum of `form * term` with affine coefficients in the gluing parameters.
/// Returns the numerator as a parametric polynomial over the least common
/// denominator of the terms.
pub fn combine_affine(terms: &[(AffineForm, RatFunc)]) -> (ParamPoly, IntPoly) {
    let den = terms
        .iter()
        .fold(IntPoly::one(), |acc, (_, r)| lcm(&acc, r.den()));
    let num = terms.iter().fold(ParamPoly::zero(), |acc, (form, r)| {
        let cof = den.div_exact(r.den()).expect("lcm is a multiple");
        acc.add(&ParamPoly::scaled(form, &(r.num() * &cof)))
    });
    (num, den)
}

/// Least common multiple over the integers with positive leading coefficient.
pub fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let g = a.gcd(b);
    let p = (a * b).div_exact(&g).expect("gcd divides product");
    if p.lead().is_negative() {
        -p
    } else {
        p
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = self.den.gcd(&rhs.den);
        let a = rhs.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &a) + &(&rhs.num * &b);
        RatFunc::new(num, &self.den * &a).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = Result<RatFunc>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::Degenerate("division by zero rational function".into()));
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.deg() == 0 && self.den.lead().is_one() {
            write!(f, "{}", self.num.pretty())
        } else {
            write!(f, "({}) / ({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// `c0 + cl*l + cm*m + cn*n` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub c: [BigInt; 4],
}

impl AffineForm {
    pub fn new(c0: i64, cl: i64, cm: i64, cn: i64) -> Self {
        AffineForm { c: [c0.into(), cl.into(), cm.into(), cn.into()] }
    }

    pub fn from_big(c: [BigInt; 4]) -> Self {
        AffineForm { c }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        AffineForm { c: [c, BigInt::zero(), BigInt::zero(), BigInt::zero()] }
    }

    pub fn l() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn m() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn n() -> Self {
        Self::new(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.c[0]
    }

    pub fn eval(&self, l: &BigInt, m: &BigInt, n: &BigInt) -> BigInt {
        &self.c[0] + &self.c[1] * l + &self.c[2] * m + &self.c[3] * n
    }

    pub fn eval_i64(&self, l: i64, m: i64, n: i64) -> BigInt {
        self.eval(&l.into(), &m.into(), &n.into())
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineForm { c: std::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AffineForm { c: std::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }

    pub fn neg(&self) -> Self {
        AffineForm { c: std::array::from_fn(|i| -&self.c[i]) }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        AffineForm { c: std::array::from_fn(|i| &self.c[i] * s) }
    }

    /// Replaces `l`, `m`, `n` by affine forms.
    pub fn substitute(&self, l: &Self, m: &Self, n: &Self) -> Self {
        AffineForm::constant(self.c[0].clone())
            .add(&l.scale(&self.c[1]))
            .add(&m.scale(&self.c[2]))
            .add(&n.scale(&self.c[3]))
    }

    /// Product of two forms; fails unless one of them is constant.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if o.is_constant() {
            Ok(self.scale(&o.c[0]))
        } else if self.is_constant() {
            Ok(o.scale(&self.c[0]))
        } else {
            Err(Error::NonAffine)
        }
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "l", "m", "n"];
        let mut s = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(names[i]);
            } else {
                s.push_str(&format!("{mag}{}", names[i]));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        write!(f, "{s}")
    }
}

impl From<i64> for AffineForm {
    fn from(c: i64) -> Self {
        AffineForm::new(c, 0, 0, 0)
    }
}

/// Polynomial in `t` whose coefficients are affine forms in `(l, m, n)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    coeffs: Vec<AffineForm>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<AffineForm>) -> Self {
        while coeffs.last().is_some_and(AffineForm::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    pub fn zero() -> Self {
        ParamPoly { coeffs: Vec::new() }
    }

    /// `form * p`
    pub fn scaled(form: &AffineForm, p: &IntPoly) -> Self {
        Self::new(p.coeffs().iter().map(|c| form.scale(c)).collect())
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        Self::scaled(&AffineForm::from(1), p)
    }

    /// Rebuilds from the four slices `p0 + l*pl + m*pm + n*pn`.
    pub fn from_slices(slices: &[IntPoly; 4]) -> Self {
        let len = slices.iter().map(|s| s.coeffs().len()).max().unwrap_or(0);
        Self::new(
            (0..len)
                .map(|k| AffineForm::from_big(std::array::from_fn(|i| slices[i].coeff(k))))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[AffineForm] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> AffineForm {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The integer polynomials multiplying `1, l, m, n`.
    pub fn slices(&self) -> [IntPoly; 4] {
        std::array::from_fn(|i| IntPoly::new(self.coeffs.iter().map(|a| a.c[i].clone()).collect()))
    }

    pub fn specialize(&self, l: &BigInt, m: &BigInt, n: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a.eval(l, m, n)).collect())
    }

    pub fn specialize_i64(&self, l: i64, m: i64, n: i64) -> IntPoly {
        self.specialize(&l.into(), &m.into(), &n.into())
    }

    /// Evaluates at an integer `t`, leaving an affine form.
    pub fn eval_at(&self, t: &BigInt) -> AffineForm {
        self.coeffs
            .iter()
            .rev()
            .fold(AffineForm::zero(), |acc, c| acc.scale(t).add(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(AffineForm::neg).collect())
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        let s = self.slices();
        Self::from_slices(&std::array::from_fn(|i| &s[i] * p))
    }

    /// Ring product; fails if a coefficient would pick up a product of
    /// two parameters.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![AffineForm::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b)?);
            }
        }
        Ok(Self::new(out))
    }

    /// Divides every slice by the same integer polynomial.
    pub fn div_exact(&self, d: &IntPoly) -> Result<Self> {
        let s = self.slices();
        let q: Vec<IntPoly> = s.iter().map(|p| p.div_exact(d)).collect::<Result<_>>()?;
        Ok(Self::from_slices(&[q[0].clone(), q[1].clone(), q[2].clone(), q[3].clone()]))
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    pub fn is_parameter_free(&self) -> bool {
        self.coeffs.iter().all(AffineForm::is_constant)
    }

    /// Leading affine coefficient (zero form for the zero polynomial).
    pub fn lead(&self) -> AffineForm {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn one() -> Self {
        Self::new(vec![AffineForm::constant(BigInt::one())])
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

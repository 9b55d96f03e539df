use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{IntPoly, ParamPoly};

/// For palindromic `f` of degree `2d`, the `h` of degree `d` with
/// `f(t) = t^d h(t + 1/t)`.
pub fn trace_transform(f: &IntPoly) -> Result<IntPoly> {
    if f.is_zero() || !f.is_palindromic() || f.deg() % 2 == 1 {
        return Err(Error::Precondition("trace transform needs a palindromic polynomial of even degree".into()));
    }
    let d = f.deg() / 2;
    let mut rest = f.clone();
    let mut h = vec![BigInt::zero(); d + 1];
    for k in (0..=d).rev() {
        let c = rest.coeff(d + k);
        if !c.is_zero() {
            rest = &rest - &lift_term(&c, k, d);
        }
        h[k] = c;
    }
    if !rest.is_zero() {
        return Err(Error::Consistency("trace transform did not re-expand".into()));
    }
    Ok(IntPoly::new(h))
}

/// `c t^(d-k) (t^2 + 1)^k`
fn lift_term(c: &BigInt, k: usize, d: usize) -> IntPoly {
    IntPoly::from_i64s(&[1, 0, 1]).pow(k as u32).scale(c).shift(d - k)
}

/// Inverse of [`trace_transform`]: `t^d h(t + 1/t)`.
pub fn trace_lift(h: &IntPoly) -> IntPoly {
    let d = h.deg();
    h.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(IntPoly::zero(), |acc, (k, c)| &acc + &lift_term(c, k, d))
}

/// Polynomial with Gaussian-integer coefficients as a pair of real parts.
#[derive(Clone)]
struct GaussPoly {
    re: IntPoly,
    im: IntPoly,
}

impl GaussPoly {
    fn mul(&self, o: &GaussPoly) -> GaussPoly {
        GaussPoly {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

/// Expansion basis `(t + i)^k (t - i)^(n - k)`, `k = 0..=n`.
fn kempner_basis(n: usize) -> Vec<GaussPoly> {
    let plus = GaussPoly { re: IntPoly::t(), im: IntPoly::one() };
    let minus = GaussPoly { re: IntPoly::t(), im: -IntPoly::one() };
    let one = GaussPoly { re: IntPoly::one(), im: IntPoly::zero() };
    let mut p_pow = vec![one.clone()];
    let mut m_pow = vec![one];
    for k in 1..=n {
        p_pow.push(p_pow[k - 1].mul(&plus));
        m_pow.push(m_pow[k - 1].mul(&minus));
    }
    (0..=n).map(|k| p_pow[k].mul(&m_pow[n - k])).collect()
}

/// Keeps the even-index coefficients as a polynomial in `u = t^2`.
fn even_part_in_u(p: &ParamPoly) -> Result<ParamPoly> {
    let mut out = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            if !c.is_zero() {
                return Err(Error::Consistency("Kempner transform has an odd coefficient".into()));
            }
        } else {
            out.push(c.clone());
        }
    }
    Ok(ParamPoly::new(out))
}

/// `g(t) = (t - i)^n f((t + i)/(t - i))` for palindromic `f` of even
/// degree `n`, returned as a polynomial in `u = t^2`. Coefficients may be
/// affine in the gluing counts.
pub fn kempner_transform_param(f: &ParamPoly) -> Result<ParamPoly> {
    let n = f.degree().ok_or_else(|| Error::Precondition("zero polynomial".into()))?;
    if n % 2 == 1 || !f.is_palindromic() {
        return Err(Error::Precondition("Kempner transform needs a palindromic polynomial of even degree".into()));
    }
    let basis = kempner_basis(n);
    let mut re = ParamPoly::zero();
    let mut im = ParamPoly::zero();
    for (k, b) in basis.iter().enumerate() {
        let a = f.coeff(k);
        if a.is_zero() {
            continue;
        }
        re = re.add(&ParamPoly::scaled(&a, &b.re));
        im = im.add(&ParamPoly::scaled(&a, &b.im));
    }
    if !im.is_zero() {
        return Err(Error::Consistency("Kempner transform has an imaginary residue".into()));
    }
    even_part_in_u(&re)
}

/// Integer version of [`kempner_transform_param`]; also requires
/// `f(1) != 0` and `f(-1) != 0`.
pub fn kempner_transform(f: &IntPoly) -> Result<IntPoly> {
    if f.eval(&BigInt::one()).is_zero() || f.eval(&-BigInt::one()).is_zero() {
        return Err(Error::Precondition("Kempner transform needs f(1) and f(-1) nonzero".into()));
    }
    let g = kempner_transform_param(&ParamPoly::from_poly(f))?;
    let [constant, ..] = g.slices();
    Ok(constant)
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::elim::residual_system;
use super::mpoly::parse_mpoly;
use super::sign::{sign_certificate, sign_on_nonnegative, Parity, SignCertificate};
use crate::error::{Error, Result};
use crate::exactpoly::{AffineForm, IntPoly, ParamPoly};
use crate::gluing::domino_symbolic;
use crate::golden::Golden;
use crate::rootloc::kempner_transform_param;

/// Evaluation point `X(n) / q` with `X` integral in `n` and `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TablePoint {
    pub text: String,
    pub x: IntPoly,
    pub q: BigInt,
}

impl TablePoint {
    pub fn parse(text: &str) -> Result<Self> {
        let (num, den) = match text.rsplit_once('/') {
            Some((a, b)) => (a, b.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad denominator in `{text}`")))?),
            None => (text, BigInt::one()),
        };
        if !den.is_positive() {
            return Err(Error::Parse(format!("nonpositive denominator in `{text}`")));
        }
        let e = parse_mpoly(num, &[])?;
        let c = e.coeff(&[]);
        if !c.c[1].is_zero() || !c.c[2].is_zero() {
            return Err(Error::Parse(format!("point `{text}` may only depend on n")));
        }
        Ok(TablePoint { text: text.trim().to_string(), x: IntPoly::new(vec![c.c[0].clone(), c.c[3].clone()]), q: den })
    }

    pub fn depends_on_n(&self) -> bool {
        self.x.deg() > 0
    }

    fn constant(&self) -> BigRational {
        BigRational::new(self.x.coeff(0), self.q.clone())
    }
}

/// `p(X/q) * q^deg` split as `V0(n) + l V1(n) + m V2(n)`.
fn eval_split(p: &ParamPoly, pt: &TablePoint) -> [IntPoly; 3] {
    let deg = p.degree().unwrap_or(0);
    let n_poly = IntPoly::t();
    let mut out = [IntPoly::zero(), IntPoly::zero(), IntPoly::zero()];
    for (j, c) in p.coeffs().iter().enumerate() {
        let w = &pt.x.pow(j as u32) * &IntPoly::constant(pt.q.pow((deg - j) as u32));
        out[0] = &out[0] + &(&(&IntPoly::constant(c.c[0].clone()) + &n_poly.scale(&c.c[3])) * &w);
        out[1] = &out[1] + &w.scale(&c.c[1]);
        out[2] = &out[2] + &w.scale(&c.c[2]);
    }
    out
}

/// `p(q(x))`
fn compose(p: &IntPoly, q: &IntPoly) -> IntPoly {
    p.coeffs().iter().rev().fold(IntPoly::zero(), |acc, c| &(&acc * q) + &IntPoly::constant(c.clone()))
}

#[derive(Clone, Debug, Serialize)]
pub struct SignRow {
    pub point: String,
    pub expected: i8,
    pub certified: bool,
    /// The value as an affine form (constant points) or as
    /// `V0(n) + l V1(n) + m V2(n)` (points depending on `n`).
    pub value: String,
    pub certificate: Option<SignCertificate>,
}

/// Certifies the sign of `p` at `pt` for all valid counts.
fn certify_point(p: &ParamPoly, pt: &TablePoint, expected: i8) -> SignRow {
    let [v0, v1, v2] = eval_split(p, pt);
    if !pt.depends_on_n() {
        let form = AffineForm::from_big([v0.coeff(0), v1.coeff(0), v2.coeff(0), v0.coeff(1)]);
        let cert = sign_certificate(&form, Parity::Both, 0);
        let certified = cert.as_ref().is_some_and(|c| c.sign == expected);
        return SignRow { point: pt.text.clone(), expected, certified, value: form.to_string(), certificate: cert };
    }
    // for fixed n the value is affine in (l, m); check the four corners of
    // {l, m >= 0, lo <= l + m <= n} with n = 2k (lo = k) or n = 2k + 1 (lo = k)
    let k = IntPoly::t();
    let mut certified = true;
    for (n_of_k, lo) in [(k.scale(&2.into()), k.clone()), (&k.scale(&2.into()) + &IntPoly::one(), k.clone())] {
        let (a, b, c) = (compose(&v0, &n_of_k), compose(&v1, &n_of_k), compose(&v2, &n_of_k));
        for (l, m) in [(lo.clone(), IntPoly::zero()), (IntPoly::zero(), lo.clone()), (n_of_k.clone(), IntPoly::zero()), (IntPoly::zero(), n_of_k.clone())] {
            let w = &(&a + &(&l * &b)) + &(&m * &c);
            certified &= sign_on_nonnegative(&w, expected);
        }
    }
    let value = format!("[{}] + l [{}] + m [{}]", v0.pretty(), v1.pretty(), v2.pretty()).replace('t', "n");
    SignRow { point: pt.text.clone(), expected, certified, value, certificate: None }
}

fn parse_signs(g: &Golden, key: &str) -> Result<Vec<i8>> {
    g.raw(key)?
        .split_whitespace()
        .map(|s| match s {
            "+" => Ok(1),
            "-" => Ok(-1),
            _ => Err(Error::Parse(format!("`{key}`: bad sign `{s}`"))),
        })
        .collect()
}

fn parse_points(g: &Golden, key: &str) -> Result<Vec<TablePoint>> {
    g.raw(key)?.split('|').map(TablePoint::parse).collect()
}

/// Whether `a < b` for every `n >= 0`.
fn ordered(a: &TablePoint, b: &TablePoint) -> bool {
    let diff = &b.x.scale(&a.q) - &a.x.scale(&b.q);
    sign_on_nonnegative(&diff, 1)
}

/// Whether the open interval between consecutive points is free of
/// integers for every `n >= 0`.
fn integer_free(a: &TablePoint, b: &TablePoint) -> bool {
    if !a.depends_on_n() && !b.depends_on_n() {
        let (lo, hi) = (a.constant(), b.constant());
        let first = lo.floor() + BigRational::one();
        return first >= hi;
    }
    a.q.is_one() && b.q.is_one() && &b.x - &a.x == IntPoly::one()
}

#[derive(Clone, Debug, Serialize)]
pub struct SignTable {
    pub rows: Vec<SignRow>,
    pub sign_changes: usize,
    pub degree: usize,
    pub ordered: bool,
}

impl SignTable {
    pub fn certified(&self) -> bool {
        self.ordered && self.rows.iter().all(|r| r.certified)
    }
}

fn sign_table(p: &ParamPoly, points: &[TablePoint], signs: &[i8]) -> Result<SignTable> {
    if points.len() != signs.len() {
        return Err(Error::Parse("points and signs differ in length".into()));
    }
    let rows: Vec<SignRow> = points.iter().zip(signs).map(|(pt, &s)| certify_point(p, pt, s)).collect();
    let sign_changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
    let ordered = points.windows(2).all(|w| ordered(&w[0], &w[1]));
    Ok(SignTable { rows, sign_changes, degree: p.degree().unwrap_or(0), ordered })
}

#[derive(Clone, Debug, Serialize)]
pub struct RootTableReport {
    pub kempner: SignTable,
    pub kempner_positive_roots: usize,
    pub kempner_negative_roots: usize,
    pub quadratic_residual: SignTable,
    /// All roots of the degree-9 residual are located strictly between
    /// consecutive points, none of which brackets an integer.
    pub no_integer_root: bool,
    pub spot_values: Vec<(String, String, bool)>,
}

impl RootTableReport {
    pub fn all_certified(&self) -> bool {
        self.kempner.certified()
            && self.kempner.sign_changes == self.kempner.degree
            && self.quadratic_residual.certified()
            && self.no_integer_root
            && self.spot_values.iter().all(|s| s.2)
    }
}

/// `K(u) / 4` for the domino denominators.
pub fn kempner_quarter() -> Result<ParamPoly> {
    let k = kempner_transform_param(&domino_symbolic()?.den)?;
    let four = BigInt::from(4);
    let coeffs = k
        .coeffs()
        .iter()
        .map(|c| {
            if c.c.iter().all(|x| x.is_multiple_of(&four)) {
                Ok(AffineForm::from_big(c.c.clone().map(|x| x / &four)))
            } else {
                Err(Error::Consistency("Kempner coefficients not divisible by 4".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ParamPoly::new(coeffs))
}

/// The degree-9 residual of the quadratic-factor system, as a polynomial in `a`.
pub fn quadratic_residual() -> Result<ParamPoly> {
    Ok(ParamPoly::new(residual_system(1)?.residuals[0].univariate()?))
}

/// Certifies both sign tables for every valid count triple.
pub fn verify_root_location_tables(g: &Golden) -> Result<RootTableReport> {
    let kq = kempner_quarter()?;
    let kpts = parse_points(g, "ktable.points")?;
    let ksigns = parse_signs(g, "ktable.signs")?;
    let kempner = sign_table(&kq, &kpts, &ksigns)?;
    let zero = BigRational::zero();
    let mut pos = 0;
    let mut neg = 0;
    for (w, s) in kpts.windows(2).zip(ksigns.windows(2)) {
        if s[0] != s[1] {
            if w[1].constant() <= zero && !w[1].depends_on_n() {
                neg += 1;
            } else {
                pos += 1;
            }
        }
    }
    let f = quadratic_residual()?;
    let fpts = parse_points(g, "ftable.points")?;
    let fsigns = parse_signs(g, "ftable.signs")?;
    let table = sign_table(&f, &fpts, &fsigns)?;
    let located = table.certified() && table.sign_changes == table.degree;
    let no_integer_root = located
        && fpts.windows(2).zip(fsigns.windows(2)).filter(|(_, s)| s[0] != s[1]).all(|(w, _)| integer_free(&w[0], &w[1]));
    let spot = |key: &str, at: i64| -> Result<(String, String, bool)> {
        let printed = g.affine(key)?;
        let value = f.coeffs().iter().rev().fold(AffineForm::zero(), |acc, c| {
            acc.scale(&BigInt::from(at)).add(c)
        });
        Ok((format!("f({at})"), value.to_string(), value == printed))
    };
    let spot_values = vec![spot("ftable.value.at_minus_3", -3)?, spot("ftable.value.at_minus_2", -2)?];
    Ok(RootTableReport {
        kempner,
        kempner_positive_roots: pos,
        kempner_negative_roots: neg,
        quadratic_residual: table,
        no_integer_root,
        spot_values,
    })
}

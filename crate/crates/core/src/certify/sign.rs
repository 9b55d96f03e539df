use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exactpoly::{AffineForm, IntPoly};
use crate::rootloc::{root_bound, sturm_count};

/// Parity of `n` selecting the bound on `n - l - m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
    Both,
}

impl Parity {
    fn cases(self) -> Vec<Parity> {
        match self {
            Parity::Both => vec![Parity::Even, Parity::Odd],
            p => vec![p],
        }
    }
}

type Point = [BigRational; 3];

/// Constraint `coeffs . (l, m, n) <= bound`.
#[derive(Clone, Debug)]
struct Halfspace {
    coeffs: [BigInt; 3],
    bound: BigInt,
}

impl Halfspace {
    fn new(c: [i64; 3], b: i64) -> Self {
        Halfspace { coeffs: c.map(BigInt::from), bound: b.into() }
    }

    fn lhs(&self, p: &Point) -> BigRational {
        self.coeffs.iter().zip(p).fold(BigRational::zero(), |acc, (c, x)| acc + x * BigRational::from_integer(c.clone()))
    }
}

/// `l >= 0, m >= 0, l + m <= n, n - l - m <= C(n)` and `n >= n_min`, where
/// `C(n) = (n + 1)/2` for odd and `n/2` for even `n`.
fn region(parity: Parity, n_min: i64) -> Vec<Halfspace> {
    let beta = if parity == Parity::Odd { 1 } else { 0 };
    vec![
        Halfspace::new([-1, 0, 0], 0),
        Halfspace::new([0, -1, 0], 0),
        Halfspace::new([1, 1, -1], 0),
        Halfspace::new([-2, -2, 1], beta),
        Halfspace::new([0, 0, -1], -n_min),
    ]
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

fn det3(m: &[[BigRational; 3]; 3]) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Vertices: feasible intersections of three constraint planes.
fn vertices(hs: &[Halfspace]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for i in 0..hs.len() {
        for j in (i + 1)..hs.len() {
            for k in (j + 1)..hs.len() {
                let rows = [&hs[i], &hs[j], &hs[k]];
                let a: [[BigRational; 3]; 3] = rows.map(|h| h.coeffs.clone().map(|c| rat(&c)));
                let d = det3(&a);
                if d.is_zero() {
                    continue;
                }
                let b: [BigRational; 3] = rows.map(|h| rat(&h.bound));
                let p: Point = std::array::from_fn(|col| {
                    let mut m = a.clone();
                    for r in 0..3 {
                        m[r][col] = b[r].clone();
                    }
                    det3(&m) / &d
                });
                if hs.iter().all(|h| h.lhs(&p) <= rat(&h.bound)) && !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Extreme rays of the recession cone `coeffs . x <= 0`.
fn rays(hs: &[Halfspace]) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    for i in 0..hs.len() {
        for j in (i + 1)..hs.len() {
            let (u, v) = (&hs[i].coeffs, &hs[j].coeffs);
            let cross = [
                &u[1] * &v[2] - &u[2] * &v[1],
                &u[2] * &v[0] - &u[0] * &v[2],
                &u[0] * &v[1] - &u[1] * &v[0],
            ];
            if cross.iter().all(Zero::is_zero) {
                continue;
            }
            for s in [1, -1] {
                let dir: Point = cross.clone().map(|c| rat(&(c * s)));
                let feasible = hs.iter().all(|h| h.lhs(&dir) <= BigRational::zero());
                let normalized = normalize(&dir);
                if feasible && !out.contains(&normalized) {
                    out.push(normalized);
                }
            }
        }
    }
    out
}

fn normalize(d: &Point) -> Point {
    let m = d.iter().map(|x| x.abs()).max().expect("three entries");
    d.clone().map(|x| x / &m)
}

fn eval_affine(e: &AffineForm, p: &Point) -> BigRational {
    rat(&e.c[0]) + rat(&e.c[1]) * &p[0] + rat(&e.c[2]) * &p[1] + rat(&e.c[3]) * &p[2]
}

fn eval_linear(e: &AffineForm, p: &Point) -> BigRational {
    rat(&e.c[1]) * &p[0] + rat(&e.c[2]) * &p[1] + rat(&e.c[3]) * &p[2]
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionEvidence {
    pub parity: Parity,
    pub n_min: i64,
    /// `(l, m, n)` and the value there.
    pub vertices: Vec<([String; 3], String)>,
    /// Direction and the directional derivative.
    pub rays: Vec<([String; 3], String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignCertificate {
    pub expression: String,
    /// `1` for strictly positive, `-1` for strictly negative.
    pub sign: i8,
    pub cases: Vec<RegionEvidence>,
}

fn show(p: &Point) -> [String; 3] {
    p.clone().map(|x| x.to_string())
}

/// Strict sign of `expr` on the count polyhedron (with `n >= n_min`),
/// certified from vertex values and ray slopes; `None` if not uniform.
pub fn sign_certificate(expr: &AffineForm, parity: Parity, n_min: i64) -> Option<SignCertificate> {
    let mut sign = 0i8;
    let mut cases = Vec::new();
    for p in parity.cases() {
        let hs = region(p, n_min);
        let vs = vertices(&hs);
        let rs = rays(&hs);
        if vs.is_empty() {
            return None;
        }
        let vals: Vec<BigRational> = vs.iter().map(|v| eval_affine(expr, v)).collect();
        let slopes: Vec<BigRational> = rs.iter().map(|r| eval_linear(expr, r)).collect();
        let s = if vals.iter().all(|v| v.is_positive()) && slopes.iter().all(|d| !d.is_negative()) {
            1
        } else if vals.iter().all(|v| v.is_negative()) && slopes.iter().all(|d| !d.is_positive()) {
            -1
        } else {
            return None;
        };
        if sign != 0 && s != sign {
            return None;
        }
        sign = s;
        cases.push(RegionEvidence {
            parity: p,
            n_min,
            vertices: vs.iter().zip(&vals).map(|(v, x)| (show(v), x.to_string())).collect(),
            rays: rs.iter().zip(&slopes).map(|(r, x)| (show(r), x.to_string())).collect(),
        });
    }
    Some(SignCertificate { expression: expr.to_string(), sign, cases })
}

/// Whether the integer polynomial has strict sign `sign` at every
/// `x >= 0`: the value at 0 has that sign and there is no root in
/// `(0, inf)`.
pub fn sign_on_nonnegative(p: &IntPoly, sign: i8) -> bool {
    let want = if sign > 0 { Sign::Plus } else { Sign::Minus };
    if p.is_zero() || p.sign_at(&BigRational::zero()) != want {
        return false;
    }
    if p.deg() == 0 {
        return true;
    }
    let b = BigRational::from_integer(root_bound(p));
    sturm_count(p, &BigRational::zero(), &b).is_ok_and(|c| c == 0)
}

//! Gluing formula for growth functions and the domino family `W_{l,m,n}`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::{gamma, gamma_star, steinberg_growth, CoxeterGraph};
use crate::error::{Error, Result};
use crate::exactpoly::{combine_affine, AffineForm, IntPoly, ParamPoly, RatFunc};
use crate::geometry::facet_subgraphs;
use crate::golden::Golden;

/// Numbers of gluings along facets of type A, B and (the rest) C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GluingCounts {
    pub l: u64,
    pub m: u64,
    pub n: u64,
}

impl GluingCounts {
    pub fn new(l: u64, m: u64, n: u64) -> Result<Self> {
        match validate_counts(l, m, n) {
            Ok(()) => Ok(GluingCounts { l, m, n }),
            Err(reason) => Err(Error::InvalidCounts { l, m, n, reason }),
        }
    }

    pub fn c_gluings(&self) -> u64 {
        self.n - self.l - self.m
    }

    /// All valid counts with `n <= n_max`, ordered by `(n, l, m)`.
    pub fn enumerate(n_max: u64) -> Vec<GluingCounts> {
        let mut out = Vec::new();
        for n in 0..=n_max {
            for l in 0..=n {
                for m in 0..=(n - l) {
                    if validate_counts(l, m, n).is_ok() {
                        out.push(GluingCounts { l, m, n });
                    }
                }
            }
        }
        out
    }
}

/// Checks `l + m <= n` and the bound on `n - l - m` (C-type gluings).
pub fn validate_counts(l: u64, m: u64, n: u64) -> std::result::Result<(), String> {
    if l.checked_add(m).is_none_or(|s| s > n) {
        return Err(format!("l + m = {} exceeds n = {n}", l as u128 + m as u128));
    }
    let c = n - l - m;
    let bound = n.div_ceil(2);
    if c > bound {
        return Err(format!("n - l - m = {c} exceeds {bound}"));
    }
    Ok(())
}

/// `(t - 1) / (t + 1)`.
fn gluing_factor() -> RatFunc {
    RatFunc::new(IntPoly::from_i64s(&[-1, 1]), IntPoly::from_i64s(&[1, 1])).expect("nonzero denominator")
}

/// Growth function of the polytope glued from two along a common
/// orthogonal facet with growth function `f`.
pub fn glue(w1: &RatFunc, w2: &RatFunc, f: &RatFunc) -> Result<RatFunc> {
    let inv = &(&w1.recip()? + &w2.recip()?) + &(&gluing_factor() * &f.recip()?);
    inv.recip()
}

/// The three classes of orthogonal facets of the truncated simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetGrowths {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
    /// For each vertex of the simplex, the class (`'A'`, `'B'` or `'C'`)
    /// of the facet truncating it.
    pub class_of_vertex: Vec<char>,
}

impl FacetGrowths {
    pub fn multiplicities(&self) -> [usize; 3] {
        let count = |c| self.class_of_vertex.iter().filter(|&&x| x == c).count();
        [count('A'), count('B'), count('C')]
    }
}

fn printed_facet(golden: &Golden, class: char) -> Result<RatFunc> {
    let key = class.to_ascii_lowercase();
    RatFunc::new(
        golden.factored(&format!("facet.{key}.num"))?,
        golden.factored(&format!("facet.{key}.den"))?,
    )
}

/// Computes the growth functions of the vertex-deleted subgraphs of the
/// simplex graph, groups them and names the groups by matching against
/// the reference table.
pub fn facet_growths_from(golden: &Golden) -> Result<FacetGrowths> {
    facet_growths_of(&gamma(), golden)
}

fn facet_growths_of(g: &CoxeterGraph, golden: &Golden) -> Result<FacetGrowths> {
    let printed = [
        ('A', printed_facet(golden, 'A')?),
        ('B', printed_facet(golden, 'B')?),
        ('C', printed_facet(golden, 'C')?),
    ];
    let mut class_of_vertex = Vec::new();
    for (v, sub) in facet_subgraphs(g)?.iter().enumerate() {
        let w = steinberg_growth(sub)?;
        let class = printed
            .iter()
            .find(|(_, p)| *p == w)
            .map(|(c, _)| *c)
            .ok_or_else(|| Error::Unmatched(format!("facet opposite vertex {} has growth {}", v + 1, w)))?;
        class_of_vertex.push(class);
    }
    let out = FacetGrowths {
        a: printed[0].1.clone(),
        b: printed[1].1.clone(),
        c: printed[2].1.clone(),
        class_of_vertex,
    };
    if out.multiplicities() != [2, 2, 1] {
        return Err(Error::Unmatched(format!("facet multiplicities {:?}", out.multiplicities())));
    }
    Ok(out)
}

/// Facet growth functions matched against the bundled reference table.
pub fn facet_growths() -> Result<FacetGrowths> {
    static CACHE: OnceLock<std::result::Result<FacetGrowths, Error>> = OnceLock::new();
    CACHE.get_or_init(|| facet_growths_from(&Golden::published())).clone()
}

/// Growth function of the truncated simplex (the single domino tile).
pub fn tile_growth() -> Result<RatFunc> {
    static CACHE: OnceLock<std::result::Result<RatFunc, Error>> = OnceLock::new();
    CACHE.get_or_init(|| steinberg_growth(&gamma_star())).clone()
}

/// `W_{l,m,n}` evaluated numerically from the gluing formula.
pub fn domino_growth(counts: GluingCounts) -> Result<RatFunc> {
    let GluingCounts { l, m, n } = GluingCounts::new(counts.l, counts.m, counts.n)?;
    let w = tile_growth()?;
    let f = facet_growths()?;
    let k = gluing_factor();
    let big = |x: u64| BigInt::from(x);
    let facets = &(&f.a.recip()?.scale(&big(l)) + &f.b.recip()?.scale(&big(m))) + &f.c.recip()?.scale(&big(n - l - m));
    let inv = &w.recip()?.scale(&big(n + 1)) + &(&k * &facets);
    inv.recip()
}

/// Rational function whose coefficients are affine in `(l, m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRatFunc {
    pub num: ParamPoly,
    pub den: ParamPoly,
}

impl ParamRatFunc {
    pub fn specialize(&self, counts: GluingCounts) -> Result<RatFunc> {
        let (l, m, n) = (counts.l.into(), counts.m.into(), counts.n.into());
        RatFunc::new(self.num.specialize(&l, &m, &n), self.den.specialize(&l, &m, &n))
    }
}

/// Closed form of `W_{l,m,n}` with the parameter-independent common
/// factor of numerator and denominator cancelled.
pub fn domino_symbolic() -> Result<ParamRatFunc> {
    let w = tile_growth()?;
    let f = facet_growths()?;
    let k = gluing_factor();
    let n1 = AffineForm::new(1, 0, 0, 1);
    let c = AffineForm::new(0, -1, -1, 1);
    let terms = [
        (n1, w.recip()?),
        (AffineForm::l(), &k * &f.a.recip()?),
        (AffineForm::m(), &k * &f.b.recip()?),
        (c, &k * &f.c.recip()?),
    ];
    // 1/W_{l,m,n} = inv_num / inv_den
    let (inv_num, inv_den) = combine_affine(&terms);
    let g = inv_num
        .slices()
        .iter()
        .fold(inv_den.clone(), |acc, s| if s.is_zero() { acc } else { acc.gcd(s) });
    let mut num = ParamPoly::from_poly(&inv_den.div_exact(&g)?);
    let mut den = inv_num.div_exact(&g)?;
    if !den.lead().is_constant() {
        return Err(Error::Consistency("leading coefficient depends on the counts".into()));
    }
    if den.lead().constant_term() < &BigInt::from(0) {
        num = num.neg();
        den = den.neg();
    }
    if !num.is_parameter_free() {
        return Err(Error::Consistency("numerator depends on the counts".into()));
    }
    Ok(ParamRatFunc { num, den })
}

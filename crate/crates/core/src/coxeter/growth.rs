use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::finite::{finite_type, solomon_polynomial};
use super::graph::CoxeterGraph;
use crate::error::{Error, Result};
use crate::exactpoly::{bracket, IntPoly, RatFunc};

pub const MAX_GENERATORS: usize = 24;

/// Every subset of generators spanning a finite subgroup, tallied by its
/// bracket signature (sorted `[e_i + 1]` list). The rank of a subset is the
/// length of its signature; the empty subset appears under `[]`.
pub fn spherical_census(g: &CoxeterGraph) -> Result<BTreeMap<Vec<u32>, u64>> {
    if g.size() > MAX_GENERATORS {
        return Err(Error::Graph(format!(
            "{} generators exceeds the supported maximum of {MAX_GENERATORS}",
            g.size()
        )));
    }
    let mut census = BTreeMap::new();
    let mut current = Vec::new();
    walk(g, 0, &mut current, &mut census);
    Ok(census)
}

// Finite parabolic subgroups are closed under taking subsets, so growing
// subsets in increasing node order and pruning at the first infinite one
// visits each finite subset exactly once.
fn walk(g: &CoxeterGraph, start: usize, current: &mut Vec<usize>, census: &mut BTreeMap<Vec<u32>, u64>) {
    let Some(ft) = finite_type(g, current) else {
        return;
    };
    *census.entry(ft.bracket_signature()).or_insert(0) += 1;
    for v in start..g.size() {
        current.push(v);
        walk(g, v + 1, current, census);
        current.pop();
    }
}

/// `1 / f_S(1/t)` as the alternating sum over finite subsets.
pub fn steinberg_sum(census: &BTreeMap<Vec<u32>, u64>) -> RatFunc {
    census.iter().fold(RatFunc::zero(), |acc, (sig, &count)| {
        let sign = if sig.len() % 2 == 0 { 1 } else { -1 };
        let term = RatFunc::new(IntPoly::constant(BigInt::from(sign * count as i64)), bracket(sig))
            .expect("brackets are nonzero");
        &acc + &term
    })
}

/// Growth function `f_S(t) = p(t)/q(t)` of the Coxeter system on `g`.
pub fn steinberg_growth(g: &CoxeterGraph) -> Result<RatFunc> {
    let all: Vec<usize> = (0..g.size()).collect();
    if let Some(ft) = finite_type(g, &all) {
        return Ok(RatFunc::from_poly(solomon_polynomial(&ft)));
    }
    let census = spherical_census(g)?;
    let inv = steinberg_sum(&census);
    // inv = 1/f(1/t); invert, then substitute t -> 1/t
    Ok(inv.recip()?.reciprocal_argument())
}

/// First `k` Taylor coefficients of `f` at 0, by the linear recurrence
/// of its denominator.
pub fn series_prefix(f: &RatFunc, k: usize) -> Result<Vec<BigInt>> {
    let den0 = f.den().coeff(0);
    if !den0.abs().is_one() {
        return Err(Error::Precondition(format!("denominator constant term {den0} is not a unit")));
    }
    let num = f.num();
    let den = f.den();
    let mut a: Vec<BigInt> = Vec::with_capacity(k);
    for i in 0..k {
        let mut s = num.coeff(i);
        for j in 1..=i.min(den.deg()) {
            s -= den.coeff(j) * &a[i - j];
        }
        a.push(&s * &den0); // den0 = ±1 is its own inverse
    }
    Ok(a)
}

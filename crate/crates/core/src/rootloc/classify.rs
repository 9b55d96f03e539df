use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::factor::is_irreducible;
use super::interval::{isolate_real_roots, IsolatingInterval};
use super::profile::{root_profile, RootProfile};
use crate::error::Result;
use crate::exactpoly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SalemClass {
    #[serde(rename = "salem")]
    Salem,
    #[serde(rename = "2-salem")]
    TwoSalem,
    #[serde(rename = "neither")]
    Neither,
}

impl std::fmt::Display for SalemClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SalemClass::Salem => "salem",
            SalemClass::TwoSalem => "2-salem",
            SalemClass::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SalemReport {
    pub class: SalemClass,
    pub profile: Option<RootProfile>,
    pub irreducible: Option<bool>,
    /// Isolating intervals of the real roots greater than 1, largest first.
    pub witnesses: Vec<IsolatingInterval>,
    pub reason: Option<String>,
}

impl SalemReport {
    fn neither(reason: &str) -> Self {
        SalemReport {
            class: SalemClass::Neither,
            profile: None,
            irreducible: None,
            witnesses: Vec::new(),
            reason: Some(reason.to_string()),
        }
    }
}

/// Real roots of `f` greater than 1, largest first, refined to `digits`.
pub fn roots_above_one(f: &IntPoly, digits: u32) -> Vec<IsolatingInterval> {
    let one = BigRational::one();
    let mut out: Vec<IsolatingInterval> = isolate_real_roots(f)
        .into_iter()
        .filter_map(|mut r| {
            while r.contains(&one) || r.lo() == &one || r.hi() == &one {
                let w = r.width() / BigRational::from_integer(2.into());
                r.refine_to(&w);
            }
            (r.lo() >= &one).then(|| {
                r.refine_digits(digits);
                r
            })
        })
        .collect();
    out.reverse();
    out
}

/// Salem, 2-Salem or neither for a monic integer polynomial.
pub fn classify_salem(f: &IntPoly) -> Result<SalemReport> {
    if f.deg() == 0 || f.deg() % 2 == 1 || !f.is_palindromic() {
        return Ok(SalemReport::neither("not palindromic of even degree"));
    }
    if !f.is_monic() {
        return Ok(SalemReport::neither("not monic"));
    }
    if f.eval(&BigInt::one()).is_zero() || f.eval(&-BigInt::one()).is_zero() {
        return Ok(SalemReport::neither("root at 1 or -1"));
    }
    if !f.is_squarefree() {
        return Ok(SalemReport::neither("repeated roots"));
    }
    let profile = root_profile(f)?;
    let mut report = SalemReport::neither("");
    report.profile = Some(profile);
    if profile.unresolved > 0 {
        report.reason = Some("roots off the circle and the real line".into());
        return Ok(report);
    }
    let irreducible = is_irreducible(f)?;
    report.irreducible = Some(irreducible);
    report.witnesses = roots_above_one(f, 12);
    report.reason = None;
    report.class = match (irreducible, profile.real_pairs, profile.circle_pairs) {
        (true, 1, c) if c >= 1 => SalemClass::Salem,
        (true, 2, c) if c >= 1 => SalemClass::TwoSalem,
        _ => {
            report.reason = Some(if irreducible { "root counts do not match" } else { "reducible" }.into());
            SalemClass::Neither
        }
    };
    Ok(report)
}

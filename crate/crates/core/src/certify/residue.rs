use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::elim::{residual_system, ElimSystem};
use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::exactpoly::AffineForm;
use crate::golden::Golden;

/// One-parameter subfamilies of the domino counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Specialization {
    /// `(0, n, n)`: all gluings along B.
    ZeroNN,
    /// `(n, 0, n)`: all gluings along A.
    NZeroN,
}

impl Specialization {
    pub fn key(self) -> &'static str {
        match self {
            Specialization::ZeroNN => "0nn",
            Specialization::NZeroN => "n0n",
        }
    }

    pub fn counts(self, n: u64) -> (u64, u64, u64) {
        match self {
            Specialization::ZeroNN => (0, n, n),
            Specialization::NZeroN => (n, 0, n),
        }
    }

    fn apply(self, p: &MPoly) -> MPoly {
        let (zero, n) = (AffineForm::zero(), AffineForm::n());
        match self {
            Specialization::ZeroNN => p.substitute_counts(&zero, &n, &n),
            Specialization::NZeroN => p.substitute_counts(&n, &zero, &n),
        }
    }
}

/// `c0 + cn n` reduced to representatives in `{-1, 0, 1}`.
fn reduce3(c0: &BigInt, cn: &BigInt) -> (i8, i8) {
    let r = |x: &BigInt| -> i8 {
        let v: i8 = x.mod_floor(&BigInt::from(3)).try_into().expect("small");
        if v == 2 {
            -1
        } else {
            v
        }
    };
    (r(c0), r(cn))
}

fn vanishes_at(form: (i8, i8), n: i8) -> bool {
    (form.0 as i32 + form.1 as i32 * n as i32).rem_euclid(3) == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Impossible,
    /// Possible only for `n` in the listed residue classes.
    OnlyIf(Vec<i8>),
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueRow {
    pub a: i8,
    pub b: i8,
    #[serde(serialize_with = "pair_as_strings")]
    pub f_value: (BigInt, BigInt),
    pub f_mod: (i8, i8),
    #[serde(serialize_with = "pair_as_strings")]
    pub g_value: (BigInt, BigInt),
    pub g_mod: (i8, i8),
    /// False when `f` alone is a nonzero constant modulo 3.
    pub g_needed: bool,
    pub verdict: Verdict,
}

fn pair_as_strings<S: serde::Serializer>(v: &(BigInt, BigInt), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&v.0.to_string())?;
    t.serialize_element(&v.1.to_string())?;
    t.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueTable {
    pub specialization: Specialization,
    pub rows: Vec<ResidueRow>,
}

/// Rows in the order used by the reference tables.
pub const RESIDUE_ROWS: [(i8, i8); 9] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1)];

fn value_pair(p: &MPoly, a: i8, b: i8) -> Result<(BigInt, BigInt)> {
    let v = p.eval(&[BigInt::from(a), BigInt::from(b)]);
    if !v.c[1].is_zero() || !v.c[2].is_zero() {
        return Err(Error::Consistency("specialized value depends on l or m".into()));
    }
    Ok((v.c[0].clone(), v.c[3].clone()))
}

/// Values of the quartic-factor residuals at `(a, b) in {-1, 0, 1}^2`
/// with their reductions modulo 3 and the resulting verdicts.
pub fn residue_tables(spec: Specialization) -> Result<ResidueTable> {
    residue_table_from(&residual_system(2)?, spec)
}

fn residue_table_from(sys: &ElimSystem, spec: Specialization) -> Result<ResidueTable> {
    if sys.d != 2 {
        return Err(Error::Precondition("residue tables use the quartic-factor system".into()));
    }
    let f = spec.apply(&sys.residuals[0]);
    let g = spec.apply(&sys.residuals[1]);
    let mut rows = Vec::new();
    for (a, b) in RESIDUE_ROWS {
        let f_value = value_pair(&f, a, b)?;
        let g_value = value_pair(&g, a, b)?;
        let f_mod = reduce3(&f_value.0, &f_value.1);
        let g_mod = reduce3(&g_value.0, &g_value.1);
        let classes: Vec<i8> = [-1, 0, 1].into_iter().filter(|&r| vanishes_at(f_mod, r) && vanishes_at(g_mod, r)).collect();
        rows.push(ResidueRow {
            a,
            b,
            f_value,
            f_mod,
            g_value,
            g_mod,
            g_needed: !(f_mod.1 == 0 && f_mod.0 != 0),
            verdict: if classes.is_empty() { Verdict::Impossible } else { Verdict::OnlyIf(classes) },
        });
    }
    Ok(ResidueTable { specialization: spec, rows })
}

fn parse_pair(s: &str) -> Result<Option<(BigInt, BigInt)>> {
    let s = s.trim();
    if s == "-" {
        return Ok(None);
    }
    let v: Vec<BigInt> = s
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad integer `{x}`"))))
        .collect::<Result<_>>()?;
    match v.as_slice() {
        [a, b] => Ok(Some((a.clone(), b.clone()))),
        _ => Err(Error::Parse(format!("expected two integers in `{s}`"))),
    }
}

/// Cell-by-cell comparison against the reference tables; returns the
/// list of mismatching cells.
pub fn compare_residue_table(table: &ResidueTable, golden: &Golden) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let key = table.specialization.key();
    for row in &table.rows {
        let cell = format!("residue.{key}.{},{}", row.a, row.b);
        let fields: Vec<&str> = golden.raw(&cell)?.split('|').collect();
        if fields.len() != 5 {
            return Err(Error::Parse(format!("`{cell}`: expected five fields")));
        }
        let small = |p: &(BigInt, BigInt)| (i8::try_from(&p.0).unwrap_or(i8::MAX), i8::try_from(&p.1).unwrap_or(i8::MAX));
        let same_mod = |x: (i8, i8), y: (i8, i8)| reduce3(&x.0.into(), &x.1.into()) == reduce3(&y.0.into(), &y.1.into());
        if parse_pair(fields[0])? != Some(row.f_value.clone()) {
            bad.push(format!("{cell}: f value"));
        }
        match parse_pair(fields[1])? {
            Some(p) if same_mod(small(&p), row.f_mod) => {}
            _ => bad.push(format!("{cell}: f residue")),
        }
        match (parse_pair(fields[2])?, parse_pair(fields[3])?) {
            (None, None) => {
                if row.g_needed {
                    bad.push(format!("{cell}: g required"));
                }
            }
            (Some(v), Some(r)) => {
                if v != row.g_value {
                    bad.push(format!("{cell}: g value"));
                }
                if !same_mod(small(&r), row.g_mod) {
                    bad.push(format!("{cell}: g residue"));
                }
            }
            _ => return Err(Error::Parse(format!("`{cell}`: g value and residue must both be given"))),
        }
        let verdict = match fields[4].trim() {
            "impossible" => Verdict::Impossible,
            r => Verdict::OnlyIf(vec![r.parse().map_err(|_| Error::Parse(format!("`{cell}`: bad verdict")))?]),
        };
        if verdict != row.verdict {
            bad.push(format!("{cell}: verdict"));
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExclusionVerdict {
    NoSurvivingClass,
    /// Residue classes of the unknowns that satisfy every residual mod 3.
    Inconclusive(Vec<Vec<i8>>),
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorExclusion {
    pub specialization: Specialization,
    pub factor_degree: usize,
    pub n_residue: i8,
    pub classes_tested: usize,
    pub verdict: ExclusionVerdict,
}

/// Tests all residue classes modulo 3 of the unknown coefficients of a
/// monic palindromic factor of degree `2d`, for `n` in the given class.
pub fn no_small_palindromic_factor(spec: Specialization, d: usize, n_residue: i8) -> Result<FactorExclusion> {
    let sys = residual_system(d)?;
    let residuals: Vec<MPoly> = sys.residuals.iter().map(|r| spec.apply(r)).collect();
    let three = BigInt::from(3);
    let n = BigInt::from(n_residue);
    let mut survivors = Vec::new();
    let total = 3usize.pow(d as u32);
    for idx in 0..total {
        let xs: Vec<i8> = (0..d).map(|i| ((idx / 3usize.pow(i as u32)) % 3) as i8 - 1).collect();
        let big: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x)).collect();
        let ok = residuals.iter().all(|r| {
            let v = r.eval(&big);
            (&v.c[0] + &v.c[3] * &n).mod_floor(&three).is_zero()
        });
        if ok {
            survivors.push(xs);
        }
    }
    Ok(FactorExclusion {
        specialization: spec,
        factor_degree: 2 * d,
        n_residue,
        classes_tested: total,
        verdict: if survivors.is_empty() { ExclusionVerdict::NoSurvivingClass } else { ExclusionVerdict::Inconclusive(survivors) },
    })
}

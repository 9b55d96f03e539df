use std::io::Write;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use salemforge::gluing::{domino_growth, GluingCounts};
use salemforge::rootloc::{classify_salem, growth_rate, root_profile, roots_above_one};
use salemforge::Error;

use crate::error::{CliError, CliResult};

pub const DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    pub skip_irreducibility: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Known(bool),
    Skipped,
}

impl Serialize for Irreducibility {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Irreducibility::Known(b) => s.serialize_bool(*b),
            Irreducibility::Skipped => s.serialize_str("skipped"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub l: u64,
    pub m: u64,
    pub n: u64,
    pub tau_lo: String,
    pub tau_hi: String,
    pub beta_lo: String,
    pub beta_hi: String,
    pub circle_pairs: usize,
    pub real_pairs: usize,
    pub irreducible: Irreducibility,
    pub salem_class: String,
    /// Denominator coefficients, lowest degree first.
    pub q_coeffs: Vec<String>,
}

/// Same fields, with the coefficients joined into one space-separated cell.
#[derive(Serialize)]
struct CsvRecord<'a> {
    l: u64,
    m: u64,
    n: u64,
    tau_lo: &'a str,
    tau_hi: &'a str,
    beta_lo: &'a str,
    beta_hi: &'a str,
    circle_pairs: usize,
    real_pairs: usize,
    irreducible: Irreducibility,
    salem_class: &'a str,
    q_coeffs: String,
}

impl<'a> From<&'a CensusRow> for CsvRecord<'a> {
    fn from(r: &'a CensusRow) -> Self {
        CsvRecord {
            l: r.l,
            m: r.m,
            n: r.n,
            tau_lo: &r.tau_lo,
            tau_hi: &r.tau_hi,
            beta_lo: &r.beta_lo,
            beta_hi: &r.beta_hi,
            circle_pairs: r.circle_pairs,
            real_pairs: r.real_pairs,
            irreducible: r.irreducible,
            salem_class: &r.salem_class,
            q_coeffs: r.q_coeffs.join(" "),
        }
    }
}

fn violated(c: GluingCounts, what: &str) -> CliError {
    CliError::Check(format!("census invariant violated at ({},{},{}): {what}", c.l, c.m, c.n))
}

pub fn census_row(c: GluingCounts, opts: CensusOptions) -> CliResult<CensusRow> {
    let at = |e: Error| violated(c, &e.to_string());
    let q = domino_growth(c).map_err(at)?.den().clone();
    let profile = root_profile(&q).map_err(at)?;
    if profile.circle_pairs != 7 || profile.real_pairs != 2 {
        return Err(violated(c, &format!("root profile {profile:?}")));
    }
    let tau = growth_rate(&q).map_err(at)?;
    let (tau_lo, tau_hi) = tau.decimal_bounds(DIGITS);
    if !tau.strictly_within((4 * c.n + 5) as i64, (4 * c.n + c.m + c.l + 6) as i64) {
        return Err(violated(c, &format!("growth rate {tau} outside (4n+5, 4n+l+m+6)")));
    }
    let above = roots_above_one(&q, DIGITS);
    let beta = above.get(1).ok_or_else(|| violated(c, "second real root above 1 missing"))?;
    let (beta_lo, beta_hi) = beta.decimal_bounds(DIGITS);
    let (irreducible, salem_class) = if opts.skip_irreducibility {
        (Irreducibility::Skipped, "skipped".to_string())
    } else {
        let report = classify_salem(&q).map_err(at)?;
        (Irreducibility::Known(report.irreducible == Some(true)), report.class.to_string())
    };
    Ok(CensusRow {
        l: c.l,
        m: c.m,
        n: c.n,
        tau_lo,
        tau_hi,
        beta_lo,
        beta_hi,
        circle_pairs: profile.circle_pairs,
        real_pairs: profile.real_pairs,
        irreducible,
        salem_class,
        q_coeffs: q.to_decimal_strings(),
    })
}

/// Computes all rows with `n <= n_max`, one `n` at a time in parallel,
/// handing them to `sink` in lexicographic `(n, l, m)` order.
pub fn run_census(n_max: u64, opts: CensusOptions, mut sink: impl FnMut(&CensusRow) -> CliResult<()>) -> CliResult<usize> {
    let mut total = 0;
    for n in 0..=n_max {
        let counts: Vec<GluingCounts> = (0..=n)
            .flat_map(|l| (0..=n - l).map(move |m| (l, m)))
            .filter_map(|(l, m)| GluingCounts::new(l, m, n).ok())
            .collect();
        let rows: Vec<CensusRow> = counts.par_iter().map(|&c| census_row(c, opts)).collect::<CliResult<_>>()?;
        for row in &rows {
            sink(row)?;
        }
        total += rows.len();
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Streams the census to `out`; returns the number of rows.
pub fn write_census<W: Write>(n_max: u64, opts: CensusOptions, format: Format, out: W) -> CliResult<usize> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let count = run_census(n_max, opts, |row| Ok(w.serialize(CsvRecord::from(row))?))?;
            w.flush()?;
            Ok(count)
        }
        Format::Json => {
            let mut out = out;
            writeln!(out, "[")?;
            let mut first = true;
            let count = run_census(n_max, opts, |row| {
                if !first {
                    writeln!(out, ",")?;
                }
                first = false;
                write!(out, "  {}", serde_json::to_string(row)?)?;
                Ok(())
            })?;
            if !first {
                writeln!(out)?;
            }
            writeln!(out, "]")?;
            out.flush()?;
            Ok(count)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_row() {
        let r = census_row(GluingCounts::new(0, 0, 0).unwrap(), CensusOptions::default()).unwrap();
        assert_eq!(r.q_coeffs.len(), 19);
        assert_eq!(r.q_coeffs[..4], ["1", "-6", "3", "-5"]);
        assert_eq!((r.circle_pairs, r.real_pairs), (7, 2));
        assert!(r.tau_lo.starts_with("5.") && r.tau_lo < r.tau_hi);
        assert_eq!(r.tau_lo.split('.').nth(1).unwrap().len(), DIGITS as usize);
    }

    #[test]
    fn skipped_fields() {
        let opts = CensusOptions { skip_irreducibility: true };
        let r = census_row(GluingCounts::new(0, 1, 1).unwrap(), opts).unwrap();
        assert_eq!(r.irreducible, Irreducibility::Skipped);
        assert_eq!(serde_json::to_value(&r).unwrap()["irreducible"], "skipped");
    }

    #[test]
    fn csv_header_and_order() {
        let mut buf = Vec::new();
        let count = write_census(1, CensusOptions { skip_irreducibility: true }, Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "l,m,n,tau_lo,tau_hi,beta_lo,beta_hi,circle_pairs,real_pairs,irreducible,salem_class,q_coeffs"
        );
        assert_eq!(count, 4);
        let keys: Vec<&str> = lines[1..].iter().map(|l| &l[..5]).collect();
        assert_eq!(keys, ["0,0,0", "0,0,1", "0,1,1", "1,0,1"]);
    }
}

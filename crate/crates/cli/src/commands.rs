use std::path::Path;

use serde_json::{json, Value};

use salemforge::coxeter::{builtin, series_prefix, steinberg_growth, CoxeterGraph, BUILTIN_NAMES};
use salemforge::exactpoly::IntPoly;
use salemforge::geometry::{compactness_report, gram_from_graph, signature, truncation_extend};
use salemforge::gluing::{domino_growth, validate_counts, GluingCounts};
use salemforge::golden::Golden;
use salemforge::rootloc::{
    classify_salem, cohn_check, cohn_height, factor_reciprocal, growth_rate, root_profile, roots_above_one,
};
use salemforge::verify::{verify_paper_with, VerifyOptions, VerifyReport};

use crate::error::{CliError, CliResult};

fn poly_json(p: &IntPoly) -> Value {
    json!(p.to_decimal_strings())
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// Reads a polynomial in canonical text form (coefficients lowest first).
pub fn read_poly(path: &Path) -> CliResult<IntPoly> {
    let text = read_file(path)?;
    text.trim().parse().map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A built-in name, or a path to a graph file.
pub fn resolve_graph(spec: &str) -> CliResult<CoxeterGraph> {
    if let Some(g) = builtin(spec) {
        return Ok(g);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(CliError::Usage(format!(
            "`{spec}` is neither a file nor a built-in graph ({})",
            BUILTIN_NAMES.join(", ")
        )));
    }
    CoxeterGraph::parse(&read_file(path)?).map_err(|e| CliError::Usage(format!("{spec}: {e}")))
}

pub fn growth(spec: &str) -> CliResult<Value> {
    let g = resolve_graph(spec)?;
    let f = steinberg_growth(&g)?;
    let rate = growth_rate(f.den()).ok();
    let series: Vec<String> = series_prefix(&f, 12)?.iter().map(ToString::to_string).collect();
    Ok(json!({
        "graph": spec,
        "generators": g.size(),
        "num": poly_json(f.num()),
        "den": poly_json(f.den()),
        "num_text": f.num().pretty(),
        "den_text": f.den().pretty(),
        "series": series,
        "growth_rate": rate,
    }))
}

pub fn domino(l: u64, m: u64, n: u64) -> CliResult<Value> {
    validate_counts(l, m, n).map_err(|r| CliError::Usage(format!("invalid counts ({l},{m},{n}): {r}")))?;
    let c = GluingCounts::new(l, m, n)?;
    let w = domino_growth(c)?;
    let q = w.den();
    let profile = root_profile(q)?;
    Ok(json!({
        "l": l,
        "m": m,
        "n": n,
        "num": poly_json(w.num()),
        "den": poly_json(q),
        "root_profile": profile,
        "tau": growth_rate(q)?,
        "roots_above_one": roots_above_one(q, crate::census::DIGITS),
    }))
}

pub fn classify(path: &Path) -> CliResult<Value> {
    let f = read_poly(path)?;
    Ok(serde_json::to_value(classify_salem(&f)?)?)
}

pub fn factor(path: &Path) -> CliResult<Value> {
    let f = read_poly(path)?;
    let factors = factor_reciprocal(&f)?;
    Ok(json!({
        "input": poly_json(&f),
        "factors": factors.iter().map(poly_json).collect::<Vec<_>>(),
        "factors_text": factors.iter().map(IntPoly::pretty).collect::<Vec<_>>(),
    }))
}

/// Fails with a check error when the scan finds no prime value.
pub fn cohn(path: &Path, scan: u64, rounds: usize) -> CliResult<Value> {
    let f = read_poly(path)?;
    if !f.is_monic() {
        return Err(CliError::Usage("the Cohn criterion needs a monic polynomial".into()));
    }
    match cohn_check(&f, scan, rounds) {
        Some(w) => Ok(json!({ "height": cohn_height(&f).to_string(), "witness": w })),
        None => Err(CliError::Check(format!("no probable prime value in {scan} values from H + 2"))),
    }
}

/// Returns the report and whether every geometric check held.
pub fn geometry_verify() -> CliResult<(Value, bool)> {
    let gamma = builtin("gamma").expect("builtin");
    let gm = gram_from_graph(&gamma)?;
    let sig = signature(&gm)?;
    let (gs, trunc) = truncation_extend(&gm, &gamma)?;
    let compact = compactness_report(&gm, &gs)?;
    let compact_ok = compact.compact(gm.order());
    let iso = gs.is_isomorphic(&builtin("gamma-star").expect("builtin"));
    let ok = sig == (4, 1) && trunc.all_passed() && compact_ok && iso;
    Ok((
        json!({
            "signature": [sig.0, sig.1],
            "truncation": trunc,
            "compactness": compact,
            "compact": compact_ok,
            "gamma_star_isomorphic": iso,
            "truncated_graph": gs.to_text(),
            "passed": ok,
        }),
        ok,
    ))
}

pub fn verify_paper(mr_rounds: usize) -> VerifyReport {
    let opts = VerifyOptions { mr_rounds, ..Default::default() };
    verify_paper_with(&Golden::published(), &opts)
}

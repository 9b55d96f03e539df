//! End-to-end reproduction suite: every published value is recomputed
//! from scratch and compared with the reference table.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::certify::{
    compare_residue_table, no_small_palindromic_factor, parse_mpoly, residual_system, residue_tables,
    verify_root_location_tables, ExclusionVerdict, Specialization, UNKNOWN_NAMES,
};
use crate::coxeter::{
    bfs_growth_finite, builtin, finite_type, series_prefix, solomon_polynomial, spherical_census, steinberg_growth,
    CoxeterGraph, Label, DEFAULT_ORDER_CAP,
};
use crate::error::{Error, Result};
use crate::exactpoly::{cyclotomic, poly, IntPoly, RatFunc};
use crate::geometry::{compactness_check, gram_from_graph, signature, truncation_extend};
use crate::gluing::{
    domino_growth, domino_symbolic, facet_growths, facet_growths_from, glue, tile_growth, GluingCounts,
};
use crate::golden::Golden;
use crate::rootloc::{
    classify_salem, cohn_check, factor_reciprocal, growth_rate_digits, is_irreducible, is_probable_prime,
    kempner_transform_param, root_profile, sturm_count, SalemClass, DEFAULT_COHN_SCAN,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest `n` of the exhaustive root-location sweep.
    pub sweep_n_max: u64,
    pub random_samples: usize,
    pub random_n_max: u64,
    pub factor_samples: usize,
    /// Largest rank of the finite groups checked against the BFS oracle.
    pub bfs_max_rank: usize,
    pub mr_rounds: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sweep_n_max: 30,
            random_samples: 200,
            random_n_max: 60,
            factor_samples: 100,
            bfs_max_rank: 4,
            mr_rounds: crate::rootloc::DEFAULT_MR_ROUNDS,
            seed: 0x5a1e_f0f6,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// Acceptance criterion this check belongs to (1-based).
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn failed(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Whether every check of the given criterion passed.
    pub fn criterion_passed(&self, criterion: u8) -> bool {
        let mut any = false;
        for c in self.checks.iter().filter(|c| c.criterion == criterion) {
            any = true;
            if !c.passed {
                return false;
            }
        }
        any
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Outcome {
    passed: bool,
    detail: String,
    data: Option<Value>,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, detail: detail.into(), data: None })
}

fn run(criterion: u8, name: &'static str, limit: Option<f64>, f: impl FnOnce() -> Result<Outcome>) -> CheckResult {
    let start = Instant::now();
    let res = f();
    let seconds = start.elapsed().as_secs_f64();
    let (mut passed, mut detail, data) = match res {
        Ok(o) => (o.passed, o.detail, o.data),
        Err(e) => (false, format!("error: {e}"), None),
    };
    if let Some(limit) = limit {
        if seconds >= limit {
            passed = false;
            detail = format!("{detail}; took {seconds:.2}s, limit {limit}s");
        }
    }
    CheckResult { criterion, name, passed, detail, seconds, data }
}

fn mismatch(what: &str, got: &impl std::fmt::Display, want: &impl std::fmt::Display) -> String {
    format!("{what}: computed {got}, reference {want}")
}

/// Runs the whole suite against `golden` with default options.
pub fn verify_paper(golden: &Golden) -> VerifyReport {
    verify_paper_with(golden, &VerifyOptions::default())
}

pub fn verify_paper_with(g: &Golden, opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();

    checks.push(run(1, "triangle-growth", Some(1.0), || {
        let f = steinberg_growth(&builtin("triangle-2-3-7").expect("builtin"))?;
        let num = g.factored("triangle.num")?;
        let den = g.poly("triangle.den")?;
        let lehmer = g.poly("lehmer")?;
        let ok = f.num() == &num && f.den() == &den && f.den() == &lehmer;
        outcome(ok, format!("{} / {}", f.num().pretty(), f.den().pretty()))
    }));

    checks.push(run(2, "domino-census", Some(5.0), || {
        let mut census = spherical_census(&builtin("gamma-star").expect("builtin"))?;
        census.remove(&Vec::new());
        let want = g.census("domino.w.census")?;
        let detail = census.iter().map(|(s, c)| format!("{s:?}:{c}")).collect::<Vec<_>>().join(" ");
        outcome(census == want, detail)
    }));
    let w = steinberg_growth(&builtin("gamma-star").expect("builtin"));
    checks.push(run(2, "domino-numerator", Some(5.0), || {
        let w = w.clone()?;
        let p = g.brackets("domino.w.num.brackets")?;
        let ok = w.num() == &p && w.num() == &g.factored("domino.w.num.factors")?;
        outcome(ok, mismatch("P", &w.num().pretty(), &p.pretty()))
    }));
    checks.push(run(2, "domino-denominator", Some(5.0), || {
        let w = w.clone()?;
        let q = g.poly("domino.w.den")?;
        outcome(w.den() == &q, mismatch("Q", &w.den().pretty(), &q.pretty()))
    }));

    checks.push(run(3, "facet-growths", None, || {
        let f = facet_growths_from(g)?;
        let mult = f.multiplicities();
        outcome(mult == [2, 2, 1], format!("classes {:?}, multiplicities A:{} B:{} C:{}", f.class_of_vertex, mult[0], mult[1], mult[2]))
    }));

    let sym = domino_symbolic();
    checks.push(run(4, "family-denominator", None, || {
        let sym = sym.clone()?;
        let want = g.param_poly("family.den", 18)?;
        let bad: Vec<usize> = (0..=18).filter(|&k| sym.den.coeff(k) != want.coeff(k)).collect();
        let at_one = sym.den.eval_at(&BigInt::one());
        let ok = bad.is_empty() && sym.den.degree() == Some(18) && at_one == g.affine("family.den.at_one")?;
        outcome(ok, if bad.is_empty() { format!("Q(1) = {at_one}") } else { format!("coefficients differ at t^{bad:?}") })
    }));
    checks.push(run(4, "family-numerator", None, || {
        let sym = sym.clone()?;
        let p = g.brackets("family.num.brackets")?;
        let ok = sym.num.is_parameter_free() && sym.num.specialize_i64(0, 0, 0) == p;
        outcome(ok, format!("{}", sym.num))
    }));
    checks.push(run(4, "iterated-gluing", None, || {
        let w = tile_growth()?;
        let f = facet_growths()?;
        let sym = sym.clone()?;
        let mut count = 0;
        for c in GluingCounts::enumerate(4) {
            // glue the A tiles first, then B, then C
            let mut acc = w.clone();
            for (k, facet) in [(c.l, &f.a), (c.m, &f.b), (c.c_gluings(), &f.c)] {
                for _ in 0..k {
                    acc = glue(&acc, &w, facet)?;
                }
            }
            if acc != sym.specialize(c)? {
                return outcome(false, format!("mismatch at {c:?}"));
            }
            count += 1;
        }
        outcome(true, format!("{count} triples with n <= 4"))
    }));
    checks.push(run(4, "random-specializations", None, || {
        let sym = sym.clone()?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let samples: Vec<GluingCounts> = (0..opts.random_samples).map(|_| random_counts(&mut rng, opts.random_n_max)).collect();
        let bad: Vec<String> = samples
            .par_iter()
            .filter_map(|&c| match (sym.specialize(c), domino_growth(c)) {
                (Ok(a), Ok(b)) if a == b => None,
                _ => Some(format!("{c:?}")),
            })
            .collect();
        outcome(bad.is_empty(), format!("{} samples with n <= {}; mismatches {bad:?}", samples.len(), opts.random_n_max))
    }));

    checks.push(run(5, "kempner-expansion", None, || {
        let sym = sym.clone()?;
        let k = kempner_transform_param(&sym.den)?;
        let scale = g.ints("kempner.scale")?.into_iter().next().ok_or_else(|| Error::Parse("kempner.scale".into()))?;
        let printed = g.param_poly("kempner", 9)?;
        let bad: Vec<usize> = (0..=9).filter(|&j| k.coeff(j) != printed.coeff(j).scale(&scale)).collect();
        let ok = bad.is_empty() && k.degree() == Some(9);
        outcome(ok, if ok { format!("leading {}", k.lead()) } else { format!("coefficients differ at u^{bad:?}") })
    }));

    let sweep = GluingCounts::enumerate(opts.sweep_n_max);
    checks.push(run(6, "root-profile-sweep", Some(600.0), || {
        let bad: Vec<String> = sweep
            .par_iter()
            .filter_map(|&c| {
                let q = match domino_growth(c) {
                    Ok(w) => w.den().clone(),
                    Err(e) => return Some(format!("{c:?}: {e}")),
                };
                match root_profile(&q) {
                    Ok(p) if p.circle_pairs == 7 && p.real_pairs == 2 => None,
                    Ok(p) => Some(format!("{c:?}: {p:?}")),
                    Err(e) => Some(format!("{c:?}: {e}")),
                }
            })
            .collect();
        outcome(bad.is_empty(), format!("{} triples with n <= {}, both routes; failures {bad:?}", sweep.len(), opts.sweep_n_max))
    }));
    checks.push(run(7, "growth-rate-sandwich", None, || {
        let bad: Vec<String> = sweep
            .par_iter()
            .filter_map(|&c| match sandwich(c) {
                Ok(true) => None,
                Ok(false) => Some(format!("{c:?}")),
                Err(e) => Some(format!("{c:?}: {e}")),
            })
            .collect();
        outcome(bad.is_empty(), format!("{} triples; failures {bad:?}", sweep.len()))
    }));
    checks.push(run(7, "root-ordering", None, || {
        let bad: Vec<String> = sweep
            .par_iter()
            .filter_map(|&c| match root_ordering(c) {
                Ok(true) => None,
                Ok(false) => Some(format!("{c:?}")),
                Err(e) => Some(format!("{c:?}: {e}")),
            })
            .collect();
        outcome(bad.is_empty(), format!("0 < 1/alpha < 1/2 < 1/beta < 1 for {} triples; failures {bad:?}", sweep.len()))
    }));

    checks.push(run(8, "lehmer-salem", None, || {
        let l = g.poly("lehmer")?;
        let rate: f64 = parse_f64(g.raw("triangle.rate")?)?;
        let r = classify_salem(&l)?;
        let alpha = r.witnesses.first().ok_or_else(|| Error::Consistency("no root above 1".into()))?;
        let ok = r.class == SalemClass::Salem && (alpha.midpoint_f64() - rate).abs() <= 1e-5;
        Ok(Outcome {
            passed: ok,
            detail: format!("{} with alpha in {alpha}", r.class),
            data: Some(json!({ "class": r.class.to_string(), "alpha": alpha })),
        })
    }));
    checks.push(run(8, "two-salem-d", None, || {
        let d = g.poly("twosalem.d")?;
        let want: Vec<f64> = g.raw("twosalem.d.large")?.split_whitespace().map(parse_f64).collect::<Result<_>>()?;
        let r = classify_salem(&d)?;
        let got: Vec<f64> = r.witnesses.iter().map(|w| w.midpoint_f64()).collect();
        let ok = r.class == SalemClass::TwoSalem
            && got.len() == want.len()
            && got.iter().zip(&want).all(|(a, b)| (a - b).abs() <= 1e-5);
        Ok(Outcome {
            passed: ok,
            detail: format!(
                "{} with roots {}",
                r.class,
                r.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
            data: Some(json!({ "class": r.class.to_string(), "roots": r.witnesses })),
        })
    }));

    checks.push(run(9, "cohn-witness", None, || {
        let d = g.poly("twosalem.d")?;
        let h = g.ints("twosalem.d.height")?;
        let at = g.ints("twosalem.d.prime_at")?;
        let prime = g.ints("twosalem.d.prime")?;
        let (at, prime) = (&at[0], &prime[0]);
        let w = cohn_check(&d, DEFAULT_COHN_SCAN, opts.mr_rounds).ok_or_else(|| Error::Consistency("no prime value found".into()))?;
        let value = d.eval(at);
        let ok = w.h == h[0]
            && &w.n <= at
            && &value == prime
            && is_probable_prime(&value, opts.mr_rounds)
            && value.to_string().starts_with("2008067839");
        Ok(Outcome {
            passed: ok,
            detail: format!("H = {}, first witness n = {}, D({at}) = {value} ({} digits)", w.h, w.n, value.to_string().len()),
            data: Some(serde_json::to_value(&w).map_err(|e| Error::Consistency(e.to_string()))?),
        })
    }));

    for (d, name) in [(1usize, "elimination-quadratic"), (2, "elimination-quartic")] {
        checks.push(run(10, name, None, || {
            let sys = residual_system(d)?;
            let names = &UNKNOWN_NAMES[..d];
            let cof = parse_mpoly(g.raw(&format!("elim{d}.cofactor.1"))?, names)?;
            let mut ok = sys.cofactor[0] == cof;
            for (k, r) in sys.residuals.iter().enumerate() {
                ok &= *r == parse_mpoly(g.raw(&format!("elim{d}.residual.{}", k + 1))?, names)?;
            }
            outcome(ok, format!("{} residual(s) in {names:?}", sys.residuals.len()))
        }));
    }
    for (spec, name) in [(Specialization::ZeroNN, "residue-table-0nn"), (Specialization::NZeroN, "residue-table-n0n")] {
        checks.push(run(10, name, None, || {
            let t = residue_tables(spec)?;
            let bad = compare_residue_table(&t, g)?;
            outcome(bad.is_empty(), if bad.is_empty() { "9 rows match".to_string() } else { bad.join("; ") })
        }));
    }
    checks.push(run(10, "root-location-tables", None, || {
        let r = verify_root_location_tables(g)?;
        let ok = r.all_certified();
        outcome(
            ok,
            format!(
                "K: {} sign changes ({} positive, {} negative); f: {} sign changes, no integer root: {}",
                r.kempner.sign_changes,
                r.kempner_positive_roots,
                r.kempner_negative_roots,
                r.quadratic_residual.sign_changes,
                r.no_integer_root
            ),
        )
    }));

    checks.push(run(11, "irreducible-instances", Some(120.0), || {
        let sym = sym.clone()?;
        let mut bad = Vec::new();
        for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
            for n in [1u64, 4, 7, 10, 13] {
                let (l, m, n) = spec.counts(n);
                let q = sym.specialize(GluingCounts::new(l, m, n)?)?;
                if !is_irreducible(q.den())? {
                    bad.push(format!("({l},{m},{n})"));
                }
            }
        }
        outcome(bad.is_empty(), format!("10 instances; reducible {bad:?}"))
    }));
    checks.push(run(11, "mod3-exclusion", Some(120.0), || {
        let mut ok = true;
        for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
            ok &= no_small_palindromic_factor(spec, 2, 1)?.verdict == ExclusionVerdict::NoSurvivingClass;
        }
        outcome(ok, "no surviving class for quartic factors, n = 1 (mod 3)")
    }));

    let gamma = builtin("gamma").expect("builtin");
    let gram = gram_from_graph(&gamma);
    checks.push(run(12, "geometry-signature", Some(5.0), || {
        let s = signature(&gram.clone()?)?;
        outcome(s == (4, 1), format!("signature {s:?}"))
    }));
    let truncated = gram.clone().and_then(|gm| truncation_extend(&gm, &gamma));
    checks.push(run(12, "geometry-truncation", Some(5.0), || {
        let (_, report) = truncated.clone()?;
        let n = report.vertex_facet.len() + report.vertex_vertex.len();
        let passed = report.vertex_facet.iter().chain(&report.vertex_vertex).filter(|c| c.passed).count();
        Ok(Outcome {
            passed: report.all_passed() && n == 15,
            detail: format!("{passed}/{n} inequalities hold"),
            data: Some(serde_json::to_value(&report).map_err(|e| Error::Consistency(e.to_string()))?),
        })
    }));
    checks.push(run(12, "geometry-compactness", Some(5.0), || {
        let (gs, _) = truncated.clone()?;
        outcome(compactness_check(&gram.clone()?, &gs), "Lanner subsets, truncating pairs and edge criterion")
    }));
    checks.push(run(12, "geometry-gamma-star", Some(5.0), || {
        let (gs, _) = truncated.clone()?;
        outcome(gs.is_isomorphic(&builtin("gamma-star").expect("builtin")), "emitted graph vs built-in gamma-star")
    }));

    checks.push(run(13, "bfs-vs-solomon", None, || {
        let graphs = small_finite_graphs(opts.bfs_max_rank);
        let bad: Vec<String> = graphs
            .par_iter()
            .filter_map(|gr| {
                let all: Vec<usize> = (0..gr.size()).collect();
                let ft = finite_type(gr, &all)?;
                match bfs_growth_finite(gr, DEFAULT_ORDER_CAP) {
                    Ok(p) if p == solomon_polynomial(&ft) => None,
                    _ => Some(gr.to_text()),
                }
            })
            .collect();
        outcome(bad.is_empty(), format!("{} finite graphs of rank <= {}; mismatches {}", graphs.len(), opts.bfs_max_rank, bad.len()))
    }));
    checks.push(run(13, "series-prefix", None, || {
        let mut cases: Vec<(String, RatFunc, usize)> = Vec::new();
        for name in ["triangle-2-3-7", "gamma-star", "facet-A", "facet-B", "facet-C"] {
            let gr = builtin(name).expect("builtin");
            cases.push((name.to_string(), steinberg_growth(&gr)?, gr.size()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 1);
        let mut counts = GluingCounts::enumerate(3);
        counts.extend((0..20).map(|_| random_counts(&mut rng, opts.random_n_max)));
        // gluing along F removes F from both tiles and merges the facets
        // of the two tiles that meet F
        let sizes = ["facet-A", "facet-B", "facet-C"].map(|n| builtin(n).expect("builtin").size() as u64);
        for c in counts {
            let s = 10 + 8 * c.n - c.l * sizes[0] - c.m * sizes[1] - c.c_gluings() * sizes[2];
            cases.push((format!("{c:?}"), domino_growth(c)?, s as usize));
        }
        let mut bad = Vec::new();
        for (name, f, s) in &cases {
            let a = series_prefix(f, 100)?;
            let ok = a.len() == 100 && a[0].is_one() && a[1] == BigInt::from(*s) && a.iter().all(|x| x >= &BigInt::zero());
            if !ok {
                bad.push(name.clone());
            }
        }
        outcome(bad.is_empty(), format!("{} growth functions; failures {bad:?}", cases.len()))
    }));
    checks.push(run(13, "factor-reassembly", None, || {
        let pool = palindromic_pool();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 2);
        let products: Vec<Vec<usize>> = (0..opts.factor_samples)
            .map(|_| {
                let k = rng.gen_range(1..=4);
                (0..k).map(|_| rng.gen_range(0..pool.len())).collect()
            })
            .collect();
        let bad: Vec<String> = products
            .par_iter()
            .filter_map(|picks| {
                let f: IntPoly = picks.iter().map(|&i| pool[i].clone()).product();
                match factor_reciprocal(&f) {
                    Ok(fs) if fs.len() == picks.len() && fs.iter().cloned().product::<IntPoly>() == f => None,
                    _ => Some(format!("{picks:?}")),
                }
            })
            .collect();
        outcome(bad.is_empty(), format!("{} products; failures {bad:?}", products.len()))
    }));

    VerifyReport { passed: checks.iter().all(|c| c.passed), checks }
}

fn parse_f64(s: &str) -> Result<f64> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad decimal `{s}`")))
}

/// Uniform over `n`, then over the valid `(l, m)` for that `n`.
fn random_counts(rng: &mut ChaCha8Rng, n_max: u64) -> GluingCounts {
    let n = rng.gen_range(0..=n_max);
    let valid: Vec<GluingCounts> = (0..=n)
        .flat_map(|l| (0..=n - l).map(move |m| (l, m)))
        .filter_map(|(l, m)| GluingCounts::new(l, m, n).ok())
        .collect();
    valid[rng.gen_range(0..valid.len())]
}

fn sandwich(c: GluingCounts) -> Result<bool> {
    let q = domino_growth(c)?.den().clone();
    let (lo_i, hi_i) = ((4 * c.n + 5) as i64, (4 * c.n + c.m + c.l + 6) as i64);
    let lo = BigRational::from_integer(BigInt::from(lo_i));
    let hi = BigRational::from_integer(BigInt::from(hi_i));
    for digits in [2, 6, 12] {
        let tau = growth_rate_digits(&q, digits)?;
        if tau.strictly_within(lo_i, hi_i) {
            return Ok(true);
        }
        if tau.hi() <= &lo || tau.lo() >= &hi {
            return Ok(false);
        }
    }
    Ok(false)
}

fn root_ordering(c: GluingCounts) -> Result<bool> {
    let q = domino_growth(c)?.den().clone();
    let zero = BigRational::zero();
    let half = BigRational::new(1.into(), 2.into());
    let one = BigRational::one();
    use num_bigint::Sign;
    Ok(q.sign_at(&zero) == Sign::Plus
        && q.sign_at(&half) == Sign::Minus
        && q.sign_at(&one) == Sign::Plus
        && sturm_count(&q, &zero, &half)? == 1
        && sturm_count(&q, &half, &one)? == 1)
}

/// All connected-or-not graphs on `1..=k` nodes with labels in {2, 3, 5}
/// whose Coxeter group is finite.
fn small_finite_graphs(k: usize) -> Vec<CoxeterGraph> {
    let mut out = Vec::new();
    for size in 1..=k {
        let pairs: Vec<(usize, usize)> = (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect();
        for code in 0..3usize.pow(pairs.len() as u32) {
            let mut edges = Vec::new();
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                match (code / 3usize.pow(idx as u32)) % 3 {
                    1 => edges.push((i, j, Label::Finite(3))),
                    2 => edges.push((i, j, Label::Finite(5))),
                    _ => {}
                }
            }
            let gr = CoxeterGraph::from_edges(size, &edges).expect("valid labels");
            let all: Vec<usize> = (0..size).collect();
            if finite_type(&gr, &all).is_some() {
                out.push(gr);
            }
        }
    }
    out
}

fn palindromic_pool() -> Vec<IntPoly> {
    vec![
        poly(&[1, 1]),
        poly(&[1, 1, 1]),
        poly(&[1, 0, 1]),
        poly(&[1, -1, 1]),
        poly(&[1, 3, 1]),
        poly(&[1, -3, 1]),
        poly(&[1, 4, 1]),
        cyclotomic(5),
        cyclotomic(9),
        cyclotomic(12),
        poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
        poly(&[1, -1, -1, -1, 1]),
        poly(&[1, -4, 1, 0, 1, 1, 0, 2, 0, 2, 0, 1, 1, 0, 1, -4, 1]),
    ]
}

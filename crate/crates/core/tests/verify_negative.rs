//! Negative controls: corrupting one reference value must fail exactly
//! the check that consumes it.

use salemforge::golden::Golden;
use salemforge::verify::{verify_paper_with, VerifyOptions};

fn quick() -> VerifyOptions {
    VerifyOptions { sweep_n_max: 3, random_samples: 10, random_n_max: 10, factor_samples: 10, bfs_max_rank: 2, ..Default::default() }
}

fn failing(g: &Golden) -> Vec<&'static str> {
    verify_paper_with(g, &quick()).failed().iter().map(|c| c.name).collect()
}

#[test]
fn one_family_coefficient_tampered() {
    let mut g = Golden::published();
    g.set("family.den.11", "0 -1 6 0");
    assert_eq!(failing(&g), vec!["family-denominator"]);
}

#[test]
fn tampered_tables_fail_their_own_checks() {
    let cases = [
        ("kempner.3", "27964 -96 41 12268", "kempner-expansion"),
        ("facet.c.den", "(-1 1) (1 0 1) (1 -2 -1 3 -1 -2 2)", "facet-growths"),
        ("twosalem.d.prime", "2008067839285267472384758820173242347", "cohn-witness"),
        ("residue.n0n.0,-1", "-3 -4 | 0 -1 | -15 -10 | 0 -1 | -1", "residue-table-n0n"),
        ("ftable.signs", "- + + - + - + - + + +", "root-location-tables"),
        ("domino.w.census", "2 : 10 | 2 5 : 2 | 2 3 : 4 | 2 2 : 24 | 2 6 10 : 6 | 2 3 4 : 3 | 2 2 5 : 6 | 2 2 3 : 12 | 2 2 2 : 12 | 2 2 6 10 : 12 | 2 2 3 4 : 6 | 2 2 2 2 : 2", "domino-census"),
    ];
    for (key, value, check) in cases {
        let mut g = Golden::published();
        g.set(key, value);
        assert_eq!(failing(&g), vec![check], "{key}");
    }
}

#[test]
fn report_serializes_with_intervals() {
    let r = verify_paper_with(&Golden::published(), &quick());
    assert!(r.passed, "{:?}", r.failed());
    let json = serde_json::to_value(&r).unwrap();
    let alpha = &r.check("lehmer-salem").unwrap().data.as_ref().unwrap()["alpha"];
    let lo: f64 = alpha["lo"].as_str().unwrap().parse().unwrap();
    assert!((lo - 1.17628).abs() < 1e-5);
    assert_eq!(json["checks"].as_array().unwrap().len(), r.checks.len());
}

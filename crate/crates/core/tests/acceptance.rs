//! Acceptance suite: recomputes every reference value and prints one
//! PASS/FAIL line per criterion. Runs without the test harness so the
//! lines are always shown.

use salemforge::golden::Golden;
use salemforge::verify::verify_paper;

const CRITERIA: [&str; 13] = [
    "triangle group growth function, Lehmer denominator",
    "domino spherical census, P(t) and Q(t)",
    "facet growth functions and multiplicities",
    "symbolic family growth, gluing consistency",
    "Kempner expansion of Q_lmn",
    "root profile sweep n <= 30, both routes",
    "growth-rate sandwich and root ordering",
    "Salem and 2-Salem classification",
    "Cohn witness for D",
    "elimination systems, residue and sign tables",
    "irreducibility instances and mod-3 exclusion",
    "Gram signature, truncation, compactness",
    "property suites",
];

fn main() {
    let report = verify_paper(&Golden::published());
    for c in &report.checks {
        println!("    [{:>2}] {:<24} {:>4} {:>8.2}s  {}", c.criterion, c.name, if c.passed { "ok" } else { "FAIL" }, c.seconds, c.detail);
    }
    let mut failed = Vec::new();
    for (i, title) in CRITERIA.iter().enumerate() {
        let k = i as u8 + 1;
        let pass = report.criterion_passed(k);
        println!("{} criterion {k:>2}: {title}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            failed.push(k);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

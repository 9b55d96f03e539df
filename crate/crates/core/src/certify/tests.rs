use super::*;
use crate::exactpoly::AffineForm;
use crate::golden::Golden;
use num_bigint::BigInt;

fn printed(g: &Golden, key: &str, d: usize) -> MPoly {
    parse_mpoly(g.raw(key).unwrap(), &UNKNOWN_NAMES[..d]).unwrap()
}

#[test]
fn parser_basics() {
    let p = parse_mpoly("a^2 (1 + n) - 3 a b + -(l)", &["a", "b"]).unwrap();
    assert_eq!(p.coeff(&[2, 0]), AffineForm::new(1, 0, 0, 1));
    assert_eq!(p.coeff(&[1, 1]), AffineForm::from(-3));
    assert_eq!(p.coeff(&[0, 0]), AffineForm::new(0, -1, 0, 0));
    assert!(parse_mpoly("n m", &["a"]).is_err());
    assert!(parse_mpoly("(a", &["a"]).is_err());
    assert!(parse_mpoly("k", &["a"]).is_err());
}

#[test]
fn quadratic_factor_system() {
    let g = Golden::published();
    let s = residual_system(1).unwrap();
    assert_eq!(s.cofactor.len(), 8);
    assert_eq!(s.residuals.len(), 1);
    assert_eq!(s.cofactor[0], printed(&g, "elim1.cofactor.1", 1));
    assert_eq!(s.residuals[0], printed(&g, "elim1.residual.1", 1));
    assert_eq!(s.residuals[0].coeff(&[0]), AffineForm::new(6, -4, -2, 6));
}

#[test]
fn quartic_factor_system() {
    let g = Golden::published();
    let s = residual_system(2).unwrap();
    assert_eq!(s.cofactor.len(), 7);
    assert_eq!(s.cofactor[0], printed(&g, "elim2.cofactor.1", 2));
    assert_eq!(s.residuals[0], printed(&g, "elim2.residual.1", 2));
    assert_eq!(s.residuals[1], printed(&g, "elim2.residual.2", 2));
}

#[test]
fn larger_systems_shape() {
    for d in 3..=4 {
        let s = residual_system(d).unwrap();
        assert_eq!(s.cofactor.len(), 9 - d);
        assert_eq!(s.residuals.len(), d);
    }
    assert!(residual_system(5).is_err());
}

#[test]
fn sign_certificate_examples() {
    let k0 = sign_certificate(&AffineForm::new(-21, -2, 13, -17), Parity::Both, 0).unwrap();
    assert_eq!(k0.sign, -1);
    assert_eq!(k0.cases.len(), 2);
    assert_eq!(sign_certificate(&AffineForm::new(32, 0, 0, 32), Parity::Both, 0).unwrap().sign, 1);
    assert_eq!(sign_certificate(&AffineForm::new(-32, 0, 0, -32), Parity::Odd, 0).unwrap().sign, -1);
    // n - 1 vanishes at n = 1
    assert!(sign_certificate(&AffineForm::new(-1, 0, 0, 1), Parity::Both, 0).is_none());
    assert_eq!(sign_certificate(&AffineForm::new(-1, 0, 0, 1), Parity::Both, 2).unwrap().sign, 1);
    // l - m changes sign
    assert!(sign_certificate(&AffineForm::new(0, 1, -1, 0), Parity::Even, 0).is_none());
}

#[test]
fn root_location_tables() {
    let r = verify_root_location_tables(&Golden::published()).unwrap();
    for row in r.kempner.rows.iter().chain(&r.quadratic_residual.rows) {
        assert!(row.certified, "{} {}", row.point, row.value);
    }
    assert_eq!((r.kempner_positive_roots, r.kempner_negative_roots), (7, 2));
    assert_eq!(r.quadratic_residual.sign_changes, 9);
    assert!(r.no_integer_root);
    assert!(r.spot_values.iter().all(|s| s.2), "{:?}", r.spot_values);
    assert!(r.all_certified());
    assert_eq!(r.kempner.rows[2].value, "-21 - 2l + 13m - 17n");
}

#[test]
fn tampered_sign_fails() {
    let mut g = Golden::published();
    g.set("ftable.signs", "- + + - + - + - + + +");
    assert!(!verify_root_location_tables(&g).unwrap().all_certified());
}

#[test]
fn residue_tables_match() {
    let g = Golden::published();
    for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
        let t = residue_tables(spec).unwrap();
        assert_eq!(compare_residue_table(&t, &g).unwrap(), Vec::<String>::new(), "{spec:?}");
        // no row allows n = 1 (mod 3)
        assert!(t.rows.iter().all(|r| match &r.verdict {
            Verdict::Impossible => true,
            Verdict::OnlyIf(c) => !c.contains(&1),
        }));
    }
}

#[test]
fn residue_examples() {
    let t = residue_tables(Specialization::ZeroNN).unwrap();
    let row = &t.rows[1];
    assert_eq!((row.a, row.b), (1, 0));
    assert_eq!(row.f_value, (BigInt::from(-26), BigInt::from(-4)));
    assert_eq!(row.g_value, (BigInt::from(32), BigInt::from(8)));
    assert_eq!(row.verdict, Verdict::Impossible);
    let t = residue_tables(Specialization::NZeroN).unwrap();
    assert_eq!(t.rows[7].f_value, (BigInt::from(-280), BigInt::from(-182)));
}

#[test]
fn tampered_residue_cell_detected() {
    let mut g = Golden::published();
    g.set("residue.0nn.1,0", "-26 -5 | 1 -1 | 32 8 | -1 -1 | impossible");
    let t = residue_tables(Specialization::ZeroNN).unwrap();
    assert_eq!(compare_residue_table(&t, &g).unwrap(), vec!["residue.0nn.1,0: f value".to_string()]);
}

/// The table formulas agree with direct evaluation of the residuals at
/// concrete small integers.
#[test]
fn residue_formulas_consistent() {
    let sys = residual_system(2).unwrap();
    for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
        let t = residue_tables(spec).unwrap();
        for n in 0..6u64 {
            let (l, m, n_) = spec.counts(n);
            for row in &t.rows {
                for shift in [0i64, 3, -3] {
                    let xs = [BigInt::from(row.a as i64 + shift), BigInt::from(row.b as i64 - shift)];
                    let f = sys.residuals[0].eval(&xs).eval_i64(l as i64, m as i64, n_ as i64);
                    let expect = &row.f_value.0 + &row.f_value.1 * BigInt::from(n);
                    assert_eq!((f - expect) % 3, BigInt::from(0));
                }
            }
        }
    }
}

#[test]
fn mod3_exclusion() {
    for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
        let e = no_small_palindromic_factor(spec, 2, 1).unwrap();
        assert_eq!(e.verdict, ExclusionVerdict::NoSurvivingClass, "{spec:?}");
        assert_eq!(e.classes_tested, 9);
    }
}

/// Sextic and octic factors are excluded as well; concrete instances with
/// n = 1 (mod 3) are irreducible.
#[test]
fn mod3_exclusion_larger_degrees_cross_checked() {
    use crate::gluing::{domino_symbolic, GluingCounts};
    use crate::rootloc::is_irreducible;
    let sym = domino_symbolic().unwrap();
    for spec in [Specialization::ZeroNN, Specialization::NZeroN] {
        for d in 3..=4 {
            let e = no_small_palindromic_factor(spec, d, 1).unwrap();
            assert_eq!(e.classes_tested, 3usize.pow(d as u32));
            assert_eq!(e.verdict, ExclusionVerdict::NoSurvivingClass, "{spec:?} d={d}");
        }
        for n in [1u64, 4, 7, 10, 13] {
            let (l, m, n) = spec.counts(n);
            let q = sym.specialize(GluingCounts::new(l, m, n).unwrap()).unwrap();
            assert!(is_irreducible(q.den()).unwrap());
        }
    }
}

#[test]
fn quadratic_residual_has_no_small_integer_roots() {
    use crate::gluing::GluingCounts;
    let f = quadratic_residual().unwrap();
    for c in GluingCounts::enumerate(20) {
        let p = f.specialize_i64(c.l as i64, c.m as i64, c.n as i64);
        for a in -(4 * c.n as i64 + 7)..=3 {
            assert_ne!(p.eval(&BigInt::from(a)), BigInt::from(0), "{c:?} a={a}");
        }
    }
}

fn random_valid(rng: &mut impl rand::Rng, n_max: u64) -> (i64, i64, i64) {
    loop {
        let n = rng.gen_range(0..=n_max);
        let l = rng.gen_range(0..=n);
        let m = rng.gen_range(0..=n - l);
        if crate::gluing::validate_counts(l, m, n).is_ok() {
            return (l as i64, m as i64, n as i64);
        }
    }
}

/// Every row of both certified sign tables, checked directly at 1000
/// random valid count triples.
#[test]
fn sign_tables_hold_at_random_counts() {
    use num_rational::BigRational;
    use num_traits::Signed;
    use rand::SeedableRng;
    let g = Golden::published();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let tables = [
        (kempner_quarter().unwrap(), "ktable.points", "ktable.signs"),
        (quadratic_residual().unwrap(), "ftable.points", "ftable.signs"),
    ];
    for _ in 0..1000 {
        let (l, m, n) = random_valid(&mut rng, 400);
        for (p, points, signs) in &tables {
            let p = p.specialize_i64(l, m, n);
            let pts: Vec<TablePoint> = g.raw(points).unwrap().split('|').map(|s| TablePoint::parse(s).unwrap()).collect();
            let sg: Vec<&str> = g.raw(signs).unwrap().split_whitespace().collect();
            for (pt, s) in pts.iter().zip(sg) {
                let x = BigRational::new(pt.x.eval(&BigInt::from(n)), pt.q.clone());
                let v = p.eval_rational(&x);
                let ok = if s == "+" { v.is_positive() } else { v.is_negative() };
                assert!(ok, "({l},{m},{n}) at {}", pt.text);
            }
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

    /// A certificate, when issued, holds at 1000 random points of the region.
    #[test]
    fn sign_certificates_spot_checked(c in proptest::array::uniform4(-30i64..30), n_min in 0i64..4, seed: u64) {
        use rand::SeedableRng;
        let form = AffineForm::new(c[0], c[1], c[2], c[3]);
        if let Some(cert) = sign_certificate(&form, Parity::Both, n_min) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..1000 {
                let (l, m, n) = random_valid(&mut rng, 500);
                if n < n_min {
                    continue;
                }
                let v = form.eval_i64(l, m, n);
                proptest::prop_assert_eq!(v.sign(), if cert.sign > 0 { num_bigint::Sign::Plus } else { num_bigint::Sign::Minus });
            }
        }
    }
}

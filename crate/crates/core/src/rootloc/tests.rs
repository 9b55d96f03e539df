use super::*;
use crate::exactpoly::{bracket, cyclotomic, poly, AffineForm};
use crate::gluing::{domino_symbolic, GluingCounts};
use crate::golden::Golden;
use num_bigint::BigInt;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn lehmer() -> IntPoly {
    poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

fn d_poly() -> IntPoly {
    poly(&[1, -4, 1, 0, 1, 1, 0, 2, 0, 2, 0, 1, 1, 0, 1, -4, 1])
}

fn q(l: u64, m: u64, n: u64) -> IntPoly {
    let sym = domino_symbolic().unwrap();
    sym.specialize(GluingCounts::new(l, m, n).unwrap()).unwrap().den().clone()
}

#[test]
fn sturm_examples() {
    assert_eq!(sturm_count(&poly(&[-2, 0, 1]), &r(0, 1), &r(2, 1)).unwrap(), 1);
    assert_eq!(sturm_count(&poly(&[1, 0, 1]), &r(-10, 1), &r(10, 1)).unwrap(), 0);
    assert_eq!(sturm_count(&poly(&[-1, 1]), &r(1, 1), &r(2, 1)), Err(Error::EndpointRoot));
    // repeated roots are counted once
    let p = &poly(&[-2, 0, 1]) * &poly(&[-2, 0, 1]);
    assert_eq!(sturm_count(&p, &r(-3, 1), &r(3, 1)).unwrap(), 2);
}

#[test]
fn isolation_of_sqrt2() {
    let roots = isolate_real_roots(&poly(&[-2, 0, 1]));
    assert_eq!(roots.len(), 2);
    for mut iv in roots {
        iv.refine_digits(12);
        assert!(iv.width() < r(1, 1_000_000_000_000));
        assert!((iv.midpoint_f64().abs() - 2f64.sqrt()).abs() < 1e-12);
    }
}

#[test]
fn isolation_hits_rational_roots() {
    // roots exactly at bisection points
    let p = &(&poly(&[0, 1]) * &poly(&[-1, 2])) * &poly(&[1, 4]);
    let roots = isolate_real_roots(&p);
    assert_eq!(roots.len(), 3);
    assert!(roots[0].contains(&r(-1, 4)) && roots[1].contains(&r(0, 1)) && roots[2].contains(&r(1, 2)));
    let mut z = roots[1].clone();
    z.refine_digits(20);
    assert!(z.contains(&r(0, 1)));
}

#[test]
fn decimal_rounding() {
    assert_eq!(format_decimal(&r(1, 3), 3, Rounding::TowardZero), "0.333");
    assert_eq!(format_decimal(&r(1, 3), 3, Rounding::AwayFromZero), "0.334");
    assert_eq!(format_decimal(&r(-1, 3), 3, Rounding::TowardZero), "-0.333");
    assert_eq!(format_decimal(&r(-1, 3), 3, Rounding::AwayFromZero), "-0.334");
    assert_eq!(format_decimal(&r(5, 1), 2, Rounding::AwayFromZero), "5.00");
}

#[test]
fn lehmer_largest_root() {
    let roots = roots_above_one(&lehmer(), 6);
    assert_eq!(roots.len(), 1);
    assert!(roots[0].contains_f64(1.17628) || (roots[0].midpoint_f64() - 1.17628).abs() < 1e-5);
    assert!(roots[0].width() < r(1, 100_000));
}

#[test]
fn d_largest_roots() {
    let roots = roots_above_one(&d_poly(), 12);
    assert_eq!(roots.len(), 2);
    assert!((roots[0].midpoint_f64() - 3.70422).abs() < 1e-5);
    assert!((roots[1].midpoint_f64() - 1.24202).abs() < 1e-5);
}

#[test]
fn trace_transform_examples() {
    assert_eq!(trace_transform(&poly(&[1, 0, 1])).unwrap(), poly(&[0, 1]));
    assert_eq!(trace_transform(&poly(&[1, 3, 1])).unwrap(), poly(&[3, 1]));
    assert!(trace_transform(&poly(&[1, 2])).is_err());
    let h = trace_transform(&lehmer()).unwrap();
    assert_eq!(h.deg(), 5);
    assert_eq!(trace_lift(&h), lehmer());
    assert_eq!(sturm_count(&h, &r(-2, 1), &r(2, 1)).unwrap(), 4);
    assert_eq!(sturm_count(&h, &r(2, 1), &r(100, 1)).unwrap() + sturm_count(&h, &r(-100, 1), &r(-2, 1)).unwrap(), 1);
}

#[test]
fn kempner_examples() {
    assert_eq!(kempner_transform(&poly(&[1, 0, 1])).unwrap(), poly(&[-2, 2]));
    assert!(kempner_transform(&poly(&[1, 2, 1])).is_err());
    let g = Golden::published();
    let k = kempner_transform_param(&domino_symbolic().unwrap().den).unwrap();
    let scale = &g.ints("kempner.scale").unwrap()[0];
    let printed = g.param_poly("kempner", 9).unwrap();
    assert_eq!(k.degree(), Some(9));
    for j in 0..=9 {
        assert_eq!(k.coeff(j), printed.coeff(j).scale(scale), "u^{j}");
    }
    assert_eq!(k.coeff(0), AffineForm::new(-84, -8, 52, -68));
    assert_eq!(k.lead(), AffineForm::new(32, 0, 0, 32));
}

/// Oracle: Kempner image of a palindromic polynomial, evaluated at a
/// rational point via Gaussian rationals directly from the definition.
fn kempner_at(f: &IntPoly, s: i64) -> BigInt {
    // (s - i)^n f((s + i)/(s - i)) = sum a_k (s + i)^k (s - i)^(n - k)
    let n = f.deg();
    let mul = |a: (BigInt, BigInt), b: (BigInt, BigInt)| (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0);
    let mut total = (BigInt::zero(), BigInt::zero());
    for k in 0..=n {
        let mut term = (f.coeff(k), BigInt::zero());
        for _ in 0..k {
            term = mul(term, (BigInt::from(s), BigInt::one()));
        }
        for _ in k..n {
            term = mul(term, (BigInt::from(s), -BigInt::one()));
        }
        total = (total.0 + term.0, total.1 + term.1);
    }
    assert!(total.1.is_zero());
    total.0
}

#[test]
fn kempner_against_definition() {
    for f in [lehmer(), d_poly(), q(3, 2, 7)] {
        let g = kempner_transform(&f).unwrap();
        for s in -3..=3 {
            assert_eq!(g.eval(&BigInt::from(s * s)), kempner_at(&f, s));
        }
    }
}

#[test]
fn kempner_positive_roots_3_2_7() {
    let k = kempner_transform(&q(3, 2, 7)).unwrap();
    let (pos, neg) = count_signed_roots(&k).unwrap();
    assert_eq!((pos, neg), (7, 2));
}

#[test]
fn profiles() {
    let p = RootProfile { degree: 18, circle_pairs: 7, real_pairs: 2, unresolved: 0 };
    assert_eq!(root_profile(&q(3, 2, 7)).unwrap(), p);
    assert_eq!(root_profile(&d_poly()).unwrap(), RootProfile { degree: 16, circle_pairs: 6, real_pairs: 2, unresolved: 0 });
    assert_eq!(root_profile(&lehmer()).unwrap(), RootProfile { degree: 10, circle_pairs: 4, real_pairs: 1, unresolved: 0 });
    // roots off both the circle and the line
    let pf = root_profile(&poly(&[1, 0, 3, 0, 1])).unwrap();
    assert_eq!(pf.unresolved, 4);
    assert_eq!(root_profile(&poly(&[1, 2, 1])), Err(Error::Precondition("root at 1 or -1".into())));
    let sq = &poly(&[1, 3, 1]) * &poly(&[1, 3, 1]);
    assert_eq!(root_profile(&sq), Err(Error::Multiplicity));
}

#[test]
fn profile_routes_agree_on_family() {
    for c in GluingCounts::enumerate(30) {
        let f = q(c.l, c.m, c.n);
        let a = profile_kempner(&f).unwrap();
        let b = profile_trace(&f).unwrap();
        assert_eq!(a, b, "{c:?}");
        assert_eq!(2 * a.circle_pairs + 2 * a.real_pairs, 18);
    }
}

#[test]
fn factor_examples() {
    let p = bracket(&[2, 4, 6, 10]);
    let f = factor_reciprocal(&p).unwrap();
    let c = |i| cyclotomic(i);
    let mut expected = vec![c(2), c(2), c(2), c(2), c(3), c(4), c(5), c(6), c(10)];
    expected.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    assert_eq!(f, expected);
    assert_eq!(factor_reciprocal(&lehmer()).unwrap(), vec![lehmer()]);
    let a = poly(&[1, 3, 1]);
    let b = poly(&[1, 1, 1]);
    let f = factor_reciprocal(&(&a * &b)).unwrap();
    assert_eq!(f, vec![b.clone(), a.clone()]);
    assert!(!is_irreducible(&(&a * &a)).unwrap());
    assert!(is_irreducible(&d_poly()).unwrap());
    assert!(is_irreducible(&q(0, 1, 1)).unwrap());
}

#[test]
fn factor_non_palindromic_pair() {
    // G = t^2 - 3t - 1 and its reciprocal partner
    let g = poly(&[-1, -3, 1]);
    let g_star = poly(&[-1, 3, 1]);
    let p = &g * &g_star;
    assert!(p.is_palindromic());
    let f = factor_reciprocal(&p).unwrap();
    assert_eq!(f.len(), 2);
    assert_eq!(f.iter().cloned().product::<IntPoly>(), p);
    assert!(f.contains(&g) && f.contains(&g_star));
}

#[test]
fn precision_cap_reported() {
    let p = trace_lift(&(&poly(&[-901, 0, 1]) * &poly(&[-803, 0, 1])));
    assert_eq!(factor_reciprocal(&p).unwrap().len(), 2);
    assert!(matches!(factor_reciprocal_with(&p, 1), Err(Error::PrecisionExhausted(_))));
}

#[test]
fn salem_classes() {
    let l = classify_salem(&lehmer()).unwrap();
    assert_eq!(l.class, SalemClass::Salem);
    assert_eq!(l.witnesses.len(), 1);
    let d = classify_salem(&d_poly()).unwrap();
    assert_eq!(d.class, SalemClass::TwoSalem);
    assert!(d.witnesses[0].lo() > d.witnesses[1].lo());
    assert_eq!(classify_salem(&cyclotomic(5)).unwrap().class, SalemClass::Neither);
    assert_eq!(classify_salem(&poly(&[1, 1, 1])).unwrap().class, SalemClass::Neither);
    assert_eq!(classify_salem(&poly(&[1, 2])).unwrap().class, SalemClass::Neither);
    let reducible = &poly(&[1, -3, 1]) * &poly(&[1, 1, 1]);
    assert_eq!(classify_salem(&reducible).unwrap().class, SalemClass::Neither);
}

#[test]
fn growth_rates() {
    let golden = Golden::published();
    let tri = golden.poly("triangle.den").unwrap();
    let tau = growth_rate(&tri).unwrap();
    assert!((tau.midpoint_f64() - 1.17628081826).abs() < 1e-10);
    assert!(tau.width() < r(1, 1_000_000_000_000));
    let one = growth_rate(&poly(&[1, -1])).unwrap();
    assert!(one.contains(&r(1, 1)));
    assert!(growth_rate(&poly(&[1, 1])).is_err());
    for (l, m, n) in [(0, 0, 0), (3, 2, 7), (0, 5, 5), (1, 0, 1)] {
        let tau = growth_rate(&q(l, m, n)).unwrap();
        let lo = BigRational::from_integer(BigInt::from(4 * n + 5));
        let hi = BigRational::from_integer(BigInt::from(4 * n + m + l + 6));
        assert!(tau.lo() > &lo && tau.hi() < &hi, "{l} {m} {n}");
    }
}

#[test]
fn primality() {
    let small: Vec<u64> = (0..200).filter(|&n| is_probable_prime(&BigInt::from(n), 8)).collect();
    let sieve: Vec<u64> = (0..200u64).filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0)).collect();
    assert_eq!(small, sieve);
    // Carmichael numbers and a strong pseudoprime to base 2
    for c in [561u64, 1105, 1729, 2047, 3215031751] {
        assert!(!is_probable_prime(&BigInt::from(c), 64));
    }
    assert!(is_probable_prime(&((BigInt::one() << 127) - 1), 64));
    assert_eq!(small_primes(5), vec![2, 3, 5, 7, 11]);
}

#[test]
fn cohn_on_d() {
    let w = cohn_check(&d_poly(), DEFAULT_COHN_SCAN, DEFAULT_MR_ROUNDS).unwrap();
    assert_eq!(w.h, BigInt::from(4));
    let v = d_poly().eval(&BigInt::from(186));
    assert!(is_probable_prime(&v, DEFAULT_MR_ROUNDS));
    assert!(v.to_string().starts_with("2008067839"));
    assert!(w.n <= BigInt::from(186));
    let small = poly(&[4, 1, 1]);
    assert_eq!(cohn_height(&small), BigInt::from(4));
    // t^2 + t + 4 is even at every integer
    assert_eq!(cohn_check(&small, 100, 16), None);
    let w = cohn_check(&poly(&[3, 1, 1]), 100, 16).unwrap();
    assert_eq!((w.n, w.value), (BigInt::from(7), BigInt::from(59)));
}

fn palindromic_irreducibles() -> Vec<IntPoly> {
    vec![
        poly(&[1, 1]),
        poly(&[1, 1, 1]),
        poly(&[1, 0, 1]),
        poly(&[1, -1, 1]),
        poly(&[1, 3, 1]),
        poly(&[1, -3, 1]),
        poly(&[1, 5, 1]),
        cyclotomic(5),
        cyclotomic(7),
        cyclotomic(12),
        lehmer(),
        poly(&[1, -1, -1, -1, 1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn factor_reassembles(picks in proptest::collection::vec(0usize..12, 1..5)) {
        let pool = palindromic_irreducibles();
        let f: IntPoly = picks.iter().map(|&i| pool[i].clone()).product();
        let factors = factor_reciprocal(&f).unwrap();
        prop_assert_eq!(factors.iter().cloned().product::<IntPoly>(), f);
        prop_assert_eq!(factors.len(), picks.len());
        for p in &factors {
            prop_assert!(p.deg() == 1 || p.is_palindromic());
        }
    }

    #[test]
    fn isolation_matches_constructed_roots(roots in proptest::collection::btree_set(-50i64..50, 1..6)) {
        let f: IntPoly = roots.iter().map(|&a| poly(&[-a, 1])).product();
        let ivs = isolate_real_roots(&f);
        prop_assert_eq!(ivs.len(), roots.len());
        for (iv, a) in ivs.iter().zip(&roots) {
            prop_assert!(iv.contains(&BigRational::from_integer(BigInt::from(*a))));
        }
    }
}

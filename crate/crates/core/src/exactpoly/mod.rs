//! Exact integer polynomials, reduced rational functions, and polynomials
//! whose coefficients are affine in the gluing parameters `(l, m, n)`.

mod affine;
mod cyclotomic;
mod intpoly;
mod ratfunc;

pub use affine::{AffineForm, ParamPoly};
pub use cyclotomic::{bracket, bracket_one, cyclotomic};
pub use intpoly::IntPoly;
pub use ratfunc::{combine, combine_affine, lcm, RatFunc};

/// `t^n f(1/t)`
pub fn reciprocal_transform(f: &IntPoly, n: usize) -> crate::Result<IntPoly> {
    f.reciprocal(n)
}

pub fn is_palindromic(f: &IntPoly) -> bool {
    f.is_palindromic()
}

/// Shorthand for building small integer polynomials in tests and tables.
pub fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q_of_t() -> IntPoly {
        poly(&[1, -6, 3, -5, 5, -9 + 8, 9, 0, 11, -2, 11, 0, 9, -1, 5, -5, 3, -6, 1])
    }

    #[test]
    fn bracket_basics() {
        assert_eq!(bracket(&[2]), poly(&[1, 1]));
        assert_eq!(bracket(&[]), IntPoly::one());
        let b23 = bracket(&[2, 3]);
        assert_eq!(b23, &poly(&[1, 1]) * &poly(&[1, 1, 1]));
        assert_eq!(b23.eval(&BigInt::from(1)), BigInt::from(6));
    }

    #[test]
    fn bracket_2_4_6_10_is_cyclotomic_product() {
        let p = bracket(&[2, 4, 6, 10]);
        assert_eq!(p.deg(), 18);
        let phi: IntPoly = [2, 2, 2, 2, 3, 4, 5, 6, 10].iter().map(|&i| cyclotomic(i)).product();
        assert_eq!(p, phi);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic(2), poly(&[1, 1]));
        assert_eq!(cyclotomic(10), poly(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn cyclotomic_divisor_products() {
        for i in 1..=30u32 {
            let prod: IntPoly = (1..=i).filter(|d| i % d == 0).map(cyclotomic).product();
            let target = &IntPoly::monomial(BigInt::from(1), i as usize) - &IntPoly::one();
            assert_eq!(prod, target, "i = {i}");
        }
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(reciprocal_transform(&poly(&[2, 1]), 1).unwrap(), poly(&[1, 2]));
        assert_eq!(reciprocal_transform(&poly(&[0, 3, 1]), 2).unwrap(), poly(&[1, 3]));
        let lehmer = poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert_eq!(reciprocal_transform(&lehmer, 10).unwrap(), lehmer);
        assert!(reciprocal_transform(&lehmer, 9).is_err());
    }

    #[test]
    fn palindromic_examples() {
        assert!(is_palindromic(&poly(&[1, 3, 1])));
        assert!(!is_palindromic(&poly(&[2, 3, 1])));
        assert!(is_palindromic(&q_of_t()));
    }

    #[test]
    fn canonical_text_round_trip() {
        let q = q_of_t();
        let text = q.to_string();
        assert!(text.starts_with("1 -6 3 -5 5 -1 9 0 11 -2 11"));
        assert_eq!(text.parse::<IntPoly>().unwrap(), q);
        assert!("1 x 2".parse::<IntPoly>().is_err());
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn combine_examples() {
        let r = RatFunc::new(IntPoly::one(), poly(&[1, 1])).unwrap();
        let two = combine(&[(BigInt::from(1), r.clone()), (BigInt::from(1), r.clone())]);
        assert_eq!(two, RatFunc::new(poly(&[2]), poly(&[1, 1])).unwrap());
        // 1 - 2/[2]
        let d = combine(&[(BigInt::from(1), RatFunc::one()), (BigInt::from(-2), r)]);
        assert_eq!(d.num(), &poly(&[-1, 1]));
        assert_eq!(d.den(), &poly(&[1, 1]));
    }

    #[test]
    fn ratfunc_normalization() {
        let r = RatFunc::new(poly(&[2, 2]), poly(&[-4, 0, 4])).unwrap();
        // (2+2t)/(4t^2-4) = 1/(2t-2)
        assert_eq!(r.num(), &poly(&[1]));
        assert_eq!(r.den(), &poly(&[-2, 2]));
        assert!(RatFunc::new(poly(&[1]), IntPoly::zero()).is_err());
        assert!(RatFunc::zero().recip().is_err());
    }

    #[test]
    fn affine_rejects_quadratic_terms() {
        let l = ParamPoly::scaled(&AffineForm::l(), &poly(&[1, 1]));
        let n = ParamPoly::scaled(&AffineForm::n(), &poly(&[0, 1]));
        assert_eq!(l.mul(&n), Err(crate::Error::NonAffine));
        let c = ParamPoly::from_poly(&poly(&[3, 1]));
        assert!(l.mul(&c).is_ok());
        assert!(AffineForm::l().mul(&AffineForm::m()).is_err());
    }

    #[test]
    fn specialize_examples() {
        assert!(ParamPoly::zero().specialize_i64(3, 2, 7).is_zero());
        let p = ParamPoly::new(vec![AffineForm::new(-6, 0, 0, -4), AffineForm::new(1, 0, 0, 0)]);
        assert_eq!(p.specialize_i64(3, 2, 7), poly(&[-34, 1]));
        assert_eq!(AffineForm::new(0, -1, 5, 0).to_string(), "-l + 5m");
    }

    #[test]
    fn squarefree_helpers() {
        let a = poly(&[1, 3, 1]);
        let sq = &a * &a;
        assert!(!sq.is_squarefree());
        assert_eq!(sq.squarefree_part(), a);
        let f = &(&sq * &poly(&[1, 1])) * &poly(&[1, 1, 1]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[1], a);
        assert_eq!(dec[0], &poly(&[1, 1]) * &poly(&[1, 1, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = &poly(&[1, 1]) * &poly(&[2, 0, 1]);
        let b = &poly(&[1, 1]).scale(&BigInt::from(6)) * &poly(&[-3, 1]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
        assert_eq!(a.div_exact(&poly(&[1, 1])).unwrap(), poly(&[2, 0, 1]));
        assert!(a.div_exact(&poly(&[1, 2])).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 0..7).prop_map(|v| poly(&v))
    }

    fn small_param() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec((-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5), 0..5)
            .prop_map(|v| ParamPoly::new(v.into_iter().map(|(a, b, c, d)| AffineForm::new(a, b, c, d)).collect()))
    }

    proptest! {
        #[test]
        fn reciprocal_is_multiplicative(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            let lhs = fg.reciprocal(f.deg() + g.deg()).unwrap();
            let rhs = &f.reciprocal(f.deg()).unwrap() * &g.reciprocal(g.deg()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn combined_sums_are_reduced(a in small_poly(), b in small_poly(), c in small_poly(), d in small_poly()) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let r = &RatFunc::new(a, b).unwrap() + &RatFunc::new(c, d).unwrap();
            prop_assert_eq!(r.num().gcd(r.den()).deg(), 0);
            prop_assert!(r.num().gcd(r.den()).lead() == BigInt::from(1) || r.num().is_zero());
            prop_assert!(r.den().lead() > BigInt::from(0));
        }

        #[test]
        fn specialize_is_a_ring_morphism(p in small_param(), q in small_poly(), l in 0i64..9, m in 0i64..9, n in 0i64..9) {
            let qp = ParamPoly::from_poly(&q);
            let prod = p.mul(&qp).unwrap();
            prop_assert_eq!(prod.specialize_i64(l, m, n), &p.specialize_i64(l, m, n) * &q);
            let sum = p.add(&qp);
            prop_assert_eq!(sum.specialize_i64(l, m, n), &p.specialize_i64(l, m, n) + &q);
        }

        #[test]
        fn eval_at_one_is_coefficient_sum(f in small_poly()) {
            let s: BigInt = f.coeffs().iter().sum();
            prop_assert_eq!(f.eval(&BigInt::from(1)), s);
        }
    }
}

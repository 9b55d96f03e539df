use num_bigint::BigInt;
use num_traits::One;

use super::intpoly::IntPoly;

/// `[m] = 1 + t + ... + t^(m-1)`
pub fn bracket_one(m: u32) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); m as usize])
}

/// Product of brackets `[m_1][m_2]...`; the empty product is 1.
pub fn bracket(ms: &[u32]) -> IntPoly {
    ms.iter().map(|&m| bracket_one(m)).product()
}

/// The `i`-th cyclotomic polynomial, by dividing `t^i - 1` by the
/// cyclotomic factors of every proper divisor.
pub fn cyclotomic(i: u32) -> IntPoly {
    assert!(i >= 1, "cyclotomic index must be positive");
    let mut p = &IntPoly::monomial(BigInt::one(), i as usize) - &IntPoly::one();
    for d in (1..i).filter(|d| i % d == 0) {
        p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factor divides t^i - 1");
    }
    p
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{isolate_real_roots, IsolatingInterval};
use super::sturm::sturm_count;
use super::transform::{trace_lift, trace_transform};
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;

/// Default cap on the binary precision of root enclosures.
pub const DEFAULT_PRECISION_CAP: u32 = 512;
const START_PRECISION: u32 = 24;

/// Closed rational interval used for enclosures of symmetric functions.
#[derive(Clone, Debug)]
struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

impl Enclosure {
    fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn mul(&self, o: &Enclosure) -> Enclosure {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        Enclosure {
            lo: p.iter().min().cloned().expect("four products"),
            hi: p.iter().max().cloned().expect("four products"),
        }
    }

    /// The unique integer inside, `Ok(None)` if there is none, and `Err`
    /// if the enclosure is too wide to decide.
    fn unique_integer(&self) -> std::result::Result<Option<BigInt>, ()> {
        let first = ceil(&self.lo);
        let last = floor(&self.hi);
        if first > last {
            Ok(None)
        } else if first == last {
            Ok(Some(first))
        } else {
            Err(())
        }
    }
}

fn floor(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

fn ceil(x: &BigRational) -> BigInt {
    -(-x.numer()).div_floor(x.denom())
}

/// Monic integer polynomial with the given roots, if the enclosures of its
/// coefficients pin down integers. `Err(())` asks for more precision.
fn candidate_from_roots(roots: &[Enclosure]) -> std::result::Result<Option<IntPoly>, ()> {
    // e[j] encloses the j-th elementary symmetric function
    let mut e = vec![Enclosure::point(BigRational::one())];
    for r in roots {
        let mut next = e.clone();
        next.push(Enclosure::point(BigRational::zero()));
        for j in 1..next.len() {
            next[j] = e.get(j).map_or_else(|| Enclosure::point(BigRational::zero()), Clone::clone).add(&e[j - 1].mul(r));
        }
        e = next;
    }
    let s = roots.len();
    let mut coeffs = vec![BigInt::zero(); s + 1];
    for (j, enc) in e.iter().enumerate() {
        match enc.unique_integer()? {
            None => return Ok(None),
            Some(v) => coeffs[s - j] = if j % 2 == 1 { -v } else { v },
        }
    }
    Ok(Some(IntPoly::new(coeffs)))
}

fn enclosures(roots: &[IsolatingInterval], bits: u32) -> Vec<Enclosure> {
    let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
    roots
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.refine_to(&w);
            Enclosure { lo: r.lo().clone(), hi: r.hi().clone() }
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Smallest-degree monic factor of `h` whose roots form a subset of
/// `roots`, searching subsets of size at most half.
fn smallest_factor(h: &IntPoly, roots: &[IsolatingInterval], cap: u32) -> Result<Option<(IntPoly, Vec<usize>)>> {
    let d = roots.len();
    let mut bits = START_PRECISION.min(cap);
    'precision: loop {
        let enc = enclosures(roots, bits);
        for size in 1..=d / 2 {
            for subset in combinations(d, size) {
                let chosen: Vec<Enclosure> = subset.iter().map(|&i| enc[i].clone()).collect();
                match candidate_from_roots(&chosen) {
                    Err(()) => {
                        if bits >= cap {
                            return Err(Error::PrecisionExhausted(bits));
                        }
                        bits *= 2;
                        continue 'precision;
                    }
                    Ok(Some(g)) if g.divides(h) => return Ok(Some((g, subset))),
                    Ok(_) => {}
                }
            }
        }
        return Ok(None);
    }
}

/// Irreducible factors of a monic squarefree `h` whose roots are all real.
fn factor_real_rooted(h: &IntPoly, cap: u32) -> Result<Vec<IntPoly>> {
    let mut out = Vec::new();
    let mut h = h.clone();
    let mut roots = isolate_real_roots(&h);
    while h.deg() > 0 {
        match smallest_factor(&h, &roots, cap)? {
            None => {
                out.push(h);
                break;
            }
            Some((g, subset)) => {
                h = h.div_exact(&g)?;
                roots = roots
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, r)| r)
                    .collect();
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// Splits a palindromic `p` without roots on the unit circle as `G * G*`
/// with `G` non-palindromic, when such a splitting exists.
fn split_off_circle(p: &IntPoly, cap: u32) -> Result<Option<(IntPoly, IntPoly)>> {
    let d = p.deg() / 2;
    // one root of modulus > 1 per reciprocal pair
    let one = BigRational::one();
    let big: Vec<IsolatingInterval> = isolate_real_roots(p)
        .into_iter()
        .map(|mut r| {
            while r.lo() <= &one && r.hi() >= &one || r.lo() <= &-one.clone() && r.hi() >= &-one.clone() {
                let w = r.width() / BigRational::from_integer(2.into());
                r.refine_to(&w);
            }
            r
        })
        .filter(|r| r.lo() > &one || r.hi() < &-one.clone())
        .collect();
    if big.len() != d {
        return Err(Error::Precondition("palindromic factor has roots off the real line and the circle".into()));
    }
    if d < 2 {
        return Ok(None);
    }
    let mut bits = START_PRECISION.min(cap);
    'precision: loop {
        let enc = enclosures(&big, bits);
        for mask in 0u64..(1 << (d - 1)) {
            let chosen: Vec<Enclosure> = enc
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    if i > 0 && mask >> (i - 1) & 1 == 1 {
                        let (a, b) = (e.hi.recip(), e.lo.recip());
                        Enclosure { lo: a, hi: b }
                    } else {
                        e.clone()
                    }
                })
                .collect();
            match candidate_from_roots(&chosen) {
                Err(()) => {
                    if bits >= cap {
                        return Err(Error::PrecisionExhausted(bits));
                    }
                    bits *= 2;
                    continue 'precision;
                }
                Ok(Some(g)) if g.divides(p) => {
                    let rest = p.div_exact(&g)?;
                    return Ok(Some((g, rest)));
                }
                Ok(_) => {}
            }
        }
        return Ok(None);
    }
}

fn canonical(mut factors: Vec<IntPoly>) -> Vec<IntPoly> {
    factors.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    factors
}

/// Complete factorization over the integers of a monic polynomial whose
/// roots all lie on the unit circle or the real line and which, after
/// removing roots at `1` and `-1`, is palindromic. Factors are returned
/// with multiplicity in a canonical order.
pub fn factor_reciprocal(f: &IntPoly) -> Result<Vec<IntPoly>> {
    factor_reciprocal_with(f, DEFAULT_PRECISION_CAP)
}

pub fn factor_reciprocal_with(f: &IntPoly, cap: u32) -> Result<Vec<IntPoly>> {
    if f.deg() == 0 {
        return Err(Error::Precondition("constant polynomial".into()));
    }
    if f.coeff(0).is_zero() {
        return Err(Error::Precondition("root at zero".into()));
    }
    let mut factors = Vec::new();
    let mut rest = f.clone();
    for linear in [IntPoly::from_i64s(&[-1, 1]), IntPoly::from_i64s(&[1, 1])] {
        while let Ok(q) = rest.div_exact(&linear) {
            factors.push(linear.clone());
            rest = q;
        }
    }
    if rest.lead().is_negative() {
        rest = -rest;
    }
    if rest.deg() == 0 {
        if rest != IntPoly::one() {
            return Err(Error::Precondition("not monic".into()));
        }
        return Ok(canonical(factors));
    }
    if !rest.is_monic() || !rest.is_palindromic() {
        return Err(Error::Precondition("not monic and palindromic after removing roots at 1 and -1".into()));
    }
    for (k, part) in rest.squarefree_decomposition().into_iter().enumerate() {
        if part.deg() == 0 {
            continue;
        }
        let h = trace_transform(&part)?;
        if isolate_real_roots(&h).len() != h.deg() {
            return Err(Error::Precondition("roots off the unit circle and the real line".into()));
        }
        let mut irreducible = Vec::new();
        for hi in factor_real_rooted(&h, cap)? {
            let p = trace_lift(&hi);
            let two = BigRational::from_integer(2.into());
            let on_circle = sturm_count(&hi, &-two.clone(), &two)? > 0;
            match if on_circle { None } else { split_off_circle(&p, cap)? } {
                Some((g, g_star)) => {
                    irreducible.push(g);
                    irreducible.push(g_star);
                }
                None => irreducible.push(p),
            }
        }
        for p in irreducible {
            for _ in 0..=k {
                factors.push(p.clone());
            }
        }
    }
    Ok(canonical(factors))
}

/// Whether `f` is irreducible over the integers, decided by
/// [`factor_reciprocal`].
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    Ok(factor_reciprocal(f)?.len() == 1)
}

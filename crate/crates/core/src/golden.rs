//! Published reference values, kept as data so that every check compares
//! computed results against an editable table.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactpoly::{bracket, AffineForm, IntPoly, ParamPoly};

const REFERENCE: &str = include_str!("../golden/reference.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    entries: BTreeMap<String, String>,
}

impl Golden {
    /// The bundled reference table.
    pub fn published() -> Self {
        Self::parse(REFERENCE).expect("bundled reference table parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected `key = value`", no + 1)))?;
            if entries.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(Error::Parse(format!("line {}: duplicate key `{}`", no + 1, k.trim())));
            }
        }
        Ok(Golden { entries })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Replaces one entry; used to build deliberately corrupted tables.
    pub fn set(&mut self, key: &str, value: &str) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn raw(&self, key: &str) -> Result<&str> {
        self.entries
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Parse(format!("missing reference entry `{key}`")))
    }

    /// Counts keyed by bracket signature, written `2 5 : 2 | 2 3 : 4 | ...`.
    pub fn census(&self, key: &str) -> Result<BTreeMap<Vec<u32>, u64>> {
        let bad = |what: &str| Error::Parse(format!("`{key}`: bad {what}"));
        let mut out = BTreeMap::new();
        for item in self.raw(key)?.split('|') {
            let (sig, count) = item.split_once(':').ok_or_else(|| bad("census item"))?;
            let sig: Vec<u32> = sig
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| bad("signature")))
                .collect::<Result<_>>()?;
            let count: u64 = count.trim().parse().map_err(|_| bad("count"))?;
            if out.insert(sig, count).is_some() {
                return Err(bad("duplicate signature"));
            }
        }
        Ok(out)
    }

    pub fn ints(&self, key: &str) -> Result<Vec<BigInt>> {
        self.raw(key)?
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("`{key}`: bad integer `{tok}`"))))
            .collect()
    }

    pub fn small_ints(&self, key: &str) -> Result<Vec<i64>> {
        self.raw(key)?
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Error::Parse(format!("`{key}`: bad integer `{tok}`"))))
            .collect()
    }

    pub fn poly(&self, key: &str) -> Result<IntPoly> {
        self.raw(key)?.parse()
    }

    /// Product of cyclotomic brackets `[e1, e2, ...]`.
    pub fn brackets(&self, key: &str) -> Result<IntPoly> {
        let ms: Vec<u32> = self
            .small_ints(key)?
            .into_iter()
            .map(|m| u32::try_from(m).map_err(|_| Error::Parse(format!("`{key}`: bad bracket"))))
            .collect::<Result<_>>()?;
        Ok(bracket(&ms))
    }

    /// Factored polynomial `- (1 1)^3 (1 0 1)`.
    pub fn factored(&self, key: &str) -> Result<IntPoly> {
        parse_factored(self.raw(key)?).map_err(|e| Error::Parse(format!("`{key}`: {e}")))
    }

    pub fn affine(&self, key: &str) -> Result<AffineForm> {
        let c = self.ints(key)?;
        let c: [BigInt; 4] = c
            .try_into()
            .map_err(|_| Error::Parse(format!("`{key}`: expected four integers")))?;
        Ok(AffineForm::from_big(c))
    }

    /// Parametric polynomial stored as `prefix.k` entries for `k = 0..=degree`.
    pub fn param_poly(&self, prefix: &str, degree: usize) -> Result<ParamPoly> {
        let coeffs = (0..=degree)
            .map(|k| self.affine(&format!("{prefix}.{k}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ParamPoly::new(coeffs))
    }
}

fn parse_factored(s: &str) -> Result<IntPoly> {
    let mut rest = s.trim();
    let mut acc = IntPoly::one();
    if let Some(r) = rest.strip_prefix('-') {
        acc = -acc;
        rest = r.trim_start();
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` at `{rest}`")))?;
        let close = body.find(')').ok_or_else(|| Error::Parse("unclosed factor".into()))?;
        let factor: IntPoly = body[..close].parse()?;
        rest = body[close + 1..].trim_start();
        let mut power = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            power = r[..end].parse().map_err(|_| Error::Parse("bad exponent".into()))?;
            rest = r[end..].trim_start();
        }
        acc = &acc * &factor.pow(power);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    #[test]
    fn bundled_table_parses() {
        let g = Golden::published();
        assert_eq!(g.brackets("domino.w.num.brackets").unwrap(), g.factored("domino.w.num.factors").unwrap());
        assert!(g.poly("domino.w.den").unwrap().is_palindromic());
        let q = g.param_poly("family.den", 18).unwrap();
        assert_eq!(q.specialize_i64(0, 0, 0), g.poly("domino.w.den").unwrap());
        let census = g.census("domino.w.census").unwrap();
        assert_eq!(census.len(), 12);
        assert_eq!(census[&vec![2, 2, 2]], 13);
        assert_eq!(census.values().sum::<u64>(), 100);
    }

    #[test]
    fn factored_syntax() {
        assert_eq!(parse_factored("- (1 1)^2 (0 1)").unwrap(), poly(&[0, -1, -2, -1]));
        assert!(parse_factored("(1 1").is_err());
        assert!(Golden::parse("a = 1\na = 2").is_err());
    }
}

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactpoly::AffineForm;

/// Sparse polynomial in a few integer unknowns with coefficients affine in
/// `(l, m, n)`. Keys are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, AffineForm>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: AffineForm) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MPoly { nvars, terms: BTreeMap::from([(e, AffineForm::from(1))]) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, AffineForm> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> AffineForm {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn insert_add(&mut self, e: Vec<u32>, c: AffineForm) {
        let entry = self.terms.entry(e.clone()).or_default();
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &MPoly) -> Result<MPoly> {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1.mul(c2)?);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<MPoly> {
        let mut acc = MPoly::constant(self.nvars, AffineForm::from(1));
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Value at integer unknowns, affine in the counts.
    pub fn eval(&self, xs: &[BigInt]) -> AffineForm {
        self.terms.iter().fold(AffineForm::zero(), |acc, (e, c)| {
            let mono = e.iter().zip(xs).fold(BigInt::one(), |m, (&k, x)| m * x.pow(k));
            acc.add(&c.scale(&mono))
        })
    }

    /// Replaces `l`, `m`, `n` in every coefficient.
    pub fn substitute_counts(&self, l: &AffineForm, m: &AffineForm, n: &AffineForm) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.substitute(l, m, n));
        }
        out
    }

    /// Coefficients of a polynomial in a single unknown, lowest degree first.
    pub fn univariate(&self) -> Result<Vec<AffineForm>> {
        if self.nvars != 1 {
            return Err(Error::Precondition("not univariate".into()));
        }
        let d = self.degree().unwrap_or(0) as usize;
        Ok((0..=d).map(|k| self.coeff(&[k as u32])).collect())
    }

    /// Renders with the given unknown names, highest total degree first.
    pub fn display(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.iter().sum::<u32>().cmp(&a.iter().sum::<u32>()).then_with(|| b.cmp(a)));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|e| {
                let mono: Vec<String> = e
                    .iter()
                    .zip(names)
                    .filter(|(k, _)| **k > 0)
                    .map(|(&k, name)| if k == 1 { name.to_string() } else { format!("{name}^{k}") })
                    .collect();
                let c = &self.terms[e];
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Parses expressions such as `a^7 (-6 - 4 n) + b (l + m - n)` in the given
/// unknowns; `l`, `m`, `n` denote the counts. Juxtaposition multiplies.
pub fn parse_mpoly(text: &str, unknowns: &[&str]) -> Result<MPoly> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, unknowns };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("unexpected `{:?}`", p.tokens[p.pos])));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    unknowns: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero(self.unknowns.len());
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    1
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {}
                _ => return Ok(acc),
            }
            let f = self.power()?;
            acc = acc.mul(&f)?;
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    return base.pow(k);
                }
                other => return Err(Error::Parse(format!("bad exponent {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        let nv = self.unknowns.len();
        let tok = self.tokens.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(MPoly::constant(nv, AffineForm::constant(v))),
            Tok::Ident(name) => {
                if let Some(i) = self.unknowns.iter().position(|u| *u == name) {
                    return Ok(MPoly::var(nv, i));
                }
                match name.as_str() {
                    "l" => Ok(MPoly::constant(nv, AffineForm::l())),
                    "m" => Ok(MPoly::constant(nv, AffineForm::m())),
                    "n" => Ok(MPoly::constant(nv, AffineForm::n())),
                    _ => Err(Error::Parse(format!("unknown symbol `{name}`"))),
                }
            }
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Op('-') => Ok(self.power()?.neg()),
            Tok::Op(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{}", i + 1)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display(&refs))
    }
}

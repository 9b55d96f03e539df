use serde::Serialize;

use super::mpoly::MPoly;
use crate::error::{Error, Result};
use crate::exactpoly::{AffineForm, ParamPoly};
use crate::gluing::domino_symbolic;

/// Names of the unknown coefficients of a palindromic factor of degree `2d`.
pub const UNKNOWN_NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Coefficient comparison for `Q = F * G` with `F` monic palindromic of
/// degree `2d` (unknown coefficients) and `G` its monic palindromic
/// cofactor. The cofactor coefficients are solved for one by one; the
/// remaining `d` equations are the residuals.
#[derive(Clone, Debug)]
pub struct ElimSystem {
    pub d: usize,
    /// `G_1, ..., G_{9-d}` in terms of the unknowns.
    pub cofactor: Vec<MPoly>,
    /// `sum_j F_j G_{k-j} - Q_k` for `k = 10-d, ..., 9`.
    pub residuals: Vec<MPoly>,
}

#[derive(Serialize)]
pub struct ElimSystemRepr {
    pub d: usize,
    pub unknowns: Vec<String>,
    pub cofactor: Vec<String>,
    pub residuals: Vec<String>,
}

impl ElimSystem {
    pub fn unknowns(&self) -> &[&str] {
        &UNKNOWN_NAMES[..self.d]
    }

    pub fn repr(&self) -> ElimSystemRepr {
        let names = self.unknowns();
        ElimSystemRepr {
            d: self.d,
            unknowns: names.iter().map(|s| s.to_string()).collect(),
            cofactor: self.cofactor.iter().map(|p| p.display(names)).collect(),
            residuals: self.residuals.iter().map(|p| p.display(names)).collect(),
        }
    }
}

/// Elimination system for the domino denominators.
pub fn residual_system(d: usize) -> Result<ElimSystem> {
    residual_system_for(&domino_symbolic()?.den, d)
}

/// Elimination system for any monic palindromic parametric polynomial.
pub fn residual_system_for(q: &ParamPoly, d: usize) -> Result<ElimSystem> {
    let deg = q.degree().ok_or_else(|| Error::Precondition("zero polynomial".into()))?;
    if deg % 2 == 1 || !q.is_palindromic() || q.lead() != AffineForm::from(1) {
        return Err(Error::Precondition("needs a monic palindromic polynomial of even degree".into()));
    }
    let half = deg / 2;
    if d == 0 || d > UNKNOWN_NAMES.len() || 2 * d > half {
        return Err(Error::Precondition(format!("unsupported factor degree {}", 2 * d)));
    }
    let e = deg - 2 * d;
    let one = MPoly::constant(d, AffineForm::from(1));
    let f_coeff = |j: usize| -> MPoly {
        let j = j.min(2 * d - j);
        if j == 0 {
            one.clone()
        } else {
            MPoly::var(d, j - 1)
        }
    };
    // g[k] for k = 0..=e/2; higher indices mirror
    let mut g: Vec<MPoly> = vec![one.clone()];
    let g_at = |g: &Vec<MPoly>, k: usize| g[k.min(e - k)].clone();
    let conv = |g: &Vec<MPoly>, k: usize, skip_zero: bool| -> Result<MPoly> {
        let mut acc = MPoly::zero(d);
        for j in 0..=k.min(2 * d) {
            if skip_zero && j == 0 {
                continue;
            }
            acc = acc.add(&f_coeff(j).mul(&g_at(g, k - j))?);
        }
        Ok(acc)
    };
    for k in 1..=e / 2 {
        let qk = MPoly::constant(d, q.coeff(k));
        let gk = qk.sub(&conv(&g, k, true)?);
        g.push(gk);
    }
    let mut residuals = Vec::with_capacity(d);
    for k in (e / 2 + 1)..=half {
        residuals.push(conv(&g, k, false)?.sub(&MPoly::constant(d, q.coeff(k))));
    }
    Ok(ElimSystem { d, cofactor: g[1..].to_vec(), residuals })
}

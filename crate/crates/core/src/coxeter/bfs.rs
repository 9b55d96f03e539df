use std::collections::HashSet;

use num_bigint::BigInt;

use super::finite::finite_type;
use super::graph::{CoxeterGraph, Label};
use crate::error::{Error, Result};
use crate::exactpoly::IntPoly;
use crate::geometry::QSqrt5;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// Word-length generating polynomial of a finite Coxeter group, by
/// breadth-first enumeration of the orbit of a regular point.
///
/// A point is tracked through its inner products `y_j = B(x, e_j)` with
/// the simple roots; starting from `y = (1, ..., 1)` (interior of the
/// fundamental chamber) the orbit is in bijection with the group, and
/// `s_i` acts by `y_j <- y_j - 2 B(e_i, e_j) y_i`.
pub fn bfs_growth_finite(g: &CoxeterGraph, cap: usize) -> Result<IntPoly> {
    let k = g.size();
    let all: Vec<usize> = (0..k).collect();
    if finite_type(g, &all).is_none() {
        return Err(Error::Precondition("BFS oracle needs a finite Coxeter group".into()));
    }
    let mut twice_gram = vec![vec![QSqrt5::zero(); k]; k];
    for (i, row) in twice_gram.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let l = if i == j { Label::Finite(1) } else { g.label(i, j) };
            let v = match l {
                Label::Finite(1) => QSqrt5::one(),
                Label::Finite(m) => QSqrt5::neg_cos_pi_over(m)
                    .ok_or_else(|| Error::UnsupportedLabel(m.to_string()))?,
                other => return Err(Error::UnsupportedLabel(other.to_string())),
            };
            *entry = &v + &v;
        }
    }
    let start = vec![QSqrt5::one(); k];
    let mut seen: HashSet<Vec<QSqrt5>> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    let mut layers = Vec::new();
    while !frontier.is_empty() {
        layers.push(BigInt::from(frontier.len()));
        let mut next = Vec::new();
        for y in &frontier {
            for i in 0..k {
                let yi = y[i].clone();
                let z: Vec<QSqrt5> =
                    (0..k).map(|j| &y[j] - &(&twice_gram[i][j] * &yi)).collect();
                if seen.insert(z.clone()) {
                    if seen.len() > cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    Ok(IntPoly::new(layers))
}

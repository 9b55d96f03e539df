use std::fmt;

use super::graph::{CoxeterGraph, Label};
use crate::exactpoly::{bracket, IntPoly};

/// Families of connected finite Coxeter graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral group of order `2m` (rank 2, `m` not 3 or 4).
    I2(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Sorted exponents; the growth polynomial is the product of `[e + 1]`.
    pub exponents: Vec<u32>,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::D => write!(f, "{:?}{}", self.family, self.rank),
            Family::I2(m) => write!(f, "I2({m})"),
            fam => write!(f, "{fam:?}"),
        }
    }
}

/// Decomposition of a finite Coxeter system into irreducible components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteType {
    pub components: Vec<Component>,
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Sorted multiset of bracket arguments `e + 1` over all exponents,
    /// e.g. `[2, 6, 10]` for H3.
    pub fn bracket_signature(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .components
            .iter()
            .flat_map(|c| c.exponents.iter().map(|e| e + 1))
            .collect();
        v.sort_unstable();
        v
    }

    /// Group order: the growth polynomial evaluated at 1.
    pub fn order(&self) -> u128 {
        self.bracket_signature().iter().map(|&m| m as u128).product()
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn component(family: Family, exponents: Vec<u32>) -> Component {
    Component { family, rank: exponents.len(), exponents }
}

fn a_type(n: usize) -> Component {
    component(Family::A, (1..=n as u32).collect())
}

fn b_type(n: usize) -> Component {
    component(Family::B, (0..n as u32).map(|k| 2 * k + 1).collect())
}

fn d_type(n: usize) -> Component {
    let mut e: Vec<u32> = (0..n as u32 - 1).map(|k| 2 * k + 1).collect();
    e.push(n as u32 - 1);
    e.sort_unstable();
    component(Family::D, e)
}

/// Matches one connected node set against the classification.
pub fn classify_connected(g: &CoxeterGraph, nodes: &[usize]) -> Option<Component> {
    let rank = nodes.len();
    match rank {
        0 => return None,
        1 => return Some(a_type(1)),
        _ => {}
    }
    let mut edges = Vec::new();
    for (a, &i) in nodes.iter().enumerate() {
        for &j in &nodes[a + 1..] {
            match g.label(i, j) {
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((i, j, m)),
                Label::Infinity | Label::Dotted => return None,
            }
        }
    }
    if rank == 2 {
        let m = edges.first()?.2;
        return Some(match m {
            3 => component(Family::A, vec![1, 2]),
            4 => component(Family::B, vec![1, 3]),
            _ => component(Family::I2(m), vec![1, m - 1]),
        });
    }
    // rank >= 3: must be a tree with small labels
    if edges.len() != rank - 1 || edges.iter().any(|e| e.2 > 5) {
        return None;
    }
    let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
    let high: Vec<&(usize, usize, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    if branch.is_empty() {
        match high.as_slice() {
            [] => Some(a_type(rank)),
            [&(i, j, m)] => {
                let at_end = degree(i) == 1 || degree(j) == 1;
                match (m, at_end, rank) {
                    (4, true, _) => Some(b_type(rank)),
                    (4, false, 4) => Some(component(Family::F4, vec![1, 5, 7, 11])),
                    (5, true, 3) => Some(component(Family::H3, vec![1, 5, 9])),
                    (5, true, 4) => Some(component(Family::H4, vec![1, 11, 19, 29])),
                    _ => None,
                }
            }
            _ => None,
        }
    } else {
        if branch.len() != 1 || degree(branch[0]) != 3 || !high.is_empty() {
            return None;
        }
        let center = branch[0];
        // arm lengths: walk away from the center along each neighbor
        let mut arms: Vec<usize> = edges
            .iter()
            .filter_map(|e| {
                if e.0 == center {
                    Some(e.1)
                } else if e.1 == center {
                    Some(e.0)
                } else {
                    None
                }
            })
            .map(|start| {
                let (mut prev, mut cur, mut len) = (center, start, 1);
                loop {
                    let next = edges.iter().find_map(|e| {
                        if e.0 == cur && e.1 != prev {
                            Some(e.1)
                        } else if e.1 == cur && e.0 != prev {
                            Some(e.0)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => Some(d_type(rank)),
            [1, 2, 2] => Some(component(Family::E6, vec![1, 4, 5, 7, 8, 11])),
            [1, 2, 3] => Some(component(Family::E7, vec![1, 5, 7, 9, 11, 13, 17])),
            [1, 2, 4] => Some(component(Family::E8, vec![1, 7, 11, 13, 17, 19, 23, 29])),
            _ => None,
        }
    }
}

/// Finite type of the standard parabolic subgroup on `subset`, or `None`
/// if that subgroup is infinite.
pub fn finite_type(g: &CoxeterGraph, subset: &[usize]) -> Option<FiniteType> {
    let mut components = Vec::new();
    for comp in g.components(subset) {
        components.push(classify_connected(g, &comp)?);
    }
    components.sort_by(|a, b| (a.rank, &a.exponents).cmp(&(b.rank, &b.exponents)));
    Some(FiniteType { components })
}

/// Growth polynomial of a finite Coxeter group from its exponents.
pub fn solomon_polynomial(ft: &FiniteType) -> IntPoly {
    bracket(&ft.bracket_signature())
}

use serde::Serialize;

use super::qsqrt5::QSqrt5;
use crate::coxeter::{CoxeterGraph, Label};
use crate::error::{Error, Result};

/// Square matrix over Q(sqrt 5).
pub type Matrix = Vec<Vec<QSqrt5>>;

/// Symmetric matrix of inner products of the unit normals, unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Matrix,
}

impl GramMatrix {
    pub fn new(entries: Matrix) -> Result<Self> {
        let k = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != k {
                return Err(Error::Geometry("Gram matrix is not square".into()));
            }
            if row[i] != QSqrt5::one() {
                return Err(Error::Geometry(format!("diagonal entry {} is not 1", i + 1)));
            }
            for j in 0..i {
                if row[j] != entries[j][i] {
                    return Err(Error::Geometry("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &QSqrt5 {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    /// Principal submatrix on `idx`.
    pub fn principal(&self, idx: &[usize]) -> GramMatrix {
        GramMatrix {
            entries: idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect(),
        }
    }

    pub fn det(&self) -> QSqrt5 {
        det(&self.entries)
    }

    /// `(-1)^(i+j) det` of the matrix with row `i` and column `j` removed.
    pub fn cofactor(&self, i: usize, j: usize) -> QSqrt5 {
        let minor: Matrix = (0..self.order())
            .filter(|&r| r != i)
            .map(|r| {
                (0..self.order())
                    .filter(|&c| c != j)
                    .map(|c| self.entries[r][c].clone())
                    .collect()
            })
            .collect();
        let d = det(&minor);
        if (i + j) % 2 == 0 {
            d
        } else {
            -d
        }
    }

    /// Bilinear form `x^T G y` on coordinate vectors in the normal basis.
    pub fn inner(&self, x: &[QSqrt5], y: &[QSqrt5]) -> QSqrt5 {
        let mut acc = QSqrt5::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = &acc + &(&(xi * &self.entries[i][j]) * yj);
            }
        }
        acc
    }
}

/// Determinant by exact Gaussian elimination.
pub fn det(m: &Matrix) -> QSqrt5 {
    let n = m.len();
    let mut a = m.clone();
    let mut d = QSqrt5::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return QSqrt5::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        let piv = a[col][col].clone();
        d = &d * &piv;
        let inv = piv.inv().expect("nonzero pivot");
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    d
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<QSqrt5>]) -> usize {
    let mut a: Matrix = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][col].inv().expect("nonzero pivot");
        for i in 0..a.len() {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            for c in col..ncols {
                let sub = &f * &a[r][c];
                a[i][c] = &a[i][c] - &sub;
            }
        }
        r += 1;
    }
    r
}

/// Gram matrix `(-cos(pi/m_ij))` of a graph whose labels lie in {2, 3, 5}.
pub fn gram_from_graph(g: &CoxeterGraph) -> Result<GramMatrix> {
    let k = g.size();
    let mut m = vec![vec![QSqrt5::zero(); k]; k];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = if i == j {
                QSqrt5::one()
            } else {
                match g.label(i, j) {
                    Label::Finite(l) => QSqrt5::neg_cos_pi_over(l)
                        .ok_or_else(|| Error::UnsupportedLabel(l.to_string()))?,
                    other => return Err(Error::UnsupportedLabel(other.to_string())),
                }
            };
        }
    }
    GramMatrix::new(m)
}

/// `(positive, negative)` eigenvalue counts from the sign changes of the
/// leading principal minors (Jacobi).
pub fn signature(g: &GramMatrix) -> Result<(usize, usize)> {
    let k = g.order();
    let mut prev = 1;
    let mut negatives = 0;
    for i in 1..=k {
        let idx: Vec<usize> = (0..i).collect();
        let s = g.principal(&idx).det().signum();
        if s == 0 {
            return Err(Error::ZeroMinor(i));
        }
        if s != prev {
            negatives += 1;
        }
        prev = s;
    }
    Ok((k - negatives, negatives))
}

/// Vector given by its coordinates in the basis of unit normals `e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalVector {
    pub coords: Vec<QSqrt5>,
}

/// `w_i = sum_k cof_ik(G) e_k`, normals of the vertex hyperplanes.
pub fn cofactor_normals(g: &GramMatrix) -> Result<Vec<NormalVector>> {
    if g.det().is_zero() {
        return Err(Error::Singular);
    }
    let k = g.order();
    Ok((0..k)
        .map(|i| NormalVector { coords: (0..k).map(|j| g.cofactor(i, j)).collect() })
        .collect())
}

pub fn unit_vector(k: usize, i: usize) -> Vec<QSqrt5> {
    (0..k).map(|j| if i == j { QSqrt5::one() } else { QSqrt5::zero() }).collect()
}

/// One inequality of the truncation argument with its exact witnesses.
#[derive(Clone, Debug, Serialize)]
pub struct TruncationCheck {
    pub nodes: (usize, usize),
    pub description: String,
    /// The compared quantities, in decimal for reporting.
    pub lhs: f64,
    pub rhs: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncationReport {
    pub det: f64,
    /// `v_i . e_i < -1` for each `i`.
    pub vertex_facet: Vec<TruncationCheck>,
    /// `v_i . v_j < -1` for each `i < j`.
    pub vertex_vertex: Vec<TruncationCheck>,
    /// `v_i . e_j = 0` for `j != i`, exactly.
    pub orthogonal: bool,
}

impl TruncationReport {
    pub fn all_passed(&self) -> bool {
        self.orthogonal
            && self.vertex_facet.iter().all(|c| c.passed)
            && self.vertex_vertex.iter().all(|c| c.passed)
    }
}

/// Verifies that truncating every (ultraideal) vertex by its polar
/// hyperplane yields orthogonal, pairwise disjoint new facets, and emits
/// the graph of the truncated polytope: nodes `0..k` are the original
/// facets, node `k + i` the facet cutting off vertex `i`.
///
/// All comparisons involving `sqrt(det / cof_ii)` are done on squares
/// with the sign tracked separately.
pub fn truncation_extend(g: &GramMatrix, base: &CoxeterGraph) -> Result<(CoxeterGraph, TruncationReport)> {
    let k = g.order();
    if base.size() != k {
        return Err(Error::Geometry("graph and Gram matrix sizes differ".into()));
    }
    let det = g.det();
    let normals = cofactor_normals(g)?;
    let cof_diag: Vec<QSqrt5> = (0..k).map(|i| g.cofactor(i, i)).collect();
    // w_i . w_i = cof_ii det must be positive (space-like vertex normal)
    for (i, c) in cof_diag.iter().enumerate() {
        if !(c * &det).is_positive() {
            return Err(Error::Geometry(format!("vertex {} is not ultraideal", i + 1)));
        }
    }
    let mut orthogonal = true;
    for (i, w) in normals.iter().enumerate() {
        for j in 0..k {
            let ip = g.inner(&w.coords, &unit_vector(k, j));
            let expected = if i == j { det.clone() } else { QSqrt5::zero() };
            orthogonal &= ip == expected;
        }
    }
    // v_i . e_i = det / sqrt(cof_ii det): sign of det, square det / cof_ii
    let vertex_facet: Vec<TruncationCheck> = (0..k)
        .map(|i| {
            let ratio = &det / &cof_diag[i];
            let passed = det.is_negative() && ratio > QSqrt5::one();
            TruncationCheck {
                nodes: (k + i, i),
                description: format!("v{} . e{} < -1  <=>  det/cof_{}{} > 1", i + 1, i + 1, i + 1, i + 1),
                lhs: ratio.to_f64(),
                rhs: 1.0,
                passed,
            }
        })
        .collect();
    // v_i . v_j = cof_ij det / sqrt(cof_ii det cof_jj det)
    let mut vertex_vertex = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let cij = g.cofactor(i, j);
            let num = &cij * &det;
            let sq_lhs = &num * &num;
            let sq_rhs = &(&cof_diag[i] * &det) * &(&cof_diag[j] * &det);
            let passed = num.is_negative() && sq_lhs > sq_rhs;
            vertex_vertex.push(TruncationCheck {
                nodes: (k + i, k + j),
                description: format!(
                    "v{} . v{} < -1  <=>  cof_{}{} det < 0 and cof_{}{}^2 > cof_{}{} cof_{}{}",
                    i + 1, j + 1, i + 1, j + 1, i + 1, j + 1, i + 1, i + 1, j + 1, j + 1
                ),
                lhs: (&cij * &cij).to_f64(),
                rhs: (&cof_diag[i] * &cof_diag[j]).to_f64(),
                passed,
            });
        }
    }
    let report = TruncationReport { det: det.to_f64(), vertex_facet, vertex_vertex, orthogonal };
    if !report.all_passed() {
        return Err(Error::Geometry("truncation is not orthogonal and disjoint".into()));
    }
    let mut out = CoxeterGraph::new(2 * k);
    for (i, j, l) in base.edges() {
        out.set(i, j, l)?;
    }
    for c in report.vertex_facet.iter().chain(&report.vertex_vertex) {
        out.set(c.nodes.0, c.nodes.1, Label::Dotted)?;
    }
    Ok((out, report))
}

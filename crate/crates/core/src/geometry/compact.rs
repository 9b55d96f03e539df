use serde::Serialize;

use super::gram::{cofactor_normals, gram_from_graph, rank, signature, unit_vector, GramMatrix};
use super::qsqrt5::QSqrt5;
use crate::coxeter::{finite_type, CoxeterGraph, Label};
use crate::error::{Error, Result};

/// `J` together with every node joined by label 2 to all of `J`.
pub fn orthogonal_closure(g: &CoxeterGraph, subset: &[usize]) -> Vec<usize> {
    (0..g.size())
        .filter(|&v| subset.contains(&v) || subset.iter().all(|&j| g.label(v, j) == Label::Finite(2)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetRank {
    pub subset: Vec<usize>,
    pub closure: Vec<usize>,
    pub rank: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompactnessReport {
    pub lanner: Vec<SubsetRank>,
    pub dotted: Vec<SubsetRank>,
    /// Elliptic subsets of rank `dim - 1` (vertices of the polytope).
    pub vertices: usize,
    /// Elliptic subsets of rank `dim - 2` (edges).
    pub edges: usize,
    /// Every edge lies in exactly two vertices.
    pub edges_bounded: bool,
}

impl CompactnessReport {
    /// Decides compactness: the Lanner and vertex-vertex rank conditions
    /// hold and every edge of the polytope has two endpoints. The rank of
    /// the closure of a pair (original facet, truncating facet) is only
    /// reported: such pairs are ultraparallel by construction and their
    /// closure cannot span.
    pub fn compact(&self, dim: usize) -> bool {
        self.lanner.iter().all(|s| s.passed)
            && self.dotted.iter().filter(|s| s.subset.iter().all(|&v| v >= dim)).all(|s| s.passed)
            && self.vertices > 0
            && self.edges_bounded
    }
}

fn node_vectors(g: &GramMatrix) -> Result<Vec<Vec<QSqrt5>>> {
    let k = g.order();
    let mut out: Vec<Vec<QSqrt5>> = (0..k).map(|i| unit_vector(k, i)).collect();
    out.extend(cofactor_normals(g)?.into_iter().map(|w| w.coords));
    Ok(out)
}

fn subset_rank(vectors: &[Vec<QSqrt5>], gs: &CoxeterGraph, subset: Vec<usize>, dim: usize) -> SubsetRank {
    let closure = orthogonal_closure(gs, &subset);
    let rows: Vec<Vec<QSqrt5>> = closure.iter().map(|&v| vectors[v].clone()).collect();
    let r = rank(&rows);
    SubsetRank { subset, closure, rank: r, passed: r == dim }
}

pub fn compactness_report(g: &GramMatrix, gs: &CoxeterGraph) -> Result<CompactnessReport> {
    let k = g.order();
    if gs.size() != 2 * k {
        return Err(Error::Geometry("truncated graph must have twice as many nodes".into()));
    }
    let vectors = node_vectors(g)?;
    let lanner = (0..k)
        .map(|skip| {
            let subset: Vec<usize> = (0..k).filter(|&v| v != skip).collect();
            subset_rank(&vectors, gs, subset, k)
        })
        .collect();
    let dotted = gs
        .edges()
        .filter(|&(_, _, l)| l == Label::Dotted)
        .map(|(i, j, _)| subset_rank(&vectors, gs, vec![i, j], k))
        .collect();
    let (vertices, edges, edges_bounded) = edge_criterion(gs, k);
    Ok(CompactnessReport { lanner, dotted, vertices, edges, edges_bounded })
}

/// Counts elliptic subsets of sizes `dim - 1` and `dim - 2` and checks that
/// each of the latter is contained in exactly two of the former.
fn edge_criterion(gs: &CoxeterGraph, dim: usize) -> (usize, usize, bool) {
    let n = gs.size();
    let subsets = |size: usize| -> Vec<u32> {
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == size)
            .filter(|&m| {
                let nodes: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                finite_type(gs, &nodes).is_some()
            })
            .collect()
    };
    let verts = subsets(dim - 1);
    let edges = subsets(dim - 2);
    let bounded = edges
        .iter()
        .all(|&e| verts.iter().filter(|&&v| v & e == e).count() == 2);
    (verts.len(), edges.len(), bounded)
}

/// Exact compactness decision for the truncated polytope with graph `gs`.
pub fn compactness_check(g: &GramMatrix, gs: &CoxeterGraph) -> bool {
    compactness_report(g, gs).is_ok_and(|r| r.compact(g.order()))
}

/// Vertex-deleted subgraphs, each checked to be of signature (3,1).
pub fn facet_subgraphs(g: &CoxeterGraph) -> Result<Vec<CoxeterGraph>> {
    (0..g.size())
        .map(|v| {
            let sub = g.remove_node(v);
            let sig = signature(&gram_from_graph(&sub)?)?;
            if sig != (sub.size() - 1, 1) {
                return Err(Error::Geometry(format!("facet {} has signature {:?}", v + 1, sig)));
            }
            Ok(sub)
        })
        .collect()
}

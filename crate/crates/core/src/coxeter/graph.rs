use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Edge label of a Coxeter graph. Orthogonal pairs (label 2) are encoded
/// by absence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
    /// Ultraparallel hyperplanes: `m_ij` undefined.
    Dotted,
}

impl Label {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        *self == Label::Finite(2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
            Label::Dotted => write!(f, "dotted"),
        }
    }
}

/// Coxeter graph on nodes `0..size`; pairs missing from `labels` carry
/// label 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    size: usize,
    labels: BTreeMap<(usize, usize), Label>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl CoxeterGraph {
    pub fn new(size: usize) -> Self {
        CoxeterGraph { size, labels: BTreeMap::new() }
    }

    /// Builds a graph from 0-based `(i, j, label)` triples.
    pub fn from_edges(size: usize, edges: &[(usize, usize, Label)]) -> Result<Self> {
        let mut g = Self::new(size);
        for &(i, j, l) in edges {
            g.set(i, j, l)?;
        }
        Ok(g)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn set(&mut self, i: usize, j: usize, label: Label) -> Result<()> {
        if i >= self.size || j >= self.size {
            return Err(Error::Graph(format!("node index out of range: {} {}", i + 1, j + 1)));
        }
        if i == j {
            return Err(Error::Graph(format!("self pair on node {}", i + 1)));
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(Error::Graph(format!("label {m} < 2")));
            }
            if m == 2 {
                self.labels.remove(&key(i, j));
                return Ok(());
            }
        }
        if self.labels.insert(key(i, j), label).is_some() {
            return Err(Error::Graph(format!("duplicate edge {} {}", i + 1, j + 1)));
        }
        Ok(())
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels.get(&key(i, j)).copied().unwrap_or(Label::Finite(2))
    }

    /// Pairs with a label other than 2, as `(i, j, label)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.labels.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.labels.contains_key(&key(i, j))
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.size).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// Subgraph induced on `nodes`, renumbered in the given order.
    pub fn induced(&self, nodes: &[usize]) -> CoxeterGraph {
        let mut g = CoxeterGraph::new(nodes.len());
        for (a, &i) in nodes.iter().enumerate() {
            for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
                let l = self.label(i, j);
                if !l.is_orthogonal() {
                    g.labels.insert((a, b), l);
                }
            }
        }
        g
    }

    pub fn remove_node(&self, k: usize) -> CoxeterGraph {
        let keep: Vec<usize> = (0..self.size).filter(|&i| i != k).collect();
        self.induced(&keep)
    }

    /// Connected components of the subgraph induced on `nodes`, where any
    /// label other than 2 connects.
    pub fn components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut left: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            left.remove(&start);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let next: Vec<usize> = left.iter().copied().filter(|&w| self.adjacent(v, w)).collect();
                for w in next {
                    left.remove(&w);
                    comp.push(w);
                    stack.push(w);
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn node_signature(&self, i: usize) -> Vec<Label> {
        let mut s: Vec<Label> = (0..self.size)
            .filter(|&j| j != i)
            .map(|j| self.label(i, j))
            .filter(|l| !l.is_orthogonal())
            .collect();
        s.sort();
        s
    }

    /// Label-preserving graph isomorphism, by backtracking over nodes with
    /// matching label multisets.
    pub fn is_isomorphic(&self, other: &CoxeterGraph) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// A node map `self -> other` preserving every label, if one exists.
    pub fn find_isomorphism(&self, other: &CoxeterGraph) -> Option<Vec<usize>> {
        if self.size != other.size || self.labels.len() != other.labels.len() {
            return None;
        }
        let sa: Vec<_> = (0..self.size).map(|i| self.node_signature(i)).collect();
        let sb: Vec<_> = (0..other.size).map(|i| other.node_signature(i)).collect();
        let mut ma = sa.clone();
        let mut mb = sb.clone();
        ma.sort();
        mb.sort();
        if ma != mb {
            return None;
        }
        let mut map = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        if self.extend_iso(other, &sa, &sb, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        other: &CoxeterGraph,
        sa: &[Vec<Label>],
        sb: &[Vec<Label>],
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == self.size {
            return true;
        }
        for c in 0..other.size {
            if used[c] || sa[i] != sb[c] {
                continue;
            }
            if (0..i).any(|k| self.label(k, i) != other.label(map[k], c)) {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if self.extend_iso(other, sa, sb, i + 1, map, used) {
                return true;
            }
            used[c] = false;
        }
        map[i] = usize::MAX;
        false
    }

    /// Serializes to the graph file format (1-based indices).
    pub fn to_text(&self) -> String {
        let mut s = format!("nodes {}\n", self.size);
        for (i, j, l) in self.edges() {
            match l {
                Label::Finite(m) => s.push_str(&format!("edge {} {} {m}\n", i + 1, j + 1)),
                Label::Infinity => s.push_str(&format!("inf {} {}\n", i + 1, j + 1)),
                Label::Dotted => s.push_str(&format!("dotted {} {}\n", i + 1, j + 1)),
            }
        }
        s
    }

    /// Parses the graph file format: `nodes k`, `edge i j m`, `inf i j`,
    /// `dotted i j`, one directive per line (a `/` also separates
    /// directives), `#` starts a comment, indices are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<CoxeterGraph> = None;
        let mut seen = BTreeSet::new();
        for raw in text.split(['\n', '/']) {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| -> Result<usize> {
                t.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{t}` in `{line}`")))
            };
            match toks[0] {
                "nodes" => {
                    if graph.is_some() {
                        return Err(Error::Parse("repeated `nodes` directive".into()));
                    }
                    if toks.len() != 2 {
                        return Err(Error::Parse(format!("malformed directive `{line}`")));
                    }
                    graph = Some(CoxeterGraph::new(num(toks[1])?));
                }
                kind @ ("edge" | "inf" | "dotted") => {
                    let g = graph
                        .as_mut()
                        .ok_or_else(|| Error::Parse("edge before `nodes` directive".into()))?;
                    let want = if kind == "edge" { 4 } else { 3 };
                    if toks.len() != want {
                        return Err(Error::Parse(format!("malformed directive `{line}`")));
                    }
                    let (i, j) = (num(toks[1])?, num(toks[2])?);
                    if i == 0 || j == 0 || i > g.size || j > g.size {
                        return Err(Error::Graph(format!("node index out of range in `{line}`")));
                    }
                    let label = match kind {
                        "edge" => Label::Finite(num(toks[3])? as u32),
                        "inf" => Label::Infinity,
                        _ => Label::Dotted,
                    };
                    if !seen.insert(key(i - 1, j - 1)) {
                        return Err(Error::Graph(format!("duplicate edge {i} {j}")));
                    }
                    g.set(i - 1, j - 1, label)?;
                }
                other => return Err(Error::Parse(format!("unknown directive `{other}`"))),
            }
        }
        graph.ok_or_else(|| Error::Parse("missing `nodes` directive".into()))
    }
}

/// Triangle group with angles pi/2, pi/3, pi/7.
pub fn triangle_2_3_7() -> CoxeterGraph {
    CoxeterGraph::from_edges(3, &[(0, 1, Label::Finite(3)), (1, 2, Label::Finite(7))]).expect("valid")
}

/// The five-node graph of the extended simplex whose vertices are all
/// ultraideal.
pub fn gamma() -> CoxeterGraph {
    let f = Label::Finite;
    CoxeterGraph::from_edges(
        5,
        &[(0, 1, f(5)), (0, 3, f(3)), (1, 2, f(3)), (1, 4, f(3)), (2, 3, f(5)), (3, 4, f(3))],
    )
    .expect("valid")
}

/// Appends one truncating node per vertex of a simplex graph: node
/// `k + i` is orthogonal to every original node except `i`, ultraparallel
/// to node `i` and to every other truncating node.
pub fn totally_truncate(g: &CoxeterGraph) -> CoxeterGraph {
    let k = g.size();
    let mut out = CoxeterGraph::new(2 * k);
    for (i, j, l) in g.edges() {
        out.set(i, j, l).expect("fresh pair");
    }
    for i in 0..k {
        out.set(k + i, i, Label::Dotted).expect("fresh pair");
        for j in (i + 1)..k {
            out.set(k + i, k + j, Label::Dotted).expect("fresh pair");
        }
    }
    out
}

/// Graph of the totally truncated simplex (the domino building block).
pub fn gamma_star() -> CoxeterGraph {
    totally_truncate(&gamma())
}

/// Orthogonal facet of type A: the vertex-deleted subgraph of [`gamma`]
/// obtained by removing node index [`FACET_A_NODE`].
pub fn facet_a() -> CoxeterGraph {
    gamma().remove_node(FACET_A_NODE)
}

pub fn facet_b() -> CoxeterGraph {
    gamma().remove_node(FACET_B_NODE)
}

pub fn facet_c() -> CoxeterGraph {
    gamma().remove_node(FACET_C_NODE)
}

/// 0-based node of `gamma` whose deletion gives the type A facet; fixed by
/// matching growth functions (see `gluing::facet_growths`).
pub const FACET_A_NODE: usize = 0;
pub const FACET_B_NODE: usize = 1;
pub const FACET_C_NODE: usize = 4;

/// Looks up one of the built-in graphs by name.
pub fn builtin(name: &str) -> Option<CoxeterGraph> {
    Some(match name {
        "triangle-2-3-7" => triangle_2_3_7(),
        "gamma" => gamma(),
        "gamma-star" => gamma_star(),
        "facet-A" => facet_a(),
        "facet-B" => facet_b(),
        "facet-C" => facet_c(),
        _ => return None,
    })
}

pub const BUILTIN_NAMES: [&str; 6] =
    ["triangle-2-3-7", "gamma", "gamma-star", "facet-A", "facet-B", "facet-C"];

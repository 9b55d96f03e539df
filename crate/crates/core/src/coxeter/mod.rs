//! Coxeter graphs, finite-type recognition, and growth functions.

mod bfs;
mod finite;
mod graph;
mod growth;

pub use bfs::{bfs_growth_finite, DEFAULT_ORDER_CAP};
pub use finite::{classify_connected, finite_type, solomon_polynomial, Component, Family, FiniteType};
pub use graph::{
    builtin, facet_a, facet_b, facet_c, gamma, gamma_star, totally_truncate, triangle_2_3_7,
    CoxeterGraph, Label, BUILTIN_NAMES, FACET_A_NODE, FACET_B_NODE, FACET_C_NODE,
};
pub use growth::{series_prefix, spherical_census, steinberg_growth, steinberg_sum, MAX_GENERATORS};

/// Parses graph text or resolves a built-in name.
pub fn load_graph(spec: &str) -> crate::Result<CoxeterGraph> {
    match builtin(spec.trim()) {
        Some(g) => Ok(g),
        None => CoxeterGraph::parse(spec),
    }
}

//! Fixtures shared by the benchmarks.

use connwidth::corpus::random_graph;
use connwidth::{make_graph_boundary, make_graph_cut, ConnectivitySystem, Graph};

/// Cut system of a seeded random graph on `n` vertices.
pub fn random_cut(n: usize, seed: u64) -> ConnectivitySystem {
    make_graph_cut(&random_graph(n, 0.5, seed)).expect("random graphs have vertices")
}

/// Cut systems of the small named graphs.
pub fn named_cuts() -> Vec<(&'static str, ConnectivitySystem)> {
    [
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("C6", Graph::cycle(6)),
    ]
    .into_iter()
    .map(|(name, g)| (name, make_graph_cut(&g).expect("named graphs are valid")))
    .collect()
}

/// Boundary system of the complete graph on `n` vertices.
pub fn complete_boundary(n: usize) -> ConnectivitySystem {
    make_graph_boundary(&Graph::complete(n)).expect("complete graphs have edges")
}

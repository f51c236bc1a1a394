mod support;

use connwidth::corpus::random_graph;
use connwidth::{
    linear_width, linear_width_bruteforce, make_explicit, validate_symmetric_submodular, AxiomId, Graph, Guards,
};
use support::{boundary, boundary_value, brute_width, cut, cut_value, named_graphs, witness_reproduces};

#[test]
fn cut_tables_match_direct_edge_counts() {
    for seed in 0..40 {
        let g = random_graph(2 + seed as usize % 9, 0.45, seed);
        let sys = cut(&g);
        for m in 0..1u32 << sys.n() {
            assert_eq!(sys.values()[m as usize], cut_value(&g, m), "seed {seed} mask {m:b}");
        }
    }
}

#[test]
fn boundary_tables_match_direct_vertex_counts() {
    for (_, g) in named_graphs() {
        let sys = boundary(&g);
        for m in 0..1u32 << sys.n() {
            assert_eq!(sys.values()[m as usize], boundary_value(&g, m));
        }
    }
    for seed in 0..30 {
        let g = connwidth::corpus::random_graph_with_edges(6, 1 + seed as usize % 10, seed);
        let sys = boundary(&g);
        for m in 0..1u32 << sys.n() {
            assert_eq!(sys.values()[m as usize], boundary_value(&g, m));
        }
    }
}

#[test]
fn known_widths() {
    let g = Guards::default();
    let cases = [
        (Graph::path(3), 1),
        (Graph::path(5), 1),
        (Graph::cycle(4), 2),
        (Graph::cycle(6), 2),
        (Graph::complete(3), 2),
        (Graph::complete(4), 4),
        (Graph::star(4), 2),
    ];
    for (graph, expected) in cases {
        let sys = cut(&graph);
        let dp = linear_width(&sys, &g).unwrap();
        assert_eq!(dp.width, expected, "{graph:?}");
        assert_eq!(brute_width(sys.values(), sys.n()), expected);
        assert_eq!(dp.ordering.width(&sys), expected);
    }
}

#[test]
fn dp_matches_heap_permutation_oracle() {
    let g = Guards::default();
    for sys in support::corpus().into_iter().filter(|s| s.n() <= 8) {
        let dp = linear_width(&sys, &g).unwrap();
        let brute = linear_width_bruteforce(&sys, &g).unwrap();
        let oracle = brute_width(sys.values(), sys.n());
        assert_eq!(dp.width, oracle, "{}", sys.source());
        assert_eq!(brute.width, oracle, "{}", sys.source());
        assert_eq!(dp.ordering.width(&sys), oracle, "{}", sys.source());
    }
}

#[test]
fn explicit_validation_examples() {
    let g = Guards::default();
    let sys = make_explicit(2, vec![0, 1, 1, 0], true).unwrap();
    assert!(validate_symmetric_submodular(&sys, &g).unwrap().holds);

    let sys = make_explicit(2, vec![0, 1, 1, 1], false).unwrap();
    let r = validate_symmetric_submodular(&sys, &g).unwrap();
    assert!(!r.holds);
    assert_eq!(r.axiom, AxiomId::SYM);
    assert!(witness_reproduces(&sys, &[], 0, connwidth::IhVariant::Guarded, &r));

    let sys = make_explicit(2, vec![0, 2, 2, 0], true).unwrap();
    assert_eq!(linear_width(&sys, &g).unwrap().width, 2);
}

//! Test-only oracles, independent of the library's evaluation paths, plus the
//! seeded corpus shared by the integration and acceptance suites.
#![allow(dead_code)]

use connwidth::corpus::{random_graph, random_graph_with_edges, SplitMix64};
use connwidth::{make_graph_boundary, make_graph_cut, AxiomId, AxiomReport, ConnectivitySystem, Graph, IhVariant};

/// `f(A)` for the cut function, by counting edges directly.
pub fn cut_value(g: &Graph, mask: u32) -> u32 {
    g.edges
        .iter()
        .filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1))
        .count() as u32
}

/// `f(A)` for the boundary function, by checking each vertex directly.
pub fn boundary_value(g: &Graph, mask: u32) -> u32 {
    (0..g.vertex_count)
        .filter(|&v| {
            let touches = |inside: bool| {
                g.edges
                    .iter()
                    .enumerate()
                    .any(|(i, &(a, b))| (a == v || b == v) && ((mask >> i & 1) == 1) == inside)
            };
            touches(true) && touches(false)
        })
        .count() as u32
}

/// Minimum over all orderings of the maximum prefix value, enumerating
/// permutations with Heap's algorithm.
pub fn brute_width(values: &[u32], n: usize) -> u32 {
    fn score(values: &[u32], perm: &[usize]) -> u32 {
        let mut mask = 0usize;
        perm.iter()
            .map(|&e| {
                mask |= 1 << e;
                values[mask]
            })
            .max()
            .unwrap_or(0)
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = score(values, &perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(score(values, &perm));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Re-evaluates the quantified clause of `report.axiom` at its witnesses and
/// returns true iff the clause is false there (the reported violation is real).
pub fn witness_reproduces(
    sys: &ConnectivitySystem,
    members: &[u32],
    k: u32,
    variant: IhVariant,
    r: &AxiomReport,
) -> bool {
    let f = |m: u32| sys.values()[m as usize];
    let full = (1u32 << sys.n()) - 1;
    let has = |m: u32| members.contains(&m);
    let w = |i: usize| r.witnesses.get(i).map(|s| s.mask());
    let e = r.element.map(|e| e.0);
    match r.axiom {
        AxiomId::IB | AxiomId::O1 => matches!(w(0), Some(a) if has(a) && f(a) > k),
        AxiomId::IH => match (w(0), w(1)) {
            (Some(a), Some(b)) => {
                a & b == a && a != b && has(b) && !has(a) && (variant == IhVariant::Literal || f(a) <= k)
            }
            _ => false,
        },
        AxiomId::SIS => match (w(0), e) {
            (Some(a), Some(e)) => {
                let g = a | 1 << e;
                has(a) && g != a && f(1 << e) <= k && f(g) <= k && !has(g)
            }
            _ => false,
        },
        AxiomId::IW => w(0) == Some(full) && has(full),
        AxiomId::IE => matches!(w(0), Some(a) if f(a) <= k && has(a) == has(full & !a)),
        AxiomId::O2 => match (w(0), w(1)) {
            (Some(a), Some(b)) => a & b == a && has(b) && f(a) <= k && !has(a),
            _ => false,
        },
        AxiomId::O3 => match (w(0), w(1), w(2)) {
            (Some(a), Some(b), Some(c)) => {
                a & b == 0 && a | b | c == full && c.count_ones() <= 1 && f(a) <= k && f(b) <= k && !has(a) && !has(b)
            }
            _ => false,
        },
        AxiomId::SYM => matches!(w(0), Some(a) if f(a) != f(full & !a)),
        AxiomId::SUBMOD => match (w(0), w(1)) {
            (Some(a), Some(b)) => (f(a) as u64 + f(b) as u64) < f(a & b) as u64 + f(a | b) as u64,
            _ => false,
        },
        AxiomId::L1a => matches!(w(0), Some(a) if f(a) < f(0) || (a == full && f(full) != f(0))),
        AxiomId::L1b => match (w(0), w(1)) {
            (Some(a), Some(b)) => (f(a) as u64 + f(b) as u64) < f(a & !b) as u64 + f(b & !a) as u64,
            _ => false,
        },
        AxiomId::PRE => matches!(e, Some(e) if f(1 << e) > k),
    }
}

pub fn cut(g: &Graph) -> ConnectivitySystem {
    make_graph_cut(g).unwrap()
}

pub fn boundary(g: &Graph) -> ConnectivitySystem {
    make_graph_boundary(g).unwrap()
}

/// Named small graphs: P3, C4, K3, K4 and the star S3.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("P3", Graph::path(3)),
        ("C4", Graph::cycle(4)),
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("S3", Graph::star(4)),
    ]
}

/// Cut and boundary systems of the named graphs.
pub fn named_systems() -> Vec<ConnectivitySystem> {
    named_graphs()
        .into_iter()
        .flat_map(|(name, g)| {
            [
                cut(&g).with_source(format!("{name} cut")),
                boundary(&g).with_source(format!("{name} boundary")),
            ]
        })
        .collect()
}

/// 200 seeded random graphs with at most 10 vertices (cut) and at most 10
/// edges (boundary), so every ground set has at most 10 elements.
pub fn random_corpus() -> Vec<ConnectivitySystem> {
    let mut out = Vec::new();
    for seed in 0..200u64 {
        let mut rng = SplitMix64::new(seed ^ 0xC0FF_EE00);
        let vertices = 2 + rng.below(9) as usize;
        let p = 0.2 + 0.6 * rng.next_f64();
        out.push(cut(&random_graph(vertices, p, seed)).with_source(format!("random cut #{seed}")));

        let bv = 2 + rng.below(7) as usize;
        let max_edges = (bv * (bv - 1) / 2).min(10);
        let m = 1 + rng.below(max_edges as u64) as usize;
        out.push(boundary(&random_graph_with_edges(bv, m, seed)).with_source(format!("random boundary #{seed}")));
    }
    out
}

/// Named systems followed by the random corpus.
pub fn corpus() -> Vec<ConnectivitySystem> {
    let mut v = named_systems();
    v.extend(random_corpus());
    v
}

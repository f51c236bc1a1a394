//! Connectivity systems `(X, f)`: a ground set and a symmetric submodular
//! function stored as a dense table over all `2^n` subsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::report::{AxiomId, AxiomReport};
use crate::subset::{all_subsets, ElementId, Subset, MAX_GROUND_SET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Explicit,
    GraphCut,
    GraphBoundary,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Explicit => "explicit",
            Provenance::GraphCut => "graph_cut",
            Provenance::GraphBoundary => "graph_boundary",
        })
    }
}

/// Undirected multigraph. Self-loops are rejected by the constructors that
/// consume it, not here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph { vertex_count, edges }
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.edges.push((n - 1, 0));
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, edges)
    }

    /// Star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (0, v)).collect())
    }

    fn check_edges(&self) -> Result<()> {
        for &(u, v) in &self.edges {
            for w in [u, v] {
                if w >= self.vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count: self.vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivitySystem {
    n: usize,
    values: Vec<u32>,
    provenance: Provenance,
    source: String,
}

impl ConnectivitySystem {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Free-form description of where the system came from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    #[inline]
    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    #[inline]
    pub fn eval(&self, a: Subset) -> u32 {
        self.values[a.index()]
    }

    #[inline]
    pub fn is_k_efficient(&self, a: Subset, k: u32) -> bool {
        self.eval(a) <= k
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n as u32).map(ElementId)
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        all_subsets(self.n)
    }

    pub fn max_value(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn max_singleton(&self) -> u32 {
        self.elements()
            .map(|e| self.eval(Subset::singleton(e)))
            .max()
            .unwrap_or(0)
    }

    /// True when `a` is a valid subset of this ground set.
    pub fn owns(&self, a: Subset) -> bool {
        a.fits(self.n)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    Guards::check("ground set size", "MAX_GROUND_SET", n, MAX_GROUND_SET)
}

/// Builds a system from an explicit table indexed by mask.
///
/// With `validate` set, symmetry is checked directly and submodularity via
/// the equivalent local condition `f(S+i) + f(S+j) >= f(S) + f(S+i+j)`,
/// which costs `O(2^n n^2)` rather than `4^n`.
pub fn make_explicit(n: usize, values: Vec<u32>, validate: bool) -> Result<ConnectivitySystem> {
    check_n(n)?;
    let expected = 1usize << n;
    if values.len() != expected {
        return Err(Error::TableLength {
            n,
            expected,
            got: values.len(),
        });
    }
    let sys = ConnectivitySystem {
        n,
        values,
        provenance: Provenance::Explicit,
        source: String::from("explicit table"),
    };
    if validate {
        if let Some(m) = first_asymmetric(&sys) {
            let c = m.complement(n);
            return Err(Error::Symmetry {
                mask: m.mask(),
                complement: c.mask(),
                value: sys.eval(m),
                complement_value: sys.eval(c),
                width: n,
            });
        }
        if let Some((a, b)) = local_submodularity_witness(&sys) {
            return Err(Error::Submodularity { a, b });
        }
    }
    Ok(sys)
}

/// Cut function of `g`: the ground set is the vertex set and `f(A)` counts
/// edges (with multiplicity) that have exactly one endpoint in `A`.
pub fn make_graph_cut(g: &Graph) -> Result<ConnectivitySystem> {
    if g.vertex_count == 0 {
        return Err(Error::NoVertices);
    }
    check_n(g.vertex_count)?;
    g.check_edges()?;
    let n = g.vertex_count;
    let mut neighbours = vec![Vec::new(); n];
    for &(u, v) in &g.edges {
        neighbours[u].push(v);
        neighbours[v].push(u);
    }
    let mut values = vec![0u32; 1 << n];
    for m in 1..values.len() {
        // f(S + v) = f(S) + deg(v) - 2 * |edges between v and S|
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        let into_rest = neighbours[v].iter().filter(|&&u| rest >> u & 1 == 1).count() as u32;
        values[m] = values[rest] + neighbours[v].len() as u32 - 2 * into_rest;
    }
    Ok(ConnectivitySystem {
        n,
        values,
        provenance: Provenance::GraphCut,
        source: format!("cut function of a graph on {} vertices with {} edges", n, g.edges.len()),
    })
}

/// Boundary function of `g`: the ground set is the edge list and `f(A)`
/// counts vertices incident both to an edge of `A` and to an edge outside it.
pub fn make_graph_boundary(g: &Graph) -> Result<ConnectivitySystem> {
    if g.edges.is_empty() {
        return Err(Error::NoEdges);
    }
    check_n(g.edges.len())?;
    g.check_edges()?;
    let n = g.edges.len();
    let mut incident = vec![0u32; g.vertex_count];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    incident.retain(|&m| m != 0);
    let full = Subset::full(n).mask();
    let values = (0..=full)
        .map(|a| {
            incident
                .iter()
                .filter(|&&inc| inc & a != 0 && inc & !a & full != 0)
                .count() as u32
        })
        .collect();
    Ok(ConnectivitySystem {
        n,
        values,
        provenance: Provenance::GraphBoundary,
        source: format!(
            "boundary function of a graph on {} vertices with {} edges",
            g.vertex_count, n
        ),
    })
}

fn first_asymmetric(sys: &ConnectivitySystem) -> Option<Subset> {
    sys.subsets().find(|&m| sys.eval(m) != sys.eval(m.complement(sys.n)))
}

fn local_submodularity_witness(sys: &ConnectivitySystem) -> Option<(Subset, Subset)> {
    for s in sys.subsets() {
        let outside: Vec<ElementId> = s.complement(sys.n).elements().collect();
        for (x, &i) in outside.iter().enumerate() {
            for &j in &outside[x + 1..] {
                let (si, sj) = (s.with(i), s.with(j));
                let lhs = sys.eval(si) as u64 + sys.eval(sj) as u64;
                let rhs = sys.eval(s) as u64 + sys.eval(si.with(j)) as u64;
                if lhs < rhs {
                    return Some((si, sj));
                }
            }
        }
    }
    None
}

/// Exhaustive check of both symmetric-submodular conditions.
///
/// Symmetry is swept over all masks first; a failure there is reported as
/// `SYM` with the first offending mask. Otherwise all `4^n` ordered pairs are
/// swept and the first failing pair in `(A, B)` mask order is reported as
/// `SUBMOD`. Refuses when `n > guards.validate_max_n`.
pub fn validate_symmetric_submodular(sys: &ConnectivitySystem, guards: &Guards) -> Result<AxiomReport> {
    Guards::check(
        "ground set size for validation",
        "validate_max_n",
        sys.n,
        guards.validate_max_n,
    )?;
    let n = sys.n;
    if let Some(m) = first_asymmetric(sys) {
        let c = m.complement(n);
        return Ok(AxiomReport::fail(
            AxiomId::SYM,
            vec![m],
            None,
            format!("f({m}) = {} but f({c}) = {}", sys.eval(m), sys.eval(c)),
        ));
    }
    for a in sys.subsets() {
        let fa = sys.eval(a) as u64;
        for b in sys.subsets() {
            let lhs = fa + sys.eval(b) as u64;
            let meet = sys.eval(a.intersection(b)) as u64;
            let join = sys.eval(a.union(b)) as u64;
            if lhs < meet + join {
                return Ok(AxiomReport::fail(
                    AxiomId::SUBMOD,
                    vec![a, b],
                    None,
                    format!("f(A) + f(B) = {lhs} < f(A∩B) + f(A∪B) = {}", meet + join),
                ));
            }
        }
    }
    let mut ok = AxiomReport::pass(AxiomId::SUBMOD);
    ok.note = String::from("symmetric and submodular on all subsets");
    Ok(ok)
}

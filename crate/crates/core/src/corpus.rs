//! Seeded instance generators.
//!
//! Random graphs use SplitMix64 so that a `(generator, n, p, seed)` tuple
//! names the same graph in any implementation:
//!
//! ```text
//! state  += 0x9E3779B97F4A7C15
//! z       = state
//! z       = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z       = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output  = z ^ (z >> 31)
//! ```
//!
//! (all arithmetic wrapping mod 2^64). A uniform draw in `[0, 1)` is
//! `(output >> 11) * 2^-53`. `random` visits vertex pairs `(u, v)`, `u < v`,
//! in lexicographic order and keeps the edge iff its draw is `< p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::InstanceFile;
use crate::system::{Graph, Provenance};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound` (`bound > 0`), by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Path => "path",
            Generator::Cycle => "cycle",
            Generator::Complete => "complete",
            Generator::Star => "star",
            Generator::Random => "random",
        })
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "path" => Generator::Path,
            "cycle" => Generator::Cycle,
            "complete" => Generator::Complete,
            "star" => Generator::Star,
            "random" => Generator::Random,
            other => return Err(format!("unknown generator {other:?}")),
        })
    }
}

/// One generated instance. `n` is the vertex count of the graph; `p` is only
/// read by `random`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub generator: Generator,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub kind: Provenance,
}

impl CorpusSpec {
    pub fn new(generator: Generator, n: usize) -> CorpusSpec {
        CorpusSpec {
            generator,
            n,
            p: 0.5,
            seed: 0,
            kind: Provenance::GraphCut,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(match self.generator {
            Generator::Path => Graph::path(self.n),
            Generator::Cycle => Graph::cycle(self.n),
            Generator::Complete => Graph::complete(self.n),
            Generator::Star => Graph::star(self.n),
            Generator::Random => random_graph(self.n, self.p, self.seed),
        })
    }

    /// `<generator>-<params>-s<seed>`, e.g. `random-n6-p0.5-s42`.
    pub fn stem(&self) -> String {
        let mut s = format!("{}-n{}", self.generator, self.n);
        if self.generator == Generator::Random {
            s.push_str(&format!("-p{}", self.p));
        }
        if self.kind == Provenance::GraphBoundary {
            s.push_str("-boundary");
        }
        s.push_str(&format!("-s{}", self.seed));
        s
    }

    pub fn file_name(&self) -> String {
        format!("{}.json", self.stem())
    }

    pub fn instance(&self) -> Result<InstanceFile> {
        if self.kind == Provenance::Explicit {
            return Err(Error::Instance("generators produce graph instances only".into()));
        }
        Ok(InstanceFile::from_graph(self.stem(), self.kind, &self.graph()?))
    }
}

/// `G(n, p)` driven by SplitMix64 (see the module docs).
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Random simple graph with exactly `m` distinct edges on `n` vertices,
/// drawn by a partial Fisher-Yates shuffle of the lexicographic pair list.
pub fn random_graph_with_edges(n: usize, m: usize, seed: u64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = m.min(pairs.len());
    let mut rng = SplitMix64::new(seed);
    for i in 0..m {
        let j = i + rng.below((pairs.len() - i) as u64) as usize;
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    pairs.sort_unstable();
    Graph::new(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0, as published with the algorithm.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn fixed_generators() {
        let p3 = CorpusSpec::new(Generator::Path, 3).instance().unwrap();
        assert_eq!(
            p3.to_json(),
            "{\"name\":\"path-n3-s0\",\"kind\":\"graph_cut\",\"n\":3,\"vertices\":3,\"edges\":[[0,1],[1,2]]}\n"
        );
        let k4 = CorpusSpec::new(Generator::Complete, 4).graph().unwrap();
        assert_eq!(k4.edges.len(), 6);
        let s3 = CorpusSpec::new(Generator::Star, 4).graph().unwrap();
        assert_eq!(s3.edges, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn random_is_seeded() {
        let mut spec = CorpusSpec::new(Generator::Random, 6);
        spec.seed = 42;
        assert_eq!(spec.instance().unwrap(), spec.instance().unwrap());
        assert_eq!(spec.file_name(), "random-n6-p0.5-s42.json");
        spec.seed = 43;
        let other = spec.instance().unwrap();
        spec.seed = 42;
        assert_ne!(other.edges, spec.instance().unwrap().edges);
    }

    #[test]
    fn exact_edge_counts() {
        let g = random_graph_with_edges(6, 7, 3);
        assert_eq!(g.edges.len(), 7);
        let mut dedup = g.edges.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 7);
        assert_eq!(random_graph_with_edges(3, 10, 0).edges.len(), 3);
    }
}

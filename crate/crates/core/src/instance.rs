//! Instance files:
//!
//! ```json
//! {"name": "...", "kind": "explicit" | "graph_cut" | "graph_boundary",
//!  "n": 3, "values": [...], "vertices": 3, "edges": [[0, 1], [1, 2]]}
//! ```
//!
//! `values` belongs to explicit instances; `vertices` and `edges` to graph
//! instances.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::system::{make_explicit, make_graph_boundary, make_graph_cut, ConnectivitySystem, Graph, Provenance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub name: String,
    pub kind: Provenance,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<InstanceFile> {
        serde_json::from_str(text).map_err(|e| Error::Instance(e.to_string()))
    }

    /// Compact single-line JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn explicit(name: impl Into<String>, n: usize, values: Vec<u32>) -> InstanceFile {
        InstanceFile {
            name: name.into(),
            kind: Provenance::Explicit,
            n,
            values: Some(values),
            vertices: None,
            edges: None,
        }
    }

    pub fn from_graph(name: impl Into<String>, kind: Provenance, g: &Graph) -> InstanceFile {
        let n = match kind {
            Provenance::GraphBoundary => g.edges.len(),
            _ => g.vertex_count,
        };
        InstanceFile {
            name: name.into(),
            kind,
            n,
            values: None,
            vertices: Some(g.vertex_count),
            edges: Some(g.edges.iter().map(|&(u, v)| [u, v]).collect()),
        }
    }

    fn schema(msg: String) -> Error {
        Error::Instance(msg)
    }

    /// The graph of a graph instance.
    pub fn graph(&self) -> Result<Graph> {
        if self.values.is_some() {
            return Err(Self::schema(format!(
                "field `values` is not allowed for kind {}",
                self.kind
            )));
        }
        let vertices = self
            .vertices
            .ok_or_else(|| Self::schema(format!("field `vertices` is required for kind {}", self.kind)))?;
        let edges = self
            .edges
            .as_ref()
            .ok_or_else(|| Self::schema(format!("field `edges` is required for kind {}", self.kind)))?;
        Ok(Graph::new(vertices, edges.iter().map(|&[u, v]| (u, v)).collect()))
    }

    /// Materialises the system. `validate` applies to explicit tables only;
    /// graph functions are symmetric submodular by construction.
    pub fn build(&self, guards: &Guards, validate: bool) -> Result<ConnectivitySystem> {
        Guards::check("ground set size", "explicit_max_n", self.n, guards.explicit_max_n)?;
        let sys = match self.kind {
            Provenance::Explicit => {
                if self.vertices.is_some() || self.edges.is_some() {
                    return Err(Self::schema(
                        "fields `vertices`/`edges` are not allowed for kind explicit".into(),
                    ));
                }
                let values = self
                    .values
                    .clone()
                    .ok_or_else(|| Self::schema("field `values` is required for kind explicit".into()))?;
                make_explicit(self.n, values, validate)?
            }
            Provenance::GraphCut | Provenance::GraphBoundary => {
                let g = self.graph()?;
                let expected = if self.kind == Provenance::GraphCut {
                    g.vertex_count
                } else {
                    g.edges.len()
                };
                if expected != self.n {
                    return Err(Self::schema(format!(
                        "field `n` is {} but a {} instance of this graph has {expected} elements",
                        self.n, self.kind
                    )));
                }
                if self.kind == Provenance::GraphCut {
                    make_graph_cut(&g)?
                } else {
                    make_graph_boundary(&g)?
                }
            }
        };
        Ok(sys.with_source(self.name.clone()))
    }
}

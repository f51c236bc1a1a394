use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must have at least one element")]
    EmptyGroundSet,

    #[error("value table has {got} entries, expected 2^{n} = {expected}")]
    TableLength { n: usize, expected: usize, got: usize },

    #[error("symmetry violated at mask {mask:0width$b} vs {complement:0width$b}: f = {value} vs {complement_value}")]
    Symmetry {
        mask: u32,
        complement: u32,
        value: u32,
        complement_value: u32,
        width: usize,
    },

    #[error("submodularity violated at A = {a}, B = {b}")]
    Submodularity { a: Subset, b: Subset },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("graph has no vertices")]
    NoVertices,

    #[error("graph has no edges")]
    NoEdges,

    #[error("mask {mask} out of range for a ground set of {n} elements")]
    MaskOutOfRange { mask: u64, n: usize },

    #[error("{what}: {value} exceeds {guard} = {limit}")]
    GuardExceeded {
        what: &'static str,
        guard: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid guard setting: {0}")]
    Config(String),

    #[error("invalid instance: {0}")]
    Instance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

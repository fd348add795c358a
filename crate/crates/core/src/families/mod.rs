//! Constructors for the graph families studied by the harness.
//!
//! Every constructor returns a fresh immutable [`Graph`] or [`Digraph`];
//! composite constructions (Chithra, edge-joint) never mutate their inputs.

mod chithra;
mod classic;
mod edge_joint;
mod jaco;
mod ornated;
mod rasta;
mod sets;

use thiserror::Error;

use crate::graph::{GraphError, VertexSet};

pub use chithra::{chithra, chithra_decomposition, ChithraDecomposition, ChithraSpec};
pub use classic::{classic, Classic};
pub use edge_joint::edge_joint;
pub use jaco::{jaco, jaco_structure, JacoParams, JacoStructure};
pub use ornated::{maximal_reach, ornated, OrnatedString};
pub use rasta::{rasta, rasta_columns, rasta_digraph, RastaSpec};
pub use sets::{edge_set_graph, set_graph, EdgeSetAdjacency, MAX_EDGE_SET_EDGES, MAX_SET_GRAPH_N};

#[cfg(test)]
pub(crate) use classic::test_graphs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownKind(String),
    #[error("{family}: expected {expected} parameter(s), got {got}")]
    Arity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{family}: {name} = {value} is below the minimum {min}")]
    BelowMinimum {
        family: &'static str,
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("{family}: {name} = {value} exceeds the cap {max}")]
    AboveCap {
        family: &'static str,
        name: &'static str,
        value: usize,
        max: usize,
    },
    #[error("rasta terms {0:?} must be strictly decreasing with at least two terms, the last > 1")]
    InvalidRasta(Vec<usize>),
    #[error("ornated string must have at least one entry")]
    EmptyString,
    #[error("chithra subset W_{0} is empty")]
    EmptySubset(usize),
    #[error("chithra subset W_{index} = {subset} is not contained in the base vertex set")]
    SubsetOutOfRange { index: usize, subset: VertexSet },
    #[error("chithra subsets leave vertices {0} uncovered")]
    NotCovering(VertexSet),
    #[error("Jaco structure needs at least two vertices")]
    JacoTooSmall,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// All `size`-element subsets of `{0, .., n-1}` as bitmasks, in lexicographic
/// order of their sorted element lists.
pub(crate) fn combinations(n: usize, size: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if size <= n {
        rec(0, n, size, 0, &mut out);
    }
    out
}

/// Nonempty subsets of `{0, .., n-1}` ordered by size, then lexicographically.
pub(crate) fn nonempty_subsets(n: usize) -> Vec<u64> {
    (1..=n).flat_map(|s| combinations(n, s)).collect()
}

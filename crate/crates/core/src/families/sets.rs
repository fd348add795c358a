use super::{nonempty_subsets, FamilyError};
use crate::graph::{Bits, Graph};

/// Largest ground-set size accepted by [`set_graph`].
pub const MAX_SET_GRAPH_N: usize = 5;
/// Largest edge count accepted by [`edge_set_graph`].
pub const MAX_EDGE_SET_EDGES: usize = 5;

/// Adjacency rule for edge-set graphs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum EdgeSetAdjacency {
    /// Adjacent iff the subsets contain two distinct edges sharing an endpoint.
    #[default]
    Strict,
    /// Additionally adjacent when the subsets share a common edge.
    SharedEdge,
}

/// Graph on the intersection relation of subsets `M ⊆ 2^N` where subsets
/// are given as bitmasks and `related(a, b)` decides adjacency.
fn subset_graph(subsets: &[u64], related: impl Fn(u64, u64) -> bool) -> Graph {
    let adj = subsets
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            subsets
                .iter()
                .enumerate()
                .filter(|&(j, &b)| i != j && related(a, b))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// The set-graph of `{1, .., n}`: one vertex per nonempty subset, ordered by
/// size then lexicographically; subsets are adjacent iff they intersect.
pub fn set_graph(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BelowMinimum {
            family: "setgraph",
            name: "n",
            value: n,
            min: 1,
        });
    }
    if n > MAX_SET_GRAPH_N {
        return Err(FamilyError::AboveCap {
            family: "setgraph",
            name: "n",
            value: n,
            max: MAX_SET_GRAPH_N,
        });
    }
    Ok(subset_graph(&nonempty_subsets(n), |a, b| a & b != 0))
}

/// The edge-set graph of `g`: one vertex per nonempty subset of `E(g)`
/// (edges indexed in lexicographic order, subsets ordered by size then
/// lexicographically).
pub fn edge_set_graph(g: &Graph, mode: EdgeSetAdjacency) -> Result<Graph, FamilyError> {
    let edges = g.edges();
    let eps = edges.len();
    if eps < 1 {
        return Err(FamilyError::BelowMinimum {
            family: "edgesetgraph",
            name: "edges",
            value: 0,
            min: 1,
        });
    }
    if eps > MAX_EDGE_SET_EDGES {
        return Err(FamilyError::AboveCap {
            family: "edgesetgraph",
            name: "edges",
            value: eps,
            max: MAX_EDGE_SET_EDGES,
        });
    }
    // line-graph adjacency between edge indices
    let line: Vec<u64> = edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            edges
                .iter()
                .enumerate()
                .filter(|&(j, &(c, d))| i != j && (a == c || a == d || b == c || b == d))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let reach = |set: u64| Bits(set).fold(0u64, |acc, e| acc | line[e]);
    let subsets = nonempty_subsets(eps);
    Ok(subset_graph(&subsets, |a, b| {
        reach(a) & b != 0 || (mode == EdgeSetAdjacency::SharedEdge && a & b != 0)
    }))
}

use super::FamilyError;
use crate::graph::{Graph, GraphError, VertexId};

/// `G ⇝_{vu} H`: the disjoint union of `g` and `h` (labels of `h` shifted by
/// `|V(g)|`) plus the single edge `{v, u + |V(g)|}`.
pub fn edge_joint(g: &Graph, v: VertexId, h: &Graph, u: VertexId) -> Result<Graph, FamilyError> {
    for (graph, x) in [(g, v), (h, u)] {
        if !graph.contains(x) {
            return Err(GraphError::VertexOutOfRange {
                vertex: x.get(),
                n: graph.order(),
            }
            .into());
        }
    }
    let union = g.disjoint_union(h)?;
    Ok(union.with_edges([(v.get(), u.get() + g.order())])?)
}

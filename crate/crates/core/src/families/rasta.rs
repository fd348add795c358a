use super::FamilyError;
use crate::graph::{Digraph, Graph, VertexSet};

/// Column sizes `t_1 > t_2 > ... > t_l > 1`, `l >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RastaSpec(Vec<usize>);

impl RastaSpec {
    pub fn new(terms: Vec<usize>) -> Result<Self, FamilyError> {
        let decreasing = terms.windows(2).all(|w| w[0] > w[1]);
        if terms.len() < 2 || !decreasing || terms.last().is_some_and(|&t| t <= 1) {
            return Err(FamilyError::InvalidRasta(terms));
        }
        Ok(RastaSpec(terms))
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Column vertex sets, labeled column by column.
pub fn rasta_columns(spec: &RastaSpec) -> Vec<VertexSet> {
    let mut start = 0;
    spec.0
        .iter()
        .map(|&t| {
            let col = VertexSet::full(start + t).difference(VertexSet::full(start));
            start += t;
            col
        })
        .collect()
}

/// The digraph `G^(l)`: arcs from every vertex of column `i` to every vertex
/// of column `i + 1`.
pub fn rasta_digraph(spec: &RastaSpec) -> Result<Digraph, FamilyError> {
    let cols = rasta_columns(spec);
    let arcs = cols
        .windows(2)
        .flat_map(|w| {
            let (left, right) = (w[0], w[1]);
            left.iter()
                .flat_map(move |u| right.iter().map(move |v| (u.get(), v.get())))
        })
        .collect::<Vec<_>>();
    Ok(Digraph::new(spec.order(), arcs)?)
}

/// The Rasta graph: complete bipartite joins between consecutive columns.
pub fn rasta(spec: &RastaSpec) -> Result<Graph, FamilyError> {
    Ok(rasta_digraph(spec)?.underlying())
}

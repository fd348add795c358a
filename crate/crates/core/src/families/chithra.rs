use super::FamilyError;
use crate::graph::{Graph, VertexSet};

/// A base graph plus the attachment sets `W_1, ..., W_k` of the new vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChithraSpec {
    base: Graph,
    subsets: Vec<VertexSet>,
    covering: bool,
}

impl ChithraSpec {
    /// Requires every `W_i` nonempty and `⋃ W_i = V(base)`.
    pub fn new(base: Graph, subsets: Vec<VertexSet>) -> Result<Self, FamilyError> {
        let spec = ChithraSpec::partial(base, subsets)?;
        let covered = spec
            .subsets
            .iter()
            .fold(VertexSet::EMPTY, |a, &w| a.union(w));
        let missing = spec.base.vertex_set().difference(covered);
        if !missing.is_empty() {
            return Err(FamilyError::NotCovering(missing));
        }
        Ok(ChithraSpec {
            covering: true,
            ..spec
        })
    }

    /// Like [`ChithraSpec::new`] without the covering requirement, as in
    /// pendant attachments to only part of the base (helm from wheel).
    pub fn partial(base: Graph, subsets: Vec<VertexSet>) -> Result<Self, FamilyError> {
        for (i, &w) in subsets.iter().enumerate() {
            if w.is_empty() {
                return Err(FamilyError::EmptySubset(i + 1));
            }
            if !w.is_subset(base.vertex_set()) {
                return Err(FamilyError::SubsetOutOfRange {
                    index: i + 1,
                    subset: w,
                });
            }
        }
        let covered = subsets.iter().fold(VertexSet::EMPTY, |a, &w| a.union(w));
        let covering = covered == base.vertex_set();
        Ok(ChithraSpec {
            base,
            subsets,
            covering,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn subsets(&self) -> &[VertexSet] {
        &self.subsets
    }

    /// Whether the subsets cover the whole base.
    pub fn is_covering(&self) -> bool {
        self.covering
    }
}

/// Adds vertices `u_1..u_k` (labels `n+1..n+k`), `u_i` joined to exactly `W_i`.
pub fn chithra(spec: &ChithraSpec) -> Result<Graph, FamilyError> {
    let n = spec.base.order();
    let extra = spec
        .subsets
        .iter()
        .enumerate()
        .flat_map(|(i, w)| w.iter().map(move |v| (v.get(), n + 1 + i)));
    Ok(Graph::new(
        n + spec.subsets.len(),
        spec.base.edges().into_iter().chain(extra),
    )?)
}

/// A successful decomposition `G ∈ C(G - U)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChithraDecomposition {
    pub spec: ChithraSpec,
    /// `relabel[v - 1]` is the label of `G`'s vertex `v` inside `chithra(spec)`.
    pub relabel: Vec<usize>,
}

/// Splits `g` into `g - U` plus attachment sets `W_i = N(u_i)`. Succeeds iff
/// `U` is a nonempty independent set, `g - U` is nonempty, every vertex of
/// `g - U` has a neighbour in `U` and every `u_i` has a neighbour.
pub fn chithra_decomposition(g: &Graph, u: VertexSet) -> Option<ChithraDecomposition> {
    let all = g.vertex_set();
    if u.is_empty() || !u.is_subset(all) || !g.is_independent(u) {
        return None;
    }
    let rest = all.difference(u);
    if rest.is_empty() {
        return None;
    }
    let dominated = u
        .iter()
        .fold(VertexSet::EMPTY, |a, x| a.union(g.neighbors(x)));
    if !rest.is_subset(dominated) {
        return None;
    }
    let base = g.induced(rest).ok()?;
    let base_label = |v: crate::graph::VertexId| rest.iter().position(|r| r == v).map(|p| p + 1);
    let subsets = u
        .iter()
        .map(|x| {
            g.neighbors(x)
                .iter()
                .filter_map(|v| base_label(v).map(crate::graph::VertexId::new))
                .collect::<VertexSet>()
        })
        .collect::<Vec<_>>();
    let spec = ChithraSpec::new(base, subsets).ok()?;
    let mut relabel = vec![0; g.order()];
    for (i, v) in rest.iter().chain(u.iter()).enumerate() {
        relabel[v.get() - 1] = i + 1;
    }
    Some(ChithraDecomposition { spec, relabel })
}

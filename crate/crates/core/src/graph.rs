//! Immutable simple graphs and digraphs on 1-based vertex labels.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which caps every graph
//! at [`MAX_VERTICES`] vertices. That is far beyond what exact b-coloring
//! search can handle anyway.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices requested; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
}

/// A 1-based vertex label, `v_1 ..= v_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics if `index` is zero.
    pub fn new(index: usize) -> Self {
        assert!(index >= 1, "vertex labels are 1-based");
        VertexId(index)
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub(crate) fn from_bit(bit: usize) -> Self {
        VertexId(bit + 1)
    }

    pub(crate) fn bit(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A set of vertices backed by a single machine word.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{v_1, ..., v_n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VertexId) -> bool {
        v.bit() < 64 && self.0 >> v.bit() & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1 << v.bit();
    }

    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1 << v.bit());
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| VertexId::from_bit(self.0.trailing_zeros() as usize))
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        Bits(self.0).map(VertexId::from_bit)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().map(VertexId::get).collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.get())?;
        }
        write!(f, "}}")
    }
}

/// Iterator over set bit positions of a word, ascending.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit)
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    Ok(())
}

fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v == 0 || v > n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// A simple undirected graph on vertices `v_1 ..= v_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from 1-based vertex pairs. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph `N_n`.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, [])
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId::new)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.get() <= self.n
    }

    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet(self.adj[v.bit()])
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.bit()] >> v.bit() & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.bit()].count_ones() as usize
    }

    /// Degrees in vertex order; the maximum entry is Δ(G).
    pub fn degree_profile(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degree_profile().into_iter().max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_bits(u + 1)) {
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let full = low_bits(self.n);
        (0..self.n).all(|v| self.adj[v] | (1 << v) == full)
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v.bit()] & set.0 == 0)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff removing the edge `{u, v}` increases the number of components.
    pub fn is_bridge(&self, u: VertexId, v: VertexId) -> bool {
        if !self.adjacent(u, v) {
            return false;
        }
        let before = self.components().len();
        let mut adj = self.adj.clone();
        adj[u.bit()] &= !(1 << v.bit());
        adj[v.bit()] &= !(1 << u.bit());
        Graph::from_adjacency(adj).components().len() > before
    }

    /// True iff the graph is the path `P_n` under some labeling.
    pub fn is_path(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let degrees = self.degree_profile();
        self.is_connected()
            && self.size() == self.n - 1
            && degrees.iter().all(|&d| d <= 2)
            && degrees.iter().filter(|&&d| d == 1).count() == 2
    }

    /// Subgraph induced by `set`, relabeled `1..=|set|` in ascending order of
    /// the original labels.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        if let Some(v) = set.iter().find(|v| v.get() > self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v.get(),
                n: self.n,
            });
        }
        let members: Vec<usize> = Bits(set.0).collect();
        let adj = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adj[v] >> u & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels vertex `v` as `perm[v - 1]` (both 1-based). `perm` must be a
    /// permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            let (a, b) = (perm[u - 1] - 1, perm[v - 1] - 1);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union with `other`, whose labels are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << shift));
        Ok(Graph::from_adjacency(adj))
    }

    /// Returns a copy with the extra edges added.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::new(self.n, self.edges().into_iter().chain(edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A simple directed graph on vertices `v_1 ..= v_n`. Parallel arcs collapse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Digraph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n)?;
        for (tail, head) in arcs {
            d.add_arc(tail, head)?;
        }
        Ok(d)
    }

    pub(crate) fn empty(n: usize) -> Result<Digraph, GraphError> {
        check_order(n)?;
        Ok(Digraph { n, out: vec![0; n] })
    }

    pub(crate) fn add_arc(&mut self, tail: usize, head: usize) -> Result<(), GraphError> {
        check_vertex(tail, self.n)?;
        check_vertex(head, self.n)?;
        if tail == head {
            return Err(GraphError::SelfLoop(tail));
        }
        self.out[tail - 1] |= 1 << (head - 1);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|a| a.count_ones() as usize).sum()
    }

    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        self.out[tail.bit()] >> head.bit() & 1 == 1
    }

    pub fn out_neighbors(&self, v: VertexId) -> VertexSet {
        VertexSet(self.out[v.bit()])
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.out.iter().filter(|&&a| a >> v.bit() & 1 == 1).count()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v.bit()].count_ones() as usize
    }

    /// Arcs `(tail, head)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for (t, &heads) in self.out.iter().enumerate() {
            out.extend(Bits(heads).map(|h| (t + 1, h + 1)));
        }
        out
    }

    /// The underlying simple graph: `{u, v}` is an edge iff `(u, v)` or
    /// `(v, u)` is an arc.
    pub fn underlying(&self) -> Graph {
        let mut adj = self.out.clone();
        for (t, &heads) in self.out.iter().enumerate() {
            for h in Bits(heads) {
                adj[h] |= 1 << t;
            }
        }
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

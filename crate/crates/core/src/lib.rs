//! b-chromatic numbers of small graphs, the graph families they are studied
//! on, and a harness that checks closed-form claims against exact values.

pub mod bcolor;
pub mod edgelist;
pub mod families;
pub mod graph;
pub mod verify;

pub use bcolor::{
    b_spectrum, feasible_k, is_b_coloring, is_proper, m_bound, phi, phi_oracle, Coloring,
    Feasibility, PhiResult, Reading, SolveError, SolverConfig,
};
pub use graph::{Digraph, Graph, GraphError, VertexId, VertexSet, MAX_VERTICES};

//! b-coloring checks, bounds, the exact solver and the brute-force oracle.

mod bounds;
mod coloring;
mod oracle;
mod pairwise;
mod search;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

pub use bounds::{chromatic_number, m_bound};
pub use coloring::{
    b_vertices, first_conflict, is_b_coloring, is_pairwise_b_coloring, is_proper, Coloring,
    ColoringError, Reading,
};
pub use oracle::{
    oracle_spectrum, phi_oracle, phi_oracle_with, OracleTooLarge, ORACLE_MAX_VERTICES,
};

/// Default search-node budget per `feasible_k` call.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Search nodes allowed per `feasible_k` call before giving up.
    pub node_budget: u64,
    /// Split the top level of the search across the rayon pool. The returned
    /// φ never depends on this; the witness may.
    pub parallel: bool,
    pub reading: Reading,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            parallel: false,
            reading: Reading::Representative,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SolverConfig {
            node_budget,
            ..Self::default()
        }
    }
}

/// Outcome of a single `k` search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Coloring),
    Infeasible,
    /// The node budget ran out before the question was settled.
    Timeout,
}

impl Feasibility {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Feasibility::Feasible(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget exhausted; phi is undecided in {lower}..={upper}")]
    Timeout { lower: usize, upper: usize },
}

/// φ(G) together with a witness coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiResult {
    pub phi: usize,
    #[serde(flatten)]
    pub witness: Coloring,
    /// Lowest-indexed b-vertex of each class.
    pub b_vertices: BTreeMap<usize, VertexId>,
    #[serde(skip)]
    pub nodes: u64,
}

/// k-values for which a k-b-coloring exists, plus those left undecided.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Spectrum {
    pub feasible: BTreeSet<usize>,
    pub undecided: BTreeSet<usize>,
}

fn feasible_k_counted(g: &Graph, k: usize, cfg: &SolverConfig) -> (Feasibility, u64) {
    match cfg.reading {
        Reading::Representative => search::search(g, k, cfg.node_budget, cfg.parallel),
        Reading::Pairwise => pairwise::search(g, k, cfg.node_budget),
    }
}

/// Searches for a k-coloring accepted under `cfg.reading`. Complete: an
/// `Infeasible` answer means no such coloring exists.
pub fn feasible_k(g: &Graph, k: usize, cfg: &SolverConfig) -> Feasibility {
    feasible_k_counted(g, k, cfg).0
}

/// Largest `k` worth trying under the configured reading.
pub fn upper_bound(g: &Graph, reading: Reading) -> usize {
    match reading {
        Reading::Representative => m_bound(g),
        Reading::Pairwise => {
            let m = g.size();
            (1..=g.order())
                .take_while(|k| k * (k - 1) / 2 <= m)
                .last()
                .unwrap_or(1)
        }
    }
}

/// φ(G): tries `k` from the upper bound downwards and returns the first
/// feasible one.
pub fn phi(g: &Graph, cfg: &SolverConfig) -> Result<PhiResult, SolveError> {
    let mut undecided_top = None;
    let mut nodes = 0;
    for k in (1..=upper_bound(g, cfg.reading)).rev() {
        let (outcome, used) = feasible_k_counted(g, k, cfg);
        nodes += used;
        match outcome {
            Feasibility::Feasible(witness) => {
                if let Some(upper) = undecided_top {
                    return Err(SolveError::Timeout { lower: k, upper });
                }
                let b_vertices = b_vertices(g, &witness)
                    .expect("witness is proper and surjective")
                    .into_iter()
                    .filter_map(|(c, set)| set.first().map(|v| (c, v)))
                    .collect();
                return Ok(PhiResult {
                    phi: k,
                    witness,
                    b_vertices,
                    nodes,
                });
            }
            Feasibility::Infeasible => {}
            Feasibility::Timeout => {
                undecided_top.get_or_insert(k);
            }
        }
    }
    // any χ(G)-coloring is accepted, so only timeouts get here
    Err(SolveError::Timeout {
        lower: 1,
        upper: undecided_top.unwrap_or(1),
    })
}

/// Every `k` in `1..=upper_bound` with a feasible k-coloring.
pub fn b_spectrum(g: &Graph, cfg: &SolverConfig) -> Spectrum {
    let mut out = Spectrum::default();
    for k in 1..=upper_bound(g, cfg.reading) {
        match feasible_k(g, k, cfg) {
            Feasibility::Feasible(_) => {
                out.feasible.insert(k);
            }
            Feasibility::Infeasible => {}
            Feasibility::Timeout => {
                out.undecided.insert(k);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::test_graphs::*;
    use crate::families::{classic, jaco, JacoParams};

    fn phi_of(g: &Graph) -> usize {
        phi(g, &SolverConfig::default()).unwrap().phi
    }

    #[test]
    fn golden_phi_values() {
        assert_eq!(phi_of(&complete(5)), 5);
        assert_eq!(phi_of(&path(3)), 2);
        assert_eq!(phi_of(&path(4)), 2);
        assert_eq!(phi_of(&path(5)), 3);
        assert_eq!(phi_of(&cycle(4)), 2);
        assert_eq!(phi_of(&cycle(5)), 3);
        assert_eq!(phi_of(&bipartite(3, 3)), 2);
        assert_eq!(phi_of(&edgeless(4)), 1);
        assert_eq!(phi_of(&complete(1)), 1);
    }

    #[test]
    fn jaco_five() {
        let g = jaco(&JacoParams::new(5, 1, 0).unwrap())
            .unwrap()
            .underlying();
        assert_eq!(phi_of(&g), 3);
        assert_eq!(phi_oracle(&g), Ok(3));
    }

    #[test]
    fn feasible_k_examples() {
        let cfg = SolverConfig::default();
        let c = feasible_k(&cycle(4), 2, &cfg);
        let c = c.coloring().unwrap();
        assert!(is_b_coloring(&cycle(4), c).unwrap());
        assert_eq!(c.colors(), &[1, 2, 1, 2]);
        assert_eq!(feasible_k(&cycle(4), 3, &cfg), Feasibility::Infeasible);
        assert_eq!(feasible_k(&path(4), 3, &cfg), Feasibility::Infeasible);
        assert_eq!(feasible_k(&path(4), 9, &cfg), Feasibility::Infeasible);
    }

    #[test]
    fn witness_and_b_vertices_are_valid() {
        for g in [
            cycle(7),
            classic("helm", &[6]).unwrap(),
            bipartite(3, 4),
            classic("sun", &[4]).unwrap(),
        ] {
            let r = phi(&g, &SolverConfig::default()).unwrap();
            assert!(is_b_coloring(&g, &r.witness).unwrap());
            assert_eq!(r.b_vertices.len(), r.phi);
            for v in r.b_vertices.values() {
                assert!(g.degree(*v) + 1 >= r.phi);
            }
        }
    }

    #[test]
    fn spectra() {
        let cfg = SolverConfig::default();
        let s = |g: &Graph| b_spectrum(g, &cfg).feasible.into_iter().collect::<Vec<_>>();
        assert_eq!(s(&path(5)), vec![2, 3]);
        assert_eq!(s(&complete(4)), vec![4]);
        assert_eq!(s(&cycle(4)), vec![2]);
    }

    #[test]
    fn tiny_budget_times_out() {
        let g = classic("helm", &[7]).unwrap();
        let cfg = SolverConfig::with_budget(3);
        assert_eq!(feasible_k(&g, 5, &cfg), Feasibility::Timeout);
        assert!(matches!(phi(&g, &cfg), Err(SolveError::Timeout { .. })));
        assert!(!b_spectrum(&g, &cfg).undecided.is_empty());
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let par = SolverConfig {
            parallel: true,
            ..SolverConfig::default()
        };
        for g in [
            cycle(9),
            classic("helm", &[5]).unwrap(),
            crate::families::set_graph(3).unwrap(),
        ] {
            assert_eq!(phi(&g, &par).unwrap().phi, phi_of(&g));
        }
    }

    #[test]
    fn pairwise_reading() {
        let cfg = SolverConfig {
            reading: Reading::Pairwise,
            ..SolverConfig::default()
        };
        // P_4 admits 1,2,3,1 under the pairwise reading
        let r = phi(&path(4), &cfg).unwrap();
        assert_eq!(r.phi, 3);
        assert!(is_pairwise_b_coloring(&path(4), &r.witness).unwrap());
        assert_eq!(phi_oracle_with(&path(4), Reading::Pairwise), Ok(3));
        assert_eq!(phi(&complete(4), &cfg).unwrap().phi, 4);
        assert_eq!(phi(&edgeless(3), &cfg).unwrap().phi, 1);
    }

    #[test]
    fn phi_result_json() {
        let r = phi(&path(3), &SolverConfig::default()).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"phi":2,"k":2,"colors":[1,2,1],"b_vertices":{"1":1,"2":2}}"#
        );
    }
}

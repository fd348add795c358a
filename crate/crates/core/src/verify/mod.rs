//! Executable versions of the b-chromatic claims, evaluated over parameter
//! grids against the exact solver and the brute-force oracle.

mod claims;
mod cliques;
mod eval;
mod report;
mod suite;

use thiserror::Error;

use crate::families::FamilyError;

pub use claims::{parse_claims, BaseGraph, ClaimId, ClaimResult, Params, Status};
pub use cliques::{
    count_max_cliques, maximal_cliques, maximal_independent_sets, CliqueCapExceeded,
    MAX_CLIQUE_VERTICES,
};
pub use eval::{evaluate_claim, EvalConfig, Evaluator};
pub use report::{
    emit_report, Format, Report, Summary, EXIT_INTERNAL, EXIT_OK, EXIT_REFUTED, EXIT_TIMEOUT,
};
pub use suite::{
    chithra_bases, decomposition_corpus, default_grid, edge_joint_operands, edge_set_graphs,
    random_graphs, run_suite, suite_instances, SuiteConfig, DEFAULT_PROP12_MAX_N,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("{claim}: parameters {params} do not belong to this claim")]
    ParamsMismatch { claim: ClaimId, params: String },
    #[error("{claim} {params}: {reason}")]
    OutOfGrid {
        claim: ClaimId,
        params: String,
        reason: String,
    },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("internal error: {claim} {params}: solver gives phi {solver}, oracle gives {oracle}")]
    Disagreement {
        claim: ClaimId,
        params: String,
        solver: usize,
        oracle: usize,
    },
    #[error(
        "internal error: {claim} {params}: solver gives phi {solver} above the m-bound {m_bound}"
    )]
    BoundViolated {
        claim: ClaimId,
        params: String,
        solver: usize,
        m_bound: usize,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

impl VerifyError {
    /// Whether this is a correctness bug rather than a bad request.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            VerifyError::Disagreement { .. } | VerifyError::BoundViolated { .. }
        )
    }
}

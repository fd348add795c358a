use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::claims::{BaseGraph, ClaimId, Params};
use super::cliques::maximal_independent_sets;
use super::eval::{EvalConfig, Evaluator};
use super::report::Report;
use super::VerifyError;
use crate::families::{nonempty_subsets, Classic};
use crate::graph::Graph;

/// Largest `n` in the default grids of the PROP12 claims.
pub const DEFAULT_PROP12_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: String,
    pub claims: Vec<ClaimId>,
    /// Caps every `n` parameter; also extends the PROP12 grids up to it.
    pub max_n: Option<usize>,
    /// Keeps only instances whose `n` parameter equals this value.
    pub n: Option<usize>,
    pub eval: EvalConfig,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    /// Zero every timing so reports are byte-identical across runs.
    pub deterministic: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "default".to_string(),
            claims: ClaimId::ALL.to_vec(),
            max_n: None,
            n: None,
            eval: EvalConfig::default(),
            workers: 0,
            deterministic: false,
        }
    }
}

fn classic(c: Classic) -> BaseGraph {
    BaseGraph::Classic(c)
}

/// Bases of the CHITHRA grid.
pub fn chithra_bases() -> Vec<BaseGraph> {
    vec![
        classic(Classic::Complete(3)),
        classic(Classic::Cycle(4)),
        classic(Classic::Cycle(5)),
        classic(Classic::Path(4)),
    ]
}

/// Operands of the EDGEJOINT grid.
pub fn edge_joint_operands() -> Vec<BaseGraph> {
    vec![
        classic(Classic::Complete(3)),
        classic(Classic::Cycle(4)),
        classic(Classic::Cycle(5)),
        classic(Classic::Path(4)),
        classic(Classic::Complete(4)),
    ]
}

/// Graphs of the edge-set grids: stars with up to four edges, then the
/// connected non-stars with three or four edges.
pub fn edge_set_graphs() -> Vec<BaseGraph> {
    let mut out: Vec<BaseGraph> = (1..=4)
        .map(|e| classic(Classic::CompleteBipartite(1, e)))
        .collect();
    out.extend([
        classic(Classic::Path(4)),
        classic(Classic::Complete(3)),
        classic(Classic::Path(5)),
        classic(Classic::Cycle(4)),
        BaseGraph::Paw,
        BaseGraph::Chair,
    ]);
    out
}

/// Connected graphs on at most nine vertices whose maximal independent sets
/// feed CHITHRA-DECOMP.
pub fn decomposition_corpus() -> Vec<BaseGraph> {
    let mut out = Vec::new();
    out.extend((2..=7).map(|n| classic(Classic::Path(n))));
    out.extend((3..=8).map(|n| classic(Classic::Cycle(n))));
    out.extend((2..=5).map(|n| classic(Classic::Complete(n))));
    out.extend(
        [(1, 3), (2, 2), (2, 3), (3, 3)].map(|(m, n)| classic(Classic::CompleteBipartite(m, n))),
    );
    out.extend((3..=6).map(|n| classic(Classic::Wheel(n))));
    out.extend(
        (3..=4).flat_map(|n| [Classic::Sunlet(n), Classic::Sun(n), Classic::Helm(n)].map(classic)),
    );
    out.extend([BaseGraph::Paw, BaseGraph::Chair]);
    out
}

fn singletons_and_pairs(items: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = items.iter().map(|w| vec![w.clone()]).collect();
    for (i, a) in items.iter().enumerate() {
        for b in &items[i..] {
            out.push(vec![a.clone(), b.clone()]);
        }
    }
    out
}

fn bits_to_vertices(bits: u64) -> Vec<usize> {
    (0..64)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// The default parameter grid of a claim, before `n` filters.
pub fn default_grid(claim: ClaimId, prop12_max: usize) -> Result<Vec<Params>, VerifyError> {
    use ClaimId as C;
    let order =
        |r: std::ops::RangeInclusive<usize>| r.map(|n| Params::Order { n }).collect::<Vec<_>>();
    let jaco = || {
        [(1, 0), (1, 1), (2, 0)]
            .into_iter()
            .flat_map(|(m, c)| (2..=12).map(move |n| Params::Jaco { m, c, n }))
            .collect::<Vec<_>>()
    };
    let grid = match claim {
        C::Prop12Complete => order(1..=prop12_max),
        C::Prop12Path => order(2..=prop12_max),
        C::Prop12Cycle => order(3..=prop12_max),
        C::Prop12Bipartite => (1..=prop12_max)
            .flat_map(|n| {
                (1..=n)
                    .filter(move |m| m + n <= prop12_max)
                    .map(move |m| Params::Bipartite { m, n })
            })
            .collect(),
        C::Jaco | C::JacoHopeComplete => jaco(),
        C::Ornated => {
            let mut strings = Vec::new();
            for l in 1..=3u32 {
                for code in 0..4usize.pow(l) {
                    strings.push(
                        (0..l)
                            .map(|i| code / 4usize.pow(l - 1 - i) % 4)
                            .collect::<Vec<_>>(),
                    );
                }
            }
            strings
                .into_iter()
                .flat_map(|s| (1..=12).map(move |n| Params::Ornated { s: s.clone(), n }))
                .collect()
        }
        C::Rasta => [
            vec![3, 2],
            vec![4, 2],
            vec![4, 3, 2],
            vec![5, 3, 2],
            vec![5, 4, 3, 2],
        ]
        .into_iter()
        .map(|terms| Params::Rasta { terms })
        .collect(),
        C::Chithra => chithra_bases()
            .into_iter()
            .flat_map(|base| {
                let n = base.build().map(|g| g.order()).unwrap_or(0);
                let subsets: Vec<Vec<usize>> = nonempty_subsets(n)
                    .into_iter()
                    .map(bits_to_vertices)
                    .collect();
                singletons_and_pairs(&subsets)
                    .into_iter()
                    .map(move |subsets| Params::Chithra { base, subsets })
            })
            .collect(),
        C::P3FromK1 => {
            vec![Params::Chithra {
                base: classic(Classic::Complete(1)),
                subsets: vec![vec![1], vec![1]],
            }]
        }
        C::Sunlet | C::Helm => order(3..=8),
        C::Wheel => order(3..=11),
        C::Sun => order(2..=6),
        C::SetGraph => order(2..=4),
        C::SetGraphCliques => order(2..=5),
        C::EdgeSetStar | C::EdgeSetBound => edge_set_graphs()
            .into_iter()
            .map(|graph| Params::Graph { graph })
            .collect(),
        C::EdgeJoint => {
            let ops = edge_joint_operands();
            let mut out = Vec::new();
            for (i, &g) in ops.iter().enumerate() {
                for &h in &ops[i..] {
                    let (ng, nh) = (g.build()?.order(), h.build()?.order());
                    for v in 1..=ng {
                        for u in 1..=nh {
                            out.push(Params::EdgeJoint { g, v, h, u });
                        }
                    }
                }
            }
            out
        }
        C::ChithraDecomp => {
            let mut out = Vec::new();
            for graph in decomposition_corpus() {
                for u in maximal_independent_sets(&graph.build()?) {
                    out.push(Params::Decomposition {
                        graph,
                        u: u.to_vec(),
                    });
                }
            }
            out
        }
    };
    Ok(grid)
}

/// Every instance the configuration selects, sorted by claim then params.
pub fn suite_instances(cfg: &SuiteConfig) -> Result<Vec<(ClaimId, Params)>, VerifyError> {
    let prop12_max = cfg.max_n.unwrap_or(DEFAULT_PROP12_MAX_N);
    let mut out = Vec::new();
    for &claim in &cfg.claims {
        for p in default_grid(claim, prop12_max)? {
            let keep = match p.n() {
                Some(n) => cfg.max_n.is_none_or(|m| n <= m) && cfg.n.is_none_or(|want| n == want),
                None => cfg.n.is_none(),
            };
            if keep {
                out.push((claim, p));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Evaluates every selected instance and assembles the report.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, VerifyError> {
    let instances = suite_instances(cfg)?;
    let evaluator = Evaluator::new(cfg.eval);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    let mut results = pool.install(|| {
        instances
            .par_iter()
            .map(|(claim, params)| evaluator.evaluate(*claim, params))
            .collect::<Result<Vec<_>, _>>()
    })?;
    if cfg.deterministic {
        for r in &mut results {
            r.seconds = 0.0;
        }
    }
    Ok(Report::new(&cfg.suite, results))
}

/// Uniform random graphs `G(n, p)` for `n` in 4..=8 and `p` in
/// {0.2, 0.5, 0.8}, `per_cell` graphs for each pair, from a fixed seed.
pub fn random_graphs(seed: u64, per_cell: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 4..=8 {
        for p in [0.2, 0.5, 0.8] {
            for _ in 0..per_cell {
                let edges: Vec<(usize, usize)> = (1..=n)
                    .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                out.push(Graph::new(n, edges).expect("valid random graph"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        let size = |c| default_grid(c, 12).unwrap().len();
        assert_eq!(size(ClaimId::Prop12Complete), 12);
        assert_eq!(size(ClaimId::Rasta), 5);
        assert_eq!(size(ClaimId::Jaco), 33);
        assert_eq!(size(ClaimId::Ornated), 84 * 12);
        // 7 + 15 + 31 + 15 subsets, each as a singleton list or in an unordered pair
        assert_eq!(
            size(ClaimId::Chithra),
            [7usize, 15, 31, 15]
                .iter()
                .map(|s| s + s * (s + 1) / 2)
                .sum::<usize>()
        );
        assert_eq!(size(ClaimId::EdgeSetStar), 10);
    }

    #[test]
    fn filters() {
        let cfg = SuiteConfig {
            claims: vec![ClaimId::Prop12Complete],
            max_n: Some(8),
            ..SuiteConfig::default()
        };
        assert_eq!(suite_instances(&cfg).unwrap().len(), 8);
        let cfg = SuiteConfig {
            claims: vec![ClaimId::SetGraph, ClaimId::Rasta],
            n: Some(2),
            ..SuiteConfig::default()
        };
        assert_eq!(
            suite_instances(&cfg).unwrap(),
            vec![(ClaimId::SetGraph, Params::Order { n: 2 })]
        );
    }

    #[test]
    fn random_corpus_is_seeded() {
        let a = random_graphs(7, 14);
        assert_eq!(a.len(), 210);
        assert_eq!(a, random_graphs(7, 14));
        assert_ne!(a, random_graphs(8, 14));
    }
}

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use super::claims::{ClaimId, ClaimResult, Params, Status};
use super::cliques::{count_max_cliques, maximal_independent_sets};
use super::VerifyError;
use crate::bcolor::{
    m_bound, phi, phi_oracle_with, Coloring, SolveError, SolverConfig, ORACLE_MAX_VERTICES,
};
use crate::families::{
    chithra, chithra_decomposition, edge_joint, edge_set_graph, jaco, jaco_structure,
    maximal_reach, ornated, rasta, set_graph, ChithraSpec, Classic, EdgeSetAdjacency, JacoParams,
    OrnatedString, RastaSpec, MAX_EDGE_SET_EDGES,
};
use crate::graph::{Graph, VertexId, VertexSet};

/// Settings shared by every instance of a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EvalConfig {
    pub solver: SolverConfig,
    pub edge_set: EdgeSetAdjacency,
}

/// What the claim predicts before anything is solved.
enum Formula {
    Fixed(usize),
    /// φ of the given graph plus one.
    PhiPlusOne(Graph),
    /// The larger of two φ values.
    MaxPhi(Graph, Graph),
}

enum Check {
    /// φ(graph) equals the formula.
    Equals(Graph, Formula),
    /// φ(graph) is at most the formula.
    AtMost(Graph, usize),
    /// A directly computed value compared with the formula.
    Property { formula: usize, observed: usize },
    /// Nothing to compute; the hypotheses already fail.
    Skip { formula: usize },
}

struct Instance {
    check: Check,
    hypothesis: Result<(), String>,
    notes: Vec<String>,
}

impl Instance {
    fn new(check: Check) -> Self {
        Instance {
            check,
            hypothesis: Ok(()),
            notes: Vec::new(),
        }
    }

    fn require(mut self, holds: bool, reason: impl FnOnce() -> String) -> Self {
        if holds || self.hypothesis.is_err() {
            return self;
        }
        self.hypothesis = Err(reason());
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Debug, Clone)]
struct PhiOutcome {
    value: Result<usize, (usize, usize)>,
    m: usize,
    oracle: Option<usize>,
    witness: Option<Coloring>,
}

/// Internal inconsistencies that abort a run.
enum Mismatch {
    Oracle { solver: usize, oracle: usize },
    AboveBound { solver: usize, m_bound: usize },
}

/// Evaluates claim instances, caching φ per graph.
pub struct Evaluator {
    cfg: EvalConfig,
    cache: Mutex<HashMap<Graph, PhiOutcome>>,
}

fn out_of_grid(claim: ClaimId, params: &Params, reason: impl Into<String>) -> VerifyError {
    VerifyError::OutOfGrid {
        claim,
        params: params.to_string(),
        reason: reason.into(),
    }
}

fn vertex_set(
    claim: ClaimId,
    params: &Params,
    vs: &[usize],
    n: usize,
) -> Result<VertexSet, VerifyError> {
    if let Some(&v) = vs.iter().find(|&&v| v == 0 || v > n) {
        return Err(out_of_grid(
            claim,
            params,
            format!("vertex {v} outside 1..={n}"),
        ));
    }
    Ok(vs.iter().map(|&v| VertexId::new(v)).collect())
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() == n - 1 && g.vertices().any(|v| g.degree(v) == n - 1)
}

fn short_path(g: &Graph) -> bool {
    (2..=3).contains(&g.order()) && g.is_path()
}

fn pow2(e: usize) -> usize {
    1 << e
}

impl Evaluator {
    pub fn new(cfg: EvalConfig) -> Self {
        Evaluator {
            cfg,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &EvalConfig {
        &self.cfg
    }

    fn phi(&self, g: &Graph) -> Result<PhiOutcome, Mismatch> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(g) {
            return Ok(hit.clone());
        }
        let m = m_bound(g);
        let (value, witness) = match phi(g, &self.cfg.solver) {
            Ok(r) => (Ok(r.phi), Some(r.witness)),
            Err(SolveError::Timeout { lower, upper }) => (Err((lower, upper)), None),
        };
        let mut oracle = None;
        if let Ok(v) = value {
            if v > m {
                return Err(Mismatch::AboveBound {
                    solver: v,
                    m_bound: m,
                });
            }
            if g.order() <= ORACLE_MAX_VERTICES {
                let o =
                    phi_oracle_with(g, self.cfg.solver.reading).expect("order within oracle cap");
                if o != v {
                    return Err(Mismatch::Oracle {
                        solver: v,
                        oracle: o,
                    });
                }
                oracle = Some(o);
            }
        }
        let out = PhiOutcome {
            value,
            m,
            oracle,
            witness,
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(g.clone(), out.clone());
        Ok(out)
    }

    /// Builds the instance described by `params` without solving anything.
    fn instance(&self, claim: ClaimId, params: &Params) -> Result<Instance, VerifyError> {
        use ClaimId as C;
        let bad = |reason: &str| out_of_grid(claim, params, reason);
        let inst = match (claim, params) {
            (C::Prop12Complete, &Params::Order { n }) => {
                let g = Classic::Complete(n).build()?;
                Instance::new(Check::Equals(g, Formula::Fixed(n)))
            }
            (C::Prop12Path, &Params::Order { n }) => {
                if n < 2 {
                    return Err(bad("paths start at n = 2"));
                }
                let formula = if n <= 3 { 2 } else { 3 };
                Instance::new(Check::Equals(
                    Classic::Path(n).build()?,
                    Formula::Fixed(formula),
                ))
            }
            (C::Prop12Cycle, &Params::Order { n }) => {
                let formula = if n == 4 { 2 } else { 3 };
                Instance::new(Check::Equals(
                    Classic::Cycle(n).build()?,
                    Formula::Fixed(formula),
                ))
            }
            (C::Prop12Bipartite, &Params::Bipartite { m, n }) => Instance::new(Check::Equals(
                Classic::CompleteBipartite(m, n).build()?,
                Formula::Fixed(2),
            )),
            (C::Jaco | C::JacoHopeComplete, &Params::Jaco { m, c, n }) => {
                if n < 2 {
                    return Err(bad("Jaco claims need n >= 2"));
                }
                let d = jaco(&JacoParams::new(n, m, c)?)?;
                let s = jaco_structure(&d)?;
                let prime = s.prime.get();
                let hope_complete = s.hope.as_ref().map(Graph::is_complete);
                if claim == C::Jaco {
                    let inst =
                        Instance::new(Check::Equals(d.underlying(), Formula::Fixed(n - prime + 1)))
                            .note(format!("prime Jaconian vertex v{prime}"));
                    match hope_complete {
                        Some(false) => inst.note("Hope subgraph not complete"),
                        _ => inst,
                    }
                } else {
                    let observed = usize::from(hope_complete.unwrap_or(false));
                    Instance::new(Check::Property {
                        formula: 1,
                        observed,
                    })
                    .require(s.hope.is_some(), || {
                        format!("prime Jaconian vertex v{prime} is the last vertex")
                    })
                    .note(format!("prime Jaconian vertex v{prime}"))
                }
            }
            (C::Ornated, Params::Ornated { s, n }) => {
                let n = *n;
                if n < 1 {
                    return Err(bad("ornated graphs need n >= 1"));
                }
                let string = OrnatedString::new(s.clone())?;
                let a = string.max_entry();
                let formula = if n <= a + 1 { n } else { a + 2 };
                let g = ornated(n, &string)?.underlying();
                let reach_note = if maximal_reach(n, &string)? == g {
                    "equals its maximal reach subgraph"
                } else {
                    "differs from its maximal reach subgraph"
                };
                Instance::new(Check::Equals(g, Formula::Fixed(formula)))
                    .require(!string.is_zero(), || {
                        "all string entries are zero".to_string()
                    })
                    .note(format!("a_max {a}"))
                    .note(reach_note)
            }
            (C::Rasta, Params::Rasta { terms }) => match RastaSpec::new(terms.clone()) {
                Ok(spec) => Instance::new(Check::Equals(rasta(&spec)?, Formula::Fixed(2))),
                Err(e) => {
                    Instance::new(Check::Skip { formula: 2 }).require(false, || e.to_string())
                }
            },
            (C::Chithra | C::P3FromK1, Params::Chithra { base, subsets }) => {
                let b = base.build()?;
                let ws = subsets
                    .iter()
                    .map(|w| vertex_set(claim, params, w, b.order()))
                    .collect::<Result<Vec<_>, _>>()?;
                let spec = ChithraSpec::partial(b.clone(), ws)?;
                let g = chithra(&spec)?;
                let is_long_path = g.is_path() && g.order() >= 4;
                let mut inst = Instance::new(Check::Equals(g.clone(), Formula::PhiPlusOne(b)))
                    .require(!is_long_path, || {
                        format!("result is the path P_{}", g.order())
                    });
                if !spec.is_covering() {
                    inst = inst.note("subsets do not cover the base");
                }
                if claim == C::P3FromK1 && g.is_path() && g.order() == 3 {
                    inst = inst.note("result is P_3");
                }
                inst
            }
            (C::Sunlet, &Params::Order { n }) => {
                let base = Classic::Cycle(n).build()?;
                let ws = (1..=n)
                    .map(|i| VertexSet::from_iter([VertexId::new(i)]))
                    .collect();
                let g = chithra(&ChithraSpec::partial(base, ws)?)?;
                let same = g == Classic::Sunlet(n).build()?;
                Instance::new(Check::Equals(g, Formula::Fixed(4)))
                    .require(n >= 5, || "cycle base needs n >= 5".to_string())
                    .note(if same {
                        "chithra construction equals the sunlet"
                    } else {
                        "chithra construction differs from the sunlet"
                    })
            }
            (C::Wheel, &Params::Order { n }) => {
                let base = Classic::Cycle(n).build()?;
                let g = chithra(&ChithraSpec::new(base.clone(), vec![base.vertex_set()])?)?;
                // hub is v_{n+1} here and v_1 in the classic labeling
                let perm: Vec<usize> = (2..=n + 1).chain([1]).collect();
                let same = g.relabel(&perm) == Classic::Wheel(n).build()?;
                Instance::new(Check::Equals(g, Formula::Fixed(4)))
                    .require(n >= 5, || "cycle base needs n >= 5".to_string())
                    .note(if same {
                        "chithra construction is the wheel"
                    } else {
                        "chithra construction is not the wheel"
                    })
            }
            (C::Sun, &Params::Order { n }) => {
                let g = Classic::Sun(n).build()?;
                let outer = VertexSet::full(2 * n).difference(VertexSet::full(n));
                let inst = Instance::new(Check::Equals(g.clone(), Formula::Fixed(n + 1)));
                if g.is_independent(outer) {
                    inst
                } else {
                    inst.note("outer vertices are not independent, so not a chithra graph of K_n")
                }
            }
            (C::Helm, &Params::Order { n }) => {
                let base = Classic::Wheel(n).build()?;
                let ws = (2..=n + 1)
                    .map(|i| VertexSet::from_iter([VertexId::new(i)]))
                    .collect();
                let g = chithra(&ChithraSpec::partial(base, ws)?)?;
                let same = g == Classic::Helm(n).build()?;
                Instance::new(Check::Equals(g, Formula::Fixed(5)))
                    .require(n >= 5, || "wheel rim needs n >= 5".to_string())
                    .note(if same {
                        "chithra construction equals the helm"
                    } else {
                        "chithra construction differs from the helm"
                    })
            }
            (C::SetGraph, &Params::Order { n }) => {
                let g = set_graph(n)?;
                Instance::new(Check::Equals(
                    g,
                    Formula::Fixed(pow2(n.saturating_sub(1)) + 1),
                ))
                .require(n >= 2, || "set-graph claims need n >= 2".to_string())
            }
            (C::SetGraphCliques, &Params::Order { n }) => {
                let g = set_graph(n)?;
                let (size, count) = count_max_cliques(&g).map_err(|e| bad(&e.to_string()))?;
                let formula = pow2(n.saturating_sub(1));
                // reporting the size when it is off keeps solver != formula on any mismatch
                let observed = if size == formula { count } else { size };
                Instance::new(Check::Property { formula, observed })
                    .require(n >= 2, || "set-graph claims need n >= 2".to_string())
                    .note(format!("maximum clique size {size}, count {count}"))
            }
            (C::EdgeSetStar | C::EdgeSetBound, Params::Graph { graph }) => {
                let g = graph.build()?;
                if g.size() == 0 || g.size() > MAX_EDGE_SET_EDGES {
                    return Err(bad(&format!(
                        "edge-set graphs need 1..={MAX_EDGE_SET_EDGES} edges"
                    )));
                }
                let es = edge_set_graph(&g, self.cfg.edge_set)?;
                let star = is_star(&g);
                let kind = if star { "star" } else { "non-star" };
                if claim == C::EdgeSetStar {
                    let observed = usize::from(es.is_complete());
                    Instance::new(Check::Property {
                        formula: usize::from(star),
                        observed,
                    })
                    .note(kind)
                    .note(format!("edge-set graph on {} vertices", es.order()))
                } else {
                    let n = g.order();
                    let bound = if star { n } else { n - 1 };
                    let alt = if star { es.order() } else { es.order() - 1 };
                    Instance::new(Check::AtMost(es.clone(), bound))
                        .note(kind)
                        .note(format!("bound {bound} from |V(G)| = {n}; alternate bound {alt} from |V| of the edge-set graph"))
                }
            }
            (C::EdgeJoint, &Params::EdgeJoint { g, v, h, u }) => {
                let (gg, hh) = (g.build()?, h.build()?);
                vertex_set(claim, params, &[v], gg.order())?;
                vertex_set(claim, params, &[u], hh.order())?;
                let joint = edge_joint(&gg, VertexId::new(v), &hh, VertexId::new(u))?;
                let excluded = short_path(&gg) || short_path(&hh);
                Instance::new(Check::Equals(joint, Formula::MaxPhi(gg, hh)))
                    .require(!excluded, || "an operand is P_2 or P_3".to_string())
            }
            (C::ChithraDecomp, Params::Decomposition { graph, u }) => {
                let g = graph.build()?;
                let set = vertex_set(claim, params, u, g.order())?;
                if !g.is_independent(set) {
                    return Err(bad("U is not independent"));
                }
                let alpha = maximal_independent_sets(&g)
                    .iter()
                    .map(|s| s.len())
                    .max()
                    .unwrap_or(0);
                let observed = chithra_decomposition(&g, set).is_some_and(|d| {
                    chithra(&d.spec).is_ok_and(|rebuilt| g.relabel(&d.relabel) == rebuilt)
                });
                Instance::new(Check::Property {
                    formula: 1,
                    observed: usize::from(observed),
                })
                .require(set.len() == alpha, || {
                    format!(
                        "|U| = {} is below the independence number {alpha}",
                        set.len()
                    )
                })
                .require(g.is_connected(), || "graph is disconnected".to_string())
            }
            _ => {
                return Err(VerifyError::ParamsMismatch {
                    claim,
                    params: params.to_string(),
                })
            }
        };
        Ok(inst)
    }

    /// Every graph whose φ an evaluation of this instance would compute.
    pub fn instance_graphs(
        &self,
        claim: ClaimId,
        params: &Params,
    ) -> Result<Vec<Graph>, VerifyError> {
        Ok(match self.instance(claim, params)?.check {
            Check::Equals(g, Formula::Fixed(_)) | Check::AtMost(g, _) => vec![g],
            Check::Equals(g, Formula::PhiPlusOne(b)) => vec![g, b],
            Check::Equals(g, Formula::MaxPhi(a, b)) => vec![g, a, b],
            Check::Property { .. } | Check::Skip { .. } => vec![],
        })
    }

    pub fn evaluate(&self, claim: ClaimId, params: &Params) -> Result<ClaimResult, VerifyError> {
        let start = Instant::now();
        let Instance {
            check,
            hypothesis,
            mut notes,
        } = self.instance(claim, params)?;
        let phi_of = |g: &Graph| {
            self.phi(g).map_err(|m| match m {
                Mismatch::Oracle { solver, oracle } => VerifyError::Disagreement {
                    claim,
                    params: params.to_string(),
                    solver,
                    oracle,
                },
                Mismatch::AboveBound { solver, m_bound } => VerifyError::BoundViolated {
                    claim,
                    params: params.to_string(),
                    solver,
                    m_bound,
                },
            })
        };

        let mut witness = None;
        let mut oracle = None;
        let (formula, solver, status) = match check {
            Check::Skip { formula } => (formula, None, Status::Unsupported),
            Check::Property { formula, observed } => {
                let status = if formula == observed {
                    Status::Confirmed
                } else {
                    Status::Refuted
                };
                (formula, Some(observed), status)
            }
            Check::Equals(g, f) => {
                let out = phi_of(&g)?;
                let formula = match f {
                    Formula::Fixed(x) => Ok(x),
                    Formula::PhiPlusOne(b) => phi_of(&b)?.value.map(|p| p + 1),
                    Formula::MaxPhi(a, b) => match (phi_of(&a)?.value, phi_of(&b)?.value) {
                        (Ok(x), Ok(y)) => Ok(x.max(y)),
                        (Err(r), _) | (_, Err(r)) => Err(r),
                    },
                };
                witness = out.witness.clone();
                oracle = out.oracle;
                match formula {
                    Err((lo, hi)) => {
                        notes.push(format!("formula undecided: operand phi in {lo}..={hi}"));
                        (0, out.value.ok(), Status::Timeout)
                    }
                    Ok(formula) => {
                        if formula > out.m {
                            notes.push(format!("formula exceeds m-bound {}", out.m));
                        }
                        let status = match out.value {
                            Ok(v) if v == formula => Status::Confirmed,
                            Ok(_) => Status::Refuted,
                            Err((lo, hi)) => {
                                notes.push(format!("phi undecided in {lo}..={hi}"));
                                if (lo..=hi).contains(&formula) {
                                    Status::Timeout
                                } else {
                                    Status::Refuted
                                }
                            }
                        };
                        (formula, out.value.ok(), status)
                    }
                }
            }
            Check::AtMost(g, bound) => {
                let out = phi_of(&g)?;
                witness = out.witness.clone();
                oracle = out.oracle;
                let status = match out.value {
                    Ok(v) if v <= bound => Status::Confirmed,
                    Ok(_) => Status::Refuted,
                    Err((lo, hi)) => {
                        notes.push(format!("phi undecided in {lo}..={hi}"));
                        if hi <= bound {
                            Status::Confirmed
                        } else if lo > bound {
                            Status::Refuted
                        } else {
                            Status::Timeout
                        }
                    }
                };
                (bound, out.value.ok(), status)
            }
        };
        if oracle.is_some() {
            notes.push("oracle-confirmed".to_string());
        }
        let status = match hypothesis {
            Ok(()) => status,
            Err(reason) => {
                notes.insert(0, format!("hypothesis fails: {reason}"));
                Status::Unsupported
            }
        };
        Ok(ClaimResult {
            claim,
            params: params.clone(),
            formula,
            solver,
            status,
            seconds: start.elapsed().as_secs_f64(),
            notes: notes.join("; "),
            witness,
            oracle,
        })
    }
}

/// Evaluates a single instance with a fresh cache.
pub fn evaluate_claim(
    claim: ClaimId,
    params: &Params,
    cfg: &EvalConfig,
) -> Result<ClaimResult, VerifyError> {
    Evaluator::new(*cfg).evaluate(claim, params)
}

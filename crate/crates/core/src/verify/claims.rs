use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::VerifyError;
use crate::bcolor::Coloring;
use crate::families::{Classic, FamilyError};
use crate::graph::Graph;

macro_rules! claim_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// One identifier per checked statement.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: [ClaimId; 20] = [$(ClaimId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }
        }
    };
}

claim_ids! {
    Prop12Complete => "PROP12-COMPLETE",
    Prop12Path => "PROP12-PATH",
    Prop12Cycle => "PROP12-CYCLE",
    Prop12Bipartite => "PROP12-BIPARTITE",
    Jaco => "JACO",
    Ornated => "ORNATED",
    Rasta => "RASTA",
    Chithra => "CHITHRA",
    Sunlet => "SUNLET",
    Wheel => "WHEEL",
    Sun => "SUN",
    Helm => "HELM",
    P3FromK1 => "P3-FROM-K1",
    SetGraph => "SETGRAPH",
    SetGraphCliques => "SETGRAPH-CLIQUES",
    EdgeSetStar => "EDGESET-STAR",
    EdgeSetBound => "EDGESET-BOUND",
    EdgeJoint => "EDGEJOINT",
    ChithraDecomp => "CHITHRA-DECOMP",
    JacoHopeComplete => "JACO-HOPE-COMPLETE",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parses a comma-separated claim list; `all` selects every claim.
pub fn parse_claims(list: &str) -> Result<Vec<ClaimId>, VerifyError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            out.extend(ClaimId::ALL);
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Small named graphs used as bases and operands in the grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseGraph {
    Classic(Classic),
    /// Triangle `v_1 v_2 v_3` with a pendant `v_4` on `v_1`.
    Paw,
    /// Star `K_{1,3}` centred at `v_2` with the leaf `v_3` extended to `v_4`.
    Chair,
}

impl BaseGraph {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            BaseGraph::Classic(c) => c.build(),
            BaseGraph::Paw => Ok(Graph::new(4, [(1, 2), (2, 3), (1, 3), (1, 4)])?),
            BaseGraph::Chair => Ok(Graph::new(5, [(1, 2), (2, 3), (3, 4), (2, 5)])?),
        }
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseGraph::Classic(c) => c.fmt(f),
            BaseGraph::Paw => f.write_str("paw"),
            BaseGraph::Chair => f.write_str("chair"),
        }
    }
}

impl Serialize for BaseGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters of one claim instance. Serializes as a flat JSON object; the
/// derived order is the order results appear in a report.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Params {
    Order {
        n: usize,
    },
    Bipartite {
        m: usize,
        n: usize,
    },
    Jaco {
        m: usize,
        c: usize,
        n: usize,
    },
    Ornated {
        s: Vec<usize>,
        n: usize,
    },
    Rasta {
        terms: Vec<usize>,
    },
    Chithra {
        base: BaseGraph,
        subsets: Vec<Vec<usize>>,
    },
    Graph {
        graph: BaseGraph,
    },
    EdgeJoint {
        g: BaseGraph,
        v: usize,
        h: BaseGraph,
        u: usize,
    },
    Decomposition {
        graph: BaseGraph,
        u: Vec<usize>,
    },
}

impl Params {
    /// The `n` parameter, for claims that have one.
    pub fn n(&self) -> Option<usize> {
        match *self {
            Params::Order { n }
            | Params::Bipartite { n, .. }
            | Params::Jaco { n, .. }
            | Params::Ornated { n, .. } => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Confirmed,
    Refuted,
    Unsupported,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::Unsupported => "UNSUPPORTED",
            Status::Timeout => "TIMEOUT",
        })
    }
}

/// One evaluated instance.
///
/// For claims that assert a property rather than a value (star
/// completeness, Hope completeness, the decomposition round trip),
/// `formula` is the asserted truth value as 0/1 and `solver` the observed one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub params: Params,
    pub formula: usize,
    pub solver: Option<usize>,
    pub status: Status,
    pub seconds: f64,
    pub notes: String,
    #[serde(skip)]
    pub witness: Option<Coloring>,
    /// φ from the brute-force oracle when it was run on this instance.
    #[serde(skip)]
    pub oracle: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for id in ClaimId::ALL {
            assert_eq!(id.name().parse::<ClaimId>().unwrap(), id);
        }
        assert_eq!("setgraph".parse::<ClaimId>().unwrap(), ClaimId::SetGraph);
        assert!("NOPE".parse::<ClaimId>().is_err());
    }

    #[test]
    fn claim_lists() {
        assert_eq!(parse_claims("all").unwrap().len(), 20);
        assert_eq!(
            parse_claims("SETGRAPH,PROP12-PATH,SETGRAPH").unwrap(),
            vec![ClaimId::Prop12Path, ClaimId::SetGraph]
        );
        assert!(parse_claims("JACO,BOGUS").is_err());
    }

    #[test]
    fn params_json() {
        assert_eq!(
            Params::Jaco { m: 1, c: 0, n: 5 }.to_string(),
            r#"{"m":1,"c":0,"n":5}"#
        );
        let p = Params::Chithra {
            base: BaseGraph::Classic(Classic::Complete(3)),
            subsets: vec![vec![1]],
        };
        assert_eq!(p.to_string(), r#"{"base":"complete(3)","subsets":[[1]]}"#);
        assert_eq!(
            Params::Graph {
                graph: BaseGraph::Paw
            }
            .to_string(),
            r#"{"graph":"paw"}"#
        );
    }

    #[test]
    fn params_order_is_numeric() {
        assert!(Params::Order { n: 2 } < Params::Order { n: 10 });
        assert!(Params::Jaco { m: 1, c: 0, n: 12 } < Params::Jaco { m: 1, c: 1, n: 2 });
    }

    #[test]
    fn base_graphs() {
        let paw = BaseGraph::Paw.build().unwrap();
        assert_eq!((paw.order(), paw.size()), (4, 4));
        let chair = BaseGraph::Chair.build().unwrap();
        assert_eq!(chair.degree_profile(), vec![1, 3, 2, 1, 1]);
    }
}

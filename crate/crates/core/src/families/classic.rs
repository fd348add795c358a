use std::fmt;

use super::FamilyError;
use crate::graph::Graph;

/// Named classical families.
///
/// Labeling conventions:
/// - `Path(n)`, `Cycle(n)`: `v_1 - v_2 - ... - v_n` (closing `v_n v_1` for cycles).
/// - `CompleteBipartite(m, n)`: left side `v_1..v_m`, right side after it.
/// - `Wheel(n)`: hub `v_1`, rim cycle `v_2..v_{n+1}`; this is `W_{n+1}`.
/// - `Sunlet(n)`: cycle `v_1..v_n`, pendant `v_{n+i}` attached to `v_i`.
/// - `Sun(n)`: core clique `d_1..d_n`, then `d_{n+1}..d_{2n}` with edges
///   `d_i d_{i+n}`, `d_{i+n} d_{i+1+n}` for `i < n`, and `d_{2n} d_1`.
/// - `Helm(n)`: the wheel `W_{n+1}` labeled as above, pendant `v_{n+1+i}`
///   attached to rim vertex `v_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classic {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
    Wheel(usize),
    Sunlet(usize),
    Sun(usize),
    Helm(usize),
}

impl Classic {
    pub const NAMES: [&'static str; 9] = [
        "path",
        "cycle",
        "complete",
        "complete-bipartite",
        "edgeless",
        "wheel",
        "sunlet",
        "sun",
        "helm",
    ];

    pub fn from_name(name: &str, params: &[usize]) -> Result<Classic, FamilyError> {
        let kind = match name {
            "path" => Classic::Path,
            "cycle" => Classic::Cycle,
            "complete" => Classic::Complete,
            "edgeless" => Classic::Edgeless,
            "wheel" => Classic::Wheel,
            "sunlet" => Classic::Sunlet,
            "sun" => Classic::Sun,
            "helm" => Classic::Helm,
            "complete-bipartite" | "complete_bipartite" => {
                return match params {
                    &[m, n] => Ok(Classic::CompleteBipartite(m, n)),
                    _ => Err(FamilyError::Arity {
                        family: "complete-bipartite",
                        expected: 2,
                        got: params.len(),
                    }),
                };
            }
            _ => return Err(FamilyError::UnknownKind(name.to_string())),
        };
        match params {
            &[n] => Ok(kind(n)),
            _ => Err(FamilyError::Arity {
                family: kind(0).name(),
                expected: 1,
                got: params.len(),
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Classic::Path(_) => "path",
            Classic::Cycle(_) => "cycle",
            Classic::Complete(_) => "complete",
            Classic::CompleteBipartite(..) => "complete-bipartite",
            Classic::Edgeless(_) => "edgeless",
            Classic::Wheel(_) => "wheel",
            Classic::Sunlet(_) => "sunlet",
            Classic::Sun(_) => "sun",
            Classic::Helm(_) => "helm",
        }
    }

    fn check_min(&self) -> Result<(), FamilyError> {
        let (name, value, min) = match *self {
            Classic::Path(n) | Classic::Complete(n) | Classic::Edgeless(n) => ("n", n, 1),
            Classic::Cycle(n) | Classic::Wheel(n) | Classic::Sunlet(n) | Classic::Helm(n) => {
                ("n", n, 3)
            }
            Classic::Sun(n) => ("n", n, 2),
            Classic::CompleteBipartite(m, n) => {
                if m < 1 {
                    ("m", m, 1)
                } else {
                    ("n", n, 1)
                }
            }
        };
        if value < min {
            return Err(FamilyError::BelowMinimum {
                family: self.name(),
                name,
                value,
                min,
            });
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.check_min()?;
        let g = match *self {
            Classic::Path(n) => Graph::new(n, path_edges(n, 0))?,
            Classic::Cycle(n) => Graph::new(n, cycle_edges(n, 0))?,
            Classic::Complete(n) => Graph::new(n, clique_edges(n))?,
            Classic::Edgeless(n) => Graph::edgeless(n)?,
            Classic::CompleteBipartite(m, n) => Graph::new(
                m + n,
                (1..=m).flat_map(|u| (m + 1..=m + n).map(move |v| (u, v))),
            )?,
            Classic::Wheel(n) => Graph::new(n + 1, wheel_edges(n))?,
            Classic::Sunlet(n) => {
                Graph::new(2 * n, cycle_edges(n, 0).chain((1..=n).map(|i| (i, i + n))))?
            }
            Classic::Sun(n) => {
                let spokes = (1..=n).map(move |i| (i, i + n));
                let chain = (1..n).map(move |i| (i + n, i + 1 + n));
                Graph::new(
                    2 * n,
                    clique_edges(n)
                        .chain(spokes)
                        .chain(chain)
                        .chain([(2 * n, 1)]),
                )?
            }
            Classic::Helm(n) => {
                let pendants = (1..=n).map(move |i| (i + 1, n + 1 + i));
                Graph::new(2 * n + 1, wheel_edges(n).chain(pendants))?
            }
        };
        Ok(g)
    }
}

impl fmt::Display for Classic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classic::CompleteBipartite(m, n) => write!(f, "{}({m},{n})", self.name()),
            Classic::Path(n)
            | Classic::Cycle(n)
            | Classic::Complete(n)
            | Classic::Edgeless(n)
            | Classic::Wheel(n)
            | Classic::Sunlet(n)
            | Classic::Sun(n)
            | Classic::Helm(n) => write!(f, "{}({n})", self.name()),
        }
    }
}

/// Builds a classic family member by name, e.g. `classic("wheel", &[5])`.
pub fn classic(kind: &str, params: &[usize]) -> Result<Graph, FamilyError> {
    Classic::from_name(kind, params)?.build()
}

fn path_edges(n: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).map(move |i| (offset + i, offset + i + 1))
}

fn cycle_edges(n: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> {
    path_edges(n, offset).chain([(offset + n, offset + 1)])
}

fn clique_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

fn wheel_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=n + 1).map(|v| (1, v)).chain(cycle_edges(n, 1))
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::Classic;
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        Classic::Path(n).build().unwrap()
    }
    pub fn cycle(n: usize) -> Graph {
        Classic::Cycle(n).build().unwrap()
    }
    pub fn complete(n: usize) -> Graph {
        Classic::Complete(n).build().unwrap()
    }
    pub fn bipartite(m: usize, n: usize) -> Graph {
        Classic::CompleteBipartite(m, n).build().unwrap()
    }
    pub fn edgeless(n: usize) -> Graph {
        Classic::Edgeless(n).build().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_four() {
        let g = classic("complete", &[4]).unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
    }

    #[test]
    fn sun_three_has_nine_edges() {
        let g = classic("sun", &[3]).unwrap();
        assert_eq!((g.order(), g.size()), (6, 9));
    }

    #[test]
    fn helm_four_degrees() {
        let g = classic("helm", &[4]).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.degree_profile(), vec![4, 4, 4, 4, 4, 1, 1, 1, 1]);
    }

    #[test]
    fn wheel_and_sunlet_shapes() {
        let w = classic("wheel", &[4]).unwrap();
        assert_eq!(w.degree_profile(), vec![4, 3, 3, 3, 3]);
        let s = classic("sunlet", &[5]).unwrap();
        assert_eq!(s.degree_profile(), vec![3, 3, 3, 3, 3, 1, 1, 1, 1, 1]);
        assert_eq!(s.size(), 10);
    }

    #[test]
    fn bipartite_and_edgeless() {
        let g = classic("complete-bipartite", &[2, 3]).unwrap();
        assert_eq!(g.degree_profile(), vec![3, 3, 2, 2, 2]);
        assert_eq!(classic("edgeless", &[3]).unwrap().size(), 0);
    }

    #[test]
    fn rejects_bad_requests() {
        assert_eq!(
            classic("petersen", &[10]),
            Err(FamilyError::UnknownKind("petersen".into()))
        );
        assert!(matches!(
            classic("cycle", &[2]),
            Err(FamilyError::BelowMinimum { .. })
        ));
        assert!(matches!(
            classic("path", &[0]),
            Err(FamilyError::BelowMinimum { .. })
        ));
        assert!(matches!(
            classic("path", &[1, 2]),
            Err(FamilyError::Arity { .. })
        ));
        assert!(matches!(
            classic("complete-bipartite", &[0, 2]),
            Err(FamilyError::BelowMinimum { .. })
        ));
    }

    #[test]
    fn display_names() {
        assert_eq!(
            Classic::CompleteBipartite(2, 3).to_string(),
            "complete-bipartite(2,3)"
        );
        assert_eq!(Classic::Wheel(5).to_string(), "wheel(5)");
    }
}

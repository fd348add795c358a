use super::FamilyError;
use crate::graph::{Digraph, Graph, VertexId, VertexSet};

/// A finite linear Jaco graph `J_n(f)` with `f(x) = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JacoParams {
    n: usize,
    slope: usize,
    intercept: usize,
}

impl JacoParams {
    pub fn new(n: usize, slope: usize, intercept: usize) -> Result<Self, FamilyError> {
        if n < 1 {
            return Err(FamilyError::BelowMinimum {
                family: "jaco",
                name: "n",
                value: n,
                min: 1,
            });
        }
        if slope < 1 {
            return Err(FamilyError::BelowMinimum {
                family: "jaco",
                name: "m",
                value: slope,
                min: 1,
            });
        }
        Ok(JacoParams {
            n,
            slope,
            intercept,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slope(&self) -> usize {
        self.slope
    }

    pub fn intercept(&self) -> usize {
        self.intercept
    }

    pub fn f(&self, x: usize) -> usize {
        self.slope * x + self.intercept
    }
}

/// Builds `J_n(f)` by an ascending sweep. When `v_i` is reached its in-degree
/// is final (all arcs ascend), so it emits arcs to `v_{i+1} ..= v_r` with
/// `r = min(n, f(i) + i - d⁻(v_i))`.
pub fn jaco(p: &JacoParams) -> Result<Digraph, FamilyError> {
    let n = p.n;
    let mut d = Digraph::empty(n)?;
    let mut in_degree = vec![0usize; n + 1];
    for i in 1..=n {
        let reach = (p.f(i) + i).saturating_sub(in_degree[i]).min(n);
        #[allow(clippy::needless_range_loop)]
        for j in i + 1..=reach {
            d.add_arc(i, j)?;
            in_degree[j] += 1;
        }
    }
    Ok(d)
}

/// Degree structure of a Jaco graph's underlying graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoStructure {
    /// Vertices of maximum underlying degree.
    pub jaconian_set: VertexSet,
    /// Lowest-indexed member of the Jaconian set.
    pub prime: VertexId,
    /// Subgraph induced on `v_{prime+1} ..= v_n`; `None` when the prime
    /// vertex is `v_n` and that set is empty.
    pub hope: Option<Graph>,
}

pub fn jaco_structure(d: &Digraph) -> Result<JacoStructure, FamilyError> {
    let n = d.order();
    if n < 2 {
        return Err(FamilyError::JacoTooSmall);
    }
    let g = d.underlying();
    let degrees = g.degree_profile();
    let max = degrees.iter().copied().max().unwrap_or(0);
    let jaconian_set: VertexSet = g
        .vertices()
        .filter(|v| degrees[v.get() - 1] == max)
        .collect();
    let prime = jaconian_set.first().expect("maximum degree is attained");
    let above = VertexSet::full(n).difference(VertexSet::full(prime.get()));
    let hope = if above.is_empty() {
        None
    } else {
        Some(g.induced(above)?)
    };
    Ok(JacoStructure {
        jaconian_set,
        prime,
        hope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: usize, m: usize, c: usize) -> Digraph {
        jaco(&JacoParams::new(n, m, c).unwrap()).unwrap()
    }

    /// Checks the defining biconditional directly on a finished arc set:
    /// `(v_i, v_j)` is an arc iff `i < j` and `f(i) + i - d⁻(v_i) >= j`.
    fn satisfies_definition(d: &Digraph, p: &JacoParams) -> bool {
        let n = d.order();
        (1..=n).all(|i| {
            let din = d.in_degree(VertexId::new(i)) as i64;
            (1..=n).all(|j| {
                let expected = i < j && (p.f(i) + i) as i64 - din >= j as i64;
                d.has_arc(VertexId::new(i), VertexId::new(j)) == expected
            })
        })
    }

    #[test]
    fn five_vertex_identity_slope() {
        let d = build(5, 1, 0);
        assert_eq!(d.arcs(), vec![(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert!(satisfies_definition(&d, &JacoParams::new(5, 1, 0).unwrap()));
    }

    #[test]
    fn tiny_cases() {
        for (m, c) in [(1, 0), (3, 2)] {
            assert!(build(1, m, c).arcs().is_empty());
        }
        assert_eq!(build(2, 1, 0).arcs(), vec![(1, 2)]);
        assert_eq!(build(3, 1, 0).arcs(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn sweep_satisfies_definition() {
        for (m, c) in [(1, 0), (1, 1), (2, 0), (3, 1)] {
            for n in 1..=15 {
                let p = JacoParams::new(n, m, c).unwrap();
                assert!(
                    satisfies_definition(&jaco(&p).unwrap(), &p),
                    "n={n} m={m} c={c}"
                );
            }
        }
    }

    #[test]
    fn arcs_ascend() {
        let d = build(12, 2, 1);
        assert!(d.arcs().iter().all(|&(t, h)| t < h));
    }

    #[test]
    fn prefixes_agree() {
        for (m, c) in [(1, 0), (1, 1), (2, 0)] {
            let big = build(15, m, c).underlying();
            for n in 1..15 {
                let small = build(n, m, c).underlying();
                assert_eq!(
                    big.induced(VertexSet::full(n)).unwrap(),
                    small,
                    "n={n} m={m} c={c}"
                );
            }
        }
    }

    #[test]
    fn structure_of_five() {
        let s = jaco_structure(&build(5, 1, 0)).unwrap();
        assert_eq!(s.jaconian_set.to_vec(), vec![3]);
        assert_eq!(s.prime, VertexId::new(3));
        let hope = s.hope.unwrap();
        assert_eq!((hope.order(), hope.size()), (2, 1));
    }

    #[test]
    fn structure_of_small_graphs() {
        let s = jaco_structure(&build(2, 1, 0)).unwrap();
        assert_eq!(s.prime, VertexId::new(1));
        assert_eq!(s.hope.unwrap().order(), 1);

        let s = jaco_structure(&build(3, 1, 0)).unwrap();
        assert_eq!(s.prime, VertexId::new(2));
        assert_eq!(s.hope.unwrap().order(), 1);

        assert_eq!(
            jaco_structure(&build(1, 1, 0)),
            Err(FamilyError::JacoTooSmall)
        );
    }

    #[test]
    fn hope_subgraph_is_complete_for_identity_slope() {
        for n in 2..=15 {
            let s = jaco_structure(&build(n, 1, 0)).unwrap();
            assert!(s.hope.is_none_or(|h| h.is_complete()), "n={n}");
        }
    }

    #[test]
    fn rejects_zero_slope() {
        assert!(JacoParams::new(4, 0, 1).is_err());
        assert!(JacoParams::new(0, 1, 0).is_err());
    }
}

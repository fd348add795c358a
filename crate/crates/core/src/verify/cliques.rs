use thiserror::Error;

use crate::graph::{low_bits, Bits, Graph, VertexSet};

/// Largest graph accepted by [`count_max_cliques`].
pub const MAX_CLIQUE_VERTICES: usize = 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("clique enumeration is capped at {MAX_CLIQUE_VERTICES} vertices, got {0}")]
pub struct CliqueCapExceeded(pub usize);

/// Bron–Kerbosch with Tomita pivoting over bitset adjacency.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, visit: &mut impl FnMut(u64)) {
    if p == 0 {
        if x == 0 {
            visit(r);
        }
        return;
    }
    let pivot = Bits(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in Bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], visit);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn maximal_sets(adj: &[u64]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, low_bits(adj.len()), 0, &mut |r| {
        out.push(VertexSet::from_bits(r))
    });
    out.sort_by_key(|s| s.to_vec());
    out
}

/// All maximal cliques, sorted by their ascending vertex lists.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal_sets(g.adjacency())
}

/// All maximal independent sets, sorted like [`maximal_cliques`].
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let all = low_bits(g.order());
    let complement: Vec<u64> = g
        .adjacency()
        .iter()
        .enumerate()
        .map(|(v, &a)| all & !a & !(1 << v))
        .collect();
    maximal_sets(&complement)
}

/// Size of a maximum clique and the number of maximum cliques.
pub fn count_max_cliques(g: &Graph) -> Result<(usize, usize), CliqueCapExceeded> {
    if g.order() > MAX_CLIQUE_VERTICES {
        return Err(CliqueCapExceeded(g.order()));
    }
    let mut best = (0, 0);
    bron_kerbosch(g.adjacency(), 0, low_bits(g.order()), 0, &mut |r| {
        let size = r.count_ones() as usize;
        if size > best.0 {
            best = (size, 1);
        } else if size == best.0 {
            best.1 += 1;
        }
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::set_graph;
    use crate::families::test_graphs::*;

    #[test]
    fn set_graph_cliques() {
        assert_eq!(count_max_cliques(&set_graph(2).unwrap()), Ok((2, 2)));
        assert_eq!(count_max_cliques(&set_graph(3).unwrap()), Ok((4, 4)));
    }

    #[test]
    fn small_cases() {
        assert_eq!(count_max_cliques(&complete(4)), Ok((4, 1)));
        assert_eq!(count_max_cliques(&complete(1)), Ok((1, 1)));
        assert_eq!(count_max_cliques(&cycle(5)), Ok((2, 5)));
        assert_eq!(count_max_cliques(&edgeless(3)), Ok((1, 3)));
        assert_eq!(count_max_cliques(&edgeless(32)), Err(CliqueCapExceeded(32)));
    }

    #[test]
    fn independent_sets_of_c5() {
        let sets: Vec<Vec<usize>> = maximal_independent_sets(&cycle(5))
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            sets,
            vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]
        );
    }

    #[test]
    fn cliques_of_p3() {
        let sets: Vec<Vec<usize>> = maximal_cliques(&path(3))
            .iter()
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(sets, vec![vec![1, 2], vec![2, 3]]);
    }
}

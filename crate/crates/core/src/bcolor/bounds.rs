use crate::graph::{Bits, Graph};

/// The m-degree bound: the largest `k` such that at least `k` vertices have
/// degree at least `k - 1`. Always `φ(G) <= m(G) <= Δ(G) + 1`.
pub fn m_bound(g: &Graph) -> usize {
    let mut degrees = g.degree_profile();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &d)| d >= i)
        .count()
}

/// Exact chromatic number by backtracking over canonical colorings.
pub fn chromatic_number(g: &Graph) -> usize {
    let adj = g.adjacency();
    (1..=g.order())
        .find(|&k| {
            let mut colors = vec![usize::MAX; g.order()];
            colorable(adj, k, 0, 0, &mut colors)
        })
        .unwrap_or(g.order())
}

fn colorable(adj: &[u64], k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..(used + 1).min(k) {
        if Bits(adj[v] & crate::graph::low_bits(v)).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if colorable(adj, k, v + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::classic;
    use crate::families::test_graphs::*;

    #[test]
    fn m_bound_examples() {
        assert_eq!(m_bound(&complete(4)), 4);
        assert_eq!(m_bound(&cycle(4)), 3);
        assert_eq!(m_bound(&bipartite(1, 5)), 2);
        assert_eq!(m_bound(&edgeless(3)), 1);
        assert_eq!(m_bound(&complete(1)), 1);
        assert_eq!(m_bound(&path(4)), 2);
    }

    #[test]
    fn m_bound_below_max_degree_plus_one() {
        for g in [
            path(7),
            cycle(9),
            bipartite(3, 4),
            classic("helm", &[5]).unwrap(),
        ] {
            assert!(m_bound(&g) <= g.max_degree() + 1);
        }
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&complete(5)), 5);
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&cycle(6)), 2);
        assert_eq!(chromatic_number(&edgeless(4)), 1);
        assert_eq!(chromatic_number(&classic("wheel", &[5]).unwrap()), 4);
    }
}

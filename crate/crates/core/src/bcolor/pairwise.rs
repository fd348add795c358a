//! Search for colorings under the pairwise reading: proper, surjective, and
//! every pair of classes joined by an edge.

use super::{Coloring, Feasibility};
use crate::graph::{Bits, Graph};

struct Search<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    /// `open_edges[i]`: edges whose later endpoint (in search order) sits at
    /// position >= i, i.e. edges that can still join a new pair of classes.
    open_edges: Vec<usize>,
    k: usize,
    budget: u64,
    nodes: u64,
    found: Option<Vec<usize>>,
}

impl Search<'_> {
    /// `Some(true)` when a coloring was found, `None` on budget exhaustion.
    fn run(
        &mut self,
        pos: usize,
        used: usize,
        colors: &mut [usize],
        joined: &mut [u64],
    ) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let n = self.order.len();
        if n - pos < self.k - used {
            return Some(false);
        }
        let covered = joined
            .iter()
            .map(|j| j.count_ones() as usize)
            .sum::<usize>()
            / 2;
        let pairs = self.k * (self.k - 1) / 2;
        if pairs - covered > self.open_edges[pos] {
            return Some(false);
        }
        if pos == n {
            let ok = used == self.k && covered == pairs;
            if ok {
                self.found = Some(colors.iter().map(|&c| c + 1).collect());
            }
            return Some(ok);
        }
        let v = self.order[pos];
        let placed: Vec<usize> = Bits(self.adj[v])
            .filter(|&u| colors[u] != usize::MAX)
            .collect();
        let forbidden = placed.iter().fold(0u64, |m, &u| m | 1 << colors[u]);
        for c in 0..(used + 1).min(self.k) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            let snapshot = joined.to_vec();
            for &u in &placed {
                let cu = colors[u];
                joined[c] |= 1 << cu;
                joined[cu] |= 1 << c;
            }
            colors[v] = c;
            let result = self.run(pos + 1, used.max(c + 1), colors, joined);
            colors[v] = usize::MAX;
            joined.copy_from_slice(&snapshot);
            match result {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

pub(crate) fn search(g: &Graph, k: usize, budget: u64) -> (Feasibility, u64) {
    let n = g.order();
    if k == 0 || k > n {
        return (Feasibility::Infeasible, 0);
    }
    let adj = g.adjacency();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut open_edges = vec![0; n + 1];
    for (u, v) in g.edges() {
        let last = position[u - 1].max(position[v - 1]);
        for slot in &mut open_edges[..=last] {
            *slot += 1;
        }
    }
    let mut s = Search {
        adj,
        order,
        open_edges,
        k,
        budget,
        nodes: 0,
        found: None,
    };
    let mut colors = vec![usize::MAX; n];
    let mut joined = vec![0u64; k];
    let result = s.run(0, 0, &mut colors, &mut joined);
    let outcome = match result {
        None => Feasibility::Timeout,
        Some(false) => Feasibility::Infeasible,
        Some(true) => {
            let colors = s.found.take().expect("witness recorded");
            let coloring = Coloring::new(k, colors).expect("colors in range");
            Feasibility::Feasible(coloring)
        }
    };
    (outcome, s.nodes.min(budget))
}

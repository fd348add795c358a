//! Exact k-b-coloring search.
//!
//! A k-b-coloring is searched for as a constraint problem. First a b-vertex
//! system is fixed: vertices `x_1 < x_2 < ... < x_k` of degree at least
//! `k - 1`, with `x_c` colored `c`. Sorting one representative per class by
//! vertex index and renaming the colors accordingly maps every b-coloring to
//! such a system, so the ordering breaks color symmetry without losing
//! solutions. Then the remaining vertices are colored, branching first on
//! the requirement "`x_c` needs a neighbour of color `j`" with the fewest
//! candidate neighbours, and finally on the smallest remaining domain.
//!
//! Every node checks, for each placed b-vertex, that its missing colors can
//! still be matched to distinct uncolored neighbours.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{Coloring, Feasibility};
use crate::graph::{low_bits, Bits, Graph, MAX_VERTICES};

const NONE: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    dom: [u64; MAX_VERTICES],
    color: [u8; MAX_VERTICES],
    unassigned: u64,
    bvert: [u8; MAX_VERTICES],
    placed: usize,
}

enum Step {
    Found(Box<State>),
    Exhausted,
    Timeout,
    Cancelled,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    all_colors: u64,
    eligible: Vec<usize>,
    budget: u64,
    nodes: &'a AtomicU64,
    cancel: &'a AtomicBool,
}

impl Search<'_> {
    fn tick(&self) -> Option<Step> {
        if self.cancel.load(Ordering::Relaxed) {
            return Some(Step::Cancelled);
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Some(Step::Timeout);
        }
        None
    }

    fn assign(&self, s: &mut State, v: usize, c: usize) -> bool {
        if s.dom[v] >> c & 1 == 0 {
            return false;
        }
        s.color[v] = c as u8;
        s.dom[v] = 1 << c;
        s.unassigned &= !(1 << v);
        for u in Bits(self.adj[v] & s.unassigned) {
            s.dom[u] &= !(1 << c);
            if s.dom[u] == 0 {
                return false;
            }
        }
        true
    }

    /// Colors that b-vertex `x` (of color `c`) still needs among its neighbours.
    fn missing(&self, s: &State, x: usize, c: usize) -> u64 {
        let seen = Bits(self.adj[x] & !s.unassigned).fold(0u64, |m, u| m | 1 << s.color[u]);
        self.all_colors & !seen & !(1 << c)
    }

    /// Hall condition: the missing colors of every placed b-vertex can be
    /// given to distinct uncolored neighbours.
    fn consistent(&self, s: &State) -> bool {
        (0..s.placed).all(|c| {
            let x = s.bvert[c] as usize;
            let need = self.missing(s, x, c);
            if need == 0 {
                return true;
            }
            let cand = self.adj[x] & s.unassigned;
            if need.count_ones() > cand.count_ones() {
                return false;
            }
            let reachable = Bits(cand).fold(0u64, |m, u| m | s.dom[u]);
            need & !reachable == 0 && perfect_match(need, cand, &s.dom)
        })
    }

    fn place(&self, s: &State, c: usize, from: usize) -> Step {
        if c == self.k {
            return self.complete(s.clone());
        }
        let remaining = self.k - c;
        for idx in from..=self.eligible.len() - remaining {
            if let Some(stop) = self.tick() {
                return stop;
            }
            match self.try_place(s, c, idx) {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }

    fn try_place(&self, s: &State, c: usize, idx: usize) -> Step {
        let x = self.eligible[idx];
        let mut next = s.clone();
        next.bvert[c] = x as u8;
        next.placed = c + 1;
        if !self.assign(&mut next, x, c) || !self.consistent(&next) {
            return Step::Exhausted;
        }
        self.place(&next, c + 1, idx + 1)
    }

    fn complete(&self, s: State) -> Step {
        if let Some(stop) = self.tick() {
            return stop;
        }
        if !self.consistent(&s) {
            return Step::Exhausted;
        }
        // most constrained unmet requirement
        let mut best: Option<(u32, usize, u64)> = None;
        for c in 0..self.k {
            let x = s.bvert[c] as usize;
            let cand = self.adj[x] & s.unassigned;
            for j in Bits(self.missing(&s, x, c)) {
                let options = Bits(cand)
                    .filter(|&u| s.dom[u] >> j & 1 == 1)
                    .fold(0u64, |m, u| m | 1 << u);
                let count = options.count_ones();
                if best.is_none_or(|(b, _, _)| count < b) {
                    best = Some((count, j, options));
                }
            }
        }
        if let Some((_, j, options)) = best {
            let mut cur = s;
            for u in Bits(options) {
                let mut next = cur.clone();
                if self.assign(&mut next, u, j) {
                    match self.complete(next) {
                        Step::Exhausted => {}
                        other => return other,
                    }
                }
                cur.dom[u] &= !(1 << j);
                if cur.dom[u] == 0 {
                    return Step::Exhausted;
                }
            }
            return Step::Exhausted;
        }
        if s.unassigned == 0 {
            return Step::Found(Box::new(s));
        }
        // every requirement met: any proper completion works
        let v = Bits(s.unassigned)
            .min_by_key(|&v| {
                (
                    s.dom[v].count_ones(),
                    std::cmp::Reverse(self.adj[v].count_ones()),
                    v,
                )
            })
            .expect("unassigned vertex");
        for c in Bits(s.dom[v]) {
            let mut next = s.clone();
            if self.assign(&mut next, v, c) {
                match self.complete(next) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
        }
        Step::Exhausted
    }

    fn witness(&self, s: &State) -> Coloring {
        let colors = s.color[..self.n].iter().map(|&c| c as usize + 1).collect();
        Coloring::new(self.k, colors).expect("search assigns colors in range")
    }
}

/// Whether every color in `need` can be matched to a distinct vertex of
/// `cand` whose domain contains it.
fn perfect_match(need: u64, cand: u64, dom: &[u64; MAX_VERTICES]) -> bool {
    let mut owner = [NONE; 64]; // vertex -> matched color
    fn augment(
        color: usize,
        cand: u64,
        dom: &[u64; MAX_VERTICES],
        owner: &mut [u8; 64],
        seen: &mut u64,
    ) -> bool {
        for u in Bits(cand & !*seen) {
            if dom[u] >> color & 1 == 0 {
                continue;
            }
            *seen |= 1 << u;
            if owner[u] == NONE || augment(owner[u] as usize, cand, dom, owner, seen) {
                owner[u] = color as u8;
                return true;
            }
        }
        false
    }
    Bits(need).all(|color| {
        let mut seen = 0u64;
        augment(color, cand, dom, &mut owner, &mut seen)
    })
}

/// Searches for a k-b-coloring under the representative definition.
pub(crate) fn search(g: &Graph, k: usize, budget: u64, parallel: bool) -> (Feasibility, u64) {
    let n = g.order();
    if k == 0 || k > n {
        return (Feasibility::Infeasible, 0);
    }
    if k == 1 {
        return if g.size() == 0 {
            let c = Coloring::new(1, vec![1; n]).expect("valid coloring");
            (Feasibility::Feasible(c), 1)
        } else {
            (Feasibility::Infeasible, 1)
        };
    }
    let adj = g.adjacency();
    let eligible: Vec<usize> = (0..n)
        .filter(|&v| adj[v].count_ones() as usize >= k - 1)
        .collect();
    if eligible.len() < k {
        return (Feasibility::Infeasible, 0);
    }
    let all_colors = low_bits(k);
    let mut root = State {
        dom: [0; MAX_VERTICES],
        color: [NONE; MAX_VERTICES],
        unassigned: low_bits(n),
        bvert: [NONE; MAX_VERTICES],
        placed: 0,
    };
    root.dom[..n].fill(all_colors);

    let nodes = AtomicU64::new(0);
    let cancel = AtomicBool::new(false);
    let search = Search {
        adj,
        n,
        k,
        all_colors,
        eligible,
        budget,
        nodes: &nodes,
        cancel: &cancel,
    };
    let first_choices = 0..=search.eligible.len() - k;

    let step = if parallel {
        let steps: Vec<Step> = first_choices
            .into_par_iter()
            .map(|idx| {
                let step = search.try_place(&root, 0, idx);
                if matches!(step, Step::Found(_)) {
                    cancel.store(true, Ordering::Relaxed);
                }
                step
            })
            .collect();
        let mut timed_out = false;
        let mut found = None;
        for step in steps {
            match step {
                Step::Found(s) if found.is_none() => found = Some(s),
                Step::Timeout => timed_out = true,
                _ => {}
            }
        }
        match (found, timed_out) {
            (Some(s), _) => Step::Found(s),
            (None, true) => Step::Timeout,
            (None, false) => Step::Exhausted,
        }
    } else {
        search.place(&root, 0, 0)
    };

    let used = nodes.load(Ordering::Relaxed).min(budget);
    let outcome = match step {
        Step::Found(s) => Feasibility::Feasible(search.witness(&s)),
        Step::Exhausted => Feasibility::Infeasible,
        Step::Timeout | Step::Cancelled => Feasibility::Timeout,
    };
    (outcome, used)
}

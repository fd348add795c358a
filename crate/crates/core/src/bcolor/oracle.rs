//! Brute-force reference for the b-chromatic number.
//!
//! Enumerates every proper coloring up to renaming of colors (restricted
//! growth strings: vertex `v` may only open color `max-so-far + 1`), checks
//! each with the plain definition, and keeps the largest accepted class
//! count. No other pruning is applied.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{Coloring, Reading};
use crate::graph::{low_bits, Bits, Graph};

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle is limited to {ORACLE_MAX_VERTICES} vertices, graph has {0}")]
pub struct OracleTooLarge(pub usize);

/// Every `k` for which some k-coloring is accepted under `reading`.
pub fn oracle_spectrum(g: &Graph, reading: Reading) -> Result<BTreeSet<usize>, OracleTooLarge> {
    let n = g.order();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleTooLarge(n));
    }
    let mut found = BTreeSet::new();
    let mut colors = vec![0usize; n];
    enumerate(g, reading, 0, 0, &mut colors, &mut found);
    Ok(found)
}

/// φ(G) by exhaustive enumeration.
pub fn phi_oracle(g: &Graph) -> Result<usize, OracleTooLarge> {
    phi_oracle_with(g, Reading::Representative)
}

pub fn phi_oracle_with(g: &Graph, reading: Reading) -> Result<usize, OracleTooLarge> {
    Ok(oracle_spectrum(g, reading)?.last().copied().unwrap_or(0))
}

fn enumerate(
    g: &Graph,
    reading: Reading,
    v: usize,
    used: usize,
    colors: &mut [usize],
    found: &mut BTreeSet<usize>,
) {
    let adj = g.adjacency();
    if v == colors.len() {
        let c = Coloring::new(used, colors.to_vec()).expect("colors within 1..=used");
        if reading.accepts(g, &c).expect("coloring sized to graph") {
            found.insert(used);
        }
        return;
    }
    for c in 1..=used + 1 {
        if Bits(adj[v] & low_bits(v)).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        enumerate(g, reading, v + 1, used.max(c), colors, found);
    }
    colors[v] = 0;
}

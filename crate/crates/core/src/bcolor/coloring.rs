use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("a coloring needs at least one color")]
    NoColors,
    #[error("coloring assigns {got} vertices but the graph has {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        k: usize,
    },
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    Improper(usize, usize),
    #[error("color class {0} is empty")]
    EmptyClass(usize),
}

/// A total assignment of colors `1..=k` to the vertices `v_1..v_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        if let Some((i, &c)) = colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange {
                vertex: i + 1,
                color: c,
                k,
            });
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: VertexId) -> usize {
        self.colors[v.get() - 1]
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(i, _)| VertexId::new(i + 1))
            .collect()
    }

    /// Bitmask of the colors in use (bit `c - 1` for color `c`).
    pub(crate) fn used_mask(&self) -> u64 {
        self.colors.iter().fold(0, |m, &c| m | 1 << (c - 1))
    }

    pub fn is_surjective(&self) -> bool {
        self.used_mask().count_ones() as usize == self.k
    }

    /// Renames color `c` to `perm[c - 1]`; `perm` must permute `1..=k`.
    pub fn permute(&self, perm: &[usize]) -> Coloring {
        assert_eq!(perm.len(), self.k);
        Coloring {
            k: self.k,
            colors: self.colors.iter().map(|&c| perm[c - 1]).collect(),
        }
    }

    /// Re-indexes by a vertex relabeling: vertex `v` moves to `perm[v - 1]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Coloring {
        let mut colors = vec![0; self.colors.len()];
        for (i, &c) in self.colors.iter().enumerate() {
            colors[perm[i] - 1] = c;
        }
        Coloring { k: self.k, colors }
    }

    fn check_size(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.order() {
            return Err(ColoringError::SizeMismatch {
                expected: g.order(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }

    /// Colors present in the neighbourhood of `v`, as a bitmask.
    fn neighbour_colors(&self, g: &Graph, v: VertexId) -> u64 {
        g.neighbors(v)
            .iter()
            .fold(0, |m, u| m | 1 << (self.color(u) - 1))
    }
}

/// First monochromatic edge in lexicographic order, if any.
pub fn first_conflict(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>, ColoringError> {
    c.check_size(g)?;
    Ok(g.edges()
        .into_iter()
        .find(|&(u, v)| c.colors[u - 1] == c.colors[v - 1]))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    Ok(first_conflict(g, c)?.is_none())
}

/// For each color, the vertices of that color whose neighbourhood meets
/// every other color class. With `k = 1` the condition is vacuous.
pub fn b_vertices(g: &Graph, c: &Coloring) -> Result<BTreeMap<usize, VertexSet>, ColoringError> {
    if let Some((u, v)) = first_conflict(g, c)? {
        return Err(ColoringError::Improper(u, v));
    }
    if let Some(empty) = (1..=c.k).find(|&col| c.class(col).is_empty()) {
        return Err(ColoringError::EmptyClass(empty));
    }
    let all = crate::graph::low_bits(c.k);
    let mut out: BTreeMap<usize, VertexSet> =
        (1..=c.k).map(|col| (col, VertexSet::EMPTY)).collect();
    for v in g.vertices() {
        let own = 1u64 << (c.color(v) - 1);
        if c.neighbour_colors(g, v) | own == all {
            out.get_mut(&c.color(v)).expect("color in range").insert(v);
        }
    }
    Ok(out)
}

/// Proper, all `k` classes inhabited, and every class has a b-vertex.
pub fn is_b_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    match b_vertices(g, c) {
        Ok(map) => Ok(map.values().all(|s| !s.is_empty())),
        Err(ColoringError::Improper(..) | ColoringError::EmptyClass(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The weaker pairwise condition: proper, all classes inhabited, and every
/// pair of distinct classes joined by at least one edge.
pub fn is_pairwise_b_coloring(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if !is_proper(g, c)? || !c.is_surjective() {
        return Ok(false);
    }
    let mut joined = vec![0u64; c.k];
    for (u, v) in g.edges() {
        let (a, b) = (c.colors[u - 1] - 1, c.colors[v - 1] - 1);
        joined[a] |= 1 << b;
        joined[b] |= 1 << a;
    }
    let all = crate::graph::low_bits(c.k);
    Ok(joined.iter().enumerate().all(|(i, &j)| j | 1 << i == all))
}

/// Which definition of b-coloring a check or search uses.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Every class has a representant adjacent to all other classes.
    #[default]
    Representative,
    /// Every pair of classes is joined by an edge.
    Pairwise,
}

impl Reading {
    pub fn accepts(self, g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
        match self {
            Reading::Representative => is_b_coloring(g, c),
            Reading::Pairwise => is_pairwise_b_coloring(g, c),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Reading::Representative => "representative",
            Reading::Pairwise => "pairwise",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::test_graphs::*;

    fn col(k: usize, colors: &[usize]) -> Coloring {
        Coloring::new(k, colors.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|&v| VertexId::new(v)).collect()
    }

    #[test]
    fn properness() {
        assert!(is_proper(&complete(3), &col(3, &[1, 2, 3])).unwrap());
        assert!(!is_proper(&complete(3), &col(2, &[1, 1, 2])).unwrap());
        assert!(is_proper(&edgeless(4), &col(1, &[1, 1, 1, 1])).unwrap());
        assert_eq!(
            is_proper(&complete(3), &col(3, &[1, 2])),
            Err(ColoringError::SizeMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn coloring_validation() {
        assert_eq!(Coloring::new(0, vec![]), Err(ColoringError::NoColors));
        assert_eq!(
            Coloring::new(2, vec![1, 3]),
            Err(ColoringError::ColorOutOfRange {
                vertex: 2,
                color: 3,
                k: 2
            })
        );
        let parsed: Coloring = serde_json::from_str(r#"{"k":2,"colors":[1,2,1]}"#).unwrap();
        assert_eq!(parsed, col(2, &[1, 2, 1]));
        assert!(serde_json::from_str::<Coloring>(r#"{"k":2,"colors":[1,5]}"#).is_err());
        assert_eq!(
            serde_json::to_string(&parsed).unwrap(),
            r#"{"k":2,"colors":[1,2,1]}"#
        );
    }

    #[test]
    fn b_vertices_of_c5() {
        let map = b_vertices(&cycle(5), &col(3, &[1, 2, 3, 1, 2])).unwrap();
        assert!(map[&3].contains(VertexId::new(3)));
    }

    #[test]
    fn b_vertices_of_p3() {
        let map = b_vertices(&path(3), &col(2, &[1, 2, 1])).unwrap();
        assert_eq!(map[&2], set(&[2]));
        assert_eq!(map[&1], set(&[1, 3]));
    }

    #[test]
    fn b_vertices_of_k4() {
        let map = b_vertices(&complete(4), &col(4, &[1, 2, 3, 4])).unwrap();
        for c in 1..=4 {
            assert_eq!(map[&c], set(&[c]));
        }
    }

    #[test]
    fn b_vertices_errors() {
        assert_eq!(
            b_vertices(&path(3), &col(2, &[1, 1, 2])),
            Err(ColoringError::Improper(1, 2))
        );
        assert_eq!(
            b_vertices(&path(3), &col(3, &[1, 2, 1])),
            Err(ColoringError::EmptyClass(3))
        );
    }

    #[test]
    fn single_class_is_vacuous() {
        let map = b_vertices(&edgeless(3), &col(1, &[1, 1, 1])).unwrap();
        assert_eq!(map[&1], set(&[1, 2, 3]));
        assert!(is_b_coloring(&edgeless(3), &col(1, &[1, 1, 1])).unwrap());
    }

    #[test]
    fn b_coloring_examples() {
        assert!(is_b_coloring(&cycle(4), &col(2, &[1, 2, 1, 2])).unwrap());
        assert!(is_b_coloring(&path(5), &col(3, &[1, 2, 3, 1, 2])).unwrap());
        assert!(!is_b_coloring(&complete(3), &col(4, &[1, 2, 3])).unwrap());
        assert!(!is_b_coloring(&path(3), &col(3, &[1, 2, 3])).unwrap());
        // no vertex of P_4 sees two other colors in class 2
        assert!(!is_b_coloring(&path(4), &col(3, &[2, 1, 3, 2])).unwrap());
    }

    #[test]
    fn pairwise_reading_is_weaker() {
        // P_4 colored 1,2,3,1: pairs (1,2), (2,3), (3,1) all joined
        let c = col(3, &[1, 2, 3, 1]);
        assert!(is_pairwise_b_coloring(&path(4), &c).unwrap());
        assert!(!is_b_coloring(&path(4), &c).unwrap());
        assert!(!Reading::Pairwise
            .accepts(&path(4), &col(3, &[1, 2, 1, 3]))
            .unwrap());
    }

    #[test]
    fn permutation_and_relabel() {
        let c = col(3, &[1, 2, 3, 1]);
        assert_eq!(c.permute(&[3, 1, 2]).colors(), &[3, 1, 2, 3]);
        assert_eq!(c.relabel_vertices(&[4, 3, 2, 1]).colors(), &[1, 3, 2, 1]);
        assert!(c.is_surjective());
        assert!(!col(4, &[1, 2]).is_surjective());
    }
}

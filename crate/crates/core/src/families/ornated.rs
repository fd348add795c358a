use std::fmt;

use super::FamilyError;
use crate::graph::{Digraph, Graph};

/// An ordered string `(a_1, ..., a_l)` of non-negative reaches. Entries at odd
/// (1-based) positions reach forward, entries at even positions reach backward.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrnatedString(Vec<usize>);

impl OrnatedString {
    pub fn new(entries: Vec<usize>) -> Result<Self, FamilyError> {
        if entries.is_empty() {
            return Err(FamilyError::EmptyString);
        }
        Ok(OrnatedString(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Largest entry at an odd position.
    pub fn forward_reach(&self) -> usize {
        self.0.iter().step_by(2).copied().max().unwrap_or(0)
    }

    /// Largest entry at an even position (0 for a single-entry string).
    pub fn backward_reach(&self) -> usize {
        self.0.iter().skip(1).step_by(2).copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for OrnatedString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The ornated digraph `O_n(s)`.
pub fn ornated(n: usize, s: &OrnatedString) -> Result<Digraph, FamilyError> {
    let mut d = Digraph::empty(n)?;
    for i in 1..=n {
        for (pos, &a) in s.0.iter().enumerate() {
            if pos % 2 == 0 {
                for j in i + 1..=(i + a).min(n) {
                    d.add_arc(i, j)?;
                }
            } else {
                for j in i.saturating_sub(a).max(1)..i {
                    d.add_arc(i, j)?;
                }
            }
        }
    }
    Ok(d)
}

/// Underlying graph of `O_n((a_max))`, i.e. the `a_max`-th power of `P_n`.
pub fn maximal_reach(n: usize, s: &OrnatedString) -> Result<Graph, FamilyError> {
    let single = OrnatedString(vec![s.max_entry()]);
    Ok(ornated(n, &single)?.underlying())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(entries: &[usize]) -> OrnatedString {
        OrnatedString::new(entries.to_vec()).unwrap()
    }

    fn path_power(n: usize, r: usize) -> Graph {
        Graph::new(
            n,
            (1..=n).flat_map(|i| (i + 1..=n).filter(move |j| j - i <= r).map(move |j| (i, j))),
        )
        .unwrap()
    }

    #[test]
    fn square_of_p5() {
        let g = ornated(5, &s(&[2, 1])).unwrap().underlying();
        assert_eq!(
            g.edges(),
            vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn zero_and_saturating_reach() {
        assert_eq!(ornated(4, &s(&[0])).unwrap().arc_count(), 0);
        assert!(ornated(3, &s(&[5])).unwrap().underlying().is_complete());
    }

    #[test]
    fn parallel_arcs_collapse() {
        let d = ornated(4, &s(&[1, 0, 1])).unwrap();
        assert_eq!(d.arcs(), vec![(1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn maximal_reach_examples() {
        assert_eq!(
            maximal_reach(5, &s(&[2, 1])).unwrap(),
            ornated(5, &s(&[2, 1])).unwrap().underlying()
        );
        assert_eq!(maximal_reach(4, &s(&[1])).unwrap(), path_power(4, 1));
        assert!(maximal_reach(3, &s(&[2, 2])).unwrap().is_complete());
    }

    /// Every string with entries <= 3 and length <= 3.
    fn all_strings() -> Vec<OrnatedString> {
        let mut out = Vec::new();
        for l in 1..=3u32 {
            for code in 0..4usize.pow(l) {
                let entries = (0..l).map(|p| code / 4usize.pow(p) % 4).collect();
                out.push(OrnatedString(entries));
            }
        }
        out
    }

    #[test]
    fn underlying_is_path_power_of_max_entry() {
        for string in all_strings() {
            for n in 1..=12 {
                let g = ornated(n, &string).unwrap().underlying();
                let r = string.forward_reach().max(string.backward_reach());
                assert_eq!(g, path_power(n, r), "n={n} s={string}");
                let reach = maximal_reach(n, &string).unwrap();
                assert!(g.edges().iter().all(|e| reach.edges().contains(e)));
                assert_eq!(g, reach);
            }
        }
    }

    #[test]
    fn reaches_by_parity() {
        let st = s(&[1, 3, 2]);
        assert_eq!(
            (st.forward_reach(), st.backward_reach(), st.max_entry()),
            (2, 3, 3)
        );
        assert!(OrnatedString::new(vec![]).is_err());
        assert!(s(&[0, 0]).is_zero());
    }
}

//! Plain-text edge-list and arc-list formats.
//!
//! ```text
//! n m
//! u v      (m lines, 1 <= u < v <= n, lexicographic on emit)
//! ```
//!
//! Arc lists use the same header followed by `tail head` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Digraph, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("expected two integers, found {0:?}")]
    Malformed(String),
    #[error("endpoint {vertex} out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("edge ({u}, {v}) must satisfy u < v")]
    Unordered { u: usize, v: usize },
    #[error("self-arc at vertex {0}")]
    SelfArc(usize),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("header declares {declared} lines but {found} were given")]
    CountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError {
        line: lineno,
        kind: ParseErrorKind::Malformed(line.to_string()),
    };
    let mut tokens = line.split_ascii_whitespace();
    let a = tokens.next().ok_or_else(malformed)?;
    let b = tokens.next().ok_or_else(malformed)?;
    if tokens.next().is_some() {
        return Err(malformed());
    }
    let a = a.parse::<usize>().map_err(|_| malformed())?;
    let b = b.parse::<usize>().map_err(|_| malformed())?;
    Ok((a, b))
}

/// `(line, u, v)`
type NumberedPair = (usize, usize, usize);

/// Parses the header and body lines, returning `n` and the numbered pairs.
fn parse_lines(text: &str) -> Result<(usize, Vec<NumberedPair>), ParseError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .filter(|(_, l)| !l.is_empty())
        .ok_or(ParseError {
            line: 1,
            kind: ParseErrorKind::MissingHeader,
        })?;
    let (n, m) = parse_pair(header, 1)?;
    if n == 0 || n > crate::graph::MAX_VERTICES {
        let err = if n == 0 {
            GraphError::NoVertices
        } else {
            GraphError::TooManyVertices(n)
        };
        return Err(ParseError {
            line: 1,
            kind: err.into(),
        });
    }
    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let (u, v) = parse_pair(line, lineno)?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(ParseError {
                    line: lineno,
                    kind: ParseErrorKind::OutOfRange { vertex: x, n },
                });
            }
        }
        pairs.push((lineno, u, v));
    }
    if pairs.len() != m {
        return Err(ParseError {
            line: pairs.last().map_or(1, |p| p.0),
            kind: ParseErrorKind::CountMismatch {
                declared: m,
                found: pairs.len(),
            },
        });
    }
    Ok((n, pairs))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let (n, pairs) = parse_lines(text)?;
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &pairs {
        if u >= v {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Unordered { u, v },
            });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Duplicate(u, v),
            });
        }
    }
    Graph::new(n, pairs.into_iter().map(|(_, u, v)| (u, v))).map_err(|e| ParseError {
        line: 1,
        kind: e.into(),
    })
}

pub fn emit_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_arclist(text: &str) -> Result<Digraph, ParseError> {
    let (n, pairs) = parse_lines(text)?;
    let mut seen = std::collections::HashSet::new();
    for &(line, t, h) in &pairs {
        if t == h {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::SelfArc(t),
            });
        }
        if !seen.insert((t, h)) {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::Duplicate(t, h),
            });
        }
    }
    Digraph::new(n, pairs.into_iter().map(|(_, t, h)| (t, h))).map_err(|e| ParseError {
        line: 1,
        kind: e.into(),
    })
}

pub fn emit_arclist(d: &Digraph) -> String {
    let arcs = d.arcs();
    let mut out = format!("{} {}\n", d.order(), arcs.len());
    for (t, h) in arcs {
        let _ = writeln!(out, "{t} {h}");
    }
    out
}

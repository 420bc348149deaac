//! Text formats: the `n m` / `u v` edge-list format, DIMACS `.col`, and the
//! per-vertex coloring file. Each format has a parser and a serializer and
//! the pair round-trips exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

/// A parse failure, with the 1-based line number it occurred on.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {expected}")]
    Malformed { expected: &'static str },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("edge line before problem line")]
    EdgeBeforeHeader,
    #[error("duplicate problem line")]
    DuplicateHeader,
    #[error("expected {expected} entries, found {found}")]
    WrongEntryCount { expected: usize, found: usize },
    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("vertex {vertex} assigned more than once")]
    DuplicateVertex { vertex: usize },
    #[error("vertex {vertex} has no color assigned")]
    MissingVertex { vertex: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_usize(tok: &str, line: usize, expected: &'static str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| err(line, ParseErrorKind::Malformed { expected }))
}

/// Lines that carry content in the edge-list and coloring formats: skips
/// blanks and `#` comments, keeping 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses the edge-list format: a `n m` header followed by `m` lines `u v`
/// with 0-indexed endpoints. `#` starts a comment line. Duplicate edges
/// collapse to one; self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader))?;
    let mut toks = header.split_whitespace();
    let (n, m) = match (toks.next(), toks.next(), toks.next()) {
        (Some(a), Some(b), None) => (
            parse_usize(a, header_line, "header \"n m\"")?,
            parse_usize(b, header_line, "header \"n m\"")?,
        ),
        _ => {
            return Err(err(
                header_line,
                ParseErrorKind::Malformed {
                    expected: "header \"n m\"",
                },
            ))
        }
    };

    let mut g = Graph::new(n);
    let mut seen = 0usize;
    for (line, body) in lines {
        if seen == m {
            return Err(err(
                line,
                ParseErrorKind::WrongEntryCount {
                    expected: m,
                    found: m + 1,
                },
            ));
        }
        let mut toks = body.split_whitespace();
        let (u, v) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (
                parse_usize(a, line, "edge \"u v\"")?,
                parse_usize(b, line, "edge \"u v\"")?,
            ),
            _ => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed {
                        expected: "edge \"u v\"",
                    },
                ))
            }
        };
        g.add_edge(u, v).map_err(|e| match e {
            crate::graph::GraphError::SelfLoop { vertex } => {
                err(line, ParseErrorKind::SelfLoop { vertex })
            }
            _ => err(line, ParseErrorKind::VertexOutOfRange { vertex: u.max(v), n }),
        })?;
        seen += 1;
    }
    if seen < m {
        let last = text.lines().count();
        return Err(err(
            last,
            ParseErrorKind::WrongEntryCount {
                expected: m,
                found: seen,
            },
        ));
    }
    Ok(g)
}

/// Writes the edge-list format with edges sorted ascending.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses DIMACS `.col`: `c` comment lines, one `p edge n m` problem line,
/// then `m` lines `e u v` with 1-indexed endpoints (shifted to 0-indexed).
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut seen = 0usize;
    for (line, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if raw.is_empty() || raw == "c" || raw.starts_with("c ") {
            continue;
        }
        let mut toks = raw.split_whitespace();
        match toks.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                match (toks.next(), toks.next(), toks.next(), toks.next()) {
                    (Some("edge"), Some(a), Some(b), None) => {
                        let n = parse_usize(a, line, "problem line \"p edge n m\"")?;
                        declared_m = parse_usize(b, line, "problem line \"p edge n m\"")?;
                        g = Some(Graph::new(n));
                    }
                    _ => {
                        return Err(err(
                            line,
                            ParseErrorKind::Malformed {
                                expected: "problem line \"p edge n m\"",
                            },
                        ))
                    }
                }
            }
            Some("e") => {
                let g = g.as_mut().ok_or(err(line, ParseErrorKind::EdgeBeforeHeader))?;
                let n = g.n();
                if seen == declared_m {
                    return Err(err(
                        line,
                        ParseErrorKind::WrongEntryCount {
                            expected: declared_m,
                            found: declared_m + 1,
                        },
                    ));
                }
                let (u, v) = match (toks.next(), toks.next(), toks.next()) {
                    (Some(a), Some(b), None) => (
                        parse_usize(a, line, "edge line \"e u v\"")?,
                        parse_usize(b, line, "edge line \"e u v\"")?,
                    ),
                    _ => {
                        return Err(err(
                            line,
                            ParseErrorKind::Malformed {
                                expected: "edge line \"e u v\"",
                            },
                        ))
                    }
                };
                // 1-indexed on disk.
                if u == 0 || u > n || v == 0 || v > n {
                    return Err(err(
                        line,
                        ParseErrorKind::VertexOutOfRange {
                            vertex: u.max(v),
                            n,
                        },
                    ));
                }
                if u == v {
                    return Err(err(line, ParseErrorKind::SelfLoop { vertex: u - 1 }));
                }
                g.add_edge(u - 1, v - 1).expect("endpoints validated");
                seen += 1;
            }
            _ => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed {
                        expected: "\"c\", \"p\" or \"e\" line",
                    },
                ))
            }
        }
    }
    let g = g.ok_or(err(text.lines().count(), ParseErrorKind::MissingHeader))?;
    if seen < declared_m {
        return Err(err(
            text.lines().count(),
            ParseErrorKind::WrongEntryCount {
                expected: declared_m,
                found: seen,
            },
        ));
    }
    Ok(g)
}

/// Writes DIMACS `.col` with 1-indexed endpoints, edges sorted ascending.
pub fn serialize_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "p edge {} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses the coloring format: a `n k` header, then one line `v c` per vertex
/// (0-indexed vertex, 1-indexed color), each vertex exactly once. `#` starts
/// a comment line.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(err(0, ParseErrorKind::MissingHeader))?;
    let mut toks = header.split_whitespace();
    let (n, k) = match (toks.next(), toks.next(), toks.next()) {
        (Some(a), Some(b), None) => (
            parse_usize(a, header_line, "header \"n k\"")?,
            parse_usize(b, header_line, "header \"n k\"")? as u32,
        ),
        _ => {
            return Err(err(
                header_line,
                ParseErrorKind::Malformed {
                    expected: "header \"n k\"",
                },
            ))
        }
    };
    if k == 0 {
        return Err(err(
            header_line,
            ParseErrorKind::Malformed {
                expected: "a positive color count",
            },
        ));
    }

    let mut assignment: Vec<Option<u32>> = vec![None; n];
    for (count, (line, body)) in lines.enumerate() {
        if count == n {
            return Err(err(
                line,
                ParseErrorKind::WrongEntryCount {
                    expected: n,
                    found: n + 1,
                },
            ));
        }
        let mut toks = body.split_whitespace();
        let (v, c) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (
                parse_usize(a, line, "assignment \"v c\"")?,
                parse_usize(b, line, "assignment \"v c\"")? as u32,
            ),
            _ => {
                return Err(err(
                    line,
                    ParseErrorKind::Malformed {
                        expected: "assignment \"v c\"",
                    },
                ))
            }
        };
        if v >= n {
            return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
        }
        if c == 0 || c > k {
            return Err(err(line, ParseErrorKind::ColorOutOfRange { color: c, k }));
        }
        if assignment[v].is_some() {
            return Err(err(line, ParseErrorKind::DuplicateVertex { vertex: v }));
        }
        assignment[v] = Some(c);
    }
    let last = text.lines().count();
    let mut colors = Vec::with_capacity(n);
    for (v, c) in assignment.into_iter().enumerate() {
        colors.push(c.ok_or(err(last, ParseErrorKind::MissingVertex { vertex: v }))?);
    }
    Ok(Coloring::new(k, colors).expect("colors validated during parse"))
}

/// Writes the coloring format, vertices ascending.
pub fn serialize_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", c.len(), c.k());
    for (v, color) in c.iter().enumerate() {
        let _ = writeln!(out, "{v} {color}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn edge_list_path_on_three() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(
            (0..3).map(|v| g.degree(v)).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn edge_list_isolated_vertex() {
        let g = parse_edge_list("1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn edge_list_rejects_self_loop_with_line() {
        let e = parse_edge_list("2 1\n0 0").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop { vertex: 0 });
    }

    #[test]
    fn edge_list_rejects_out_of_range_and_malformed() {
        let e = parse_edge_list("2 1\n0 5").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VertexOutOfRange { vertex: 5, n: 2 });
        assert!(parse_edge_list("2 1\n0 x").is_err());
        assert!(parse_edge_list("").is_err());
        // Wrong edge counts both ways.
        assert!(parse_edge_list("3 2\n0 1").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2").is_err());
    }

    #[test]
    fn edge_list_ignores_comments_and_collapses_duplicates() {
        let g = parse_edge_list("# fixture\n3 3\n0 1\n# middle\n0 1\n1 2").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn dimacs_comment_then_edge() {
        let g = parse_dimacs("c hi\np edge 2 1\ne 1 2").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn dimacs_rejects_edge_before_problem_line() {
        let e = parse_dimacs("e 1 2").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::EdgeBeforeHeader);
    }

    #[test]
    fn dimacs_rejects_bad_indices() {
        // 1-indexed: vertex 0 and vertex n+1 are both out of range.
        assert!(parse_dimacs("p edge 2 1\ne 0 1").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\np edge 2 0").is_err());
        assert!(parse_dimacs("c only comments").is_err());
    }

    #[test]
    fn graph_round_trips_both_formats() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let n = rng.random_range(0..=12);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g);
            assert_eq!(parse_dimacs(&serialize_dimacs(&g)).unwrap(), g);
        }
    }

    #[test]
    fn coloring_round_trip_and_errors() {
        let c = parse_coloring("3 3\n0 1\n2 3\n1 2").unwrap();
        assert_eq!(c.color(0), 1);
        assert_eq!(c.color(1), 2);
        assert_eq!(c.color(2), 3);
        assert_eq!(parse_coloring(&serialize_coloring(&c)).unwrap(), c);

        // Missing vertex, duplicate vertex, color out of range.
        assert!(matches!(
            parse_coloring("2 3\n0 1").unwrap_err().kind,
            ParseErrorKind::MissingVertex { vertex: 1 }
        ));
        assert!(matches!(
            parse_coloring("2 3\n0 1\n0 2").unwrap_err().kind,
            ParseErrorKind::DuplicateVertex { vertex: 0 }
        ));
        assert!(matches!(
            parse_coloring("1 3\n0 4").unwrap_err().kind,
            ParseErrorKind::ColorOutOfRange { color: 4, k: 3 }
        ));
        assert!(matches!(
            parse_coloring("1 3\n0 0").unwrap_err().kind,
            ParseErrorKind::ColorOutOfRange { color: 0, k: 3 }
        ));
    }
}

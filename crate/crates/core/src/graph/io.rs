//! Plain-text graph format.
//!
//! ```text
//! # optional comments
//! n 6
//! 1 2
//! 2 3
//! ```
//!
//! The `n <count>` header is optional; without it the vertex count is the
//! largest endpoint mentioned.

use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

impl Graph {
    pub fn parse(text: &str) -> Result<Graph> {
        let mut declared: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            let err = |msg: String| Error::Parse { line, msg };
            if fields[0] == "n" {
                if declared.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if !edges.is_empty() {
                    return Err(err("header must precede edges".into()));
                }
                if fields.len() != 2 {
                    return Err(err("expected `n <count>`".into()));
                }
                let n: usize = fields[1].parse().map_err(|_| err(format!("bad vertex count `{}`", fields[1])))?;
                declared = Some((n, line));
                continue;
            }
            if fields.len() != 2 {
                return Err(err(format!("expected `u v`, got `{body}`")));
            }
            let parse_vertex = |s: &str| -> Result<usize> {
                s.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad vertex `{s}`") })
            };
            let (u, v) = (parse_vertex(fields[0])?, parse_vertex(fields[1])?);
            if u == 0 || v == 0 {
                return Err(err("vertices are numbered from 1".into()));
            }
            if u == v {
                return Err(err(format!("self-loop at {u}")));
            }
            edges.push((u.min(v), u.max(v), line));
        }

        let n = match declared {
            Some((n, line)) => {
                if n == 0 {
                    return Err(Error::Parse { line, msg: "vertex count must be positive".into() });
                }
                n
            }
            None => edges
                .iter()
                .map(|e| e.1)
                .max()
                .ok_or(Error::Parse { line: text.lines().count().max(1), msg: "no header and no edges".into() })?,
        };
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graph", n, cap: MAX_VERTICES });
        }
        let mut g = Graph::empty(n)?;
        for (u, v, line) in edges {
            if v > n {
                return Err(Error::Parse { line, msg: format!("vertex {v} exceeds n = {n}") });
            }
            if !g.insert_edge(u, v)? {
                return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
            }
        }
        Ok(g)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_comments_and_edges() {
        let g = Graph::parse("# a path\nn 3\n\n1 2\n2 3 # tail\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        let g = Graph::parse("1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        let g = Graph::parse("n 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            Graph::parse("n 3\n1 2\n2 x\n").unwrap_err(),
            Error::Parse { line: 3, msg: "bad vertex `x`".into() }
        );
        assert!(matches!(Graph::parse("n 2\n1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("1 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Graph::parse("1 2\n2 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("1 2\nn 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Graph::parse("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("n 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn display_round_trips() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 1), (4, 2)]).unwrap();
        assert_eq!(Graph::parse(&g.to_string()).unwrap(), g);
    }
}

//! Plain-text edge lists for hand-written fixtures.
//!
//! ```text
//! # P3
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line is `n m`, followed by exactly `m` lines of
//! 0-indexed `u v` pairs. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write;

use crate::graph::{Graph, GraphError};

fn line_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::EdgeList { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize, GraphError> {
        let field = fields.next().ok_or_else(|| line_error(line, format!("missing {name} in {what}")))?;
        field.parse().map_err(|_| line_error(line, format!("{name} {field:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(line_error(line, format!("extra fields in {what}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| line_error(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        if edges.len() == m {
            return Err(line_error(line, format!("more than the {m} declared edges")));
        }
        let (u, v) = parse_pair(line, text, "edge")?;
        if u >= n || v >= n {
            return Err(line_error(line, format!("endpoint out of range for n = {n}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(line_error(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

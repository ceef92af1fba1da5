use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format: a header `n m`, then `m` lines
/// `u v` with `0 <= u < v < n`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let nums = parse_pair(header, 1)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines {
        let (u, v) = parse_pair(line, i + 1)?;
        if !(u < v && v < n) {
            return Err(Error::Parse { line: i + 1, msg: format!("edge ({u}, {v}) violates 0 <= u < v < {n}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: 1, msg: format!("header declares {m} edges, found {}", edges.len()) });
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|e| Error::Parse { line: line_no, msg: format!("{t:?}: {e}") })
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse { line: line_no, msg: "expected two integers".into() }),
    }
}

/// Canonical text form: header then edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

//! Plain-text edge lists: a header line `n m`, then one `u v` line per edge.
//!
//! Vertices are 0-indexed. Writing emits `u < v` in sorted order; reading
//! accepts either orientation and any order, but rejects loops, duplicates
//! and a header that disagrees with the body.

use std::fmt::Write as _;

use degentropy_core::LabeledGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Blank lines and `#` comments are skipped.
pub fn parse(input: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header \"n m\""))?;
    let (n, m) = pair(header_line, header)?;
    let mut graph = LabeledGraph::empty(n);
    let mut last = header_line;
    for (line, text) in lines {
        let (u, v) = pair(line, text)?;
        graph.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
        last = line;
    }
    if graph.size() != m {
        return Err(err(
            last,
            format!("header declares {m} edges but {} were listed", graph.size()),
        ));
    }
    Ok(graph)
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let field = fields
            .next()
            .ok_or_else(|| err(line, format!("expected two integers, missing {what}")))?;
        field
            .parse()
            .map_err(|_| err(line, format!("invalid integer {field:?}")))
    };
    let a = next("first")?;
    let b = next("second")?;
    if let Some(extra) = fields.next() {
        return Err(err(line, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn write(graph: &LabeledGraph) -> String {
    let mut out = format!("{} {}\n", graph.order(), graph.size());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

//! Text file formats for stabilizer groups and graphs.
//!
//! Both formats are line oriented: blank lines and lines whose first
//! non-space character is `#` are ignored everywhere.
//!
//! **Stabilizer format** — a header `n <count>` followed by exactly `count`
//! Pauli strings, one per line, each with an optional `+`/`-` sign:
//!
//! ```text
//! # the three-qubit GHZ state
//! n 3
//! XXX
//! ZZI
//! IZZ
//! ```
//!
//! **Graph format** — a header `graph <n>` followed by one `u v` edge per
//! line (0-indexed, undirected, no self-loops, no duplicates):
//!
//! ```text
//! graph 2
//! 0 1
//! ```

use stabsplit_core::{Error, GraphAdjacency, PauliOperator, StabilizerGroup};
use std::fmt;

/// A parse or validation failure, located by 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseFileError {
    /// 1-based line number the error is attributed to.
    pub line: usize,
    /// Human-readable description of what went wrong there.
    pub message: String,
}

impl ParseFileError {
    fn new(line: usize, message: impl Into<String>) -> ParseFileError {
        ParseFileError { line, message: message.into() }
    }
}

impl fmt::Display for ParseFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseFileError {}

/// Lines that carry content: (1-based line number, trimmed text).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Number of the line just past the end of `text`, for "file ended early"
/// errors.
fn line_past_end(text: &str) -> usize {
    text.lines().count() + 1
}

/// Parses the stabilizer file format into a validated group.
pub fn parse_stab(text: &str) -> Result<StabilizerGroup, ParseFileError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseFileError::new(line_past_end(text), "missing `n <count>` header"))?;
    let count = parse_header(header, "n")
        .ok_or_else(|| ParseFileError::new(header_line, "expected header `n <count>`"))?;

    let mut gens: Vec<(usize, PauliOperator)> = Vec::with_capacity(count);
    for (line_no, line) in lines {
        if gens.len() == count {
            return Err(ParseFileError::new(
                line_no,
                format!("unexpected content after {count} generator lines"),
            ));
        }
        match line.parse::<PauliOperator>() {
            Ok(op) => gens.push((line_no, op)),
            Err(e) => return Err(ParseFileError::new(line_no, e.to_string())),
        }
    }
    if gens.len() < count {
        return Err(ParseFileError::new(
            line_past_end(text),
            format!("expected {count} generator lines, found {}", gens.len()),
        ));
    }

    let ops: Vec<PauliOperator> = gens.iter().map(|(_, op)| op.clone()).collect();
    StabilizerGroup::new(ops).map_err(|e| {
        // Attribute the failure to the most specific generator line we can.
        let line = match e {
            Error::MixedQubitCounts { index } => gens[index].0,
            Error::NonCommutingGenerators { i: _, j } => gens[j].0,
            _ => header_line,
        };
        ParseFileError::new(line, e.to_string())
    })
}

/// Parses the graph file format into a validated adjacency.
pub fn parse_graph(text: &str) -> Result<GraphAdjacency, ParseFileError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| {
        ParseFileError::new(line_past_end(text), "missing `graph <n>` header")
    })?;
    let n = parse_header(header, "graph")
        .ok_or_else(|| ParseFileError::new(header_line, "expected header `graph <n>`"))?;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (line_no, line) in lines {
        let mut fields = line.split_whitespace();
        let edge = match (fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), None) => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = edge.ok_or_else(|| {
            ParseFileError::new(line_no, "expected an edge line `u v` with two vertex indices")
        })?;
        edges.push((u, v));
        // Re-validate cumulatively so range/self-loop/duplicate errors point
        // at the line that introduced them.
        GraphAdjacency::from_edges(n, &edges)
            .map_err(|e| ParseFileError::new(line_no, e.to_string()))?;
    }
    GraphAdjacency::from_edges(n, &edges)
        .map_err(|e| ParseFileError::new(header_line, e.to_string()))
}

/// Parses `"<keyword> <count>"`, returning the count.
fn parse_header(line: &str, keyword: &str) -> Option<usize> {
    let mut fields = line.split_whitespace();
    match (fields.next(), fields.next(), fields.next()) {
        (Some(k), Some(value), None) if k == keyword => value.parse().ok(),
        _ => None,
    }
}

//! DIMACS `.col` reader and writer.
//!
//! Labels are 1-based in the file and 0-based everywhere else.

use std::fmt::Write as _;

use super::{Edge, Graph, GraphError};

/// Parses DIMACS `.col` text. Repeated `e` lines for the same pair are
/// dropped; the header's edge count is only checked with a warning.
pub fn parse_dimacs(text: &[u8]) -> Result<Graph, GraphError> {
    let text = std::str::from_utf8(text).map_err(|e| GraphError::Syntax {
        line: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;

    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let syntax = |message: &str| GraphError::Syntax {
            line,
            message: message.to_owned(),
        };
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else {
            continue;
        };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(syntax("second `p` line"));
                }
                match fields.next() {
                    Some("edge" | "col") => {}
                    _ => return Err(syntax("expected `p edge <n> <m>`")),
                }
                let n = parse_count(fields.next(), line)?;
                let m = parse_count(fields.next(), line)?;
                if fields.next().is_some() {
                    return Err(syntax("trailing fields on `p` line"));
                }
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(GraphError::MissingHeader)?;
                let u = parse_label(fields.next(), n, line)?;
                let v = parse_label(fields.next(), n, line)?;
                if fields.next().is_some() {
                    return Err(syntax("trailing fields on `e` line"));
                }
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                edges.push((u.min(v), u.max(v)));
            }
            other => return Err(syntax(&format!("unknown line type `{other}`"))),
        }
    }

    let (n, declared_m) = header.ok_or(GraphError::MissingHeader)?;
    edges.sort_unstable();
    edges.dedup();
    if edges.len() != declared_m {
        log::warn!(
            "DIMACS header declares {declared_m} edges but {} distinct edges were read",
            edges.len()
        );
    }
    Graph::from_edges(n, &edges)
}

fn parse_count(field: Option<&str>, line: usize) -> Result<usize, GraphError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| GraphError::Syntax {
            line,
            message: "expected a non-negative integer".to_owned(),
        })
}

fn parse_label(field: Option<&str>, n: usize, line: usize) -> Result<usize, GraphError> {
    let label = parse_count(field, line)?;
    if label == 0 || label > n {
        return Err(GraphError::VertexOutOfRange { vertex: label, n });
    }
    Ok(label - 1)
}

/// Writes the header and sorted `e` lines with LF endings and no comments.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String cannot fail");
    }
    out
}

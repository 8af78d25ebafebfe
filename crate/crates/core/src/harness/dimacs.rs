//! DIMACS graph files and vertex colouring files.
//!
//! Graphs: `c` comment lines, one `p edge <n> <m>` header, then `e <u> <v>`
//! lines with 1-based endpoints. Colourings: `v <vertex> <colour>` lines,
//! both 1-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match token.map(str::parse::<usize>) {
        Some(Ok(x)) => Ok(x),
        Some(Err(_)) => parse_error(line, format!("{what} is not a non-negative integer")),
        None => parse_error(line, format!("missing {what}")),
    }
}

/// Content lines with their 1-based line numbers; blank and comment lines
/// are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return parse_error(line, "second problem line");
                }
                match tokens.get(1) {
                    Some(&"edge") | Some(&"col") => {}
                    _ => return parse_error(line, "expected `p edge <n> <m>`"),
                }
                let n = number(tokens.get(2).copied(), line, "vertex count")?;
                let m = number(tokens.get(3).copied(), line, "edge count")?;
                if tokens.len() > 4 {
                    return parse_error(line, "trailing tokens after the problem line");
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return parse_error(line, "edge before the problem line");
                };
                let u = number(tokens.get(1).copied(), line, "first endpoint")?;
                let v = number(tokens.get(2).copied(), line, "second endpoint")?;
                if tokens.len() > 3 {
                    return parse_error(line, "trailing tokens after an edge");
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return parse_error(line, format!("endpoint {x} outside 1..={n}"));
                    }
                }
                if u == v {
                    return parse_error(line, format!("self-loop at vertex {u}"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return parse_error(line, format!("unknown line type `{other}`")),
        }
    }
    let Some((n, m)) = header else {
        return parse_error(text.lines().count().max(1), "missing problem line");
    };
    let g = Graph::new(n, &edges)?;
    if edges.len() != m {
        log::warn!("problem line declares {m} edges, file lists {}", edges.len());
    }
    Ok(g)
}

pub fn write_dimacs(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let edges = g.edges();
    let _ = writeln!(out, "p edge {} {}", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Reads a colouring of an `n`-vertex graph. Every vertex must appear once.
/// The palette is the largest colour used.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut colors = vec![0u8; n];
    for (line, tokens) in content_lines(text) {
        if tokens[0] != "v" || tokens.len() != 3 {
            return parse_error(line, "expected `v <vertex> <colour>`");
        }
        let v = number(tokens.get(1).copied(), line, "vertex")?;
        let c = number(tokens.get(2).copied(), line, "colour")?;
        if v == 0 || v > n {
            return parse_error(line, format!("vertex {v} outside 1..={n}"));
        }
        if c == 0 || c > u8::MAX as usize {
            return parse_error(line, format!("colour {c} outside 1..=255"));
        }
        if colors[v - 1] != 0 {
            return parse_error(line, format!("vertex {v} coloured twice"));
        }
        colors[v - 1] = c as u8;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return parse_error(text.lines().count().max(1), format!("vertex {} has no colour", v + 1));
    }
    let palette = colors.iter().copied().max().unwrap_or(1);
    Coloring::new(colors, palette)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, &color) in c.as_slice().iter().enumerate() {
        let _ = writeln!(out, "v {} {}", v + 1, color);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let g = parse_dimacs("c path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));

        let c5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        assert_eq!(parse_dimacs(c5).unwrap(), Graph::cycle(5));

        let dup = parse_dimacs("p edge 2 3\ne 1 2\ne 2 1\ne 1 2\n").unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_dimacs("p edge 3 1\ne 1 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, message: "self-loop at vertex 1".into() });
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge x 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("c only\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p edge 2 0\nq\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn round_trips() {
        let g = crate::patterns::Pattern::F0.graph();
        assert_eq!(parse_dimacs(&write_dimacs(&g, &["F0", "two\nlines"])).unwrap(), g);

        let c = Coloring::new(vec![1, 2, 1, 3], 3).unwrap();
        assert_eq!(parse_coloring(&write_coloring(&c), 4).unwrap(), c);
        assert!(parse_coloring("v 1 1\n", 2).is_err());
        assert!(parse_coloring("v 1 1\nv 1 2\n", 1).is_err());
        assert!(parse_coloring("v 1 0\n", 1).is_err());
    }
}

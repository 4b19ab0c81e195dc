//! Text formats.
//!
//! Vertices are written as n characters over {0,1} with coordinate n first
//! (the usual binary spelling of the vertex integer, coordinate 1 = LSB).
//!
//! Set files hold one vertex per line. Tree files start with `n=<dim>` and
//! then hold exactly 2^n - 1 lines `<u> <v>`, one per edge. In both, blank
//! lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::cube::{order, CubeEdge, Vertex, VertexSet};
use crate::error::{CubeError, Result};
use crate::tree::SpanningTree;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, l: &str) -> Result<u32> {
    l.strip_prefix("n=")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| CubeError::Parse { line, msg: format!("expected `n=<dim>`, found {l:?}") })
}

fn parse_vertex(line: usize, s: &str, n: u32) -> Result<Vertex> {
    Vertex::parse(s, n).map_err(|msg| CubeError::Parse { line, msg })
}

pub fn write_set(set: &VertexSet) -> String {
    let n = set.dim();
    set.iter().fold(String::new(), |mut out, v| {
        let _ = writeln!(out, "{}", v.to_text(n));
        out
    })
}

/// Reads a set file for Q_n. An optional leading `n=<dim>` line must match `n`.
pub fn parse_set(text: &str, n: u32) -> Result<VertexSet> {
    let mut set = VertexSet::new(n)?;
    for (idx, (line, l)) in content_lines(text).enumerate() {
        if idx == 0 && l.starts_with("n=") {
            let dim = parse_header(line, l)?;
            if dim != n {
                return Err(CubeError::Parse { line, msg: format!("file is for Q_{dim}, expected Q_{n}") });
            }
            continue;
        }
        set.insert(parse_vertex(line, l, n)?);
    }
    Ok(set)
}

pub fn write_tree(tree: &SpanningTree) -> String {
    let n = tree.n;
    let mut out = format!("n={n}\n");
    for e in &tree.edges {
        let _ = writeln!(out, "{} {}", e.u.to_text(n), e.v.to_text(n));
    }
    out
}

/// Reads a tree file. Malformed lines and a wrong edge count are parse
/// errors; edges that are not cube edges are kept for [`crate::tree::verify_tree`].
pub fn parse_tree(text: &str, expect_n: Option<u32>) -> Result<SpanningTree> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or(CubeError::Parse { line: 1, msg: "empty tree file".into() })?;
    let n = parse_header(line, header)?;
    if let Some(want) = expect_n.filter(|&w| w != n) {
        return Err(CubeError::Parse { line, msg: format!("file is for Q_{n}, expected Q_{want}") });
    }
    crate::cube::check_dim(n)?;

    let mut edges = Vec::new();
    let mut last = line;
    for (line, l) in lines {
        last = line;
        let mut parts = l.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(CubeError::Parse { line, msg: format!("expected two vertices, found {l:?}") });
        };
        let (a, b) = (parse_vertex(line, a, n)?, parse_vertex(line, b, n)?);
        edges.push(CubeEdge::ordered(a, b));
    }
    let expected = order(n) - 1;
    if edges.len() != expected {
        return Err(CubeError::Parse {
            line: last,
            msg: format!("found {} edges, a spanning tree of Q_{n} has {expected}", edges.len()),
        });
    }
    SpanningTree::from_edges(n, edges)
}

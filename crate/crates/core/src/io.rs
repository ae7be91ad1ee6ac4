//! Text formats: edge lists, graph6 records and coloring files.
//!
//! An edge list starts with a line `n m` followed by `m` lines `u v` with
//! 0-based ids. A coloring file has one line `vertexid colorname` per vertex.

use std::fmt::{Display, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("edge list declares {declared} edges but has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid graph6 record: {0}")]
    Graph6(String),
    #[error("vertex {0} has no color")]
    MissingVertex(usize),
    #[error("vertex {0} is colored twice")]
    DuplicateVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn parse_num<T: FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} {tok:?}")))
}

/// Lines with content, numbered from 1; `#` starts a comment.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "missing header line"))?;
    let mut toks = header.split_whitespace();
    let n: usize = parse_num(toks.next(), hl, "vertex count")?;
    let m: usize = parse_num(toks.next(), hl, "edge count")?;
    if toks.next().is_some() {
        return Err(syntax(hl, "header must be `n m`"));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        let u = parse_num(toks.next(), ln, "endpoint")?;
        let v = parse_num(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return Err(syntax(ln, "edge line must be `u v`"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses one graph6 record (an optional `>>graph6<<` header is accepted).
pub fn read_graph6(record: &str) -> Result<Graph, ParseError> {
    let record = record.trim();
    let record = record.strip_prefix(">>graph6<<").unwrap_or(record);
    let bytes = record.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6("byte outside 63..=126".into()));
    }
    let (n, rest) = match bytes {
        [] => return Err(ParseError::Graph6("empty record".into())),
        [126, 126, r @ ..] if r.len() >= 6 => (sextets(&r[..6]), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (sextets(&r[..3]), &r[3..]),
        [126, ..] => return Err(ParseError::Graph6("truncated vertex count".into())),
        [b, r @ ..] => ((*b - 63) as usize, r),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges)?)
}

fn sextets(bytes: &[u8]) -> usize {
    bytes.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Reads every non-empty line of a graph6 stream.
pub fn read_graph6_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(read_graph6).collect()
}

pub fn write_coloring<C: Copy + Display>(f: &Coloring<C>) -> String {
    let mut s = String::new();
    for (v, c) in f.iter().enumerate() {
        let _ = writeln!(s, "{v} {c}");
    }
    s
}

/// Parses a coloring file for a graph on `n` vertices; lines may come in any
/// order but every vertex must appear exactly once.
pub fn read_coloring<C: Copy + FromStr>(text: &str, n: usize) -> Result<Coloring<C>, ParseError> {
    let mut slots: Vec<Option<C>> = vec![None; n];
    for (ln, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        let v: usize = parse_num(toks.next(), ln, "vertex id")?;
        let name = toks.next().ok_or_else(|| syntax(ln, "missing color"))?;
        if toks.next().is_some() {
            return Err(syntax(ln, "coloring line must be `vertexid colorname`"));
        }
        if v >= n {
            return Err(syntax(ln, format!("vertex {v} out of range for n = {n}")));
        }
        let c = name.parse().map_err(|_| syntax(ln, format!("unknown color {name:?}")))?;
        if slots[v].replace(c).is_some() {
            return Err(ParseError::DuplicateVertex(v));
        }
    }
    let colors = slots
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or(ParseError::MissingVertex(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coloring::new(colors))
}

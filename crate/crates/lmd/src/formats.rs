//! graph6, edge-list and bipartite edge-list codecs.
//!
//! graph6 follows the nauty layout: the order `n` as one byte `63 + n` for
//! `n <= 62`, otherwise `126` plus three 6-bit groups (or `126 126` plus six
//! groups above 258047), then the upper triangle column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, offset by 63.
//!
//! Edge lists are whitespace separated: `n m` then `m` pairs `u v`, or
//! `n1 n2 m` then pairs `u v` with `v` counted from 0 on side 2. Lines
//! starting with `#` are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use lmd_core::{BipartiteGraph, Graph};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6: byte {0} outside 63..=126")]
    BadByte(u8),
    #[error("graph6: truncated input")]
    Truncated,
    #[error("graph6: {found} data bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    Padding,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("declared {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid edge: {0}")]
    Edge(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("cannot recognise the input format")]
    Undetected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
    BipEdgeList,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
            Format::BipEdgeList => "bip-edgelist",
        }
    }
}

impl FromStr for Format {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::EdgeList),
            "bip-edgelist" => Ok(Format::BipEdgeList),
            other => Err(FormatError::UnknownFormat(other.to_string())),
        }
    }
}

/// A decoded input: bipartite edge lists keep their sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    General(Graph),
    Bipartite(BipartiteGraph),
}

impl Input {
    /// The graph with side 1 first for bipartite input.
    pub fn graph(&self) -> Graph {
        match self {
            Input::General(g) => g.clone(),
            Input::Bipartite(b) => b.embed().0,
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    if n <= SMALL_MAX {
        out.push(63 + n as u8);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push_groups(&mut out, n as u64, 3);
    } else {
        out.extend([126, 126]);
        push_groups(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn push_groups(out: &mut Vec<u8>, n: u64, groups: u32) {
    for i in (0..groups).rev() {
        out.push(63 + ((n >> (6 * i)) & 63) as u8);
    }
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
/// Surrounding whitespace is ignored.
pub fn decode_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::BadByte(b));
    }
    let groups = |from: usize, count: usize| -> Result<usize, FormatError> {
        let slice = bytes.get(from..from + count).ok_or(FormatError::Truncated)?;
        Ok(slice.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, start) = match bytes {
        [126, 126, ..] => (groups(2, 6)?, 8),
        [126, ..] => (groups(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
        [] => unreachable!(),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let data = &bytes[start..];
    let expected = pairs.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::Length {
            expected,
            found: data.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(FormatError::Padding);
        }
    }
    Ok(g)
}

pub fn encode_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn encode_bip_edgelist(b: &BipartiteGraph) -> String {
    let mut s = format!("{} {} {}\n", b.n1(), b.n2(), b.edge_count());
    for (u, v) in b.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N], FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(FormatError::Syntax {
            line,
            msg: format!("expected {N} fields, found {}", fields.len()),
        });
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| FormatError::Syntax {
            line,
            msg: format!("`{f}` is not a vertex index or count"),
        })?;
    }
    Ok(out)
}

pub fn decode_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let [n, m] = numbers::<2>(line, header)?;
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, text) in lines {
        let [u, v] = numbers::<2>(line, text)?;
        g.add_edge(u, v)
            .map_err(|e| FormatError::Edge(format!("line {line}: {e}")))?;
        found += 1;
    }
    if found != m {
        return Err(FormatError::EdgeCount { declared: m, found });
    }
    Ok(g)
}

pub fn decode_bip_edgelist(text: &str) -> Result<BipartiteGraph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let [n1, n2, m] = numbers::<3>(line, header)?;
    let mut b = BipartiteGraph::empty(n1, n2);
    let mut found = 0;
    for (line, text) in lines {
        let [u, v] = numbers::<2>(line, text)?;
        b.add_edge(u, v)
            .map_err(|e| FormatError::Edge(format!("line {line}: {e}")))?;
        found += 1;
    }
    if found != m {
        return Err(FormatError::EdgeCount { declared: m, found });
    }
    Ok(b)
}

/// Guesses the format: a header with three fields is a bipartite edge list,
/// two fields an edge list, and a single printable token graph6.
pub fn detect(text: &str) -> Result<Format, FormatError> {
    let (_, first) = content_lines(text).next().ok_or(FormatError::Empty)?;
    if first.starts_with(HEADER) {
        return Ok(Format::Graph6);
    }
    let fields: Vec<&str> = first.split_whitespace().collect();
    let numeric = fields.iter().all(|f| f.bytes().all(|b| b.is_ascii_digit()));
    match fields.len() {
        2 if numeric => Ok(Format::EdgeList),
        3 if numeric => Ok(Format::BipEdgeList),
        1 if first.bytes().all(|b| (63..=126).contains(&b)) => Ok(Format::Graph6),
        _ => Err(FormatError::Undetected),
    }
}

pub fn read_input(text: &str, format: Option<Format>) -> Result<Input, FormatError> {
    let format = match format {
        Some(f) => f,
        None => detect(text)?,
    };
    match format {
        Format::Graph6 => {
            let (_, first) = content_lines(text).next().ok_or(FormatError::Empty)?;
            decode_graph6(first).map(Input::General)
        }
        Format::EdgeList => decode_edgelist(text).map(Input::General),
        Format::BipEdgeList => decode_bip_edgelist(text).map(Input::Bipartite),
    }
}

/// Writes a graph in a general format; bipartite edge lists need sides, so
/// they go through [`write_bipartite`].
pub fn write_graph(g: &Graph, format: Format) -> Result<String, FormatError> {
    match format {
        Format::Graph6 => Ok(encode_graph6(g) + "\n"),
        Format::EdgeList => Ok(encode_edgelist(g)),
        Format::BipEdgeList => match g.bipartition() {
            Some((b, _)) => Ok(encode_bip_edgelist(&b)),
            None => Err(FormatError::Edge("graph is not bipartite".into())),
        },
    }
}

pub fn write_bipartite(b: &BipartiteGraph, format: Format) -> String {
    match format {
        Format::BipEdgeList => encode_bip_edgelist(b),
        other => write_graph(&b.embed().0, other).expect("general formats accept any graph"),
    }
}

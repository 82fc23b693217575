//! Text formats: graph files, vertex lists, precolouring and list files.
//!
//! Graph files have a header `p <vertices> <edges>` followed by one
//! `e <u> <v>` line per edge. Vertices are named `1..=n` externally and
//! stored as `VertexId(0..n)`. Lines starting with `c` are comments.

use std::collections::{BTreeMap, BTreeSet};

use hadwiger_core::{Color, Graph, VertexId, VertexSet};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Significant lines with their 1-based numbers: comments and blank lines
/// are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None => None,
            Some(f) if f.starts_with('c') => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn number(line: usize, field: &str, what: &str) -> Result<usize, FormatError> {
    field
        .parse()
        .or_else(|_| err(line, format!("{what} `{field}` is not a nonnegative integer")))
}

/// Parses an external 1-based vertex name against `n` vertices.
pub fn vertex(line: usize, field: &str, n: usize) -> Result<VertexId, FormatError> {
    let i = number(line, field, "vertex")?;
    if i == 0 || i > n {
        return err(line, format!("vertex {i} is outside 1..={n}"));
    }
    Ok(VertexId((i - 1) as u32))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut last_line = 0;
    for (line, fields) in content_lines(text) {
        last_line = line;
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return err(line, "duplicate header");
                }
                if fields.len() != 3 {
                    return err(line, "header must be `p <vertices> <edges>`");
                }
                let n = number(line, fields[1], "vertex count")?;
                if n > u32::MAX as usize {
                    return err(line, "too many vertices");
                }
                header = Some((line, n, number(line, fields[2], "edge count")?));
            }
            "e" => {
                let Some((_, n, _)) = header else {
                    return err(line, "edge before header");
                };
                if fields.len() != 3 {
                    return err(line, "edge line must be `e <u> <v>`");
                }
                let u = vertex(line, fields[1], n)?;
                let v = vertex(line, fields[2], n)?;
                if u == v {
                    return err(line, format!("loop at vertex {}", u.0 + 1));
                }
                if !edges.insert((u.min(v), u.max(v))) {
                    return err(line, format!("duplicate edge {} {}", u.0 + 1, v.0 + 1));
                }
            }
            other => return err(line, format!("unknown line type `{other}`")),
        }
    }
    let Some((header_line, n, m)) = header else {
        return err(last_line.max(1), "missing header `p <vertices> <edges>`");
    };
    if edges.len() != m {
        return err(header_line, format!("header declares {m} edges but {} were given", edges.len()));
    }
    Ok(Graph::new((0..n as u32).map(VertexId), edges).expect("edges were validated"))
}

/// Writes `g` with vertices renamed to `1..=n` in identity order.
pub fn write_graph(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let name = |v: VertexId| ids.binary_search(&v).expect("vertex of g") + 1;
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", name(e.low()), name(e.high())));
    }
    out
}

/// Comma-separated vertex names, e.g. `1,4,7`. The empty string is the empty set.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, FormatError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| vertex(1, s, n))
        .collect()
}

/// Lines `<vertex> <color>`.
pub fn parse_precolor(text: &str, n: usize) -> Result<BTreeMap<VertexId, Color>, FormatError> {
    let mut out = BTreeMap::new();
    for (line, fields) in content_lines(text) {
        if fields.len() != 2 {
            return err(line, "precolour line must be `<vertex> <color>`");
        }
        let v = vertex(line, fields[0], n)?;
        let c = number(line, fields[1], "colour")? as Color;
        if out.insert(v, c).is_some() {
            return err(line, format!("vertex {} precoloured twice", v.0 + 1));
        }
    }
    Ok(out)
}

/// Lines `<vertex> <c1> <c2> ...`.
pub fn parse_lists(text: &str, n: usize) -> Result<BTreeMap<VertexId, BTreeSet<Color>>, FormatError> {
    let mut out = BTreeMap::new();
    for (line, fields) in content_lines(text) {
        if fields.len() < 2 {
            return err(line, "list line must be `<vertex> <c1> <c2> ...`");
        }
        let v = vertex(line, fields[0], n)?;
        let colors = fields[1..]
            .iter()
            .map(|f| number(line, f, "colour").map(|c| c as Color))
            .collect::<Result<BTreeSet<Color>, _>>()?;
        if colors.len() != fields.len() - 1 {
            return err(line, "repeated colour in list");
        }
        if out.insert(v, colors).is_some() {
            return err(line, format!("vertex {} listed twice", v.0 + 1));
        }
    }
    Ok(out)
}

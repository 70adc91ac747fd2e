//! Flat-file formats for building sets and graphs.
//!
//! Both formats are line based: `#` starts a comment, blank lines are
//! ignored, and labels are positive integers. A building-set file holds one
//! member set per line with an optional `ground:` declaration; a graph file
//! holds one edge per line with an optional `vertices:` declaration for
//! isolated vertices. Emission is canonical, so emit-then-parse round-trips.

use crate::building::{BuildingSet, BuildingSetError};
use crate::graph::{GraphError, SimpleGraph};
use crate::set::{ElementSet, MAX_LABEL};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error(transparent)]
    Building(#[from] BuildingSetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_label(token: &str, line_no: usize) -> Result<u32, FileError> {
    let value: u32 = token
        .parse()
        .map_err(|_| FileError::Parse(line_no, format!("expected a label, found {token:?}")))?;
    if value == 0 || value > MAX_LABEL {
        return Err(FileError::Parse(
            line_no,
            format!("label {value} is outside 1..={MAX_LABEL}"),
        ));
    }
    Ok(value)
}

fn parse_label_set(tokens: &str, line_no: usize) -> Result<ElementSet, FileError> {
    let mut set = ElementSet::EMPTY;
    for token in tokens.split_whitespace() {
        set = set.with(parse_label(token, line_no)?);
    }
    Ok(set)
}

/// Parses a building-set file. Every non-blank, non-comment line is one
/// member set; an optional `ground: …` line fixes the ground set, which
/// otherwise defaults to the union of the members. With `add_singletons`,
/// the singleton of every ground element is appended before validation.
pub fn parse_building_set_file(
    text: &str,
    add_singletons: bool,
) -> Result<BuildingSet, FileError> {
    let mut ground: Option<ElementSet> = None;
    let mut members: Vec<ElementSet> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("ground:") {
            if ground.is_some() {
                return Err(FileError::Parse(
                    line_no,
                    "duplicate ground declaration".to_string(),
                ));
            }
            ground = Some(parse_label_set(rest, line_no)?);
            continue;
        }
        let member = parse_label_set(line, line_no)?;
        members.push(member);
    }
    let ground = ground.unwrap_or_else(|| {
        members
            .iter()
            .fold(ElementSet::EMPTY, |acc, &m| acc | m)
    });
    if add_singletons {
        members.extend(ground.iter().map(ElementSet::singleton));
    }
    Ok(BuildingSet::new(ground, members)?)
}

/// Canonical text for a building set: the ground declaration followed by one
/// member per line in the building set's own (cardinality, lexicographic)
/// order.
pub fn emit_building_set(b: &BuildingSet) -> String {
    let mut out = String::new();
    out.push_str("ground:");
    for v in b.ground().iter() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    for m in b.members() {
        let labels: Vec<String> = m.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a graph file. Every non-blank, non-comment line is one edge
/// `u v`; an optional `vertices: …` line declares the vertex set (required
/// for isolated vertices), which otherwise defaults to the union of the
/// edge endpoints.
pub fn parse_graph_file(text: &str) -> Result<SimpleGraph, FileError> {
    let mut declared: Option<ElementSet> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut endpoints = ElementSet::EMPTY;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if declared.is_some() {
                return Err(FileError::Parse(
                    line_no,
                    "duplicate vertices declaration".to_string(),
                ));
            }
            declared = Some(parse_label_set(rest, line_no)?);
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(FileError::Parse(
                line_no,
                format!("expected an edge as two labels, found {} token(s)", tokens.len()),
            ));
        }
        let u = parse_label(tokens[0], line_no)?;
        let v = parse_label(tokens[1], line_no)?;
        if u == v {
            return Err(FileError::Graph(GraphError::LoopEdge(u)));
        }
        endpoints = endpoints.with(u).with(v);
        edges.push((u, v));
    }
    let mut g = SimpleGraph::new(declared.unwrap_or(endpoints));
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Canonical text for a graph: the vertex declaration followed by the sorted
/// edge list.
pub fn emit_graph(g: &SimpleGraph) -> String {
    let mut out = String::new();
    out.push_str("vertices:");
    for v in g.vertices().iter() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

//! File loading and label-text plumbing shared by the subcommands.
//!
//! graph6 carries no label information, so graphs whose vertices are
//! tuples or words travel with a sidecar: a JSON array giving the
//! rendered label of each vertex in canonical order. Sidecar entries
//! are parsed back structurally — `(1,2)` is a tuple, anything else is
//! a word (comma-separated symbols, or one symbol per digit) — since
//! integer-labeled graphs never need a sidecar. Arc-list vertex names
//! follow the opposite convention: bare digits mean integers, because
//! arc lists describe tournaments, orientations, and line digraphs.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use shiftrep_core::{graph6_decode, Digraph, LabeledGraph, VertexLabel};

use crate::error::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

/// Loads a graph6 file, applying a label sidecar when given.
pub fn load_graph(graph_path: &Path, labels_path: Option<&Path>) -> Result<LabeledGraph, CliError> {
    let text = read_text(graph_path)?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError::usage(format!("{} is empty", graph_path.display())))?;
    let g = graph6_decode(line)
        .map_err(|e| CliError::usage(format!("{}: {e}", graph_path.display())))?;
    match labels_path {
        None => Ok(g),
        Some(path) => apply_sidecar(&g, path),
    }
}

fn apply_sidecar(g: &LabeledGraph, path: &Path) -> Result<LabeledGraph, CliError> {
    let text = read_text(path)?;
    let rendered: Vec<String> = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: not a JSON array of labels: {e}", path.display())))?;
    if rendered.len() != g.vertex_count() {
        return Err(CliError::usage(format!(
            "{}: {} labels for a graph with {} vertices",
            path.display(),
            rendered.len(),
            g.vertex_count()
        )));
    }
    let labels: Vec<VertexLabel> = rendered
        .iter()
        .map(|s| parse_sidecar_label(s))
        .collect::<Result<_, _>>()?;
    let table: HashMap<VertexLabel, VertexLabel> = g
        .labels()
        .iter()
        .cloned()
        .zip(labels.iter().cloned())
        .collect();
    g.map_labels(|l| table[l].clone())
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// Parses one sidecar entry: `(…)` as a tuple, otherwise as a word.
pub fn parse_sidecar_label(text: &str) -> Result<VertexLabel, CliError> {
    let bad = || CliError::usage(format!("cannot parse label {text:?}"));
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let entries: Vec<u32> = inner
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if entries.is_empty() {
            return Err(bad());
        }
        return Ok(VertexLabel::tuple(&entries));
    }
    let symbols: Vec<u32> = if text.contains(',') {
        text.split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    if symbols.is_empty() {
        return Err(bad());
    }
    Ok(VertexLabel::string(&symbols))
}

/// Parses an arc-list vertex name: `(…)` as a tuple, bare digits as an
/// integer.
pub fn parse_arc_vertex(text: &str) -> Result<VertexLabel, CliError> {
    let text = text.trim();
    if text.starts_with('(') {
        return parse_sidecar_label(text);
    }
    text.parse::<u32>()
        .map(VertexLabel::int)
        .map_err(|_| CliError::usage(format!("cannot parse vertex name {text:?}")))
}

/// Rendered-label lookup table for resolving textual vertex names
/// against a concrete graph.
pub fn label_lookup(labels: &[VertexLabel]) -> HashMap<String, VertexLabel> {
    labels.iter().map(|l| (l.to_string(), l.clone())).collect()
}

pub fn resolve_label(
    lookup: &HashMap<String, VertexLabel>,
    token: &str,
) -> Result<VertexLabel, CliError> {
    lookup.get(token.trim()).cloned().ok_or_else(|| {
        CliError::usage(format!("{token:?} does not name a vertex of the graph"))
    })
}

/// Splits a comma-separated letter list, keeping parenthesized tuples
/// intact: `"(1,2),(2,3)"` yields two tokens.
pub fn split_letters(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0u32;
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                tokens.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() || !tokens.is_empty() {
        tokens.push(current.trim().to_string());
    }
    tokens.retain(|t| !t.is_empty());
    tokens
}

/// Builds a digraph from a parsed arc list; vertex names may appear in
/// the explicit vertex list, the arcs, or both.
pub fn digraph_from_arc_list(
    vertices: &Option<Vec<String>>,
    arcs: &[[String; 2]],
) -> Result<Digraph, CliError> {
    let mut labels: Vec<VertexLabel> = Vec::new();
    let push = |l: VertexLabel, labels: &mut Vec<VertexLabel>| {
        if !labels.contains(&l) {
            labels.push(l);
        }
    };
    if let Some(names) = vertices {
        for name in names {
            push(parse_arc_vertex(name)?, &mut labels);
        }
    }
    let mut parsed_arcs = Vec::new();
    for [tail, head] in arcs {
        let t = parse_arc_vertex(tail)?;
        let h = parse_arc_vertex(head)?;
        push(t.clone(), &mut labels);
        push(h.clone(), &mut labels);
        parsed_arcs.push((t, h));
    }
    Digraph::new(labels, &parsed_arcs).map_err(|e| CliError::usage(e.to_string()))
}

/// JSON edge-list rendering of an undirected graph.
pub fn edge_list_json(g: &LabeledGraph) -> String {
    let vertices: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
    let edges: Vec<[String; 2]> = g
        .edge_labels()
        .map(|(a, b)| [a.to_string(), b.to_string()])
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "vertices": vertices,
        "edges": edges,
    }))
    .expect("edge list serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sidecar_entries_parse_structurally() {
        assert_eq!(
            parse_sidecar_label("(1,2)").unwrap(),
            VertexLabel::tuple(&[1, 2])
        );
        assert_eq!(
            parse_sidecar_label("12").unwrap(),
            VertexLabel::string(&[1, 2])
        );
        assert_eq!(
            parse_sidecar_label("10,2").unwrap(),
            VertexLabel::string(&[10, 2])
        );
        assert!(parse_sidecar_label("()").is_err());
        assert!(parse_sidecar_label("abc").is_err());
    }

    #[test]
    fn arc_vertices_parse_bare_digits_as_integers() {
        assert_eq!(parse_arc_vertex("7").unwrap(), VertexLabel::int(7));
        assert_eq!(
            parse_arc_vertex("(2,3)").unwrap(),
            VertexLabel::tuple(&[2, 3])
        );
        assert!(parse_arc_vertex("x").is_err());
    }

    #[test]
    fn letter_splitting_respects_parentheses() {
        assert_eq!(split_letters("1,2,1"), vec!["1", "2", "1"]);
        assert_eq!(
            split_letters("(1,2),(2,3),(1,2)"),
            vec!["(1,2)", "(2,3)", "(1,2)"]
        );
        assert_eq!(split_letters(" 1 , (2,3) "), vec!["1", "(2,3)"]);
        assert!(split_letters("").is_empty());
    }

    #[test]
    fn arc_list_digraphs_collect_vertices_in_order() {
        let d = digraph_from_arc_list(
            &Some(vec!["3".into(), "1".into(), "2".into()]),
            &[["1".into(), "2".into()]],
        )
        .unwrap();
        assert_eq!(d.vertex_count(), 3);
        assert_eq!(d.arc_count(), 1);
        let d2 = digraph_from_arc_list(&None, &[["1".into(), "2".into()]]).unwrap();
        assert_eq!(d2.vertex_count(), 2);
    }
}

//! Serialization: graph6 (small format), DOT, label sidecars, and the
//! JSON arc-list format used for digraphs and orientations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, LabeledGraph};
use crate::label::VertexLabel;
use crate::orient::Orientation;

/// Largest vertex count representable in the single-byte graph6 header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error(
        "graph has {vertices} vertices; only the short graph6 format \
         (at most {GRAPH6_MAX_VERTICES}) is supported"
    )]
    TooManyVertices { vertices: usize },
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 header at offset 0 announces an extended format, which is not supported")]
    ExtendedFormat,
    #[error("graph6 input ends at offset {offset}; expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("unexpected trailing graph6 data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    BadPadding { offset: usize },
    #[error("arc list JSON is malformed: {0}")]
    BadArcList(String),
}

// ============================================================================
// graph6
// ============================================================================

/// Encodes in the short graph6 format: one header byte `63 + n`, then
/// the upper triangle of the adjacency matrix in column order (pairs
/// (0,1), (0,2), (1,2), (0,3), ...), packed into 6-bit groups and
/// offset by 63. Vertex `i` is the `i`-th label in canonical order.
pub fn graph6_encode(g: &LabeledGraph) -> Result<String, CodecError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(CodecError::TooManyVertices { vertices: n });
    }
    let mut out = vec![63 + n as u8];
    let mut acc: u8 = 0;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge_idx(i, j));
            bits += 1;
            if bits == 6 {
                out.push(63 + acc);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(63 + (acc << (6 - bits)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes a short-format graph6 line into a graph with integer labels
/// `1..=n`. An optional `>>graph6<<` header and trailing newline are
/// accepted.
pub fn graph6_decode(text: &str) -> Result<LabeledGraph, CodecError> {
    let body = text
        .strip_prefix(">>graph6<<")
        .unwrap_or(text)
        .trim_end_matches(['\r', '\n', ' ']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::EmptyInput);
    }
    let header = bytes[0];
    if header == 126 {
        return Err(CodecError::ExtendedFormat);
    }
    if !(63..=125).contains(&header) {
        return Err(CodecError::InvalidByte {
            offset: 0,
            byte: header,
        });
    }
    let n = (header - 63) as usize;
    let bit_count = n * (n - 1) / 2;
    let data_bytes = bit_count.div_ceil(6);
    if bytes.len() < 1 + data_bytes {
        return Err(CodecError::Truncated {
            offset: bytes.len(),
            expected: data_bytes,
        });
    }
    if bytes.len() > 1 + data_bytes {
        return Err(CodecError::TrailingData {
            offset: 1 + data_bytes,
        });
    }
    let mut edges = std::collections::BTreeSet::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + pos / 6];
            if !(63..=126).contains(&byte) {
                return Err(CodecError::InvalidByte {
                    offset: 1 + pos / 6,
                    byte,
                });
            }
            if (byte - 63) >> (5 - pos % 6) & 1 == 1 {
                edges.insert((i, j));
            }
            pos += 1;
        }
    }
    if pos % 6 != 0 {
        let last = bytes[1 + pos / 6] - 63;
        let padding_mask = (1u8 << (6 - pos % 6)) - 1;
        if last & padding_mask != 0 {
            return Err(CodecError::BadPadding { offset: 1 + pos / 6 });
        }
    }
    let labels: Vec<VertexLabel> = (1..=n as u32).map(VertexLabel::int).collect();
    Ok(LabeledGraph::from_parts(labels, edges))
}

// ============================================================================
// DOT
// ============================================================================

/// Renders an undirected graph in DOT form, one node or edge per line,
/// in canonical order.
pub fn dot_graph(g: &LabeledGraph) -> String {
    let mut out = String::from("graph {\n");
    for label in g.labels() {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for (a, b) in g.edge_labels() {
        out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// Renders a digraph in DOT form.
pub fn dot_digraph(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for label in d.labels() {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for (t, h) in d.arc_labels() {
        out.push_str(&format!("  \"{t}\" -> \"{h}\";\n"));
    }
    out.push_str("}\n");
    out
}

// ============================================================================
// label sidecar
// ============================================================================

/// For tuple- or string-labeled graphs, a JSON array mapping graph6
/// vertex index to the rendered label. Integer-labeled graphs need no
/// sidecar and get `None`.
pub fn label_sidecar(g: &LabeledGraph) -> Option<String> {
    if g.labels().iter().all(|l| matches!(l, VertexLabel::Int(_))) {
        return None;
    }
    let rendered: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
    Some(serde_json::to_string(&rendered).expect("string arrays always serialize"))
}

// ============================================================================
// arc-list JSON
// ============================================================================

/// On-disk form of a digraph or orientation: rendered vertex labels
/// (optional, so isolated vertices survive) and `[tail, head]` arcs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArcListFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub arcs: Vec<[String; 2]>,
}

impl ArcListFile {
    pub fn of_digraph(d: &Digraph) -> Self {
        ArcListFile {
            vertices: Some(d.labels().iter().map(|l| l.to_string()).collect()),
            arcs: d
                .arc_labels()
                .map(|(t, h)| [t.to_string(), h.to_string()])
                .collect(),
        }
    }

    pub fn of_orientation(o: &Orientation) -> Self {
        ArcListFile {
            vertices: Some(o.base().labels().iter().map(|l| l.to_string()).collect()),
            arcs: o
                .arc_labels()
                .iter()
                .map(|(t, h)| [t.to_string(), h.to_string()])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("arc lists always serialize")
    }

    pub fn parse(text: &str) -> Result<Self, CodecError> {
        serde_json::from_str(text).map_err(|e| CodecError::BadArcList(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::VertexLabel as L;

    fn graph(labels: &[u32], edges: &[(u32, u32)]) -> LabeledGraph {
        let ls: Vec<_> = labels.iter().map(|&v| L::int(v)).collect();
        let es: Vec<_> = edges.iter().map(|&(a, b)| (L::int(a), L::int(b))).collect();
        LabeledGraph::new(ls, &es).unwrap()
    }

    // ------------------------------------------------------------------
    // graph6, frozen byte-level cases worked out from the format rules
    // ------------------------------------------------------------------

    #[test]
    fn triangle_encodes_to_bw() {
        let k3 = graph(&[1, 2, 3], &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(graph6_encode(&k3).unwrap(), "Bw");
    }

    #[test]
    fn path_on_three_vertices_encodes_to_bg() {
        let p3 = graph(&[1, 2, 3], &[(1, 2), (2, 3)]);
        assert_eq!(graph6_encode(&p3).unwrap(), "Bg");
    }

    #[test]
    fn single_vertex_encodes_to_at_sign() {
        let g = graph(&[1], &[]);
        assert_eq!(graph6_encode(&g).unwrap(), "@");
    }

    #[test]
    fn decode_inverts_encode_on_the_frozen_cases() {
        for text in ["Bw", "Bg", "@"] {
            let g = graph6_decode(text).unwrap();
            assert_eq!(graph6_encode(&g).unwrap(), text);
        }
        assert_eq!(graph6_decode("Bw").unwrap().edge_count(), 3);
        assert_eq!(graph6_decode("Bg").unwrap().edge_count(), 2);
        assert_eq!(graph6_decode("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn decode_accepts_header_and_newline() {
        let g = graph6_decode(">>graph6<<Bw\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn decoded_labels_are_one_based_integers() {
        let g = graph6_decode("Bg").unwrap();
        assert_eq!(
            g.labels(),
            &[L::int(1), L::int(2), L::int(3)][..],
            "graph6 carries no labels; decoding must assign 1..=n"
        );
        assert!(g.has_edge(&L::int(1), &L::int(2)));
        assert!(g.has_edge(&L::int(2), &L::int(3)));
        assert!(!g.has_edge(&L::int(1), &L::int(3)));
    }

    #[test]
    fn round_trip_on_all_four_vertex_graphs() {
        let pairs = [(1u32, 2u32), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = graph(&[1, 2, 3, 4], &edges);
            let text = graph6_encode(&g).unwrap();
            assert_eq!(graph6_decode(&text).unwrap(), g, "mask {mask}");
        }
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let labels: Vec<_> = (1..=63).map(L::int).collect();
        let g = LabeledGraph::new(labels, &[]).unwrap();
        assert_eq!(
            graph6_encode(&g).unwrap_err(),
            CodecError::TooManyVertices { vertices: 63 }
        );
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(graph6_decode("").unwrap_err(), CodecError::EmptyInput);
        assert_eq!(graph6_decode("~~~").unwrap_err(), CodecError::ExtendedFormat);
        assert_eq!(
            graph6_decode("B").unwrap_err(),
            CodecError::Truncated {
                offset: 1,
                expected: 1
            }
        );
        assert_eq!(
            graph6_decode("Bww").unwrap_err(),
            CodecError::TrailingData { offset: 2 }
        );
        assert_eq!(
            graph6_decode("B!").unwrap_err(),
            CodecError::InvalidByte {
                offset: 1,
                byte: b'!'
            }
        );
        // 'x' = 63 + 0b111001: a set bit inside the pad region.
        assert_eq!(
            graph6_decode("Bx").unwrap_err(),
            CodecError::BadPadding { offset: 1 }
        );
    }

    // ------------------------------------------------------------------
    // DOT and sidecars
    // ------------------------------------------------------------------

    #[test]
    fn dot_lists_isolated_vertices() {
        let g = graph(&[1, 2, 3], &[(1, 2)]);
        let dot = dot_graph(&g);
        assert!(dot.contains("\"3\";"), "isolated vertex missing:\n{dot}");
        assert!(dot.contains("\"1\" -- \"2\";"));
    }

    #[test]
    fn integer_graphs_need_no_sidecar() {
        assert_eq!(label_sidecar(&graph(&[1, 2], &[(1, 2)])), None);
    }

    #[test]
    fn tuple_graphs_get_a_sidecar_in_vertex_order() {
        let g = LabeledGraph::new(
            vec![L::tuple(&[2, 3]), L::tuple(&[1, 2])],
            &[(L::tuple(&[1, 2]), L::tuple(&[2, 3]))],
        )
        .unwrap();
        assert_eq!(label_sidecar(&g).unwrap(), r#"["(1,2)","(2,3)"]"#);
    }

    #[test]
    fn arc_list_round_trips() {
        let d = Digraph::new(
            vec![L::int(1), L::int(2), L::int(3)],
            &[(L::int(1), L::int(2)), (L::int(2), L::int(3))],
        )
        .unwrap();
        let file = ArcListFile::of_digraph(&d);
        let parsed = ArcListFile::parse(&file.to_json()).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.arcs.len(), 2);
    }

    #[test]
    fn arc_list_accepts_bare_arcs() {
        let parsed = ArcListFile::parse(r#"{"arcs": [["1","2"]]}"#).unwrap();
        assert_eq!(parsed.vertices, None);
        assert_eq!(parsed.arcs, vec![["1".to_string(), "2".to_string()]]);
    }

    #[test]
    fn arc_list_rejects_garbage() {
        assert!(matches!(
            ArcListFile::parse("not json").unwrap_err(),
            CodecError::BadArcList(_)
        ));
    }
}

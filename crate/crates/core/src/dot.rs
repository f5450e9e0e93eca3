//! Graphviz DOT export.

use std::fmt::Write;

use crate::transmission::{LabelledDigraph, VertexLabel};

fn node_id(label: &VertexLabel) -> String {
    match label {
        VertexLabel::Free(s) => format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"")),
        other => other.to_string(),
    }
}

/// Deterministic DOT text: one line per vertex, then one `u -> v` line per
/// edge, both sorted by their text.
pub fn export_dot(g: &LabelledDigraph) -> String {
    let mut vertices: Vec<String> = g.vertices().iter().map(node_id).collect();
    vertices.sort();
    let mut edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(u, v)| format!("{} -> {}", node_id(u), node_id(v)))
        .collect();
    edges.sort();
    let mut out = String::from("digraph G {\n");
    for v in vertices {
        let _ = writeln!(out, "  {v}");
    }
    for e in edges {
        let _ = writeln!(out, "  {e}");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        assert_eq!(export_dot(&LabelledDigraph::new()), "digraph G {\n}\n");
    }

    #[test]
    fn single_edge() {
        let g = LabelledDigraph::from_parts(
            [VertexLabel::C(1), VertexLabel::a(2, 1)],
            [(VertexLabel::C(1), VertexLabel::a(1, 2))],
        )
        .unwrap();
        let text = export_dot(&g);
        let edge_lines: Vec<&str> = text.lines().filter(|l| l.contains("->")).map(str::trim).collect();
        assert_eq!(edge_lines, ["C_1 -> A_1_2"]);
    }

    #[test]
    fn free_labels_are_quoted() {
        let g = LabelledDigraph::from_parts(
            [VertexLabel::Free("a \"b\"".into()), VertexLabel::Free("1x".into())],
            [],
        )
        .unwrap();
        let text = export_dot(&g);
        assert!(text.contains("  \"a \\\"b\\\"\"\n"));
        assert!(text.contains("  \"1x\"\n"));
    }
}

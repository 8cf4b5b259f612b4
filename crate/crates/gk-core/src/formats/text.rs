//! Plain-text exports: DOT and a one-edge-per-line list.

use std::fmt::Write;

use crate::construction::{VertexKind, VertexLabel};
use crate::graph::EmbeddedGraph;

/// DOT text. With labels, original tree vertices are filled white and
/// subdivision vertices black, same as the SVG rendering.
pub fn to_dot(g: &EmbeddedGraph, labels: Option<&[VertexLabel]>) -> String {
    let mut out = String::new();
    out.push_str("graph gk {\n");
    out.push_str("  node [shape=circle, style=filled];\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(labels) => {
                let label = labels[v as usize];
                let fill = match label.kind {
                    VertexKind::Subdivision { .. } => "black",
                    _ => "white",
                };
                writeln!(out, "  {v} [fillcolor={fill}, label=\"{label}\"];").unwrap();
            }
            None => {
                writeln!(out, "  {v} [fillcolor=white];").unwrap();
            }
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {} -- {};", u.min(v), u.max(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One `u v` line per edge (endpoints sorted), in edge-index order.
pub fn to_edge_list(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u.min(v), u.max(v)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build_gk_for;

    #[test]
    fn edge_list_of_k2() {
        let mut g = EmbeddedGraph::new(2);
        g.add_edge(1, 0).unwrap();
        assert_eq!(to_edge_list(&g), "0 1\n");
    }

    #[test]
    fn edge_list_of_g2_has_21_lines() {
        let gk = build_gk_for(2).unwrap();
        let text = to_edge_list(gk.graph());
        assert_eq!(text.lines().count(), 21);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn dot_fill_colors_follow_labels() {
        let g2 = build_gk_for(2).unwrap();
        let dot = to_dot(g2.graph(), Some(g2.labels()));
        assert_eq!(dot.matches("fillcolor=black").count(), 0); // k=2: no subdivisions
        assert_eq!(dot.matches("fillcolor=white").count(), 14);

        let g3 = build_gk_for(3).unwrap();
        let dot = to_dot(g3.graph(), Some(g3.labels()));
        assert_eq!(dot.matches("fillcolor=black").count(), 12);
        assert!(dot.contains("label=\"rootA\""));
        assert!(dot.starts_with("graph gk {"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn dot_without_labels() {
        let mut g = EmbeddedGraph::new(2);
        g.add_edge(0, 1).unwrap();
        let dot = to_dot(&g, None);
        assert!(dot.contains("  0 [fillcolor=white];"));
        assert!(dot.contains("  0 -- 1;"));
    }
}

//! Radial SVG rendering of `G_k`: tree A grows outward from the center,
//! the shared leaves sit on one circle, tree B mirrors outward beyond it.
//! Original tree vertices are white with a stroke, subdivision vertices
//! black, tree edges bold lines, matching edges thin arcs along their
//! level circle, and faces of length 7 can be shaded gray.
//!
//! The picture is illustrative: embedding correctness is certified by the
//! genus check, not by the rendering.

use std::fmt::Write;

use crate::construction::{GkGraph, TreeSide, VertexKind};
use crate::graph::Vertex;

#[derive(Clone, Debug)]
pub struct RenderSpec {
    /// Radius of the shared leaf circle.
    pub leaf_radius: f64,
    pub vertex_radius: f64,
    pub tree_edge_width: f64,
    pub matching_edge_width: f64,
    pub shade_heptagons: bool,
    pub margin: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            leaf_radius: 300.0,
            vertex_radius: 3.0,
            tree_edge_width: 2.5,
            matching_edge_width: 0.9,
            shade_heptagons: true,
            margin: 24.0,
        }
    }
}

impl RenderSpec {
    /// Widens the leaf circle with `k` so glyphs stay legible.
    pub fn scaled_for(k: u32) -> Self {
        let leaves = 3.0 * f64::from(1u32 << (k - 1));
        RenderSpec {
            leaf_radius: (leaves * 2.4).max(260.0),
            ..RenderSpec::default()
        }
    }
}

/// Level (distance to own root), slot count and slot index of a vertex.
fn polar_slot(gk: &GkGraph, v: Vertex) -> (TreeSide, u32, u32, u32) {
    let k = gk.k();
    let label = gk.label(v);
    match label.kind {
        VertexKind::Root => (label.tree, 0, 1, 0),
        VertexKind::Internal { depth, pos } => {
            (label.tree, 2 * depth - 1, 3 * (1 << (depth - 1)), pos)
        }
        VertexKind::Subdivision { child_depth, pos } => (
            label.tree,
            2 * child_depth - 2,
            3 * (1 << (child_depth - 1)),
            pos,
        ),
        VertexKind::Leaf { pos } => (TreeSide::Shared, 2 * k - 2, 3 * (1 << (k - 1)), pos),
    }
}

fn position(gk: &GkGraph, spec: &RenderSpec, v: Vertex) -> (f64, f64, f64, f64) {
    let k = gk.k();
    let (tree, level, slots, pos) = polar_slot(gk, v);
    let unit = f64::from(level) / f64::from(2 * k - 2);
    let radius = match tree {
        TreeSide::B => spec.leaf_radius * (2.0 - unit),
        _ => spec.leaf_radius * unit,
    };
    let angle = std::f64::consts::TAU * (f64::from(pos) + 0.5) / f64::from(slots);
    (radius * angle.cos(), radius * angle.sin(), radius, angle)
}

fn is_matching_edge(gk: &GkGraph, u: Vertex, v: Vertex) -> bool {
    let kind_of = |x: Vertex| gk.label(x).kind;
    matches!(
        kind_of(u),
        VertexKind::Subdivision { .. } | VertexKind::Leaf { .. }
    ) && matches!(
        kind_of(v),
        VertexKind::Subdivision { .. } | VertexKind::Leaf { .. }
    )
}

/// Sweep flag for the on-circle arc from `u` to `v`: 1 when `v` occupies
/// the next slot counterclockwise in tree order (angle grows), else 0.
fn arc_sweep(gk: &GkGraph, u: Vertex, v: Vertex) -> u8 {
    let (_, _, slots, pos_u) = polar_slot(gk, u);
    let (_, _, _, pos_v) = polar_slot(gk, v);
    u8::from((pos_u + 1) % slots == pos_v)
}

fn fmt_coord(x: f64) -> String {
    format!("{x:.3}")
}

/// Renders the graph to SVG text. Deterministic bytes for fixed inputs.
pub fn to_svg(gk: &GkGraph, spec: &RenderSpec) -> String {
    let g = gk.graph();
    let extent = 2.0 * spec.leaf_radius + spec.margin;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        fmt_coord(-extent),
        fmt_coord(-extent),
        fmt_coord(2.0 * extent),
        fmt_coord(2.0 * extent)
    )
    .unwrap();

    if spec.shade_heptagons {
        out.push_str("<g fill=\"#cccccc\" stroke=\"none\">\n");
        let orbits = g.face_orbits().expect("a GkGraph is fully embedded");
        for orbit in orbits.iter().filter(|o| o.len() == 7) {
            let mut path = String::new();
            for (i, &dart) in orbit.darts().iter().enumerate() {
                let from = g.origin(dart);
                let to = g.head(dart);
                let (x0, y0, _, _) = position(gk, spec, from);
                let (x1, y1, r, _) = position(gk, spec, to);
                if i == 0 {
                    write!(path, "M {} {}", fmt_coord(x0), fmt_coord(y0)).unwrap();
                }
                if is_matching_edge(gk, from, to) {
                    write!(
                        path,
                        " A {} {} 0 0 {} {} {}",
                        fmt_coord(r),
                        fmt_coord(r),
                        arc_sweep(gk, from, to),
                        fmt_coord(x1),
                        fmt_coord(y1)
                    )
                    .unwrap();
                } else {
                    write!(path, " L {} {}", fmt_coord(x1), fmt_coord(y1)).unwrap();
                }
            }
            path.push_str(" Z");
            writeln!(out, "<path d=\"{path}\"/>").unwrap();
        }
        out.push_str("</g>\n");
    }

    writeln!(
        out,
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\">",
        fmt_coord(spec.matching_edge_width)
    )
    .unwrap();
    for &(u, v) in g.edges() {
        if !is_matching_edge(gk, u, v) {
            continue;
        }
        let (x0, y0, r, _) = position(gk, spec, u);
        let (x1, y1, _, _) = position(gk, spec, v);
        writeln!(
            out,
            "<path d=\"M {} {} A {} {} 0 0 {} {} {}\"/>",
            fmt_coord(x0),
            fmt_coord(y0),
            fmt_coord(r),
            fmt_coord(r),
            arc_sweep(gk, u, v),
            fmt_coord(x1),
            fmt_coord(y1)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    writeln!(
        out,
        "<g stroke=\"black\" stroke-width=\"{}\">",
        fmt_coord(spec.tree_edge_width)
    )
    .unwrap();
    for &(u, v) in g.edges() {
        if is_matching_edge(gk, u, v) {
            continue;
        }
        let (x0, y0, _, _) = position(gk, spec, u);
        let (x1, y1, _, _) = position(gk, spec, v);
        writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            fmt_coord(x0),
            fmt_coord(y0),
            fmt_coord(x1),
            fmt_coord(y1)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    out.push_str("<g stroke=\"black\" stroke-width=\"1.000\">\n");
    for v in 0..g.vertex_count() {
        let fill = match gk.label(v).kind {
            VertexKind::Subdivision { .. } => "black",
            _ => "white",
        };
        let (x, y, _, _) = position(gk, spec, v);
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
            fmt_coord(x),
            fmt_coord(y),
            fmt_coord(spec.vertex_radius)
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    out.push_str("</svg>\n");
    out
}

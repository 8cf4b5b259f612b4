//! Serialization: graph6 for abstract graphs, a JSON rotation document for
//! embedded graphs, DOT / edge-list exports, and a radial SVG rendering of
//! `G_k`. All emitters are pure functions over frozen inputs and produce
//! byte-deterministic text with LF line endings.

mod graph6;
mod rotdoc;
mod svg;
mod text;

pub use graph6::{from_graph6, to_graph6};
pub use rotdoc::{
    decode_rotation_doc, encode_rotation_doc, from_rotation_doc, to_rotation_doc, LabelRecord,
    RotationDocument,
};
pub use svg::{to_svg, RenderSpec};
pub use text::{to_dot, to_edge_list};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6 requires a simple graph (no loops or parallel edges)")]
    NotSimple,
    #[error("graph6 only covers graphs with fewer than 2^36 vertices")]
    TooManyVertices,
    #[error("graph with {0} vertices does not fit this build (u32 vertex ids)")]
    Unrepresentable(u64),
    #[error("malformed graph6 byte {byte:#04x} at offset {offset} (must be 63..=126)")]
    MalformedByte { byte: u8, offset: usize },
    #[error("graph6 input is truncated: expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("empty graph6 input")]
    EmptyInput,
    #[error("rotation document version {0} is not supported (expected 1)")]
    UnsupportedVersion(u32),
    #[error("invalid rotation document: {0}")]
    InvalidDocument(String),
    #[error("JSON error: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

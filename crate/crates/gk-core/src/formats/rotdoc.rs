//! The rotation document: a canonical JSON persistence of an embedded
//! graph, dart ids included, so an embedding survives a round trip
//! bit-exactly. Field order is fixed, output is compact UTF-8 with a
//! single trailing LF, and decode(encode(g)) re-encodes byte-identically.

use serde::{Deserialize, Serialize};

use super::FormatError;
use crate::construction::{TreeSide, VertexKind, VertexLabel};
use crate::graph::{Dart, EmbeddedGraph};

pub const ROTATION_DOC_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationDocument {
    pub version: u32,
    pub n: u32,
    pub edges: Vec<[u32; 2]>,
    pub rotations: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelRecord>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelRecord {
    pub tree: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos: Option<u32>,
}

impl From<VertexLabel> for LabelRecord {
    fn from(label: VertexLabel) -> Self {
        let tree = match label.tree {
            TreeSide::A => "A",
            TreeSide::B => "B",
            TreeSide::Shared => "shared",
        }
        .to_string();
        match label.kind {
            VertexKind::Root => LabelRecord {
                tree,
                kind: "root".into(),
                depth: None,
                pos: None,
            },
            VertexKind::Internal { depth, pos } => LabelRecord {
                tree,
                kind: "internal".into(),
                depth: Some(depth),
                pos: Some(pos),
            },
            VertexKind::Subdivision { child_depth, pos } => LabelRecord {
                tree,
                kind: "subdivision".into(),
                depth: Some(child_depth),
                pos: Some(pos),
            },
            VertexKind::Leaf { pos } => LabelRecord {
                tree,
                kind: "leaf".into(),
                depth: None,
                pos: Some(pos),
            },
        }
    }
}

impl LabelRecord {
    pub fn to_label(&self) -> Result<VertexLabel, FormatError> {
        let tree = match self.tree.as_str() {
            "A" => TreeSide::A,
            "B" => TreeSide::B,
            "shared" => TreeSide::Shared,
            other => {
                return Err(FormatError::InvalidDocument(format!(
                    "unknown tree tag {other:?}"
                )))
            }
        };
        let kind = match (self.kind.as_str(), self.depth, self.pos) {
            ("root", None, None) => VertexKind::Root,
            ("internal", Some(depth), Some(pos)) => VertexKind::Internal { depth, pos },
            ("subdivision", Some(child_depth), Some(pos)) => {
                VertexKind::Subdivision { child_depth, pos }
            }
            ("leaf", None, Some(pos)) => VertexKind::Leaf { pos },
            (kind, depth, pos) => {
                return Err(FormatError::InvalidDocument(format!(
                    "kind {kind:?} with depth {depth:?} and pos {pos:?} is not a valid label"
                )))
            }
        };
        Ok(VertexLabel { tree, kind })
    }
}

/// Captures a frozen embedded graph (and optional labels) as a document.
pub fn to_rotation_doc(g: &EmbeddedGraph, labels: Option<&[VertexLabel]>) -> RotationDocument {
    RotationDocument {
        version: ROTATION_DOC_VERSION,
        n: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        rotations: (0..g.vertex_count())
            .map(|v| g.rotation(v).iter().map(|d| d.0).collect())
            .collect(),
        labels: labels.map(|ls| ls.iter().map(|&l| l.into()).collect()),
    }
}

/// Canonical bytes: compact JSON, fixed field order, trailing LF.
pub fn encode_rotation_doc(doc: &RotationDocument) -> String {
    let mut text =
        serde_json::to_string(doc).expect("rotation documents always serialize");
    text.push('\n');
    text
}

pub fn decode_rotation_doc(text: &str) -> Result<RotationDocument, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

/// Rebuilds the embedded graph, re-validating that every rotation is a
/// permutation of the darts at its vertex.
pub fn from_rotation_doc(
    doc: &RotationDocument,
) -> Result<(EmbeddedGraph, Option<Vec<VertexLabel>>), FormatError> {
    if doc.version != ROTATION_DOC_VERSION {
        return Err(FormatError::UnsupportedVersion(doc.version));
    }
    let mut g = EmbeddedGraph::new(doc.n);
    for &[u, v] in &doc.edges {
        g.add_edge(u, v)?;
    }
    if doc.rotations.len() != doc.n as usize {
        return Err(FormatError::InvalidDocument(format!(
            "{} rotations for {} vertices",
            doc.rotations.len(),
            doc.n
        )));
    }
    let dart_count = g.dart_count() as u32;
    for (v, rotation) in doc.rotations.iter().enumerate() {
        if let Some(&d) = rotation.iter().find(|&&d| d >= dart_count) {
            return Err(FormatError::InvalidDocument(format!(
                "dart id {d} out of range (graph has {dart_count} darts)"
            )));
        }
        g.set_rotation(v as u32, rotation.iter().map(|&d| Dart(d)).collect())?;
    }
    let labels = match &doc.labels {
        None => None,
        Some(records) => {
            if records.len() != doc.n as usize {
                return Err(FormatError::InvalidDocument(format!(
                    "{} labels for {} vertices",
                    records.len(),
                    doc.n
                )));
            }
            Some(
                records
                    .iter()
                    .map(|r| r.to_label())
                    .collect::<Result<Vec<_>, _>>()?,
            )
        }
    };
    Ok((g, labels))
}

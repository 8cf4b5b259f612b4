//! Generator and verifier for the `G_k` family: cubic planar graphs with
//! all faces of length at most 7 whose diameter grows logarithmically in
//! the vertex count — strictly below the square-root lower bound that
//! holds once faces are capped at length 6 (fullerenes).
//!
//! The crate splits into:
//! - [`graph`]: dart-based embedded graphs (rotation systems, face orbits,
//!   Euler genus, BFS);
//! - [`construction`]: the staged build of `G_k`;
//! - [`analysis`]: face census, exact diameter (full sweep / iFUB), the
//!   double-sweep lower bound, claim verification and the refutation table;
//! - [`formats`]: graph6, rotation-document JSON, DOT, edge list and SVG.

pub mod analysis;
pub mod construction;
pub mod formats;
pub mod graph;

pub use analysis::{
    diameter_bfs_all, double_sweep, expected_census, face_census, fullerene_lower_bound, ifub,
    refutation_table, verify_claims, vertex_connectivity_small, AnalysisError, ClaimReport,
    DiameterMethod, DiameterResult, ExactDiameterMethod, FaceCensus, RefutationRow, Verdict,
};
pub use construction::{
    build_gk, build_gk_for, build_ternary_tree, expected_counts, glue_trees, ConstructError,
    GkGraph, GkParams, TreeSide, VertexKind, VertexLabel,
};
pub use graph::{Dart, EmbeddedGraph, FaceOrbit, GraphError, Vertex};

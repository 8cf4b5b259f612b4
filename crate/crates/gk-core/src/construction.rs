//! Builds the graph family `G_k`.
//!
//! `G_k` is obtained from two rooted ternary trees of depth `k` glued at
//! their leaves: every internal-to-internal tree edge is subdivided once,
//! and on every set of vertices at a fixed even distance from a root a
//! cyclic matching is added that pairs each right sibling with the left
//! member of the next sibling pair (wrapping around). The result is a simple
//! connected cubic graph with a plane embedding whose faces have length 4,
//! 5, 6 or 7, while its diameter grows only logarithmically in the vertex
//! count.
//!
//! Construction runs in stages, each exposed for testing:
//! [`build_ternary_tree`] -> [`glue_trees`] -> [`subdivide_internal_edges`]
//! -> [`add_level_matchings`] -> [`assign_rotations`], composed by
//! [`build_gk`].
//!
//! Vertex ids follow a fixed block layout: root A, tree-A internals by
//! (depth, pos), root B, tree-B internals, leaves, tree-A subdivisions by
//! (child depth, pos), tree-B subdivisions. All stages preserve it, which
//! makes every construction byte-deterministic.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Dart, EmbeddedGraph, GraphError, Vertex};

/// Default ceiling for `k`; `k = 26` already means half a billion vertices.
pub const DEFAULT_K_CAP: u32 = 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(u32),
    #[error("k = {k} exceeds the cap {cap}")]
    KExceedsCap { k: u32, cap: u32 },
    #[error("cannot glue trees of different depths {0} and {1}")]
    MismatchedK(u32, u32),
    #[error("leaf-level matchings derived from tree A and tree B disagree on edge {u}-{v}")]
    LeafPairingMismatch { u: Vertex, v: Vertex },
    #[error("expected edge {u}-{v} is missing from the staged graph")]
    MissingEdge { u: Vertex, v: Vertex },
    #[error("canonical rotations produced a non-planar embedding (genus {genus})")]
    EmbeddingNotPlanar { genus: u32 },
    #[error("built graph violates a structural invariant: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Construction parameter: the tree depth `k >= 2`, bounded by a memory cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GkParams {
    k: u32,
    cap: u32,
}

impl GkParams {
    pub fn new(k: u32) -> Result<Self, ConstructError> {
        Self::with_cap(k, DEFAULT_K_CAP)
    }

    pub fn with_cap(k: u32, cap: u32) -> Result<Self, ConstructError> {
        if k < 2 {
            return Err(ConstructError::KTooSmall(k));
        }
        if k > cap {
            return Err(ConstructError::KExceedsCap { k, cap });
        }
        Ok(GkParams { k, cap })
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Which underlying tree a vertex belongs to. Leaves are shared: after
/// gluing they lie in both trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TreeSide {
    A,
    B,
    Shared,
}

/// Structural role of a vertex.
///
/// `depth` counts tree levels from the root; `pos` is the left-to-right
/// index within a level. A subdivision vertex sits on the former edge into
/// the level-`child_depth` vertex at the same `pos`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Root,
    Internal { depth: u32, pos: u32 },
    Subdivision { child_depth: u32, pos: u32 },
    Leaf { pos: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    pub tree: TreeSide,
    pub kind: VertexKind,
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.tree {
            TreeSide::A => "A",
            TreeSide::B => "B",
            TreeSide::Shared => "",
        };
        match self.kind {
            VertexKind::Root => write!(f, "root{side}"),
            VertexKind::Internal { depth, pos } => write!(f, "int{side}({depth},{pos})"),
            VertexKind::Subdivision { child_depth, pos } => {
                write!(f, "sub{side}({child_depth},{pos})")
            }
            VertexKind::Leaf { pos } => write!(f, "leaf({pos})"),
        }
    }
}

/// The rooted tree with all internal vertices of degree 3 and every leaf at
/// distance `k` from the root. Its shape is fully determined by `k`: level
/// `d >= 1` holds `3 * 2^(d-1)` vertices and the children of the level-`d`
/// vertex at position `p` sit at positions `2p` and `2p + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TernaryTree {
    k: u32,
}

impl TernaryTree {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn depth(&self) -> u32 {
        self.k
    }

    /// Number of vertices at tree distance `d` from the root.
    pub fn level_count(&self, d: u32) -> u64 {
        match d {
            0 => 1,
            d if d <= self.k => 3u64 << (d - 1),
            _ => 0,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        3 * (1u64 << self.k) - 2
    }

    pub fn leaf_count(&self) -> u64 {
        self.level_count(self.k)
    }

    /// Positions of the two children of the level-`d` vertex at `pos`
    /// (`d >= 1`; the root's three children are positions 0..3 of level 1).
    pub fn child_positions(&self, pos: u32) -> (u32, u32) {
        (2 * pos, 2 * pos + 1)
    }

    pub fn parent_position(&self, pos: u32) -> u32 {
        pos / 2
    }
}

/// `T_k` for the given depth.
pub fn build_ternary_tree(k: u32) -> Result<TernaryTree, ConstructError> {
    if k < 2 {
        return Err(ConstructError::KTooSmall(k));
    }
    Ok(TernaryTree { k })
}

/// A labelled graph under construction: the edge list is ordered and both
/// list and labels follow the canonical id layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedGraph {
    k: u32,
    labels: Vec<VertexLabel>,
    edges: Vec<(Vertex, Vertex)>,
}

impl StagedGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> u32 {
        self.labels.len() as u32
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degree_of(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

/// Canonical id layout helpers. All formulas assume `k >= 2`.
#[derive(Clone, Copy, Debug)]
pub struct Layout {
    k: u32,
}

impl Layout {
    pub fn new(k: u32) -> Self {
        Layout { k }
    }

    pub fn internals_per_tree(&self) -> u32 {
        3 * (1u32 << (self.k - 1)) - 3
    }

    pub fn leaf_count(&self) -> u32 {
        3 * (1u32 << (self.k - 1))
    }

    pub fn subdivisions_per_tree(&self) -> u32 {
        if self.k == 2 {
            0
        } else {
            3 * (1u32 << (self.k - 1)) - 6
        }
    }

    pub fn vertex_count(&self) -> u32 {
        15 * (1u32 << (self.k - 1)) - 16
    }

    pub fn root(&self, tree: TreeSide) -> Vertex {
        match tree {
            TreeSide::A => 0,
            TreeSide::B => 1 + self.internals_per_tree(),
            TreeSide::Shared => unreachable!("roots are never shared"),
        }
    }

    /// Internal vertex at tree `depth` in `[1, k-1]`, position `pos`.
    pub fn internal(&self, tree: TreeSide, depth: u32, pos: u32) -> Vertex {
        let base = match tree {
            TreeSide::A => 1,
            TreeSide::B => self.root(TreeSide::B) + 1,
            TreeSide::Shared => unreachable!("internals are never shared"),
        };
        // levels 1..depth-1 hold 3*(2^(depth-1) - 1) vertices in total
        base + 3 * ((1u32 << (depth - 1)) - 1) + pos
    }

    pub fn leaf(&self, pos: u32) -> Vertex {
        2 + 2 * self.internals_per_tree() + pos
    }

    /// Subdivision vertex on the former edge into the level-`child_depth`
    /// vertex at `pos`; `child_depth` in `[2, k-1]`, so only for `k >= 3`.
    pub fn subdivision(&self, tree: TreeSide, child_depth: u32, pos: u32) -> Vertex {
        let base = self.leaf(0)
            + self.leaf_count()
            + match tree {
                TreeSide::A => 0,
                TreeSide::B => self.subdivisions_per_tree(),
                TreeSide::Shared => unreachable!("subdivisions are never shared"),
            };
        base + (3 * (1u32 << (child_depth - 1)) - 6) + pos
    }
}

/// Glues two depth-`k` ternary trees by identifying the leaf at position `i`
/// of one with the leaf at position `i` of the other. Every shared leaf ends
/// up with degree 2; all other vertices keep their tree tag.
pub fn glue_trees(a: &TernaryTree, b: &TernaryTree) -> Result<StagedGraph, ConstructError> {
    if a.k() != b.k() {
        return Err(ConstructError::MismatchedK(a.k(), b.k()));
    }
    let k = a.k();
    let layout = Layout::new(k);

    let mut labels = Vec::with_capacity((layout.vertex_count()) as usize);
    for tree in [TreeSide::A, TreeSide::B] {
        labels.push(VertexLabel {
            tree,
            kind: VertexKind::Root,
        });
        for depth in 1..k {
            for pos in 0..3 * (1u32 << (depth - 1)) {
                labels.push(VertexLabel {
                    tree,
                    kind: VertexKind::Internal { depth, pos },
                });
            }
        }
    }
    for pos in 0..layout.leaf_count() {
        labels.push(VertexLabel {
            tree: TreeSide::Shared,
            kind: VertexKind::Leaf { pos },
        });
    }

    // Edges per tree, ordered by (child level, child position).
    let mut edges = Vec::new();
    for tree in [TreeSide::A, TreeSide::B] {
        for pos in 0..3 {
            edges.push((layout.root(tree), layout.internal(tree, 1, pos)));
        }
        for depth in 2..=k {
            for pos in 0..3 * (1u32 << (depth - 1)) {
                let parent = layout.internal(tree, depth - 1, pos / 2);
                let child = if depth == k {
                    layout.leaf(pos)
                } else {
                    layout.internal(tree, depth, pos)
                };
                edges.push((parent, child));
            }
        }
    }

    Ok(StagedGraph { k, labels, edges })
}

/// Subdivides every edge joining two internal vertices; edges incident to a
/// root or a leaf are left untouched. New vertices are appended in
/// (tree, child depth, pos) order, preserving the canonical layout.
pub fn subdivide_internal_edges(glued: &StagedGraph) -> StagedGraph {
    let mut labels = glued.labels.clone();
    let mut edges = Vec::with_capacity(glued.edges.len() * 2);
    for &(u, v) in &glued.edges {
        let (lu, lv) = (glued.labels[u as usize], glued.labels[v as usize]);
        match (lu.kind, lv.kind) {
            (VertexKind::Internal { .. }, VertexKind::Internal { depth, pos }) => {
                let mid = labels.len() as Vertex;
                labels.push(VertexLabel {
                    tree: lv.tree,
                    kind: VertexKind::Subdivision {
                        child_depth: depth,
                        pos,
                    },
                });
                edges.push((u, mid));
                edges.push((mid, v));
            }
            _ => edges.push((u, v)),
        }
    }
    StagedGraph {
        k: glued.k,
        labels,
        edges,
    }
}

/// Members of the matched level at even distance `d` from the root of
/// `tree`, in left-to-right order. For `d < 2k - 2` these are subdivision
/// vertices; at `d = 2k - 2` they are the shared leaves.
fn level_members(g: &StagedGraph, tree: TreeSide, d: u32) -> Vec<Vertex> {
    let layout = Layout::new(g.k);
    if d == 2 * g.k - 2 {
        (0..layout.leaf_count()).map(|p| layout.leaf(p)).collect()
    } else {
        let child_depth = d / 2 + 1;
        (0..3 * (1u32 << (child_depth - 1)))
            .map(|p| layout.subdivision(tree, child_depth, p))
            .collect()
    }
}

/// Matching partner of position `i` within a level of `m` members: pairs
/// `(1,2), (3,4), ..., (m-1, 0)`. Pairing `(0,1)` instead would join two
/// children of the same parent and close a triangle through that parent.
pub fn matching_partner(i: u32, m: u32) -> u32 {
    if i % 2 == 1 {
        (i + 1) % m
    } else {
        (i + m - 1) % m
    }
}

/// Adds the cyclic level matchings for both trees. At the leaf level the
/// pairing computed from tree B must coincide with the one already added
/// from tree A; any disagreement signals a leaf-correspondence bug.
pub fn add_level_matchings(g: &mut StagedGraph) -> Result<(), ConstructError> {
    let k = g.k;
    let mut existing: HashMap<(Vertex, Vertex), ()> = HashMap::new();
    for &(u, v) in &g.edges {
        existing.insert((u.min(v), u.max(v)), ());
    }
    for tree in [TreeSide::A, TreeSide::B] {
        for d in (2..=2 * k - 2).step_by(2) {
            let members = level_members(g, tree, d);
            let m = members.len() as u32;
            debug_assert!(m.is_multiple_of(2), "matched levels have an even member count");
            let leaf_level = d == 2 * k - 2;
            for i in (1..m).step_by(2) {
                let (u, v) = (members[i as usize], members[((i + 1) % m) as usize]);
                let key = (u.min(v), u.max(v));
                if leaf_level && tree == TreeSide::B {
                    if !existing.contains_key(&key) {
                        return Err(ConstructError::LeafPairingMismatch { u, v });
                    }
                } else {
                    g.edges.push((u, v));
                    existing.insert(key, ());
                }
            }
        }
    }
    Ok(())
}

/// Role-ordered neighbours of every vertex, from which the canonical
/// counterclockwise rotations are read off.
fn canonical_neighbor_order(layout: &Layout, k: u32, label: VertexLabel, v: Vertex) -> Vec<Vertex> {
    let child_side = |tree: TreeSide, depth: u32, pos: u32| -> Vertex {
        // target of the edge leaving an internal vertex towards the child
        // at (depth + 1, pos): direct for root/leaf edges, else the
        // subdivision vertex in between
        if depth + 1 == k {
            layout.leaf(pos)
        } else {
            layout.subdivision(tree, depth + 1, pos)
        }
    };
    let order = match label.kind {
        VertexKind::Root => {
            let t = label.tree;
            vec![
                layout.internal(t, 1, 0),
                layout.internal(t, 1, 1),
                layout.internal(t, 1, 2),
            ]
        }
        VertexKind::Internal { depth, pos } => {
            let t = label.tree;
            let parent_side = if depth == 1 {
                layout.root(t)
            } else {
                layout.subdivision(t, depth, pos)
            };
            vec![
                child_side(t, depth, 2 * pos),
                child_side(t, depth, 2 * pos + 1),
                parent_side,
            ]
        }
        VertexKind::Subdivision { child_depth, pos } => {
            let t = label.tree;
            let child = layout.internal(t, child_depth, pos);
            let parent = layout.internal(t, child_depth - 1, pos / 2);
            let m = 3 * (1u32 << (child_depth - 1));
            let partner = layout.subdivision(t, child_depth, matching_partner(pos, m));
            if pos % 2 == 1 {
                vec![child, partner, parent] // right sub-child
            } else {
                vec![child, parent, partner] // left sub-child
            }
        }
        VertexKind::Leaf { pos } => {
            let parent_a = layout.internal(TreeSide::A, k - 1, pos / 2);
            let parent_b = layout.internal(TreeSide::B, k - 1, pos / 2);
            let partner = layout.leaf(matching_partner(pos, layout.leaf_count()));
            if pos % 2 == 1 {
                vec![parent_b, partner, parent_a] // right child
            } else {
                vec![parent_b, parent_a, partner] // left child
            }
        }
    };
    debug_assert_ne!(label.tree, TreeSide::Shared, "only leaves are shared");
    let _ = v;
    if label.tree == TreeSide::B {
        // tree B takes the reverse cyclic order of its tree-A counterpart
        order.into_iter().rev().collect()
    } else {
        order
    }
}

/// Builds the embedded graph: all staged edges in order, the canonical
/// counterclockwise rotation at every vertex, then a genus check. A nonzero
/// genus means the rotation table does not realize a plane embedding and is
/// reported as a construction bug.
pub fn assign_rotations(staged: &StagedGraph) -> Result<EmbeddedGraph, ConstructError> {
    let k = staged.k;
    let layout = Layout::new(k);
    let mut graph = EmbeddedGraph::new(staged.vertex_count());
    let mut dart_lookup: HashMap<(Vertex, Vertex), Dart> =
        HashMap::with_capacity(2 * staged.edges.len());
    for &(u, v) in &staged.edges {
        let e = graph.add_edge(u, v)?;
        dart_lookup.insert((u, v), Dart(2 * e));
        dart_lookup.insert((v, u), Dart(2 * e + 1));
    }
    for (v, &label) in staged.labels.iter().enumerate() {
        let v = v as Vertex;
        let neighbor_label = if label.tree == TreeSide::Shared {
            // shared leaves follow the tree-A pattern directly
            VertexLabel {
                tree: TreeSide::A,
                kind: label.kind,
            }
        } else {
            label
        };
        let order = canonical_neighbor_order(&layout, k, neighbor_label, v);
        let darts = order
            .iter()
            .map(|&w| {
                dart_lookup
                    .get(&(v, w))
                    .copied()
                    .ok_or(ConstructError::MissingEdge { u: v, v: w })
            })
            .collect::<Result<Vec<_>, _>>()?;
        graph.set_rotation(v, darts)?;
    }
    let genus = graph.euler_genus()?;
    if genus != 0 {
        return Err(ConstructError::EmbeddingNotPlanar { genus });
    }
    Ok(graph)
}

/// Closed-form counts for `G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCounts {
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub leaves: u64,
    /// Vertices per tree level of `T_k`: `[1, 3, 6, ..., 3 * 2^(k-1)]`.
    pub per_level: Vec<u64>,
}

pub fn expected_counts(k: u32) -> Result<ExpectedCounts, ConstructError> {
    if k < 2 {
        return Err(ConstructError::KTooSmall(k));
    }
    let vertices = 15 * (1u64 << (k - 1)) - 16;
    let edges = 3 * vertices / 2;
    let faces = 15 * (1u64 << (k - 2)) - 6;
    let leaves = 3 * (1u64 << (k - 1));
    let mut per_level = vec![1u64];
    per_level.extend((1..=k).map(|d| 3u64 << (d - 1)));
    Ok(ExpectedCounts {
        vertices,
        edges,
        faces,
        leaves,
        per_level,
    })
}

/// The finished object: a frozen plane-embedded graph plus the vertex
/// taxonomy it was built from.
#[derive(Clone, Debug)]
pub struct GkGraph {
    graph: EmbeddedGraph,
    labels: Vec<VertexLabel>,
    params: GkParams,
    root_a: Vertex,
    root_b: Vertex,
}

impl GkGraph {
    pub fn graph(&self) -> &EmbeddedGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> VertexLabel {
        self.labels[v as usize]
    }

    pub fn k(&self) -> u32 {
        self.params.k()
    }

    pub fn root_a(&self) -> Vertex {
        self.root_a
    }

    pub fn root_b(&self) -> Vertex {
        self.root_b
    }

    pub fn vertex_name(&self, v: Vertex) -> String {
        self.label(v).to_string()
    }

    /// Rebuilds a `GkGraph` from a decoded embedded graph plus labels,
    /// revalidating everything `build_gk` guarantees.
    pub fn from_parts(graph: EmbeddedGraph, labels: Vec<VertexLabel>) -> Result<Self, ConstructError> {
        let leaves = labels
            .iter()
            .filter(|l| matches!(l.kind, VertexKind::Leaf { .. }))
            .count() as u64;
        if leaves < 6 || !(leaves / 3).is_power_of_two() || !leaves.is_multiple_of(3) {
            return Err(ConstructError::InvariantViolated(format!(
                "leaf count {leaves} does not match any k >= 2"
            )));
        }
        let k = (leaves / 3).trailing_zeros() + 1;
        let params = GkParams::with_cap(k, u32::MAX).map_err(|_| {
            ConstructError::InvariantViolated(format!("derived k = {k} is invalid"))
        })?;
        let gk = GkGraph {
            graph,
            labels,
            params,
            root_a: Layout::new(k).root(TreeSide::A),
            root_b: Layout::new(k).root(TreeSide::B),
        };
        gk.validate()?;
        Ok(gk)
    }

    fn validate(&self) -> Result<(), ConstructError> {
        let k = self.params.k();
        let layout = Layout::new(k);
        let expected = expected_counts(k)?;
        let fail = |msg: String| Err(ConstructError::InvariantViolated(msg));

        if self.graph.vertex_count() as u64 != expected.vertices {
            return fail(format!(
                "vertex count {} != {}",
                self.graph.vertex_count(),
                expected.vertices
            ));
        }
        if self.graph.edge_count() as u64 != expected.edges {
            return fail(format!(
                "edge count {} != {}",
                self.graph.edge_count(),
                expected.edges
            ));
        }
        if self.labels.len() != self.graph.vertex_count() as usize {
            return fail("label/vertex count mismatch".into());
        }
        for (v, &label) in self.labels.iter().enumerate() {
            let expected_label = canonical_label(&layout, v as Vertex);
            if label != expected_label {
                return fail(format!(
                    "vertex {v} labelled {label} but the canonical layout says {expected_label}"
                ));
            }
        }
        if !self.graph.is_simple() {
            return fail("graph has loops or parallel edges".into());
        }
        if !self.graph.is_regular(3) {
            return fail("graph is not cubic".into());
        }
        if !self.graph.is_connected() {
            return fail("graph is disconnected".into());
        }
        let genus = self.graph.euler_genus()?;
        if genus != 0 {
            return Err(ConstructError::EmbeddingNotPlanar { genus });
        }
        Ok(())
    }
}

/// Canonical label of a vertex id under the block layout.
fn canonical_label(layout: &Layout, v: Vertex) -> VertexLabel {
    let internals = layout.internals_per_tree();
    let leaves = layout.leaf_count();
    let subs = layout.subdivisions_per_tree();
    let internal_kind = |offset: u32| -> VertexKind {
        // invert offset = 3*(2^(depth-1) - 1) + pos
        let mut depth = 1;
        while 3 * ((1u32 << depth) - 1) <= offset {
            depth += 1;
        }
        VertexKind::Internal {
            depth,
            pos: offset - 3 * ((1u32 << (depth - 1)) - 1),
        }
    };
    let sub_kind = |offset: u32| -> VertexKind {
        let mut child_depth = 2;
        while 3 * (1u32 << child_depth) - 6 <= offset {
            child_depth += 1;
        }
        VertexKind::Subdivision {
            child_depth,
            pos: offset - (3 * (1u32 << (child_depth - 1)) - 6),
        }
    };
    let mut x = v;
    if x == 0 {
        return VertexLabel {
            tree: TreeSide::A,
            kind: VertexKind::Root,
        };
    }
    x -= 1;
    if x < internals {
        return VertexLabel {
            tree: TreeSide::A,
            kind: internal_kind(x),
        };
    }
    x -= internals;
    if x == 0 {
        return VertexLabel {
            tree: TreeSide::B,
            kind: VertexKind::Root,
        };
    }
    x -= 1;
    if x < internals {
        return VertexLabel {
            tree: TreeSide::B,
            kind: internal_kind(x),
        };
    }
    x -= internals;
    if x < leaves {
        return VertexLabel {
            tree: TreeSide::Shared,
            kind: VertexKind::Leaf { pos: x },
        };
    }
    x -= leaves;
    if x < subs {
        return VertexLabel {
            tree: TreeSide::A,
            kind: sub_kind(x),
        };
    }
    x -= subs;
    VertexLabel {
        tree: TreeSide::B,
        kind: sub_kind(x),
    }
}

/// Runs the full construction for the given parameters and freezes the
/// result after validating every structural invariant.
pub fn build_gk(params: GkParams) -> Result<GkGraph, ConstructError> {
    let k = params.k();
    let tree_a = build_ternary_tree(k)?;
    let tree_b = build_ternary_tree(k)?;
    let glued = glue_trees(&tree_a, &tree_b)?;
    let mut staged = subdivide_internal_edges(&glued);
    add_level_matchings(&mut staged)?;
    let graph = assign_rotations(&staged)?;
    let layout = Layout::new(k);
    let gk = GkGraph {
        graph,
        labels: staged.labels,
        params,
        root_a: layout.root(TreeSide::A),
        root_b: layout.root(TreeSide::B),
    };
    gk.validate()?;
    Ok(gk)
}

/// Convenience wrapper: `build_gk` with the default cap.
pub fn build_gk_for(k: u32) -> Result<GkGraph, ConstructError> {
    build_gk(GkParams::new(k)?)
}

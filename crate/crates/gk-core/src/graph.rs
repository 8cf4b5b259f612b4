//! Dart-based embedded graphs (rotation systems).
//!
//! An undirected edge with index `j` owns the two darts `2j` (tail to head)
//! and `2j + 1` (head to tail), so `twin` is a lowest-bit flip. Each vertex
//! carries a cyclic sequence of its outgoing darts in counterclockwise
//! order; together with `twin` this fixes a combinatorial embedding on an
//! orientable surface. Faces are the orbits of the successor permutation
//! `alpha(d) = rot(twin(d))`, where `rot` advances one step counterclockwise
//! at the origin of its argument. With counterclockwise rotations this
//! traces every face with its interior on the left.
//!
//! Graphs are mutable while edges and rotations are being installed and are
//! treated as frozen afterwards: every analysis entry point takes `&self`.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

/// Vertex index. Plain integer; graphs here stay well below `u32::MAX`.
pub type Vertex = u32;

/// Edge index into [`EmbeddedGraph::endpoints`].
pub type EdgeIndex = u32;

/// Distance sentinel for vertices a BFS did not reach.
pub const UNREACHED: u32 = u32::MAX;

/// One direction of one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub u32);

impl Dart {
    /// The opposite dart of the same edge.
    pub fn twin(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    /// Index of the edge this dart belongs to.
    pub fn edge(self) -> EdgeIndex {
        self.0 >> 1
    }

    /// True for the `2j + 1` (head to tail) dart of its edge.
    pub fn is_reverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: u32 },
    #[error("dart {dart} does not originate at vertex {vertex}")]
    ForeignDart { dart: u32, vertex: Vertex },
    #[error("rotation at vertex {vertex} must list each of its {degree} incident darts exactly once, got {given}")]
    RotationMismatch {
        vertex: Vertex,
        degree: usize,
        given: usize,
    },
    #[error("duplicate dart {dart} in rotation at vertex {vertex}")]
    DuplicateDart { dart: u32, vertex: Vertex },
    #[error("vertex {vertex} has unplaced darts; set every rotation before tracing faces")]
    UnplacedDarts { vertex: Vertex },
}

/// Cyclic sequence of darts bounding one face.
///
/// The orbit starts at its smallest dart; its length is the face boundary
/// length counted with multiplicity (a bridge contributes twice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceOrbit {
    darts: Vec<Dart>,
}

impl FaceOrbit {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Connected-component labelling: `labels[v]` is the component id of `v`,
/// ids numbered from 0 in order of smallest member vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<u32>,
}

/// A graph together with a rotation system.
///
/// The edge list and the per-vertex rotations are the single source of truth
/// for both adjacency and embedding. Loops and parallel edges are
/// representable; callers that need simplicity check [`Self::is_simple`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    vertex_count: u32,
    edges: Vec<(Vertex, Vertex)>,
    degrees: Vec<u32>,
    rotations: Vec<Vec<Dart>>,
}

impl EmbeddedGraph {
    pub fn new(vertex_count: u32) -> Self {
        EmbeddedGraph {
            vertex_count,
            edges: Vec::new(),
            degrees: vec![0; vertex_count as usize],
            rotations: vec![Vec::new(); vertex_count as usize],
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// Appends an edge; its two darts exist immediately but are only placed
    /// into rotations by an explicit [`Self::set_rotation`].
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeIndex, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let index = self.edges.len() as EdgeIndex;
        self.edges.push((u, v));
        self.degrees[u as usize] += 1;
        self.degrees[v as usize] += 1;
        Ok(index)
    }

    pub fn endpoints(&self, e: EdgeIndex) -> (Vertex, Vertex) {
        self.edges[e as usize]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Vertex a dart originates from.
    pub fn origin(&self, d: Dart) -> Vertex {
        let (u, v) = self.edges[d.edge() as usize];
        if d.is_reverse() {
            v
        } else {
            u
        }
    }

    /// Vertex a dart points to.
    pub fn head(&self, d: Dart) -> Vertex {
        self.origin(d.twin())
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.degrees[v as usize]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn is_regular(&self, r: u32) -> bool {
        self.degrees.iter().all(|&d| d == r)
    }

    /// Fixes the counterclockwise rotation at `v`. `darts` must be a
    /// permutation of all darts originating at `v`.
    pub fn set_rotation(&mut self, v: Vertex, darts: Vec<Dart>) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        let degree = self.degrees[v as usize] as usize;
        if darts.len() != degree {
            return Err(GraphError::RotationMismatch {
                vertex: v,
                degree,
                given: darts.len(),
            });
        }
        let mut seen = HashSet::with_capacity(darts.len());
        for &d in &darts {
            if d.index() >= self.dart_count() || self.origin(d) != v {
                return Err(GraphError::ForeignDart { dart: d.0, vertex: v });
            }
            if !seen.insert(d.0) {
                return Err(GraphError::DuplicateDart { dart: d.0, vertex: v });
            }
        }
        self.rotations[v as usize] = darts;
        Ok(())
    }

    /// Counterclockwise rotation at `v`, empty until set.
    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotations[v as usize]
    }

    /// True once every dart sits in its origin's rotation.
    pub fn all_darts_placed(&self) -> bool {
        self.first_unplaced().is_none()
    }

    fn first_unplaced(&self) -> Option<Vertex> {
        (0..self.vertex_count)
            .find(|&v| self.rotations[v as usize].len() != self.degrees[v as usize] as usize)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v >= self.vertex_count {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }

    /// Position of every dart inside its origin's rotation.
    fn rotation_index(&self) -> Result<Vec<u32>, GraphError> {
        if let Some(v) = self.first_unplaced() {
            return Err(GraphError::UnplacedDarts { vertex: v });
        }
        let mut pos = vec![0u32; self.dart_count()];
        for rotation in &self.rotations {
            for (i, d) in rotation.iter().enumerate() {
                pos[d.index()] = i as u32;
            }
        }
        Ok(pos)
    }

    /// Orbits of the face successor `alpha(d) = rot(twin(d))`, listed with
    /// the orbit of the smallest unvisited dart first.
    pub fn face_orbits(&self) -> Result<Vec<FaceOrbit>, GraphError> {
        let pos = self.rotation_index()?;
        let successor = |d: Dart| -> Dart {
            let t = d.twin();
            let rotation = &self.rotations[self.origin(t) as usize];
            rotation[(pos[t.index()] as usize + 1) % rotation.len()]
        };
        let mut visited = vec![false; self.dart_count()];
        let mut orbits = Vec::new();
        for start in 0..self.dart_count() as u32 {
            if visited[start as usize] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = Dart(start);
            loop {
                visited[d.index()] = true;
                darts.push(d);
                d = successor(d);
                if d.0 == start {
                    break;
                }
            }
            orbits.push(FaceOrbit { darts });
        }
        Ok(orbits)
    }

    /// Euler genus, summed over connected components: a component with
    /// vertices V, edges E and face orbits F contributes `(2 - V + E - F) / 2`.
    /// Zero certifies that the rotation system is a plane embedding.
    pub fn euler_genus(&self) -> Result<u32, GraphError> {
        let orbits = self.face_orbits()?;
        let components = self.connected_components();
        let mut v_count = vec![0i64; components.count];
        let mut e_count = vec![0i64; components.count];
        let mut f_count = vec![0i64; components.count];
        for v in 0..self.vertex_count as usize {
            v_count[components.labels[v] as usize] += 1;
        }
        for &(u, _) in &self.edges {
            e_count[components.labels[u as usize] as usize] += 1;
        }
        for orbit in &orbits {
            let v = self.origin(orbit.darts[0]);
            f_count[components.labels[v as usize] as usize] += 1;
        }
        let mut genus = 0i64;
        for c in 0..components.count {
            if e_count[c] == 0 {
                continue; // a bare vertex is a sphere with one face
            }
            let doubled = 2 - v_count[c] + e_count[c] - f_count[c];
            debug_assert!(doubled >= 0 && doubled % 2 == 0);
            genus += doubled / 2;
        }
        Ok(genus as u32)
    }

    /// Exact unweighted shortest-path distances from `source`; unreached
    /// vertices get [`UNREACHED`].
    pub fn bfs(&self, source: Vertex) -> Vec<u32> {
        Adjacency::new(self).bfs(source)
    }

    pub fn connected_components(&self) -> Components {
        let adj = Adjacency::new(self);
        let n = self.vertex_count as usize;
        let mut labels = vec![u32::MAX; n];
        let mut count = 0usize;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if labels[start] != u32::MAX {
                continue;
            }
            labels[start] = count as u32;
            queue.push_back(start as u32);
            while let Some(v) = queue.pop_front() {
                for &w in adj.neighbors(v) {
                    if labels[w as usize] == u32::MAX {
                        labels[w as usize] = count as u32;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        Components { count, labels }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count <= 1
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges
            .iter()
            .any(|&(u, v)| !seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loop() && !self.has_parallel_edges()
    }
}

/// Flat adjacency built once from a frozen graph; all heavy traversals run
/// on this instead of the per-vertex rotation vectors.
pub struct Adjacency {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Adjacency {
    pub fn new(g: &EmbeddedGraph) -> Self {
        let n = g.vertex_count() as usize;
        let mut offsets = vec![0u32; n + 1];
        for &(u, v) in g.edges() {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0u32; g.dart_count()];
        for &(u, v) in g.edges() {
            targets[cursor[u as usize] as usize] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize] as usize] = u;
            cursor[v as usize] += 1;
        }
        Adjacency { offsets, targets }
    }

    pub fn vertex_count(&self) -> u32 {
        (self.offsets.len() - 1) as u32
    }

    pub fn neighbors(&self, v: Vertex) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    pub fn bfs(&self, source: Vertex) -> Vec<u32> {
        let mut dist = Vec::new();
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        dist
    }

    /// BFS reusing caller-owned buffers, for tight eccentricity loops.
    /// Returns the farthest reached vertex (smallest id on ties) and its
    /// distance.
    pub fn bfs_into(
        &self,
        source: Vertex,
        dist: &mut Vec<u32>,
        queue: &mut VecDeque<u32>,
    ) -> (Vertex, u32) {
        let n = self.vertex_count() as usize;
        dist.clear();
        dist.resize(n, UNREACHED);
        queue.clear();
        dist[source as usize] = 0;
        queue.push_back(source);
        let mut far = (source, 0u32);
        while let Some(v) = queue.pop_front() {
            let next = dist[v as usize] + 1;
            for &w in self.neighbors(v) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = next;
                    if next > far.1 || (next == far.1 && w < far.0) {
                        far = (w, next);
                    }
                    queue.push_back(w);
                }
            }
        }
        far
    }

    /// BFS that also records parents, for shortest-path reconstruction.
    pub fn bfs_with_parents(&self, source: Vertex) -> (Vec<u32>, Vec<u32>) {
        let n = self.vertex_count() as usize;
        let mut dist = vec![UNREACHED; n];
        let mut parent = vec![UNREACHED; n];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v as usize] + 1;
            for &w in self.neighbors(v) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = next;
                    parent[w as usize] = v;
                    queue.push_back(w);
                }
            }
        }
        (dist, parent)
    }
}

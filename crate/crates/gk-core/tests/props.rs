//! Property tests over randomized graphs and rotation systems: the face
//! successor is a permutation whose orbits partition the darts, the Euler
//! identity pins an integer genus for any rotation system, BFS distances
//! are symmetric, and both serialization formats round-trip.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gk_core::formats::{
    encode_rotation_doc, from_graph6, from_rotation_doc, to_graph6, to_rotation_doc,
};
use gk_core::graph::{Dart, EmbeddedGraph, UNREACHED};

/// Random multigraph (loops and parallel edges allowed) with every dart
/// placed in a randomly shuffled rotation.
fn arbitrary_embedded_graph() -> impl Strategy<Value = EmbeddedGraph> {
    (
        1u32..16,
        proptest::collection::vec((0u32..16, 0u32..16), 0..32),
        any::<u64>(),
    )
        .prop_map(|(n, raw_edges, seed)| {
            let mut g = EmbeddedGraph::new(n);
            for (u, v) in raw_edges {
                g.add_edge(u % n, v % n).unwrap();
            }
            let mut incident = vec![Vec::new(); n as usize];
            for e in 0..g.edge_count() as u32 {
                let (u, v) = g.endpoints(e);
                incident[u as usize].push(Dart(2 * e));
                incident[v as usize].push(Dart(2 * e + 1));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (v, mut darts) in incident.into_iter().enumerate() {
                darts.shuffle(&mut rng);
                g.set_rotation(v as u32, darts).unwrap();
            }
            g
        })
}

/// Random simple graph (deduplicated edges, no loops), rotation-free.
fn arbitrary_simple_graph() -> impl Strategy<Value = EmbeddedGraph> {
    (
        1u32..30,
        proptest::collection::vec((0u32..30, 0u32..30), 0..80),
    )
        .prop_map(|(n, raw_edges)| {
            let mut g = EmbeddedGraph::new(n);
            let mut seen = std::collections::HashSet::new();
            for (u, v) in raw_edges {
                let (u, v) = (u % n, v % n);
                if u != v && seen.insert((u.min(v), u.max(v))) {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn face_orbits_partition_the_darts(g in arbitrary_embedded_graph()) {
        let orbits = g.face_orbits().unwrap();
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        prop_assert_eq!(total, g.dart_count());
        let mut seen = vec![false; g.dart_count()];
        for orbit in &orbits {
            for d in orbit.darts() {
                prop_assert!(!seen[d.index()], "dart in two orbits");
                seen[d.index()] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn euler_identity_holds_for_any_rotation_system(g in arbitrary_embedded_graph()) {
        // V - E + F = 2c - 2g per component, with integer g >= 0, whatever
        // the (possibly scrambled) rotations are
        let orbits = g.face_orbits().unwrap();
        let components = g.connected_components();
        let mut v_count = vec![0i64; components.count];
        let mut e_count = vec![0i64; components.count];
        let mut f_count = vec![0i64; components.count];
        for v in 0..g.vertex_count() {
            v_count[components.labels[v as usize] as usize] += 1;
        }
        for &(u, _) in g.edges() {
            e_count[components.labels[u as usize] as usize] += 1;
        }
        for orbit in &orbits {
            let v = g.origin(orbit.darts()[0]);
            f_count[components.labels[v as usize] as usize] += 1;
        }
        let mut genus_total = 0;
        for c in 0..components.count {
            if e_count[c] == 0 {
                continue;
            }
            let doubled = 2 - v_count[c] + e_count[c] - f_count[c];
            prop_assert!(doubled >= 0, "negative genus in component {}", c);
            prop_assert_eq!(doubled % 2, 0, "odd Euler defect in component {}", c);
            genus_total += doubled / 2;
        }
        prop_assert_eq!(g.euler_genus().unwrap() as i64, genus_total);
    }

    #[test]
    fn bfs_distances_are_symmetric(g in arbitrary_simple_graph(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cache = std::collections::HashMap::new();
        for _ in 0..100 {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let du = cache.entry(u).or_insert_with(|| g.bfs(u)).clone();
            let dv = cache.entry(v).or_insert_with(|| g.bfs(v)).clone();
            prop_assert_eq!(du[v as usize], dv[u as usize]);
        }
    }

    #[test]
    fn graph6_round_trips_the_edge_set(g in arbitrary_simple_graph()) {
        let text = to_graph6(&g).unwrap();
        let back = from_graph6(&text).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let set = |g: &EmbeddedGraph| -> std::collections::BTreeSet<(u32, u32)> {
            g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
        };
        prop_assert_eq!(set(&back), set(&g));
        prop_assert_eq!(to_graph6(&back).unwrap(), text);
    }

    #[test]
    fn rotation_doc_round_trips_census_and_genus(g in arbitrary_embedded_graph()) {
        let doc = to_rotation_doc(&g, None);
        let text = encode_rotation_doc(&doc);
        let (back, labels) = from_rotation_doc(&doc).unwrap();
        prop_assert!(labels.is_none());
        prop_assert_eq!(
            gk_core::face_census(&back).unwrap(),
            gk_core::face_census(&g).unwrap()
        );
        prop_assert_eq!(back.euler_genus().unwrap(), g.euler_genus().unwrap());
        prop_assert_eq!(encode_rotation_doc(&to_rotation_doc(&back, None)), text);
    }

    #[test]
    fn unreached_is_mutual(g in arbitrary_simple_graph()) {
        let dist = g.bfs(0);
        for (v, &d) in dist.iter().enumerate() {
            if d == UNREACHED {
                prop_assert_eq!(g.bfs(v as u32)[0], UNREACHED);
            }
        }
    }
}

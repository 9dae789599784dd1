mod common;

use common::{arb_hypergraph, permutation};
use hypersid_core::canon::{canonical, enumerate_classes};
use hypersid_core::constructions::{complete_partite, tight_cycle_partite};
use hypersid_core::embed::is_isomorphic;
use hypersid_core::{Hypergraph, PartiteHypergraph, Vertex};
use proptest::prelude::*;

fn subset_of(n: usize, mask: u64) -> Vec<Vertex> {
    (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect()
}

#[test]
fn graph_class_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_classes(2, n, 100, |_| true).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    // 3-graphs on 4 vertices: one class per edge count
    assert_eq!(enumerate_classes(3, 4, 100, |_| true).unwrap().len(), 5);
}

#[test]
fn link_profile_reconstructs_parent() {
    let c6 = tight_cycle_partite(3, 6).unwrap();
    let k = complete_partite(&[2, 1, 3]).unwrap();
    for f in [c6, k] {
        for part in 1..=3u8 {
            let profile = f.link_profile(part).unwrap();
            let n = f.hypergraph().vertex_count();
            let mut edges = Vec::new();
            for link in &profile.entries {
                for e in link.embedded(n).edges() {
                    let mut full = e.to_vec();
                    full.push(link.anchor);
                    edges.push(full);
                }
            }
            assert_eq!(Hypergraph::new(3, n, edges).unwrap(), *f.hypergraph());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_and_removal(h in arb_hypergraph(3, 6), mask in any::<u64>()) {
        let u = subset_of(h.vertex_count(), mask);
        let d = h.boundary_degree(&u).unwrap();
        let oracle = h.edges().filter(|e| e.iter().any(|v| u.contains(v))).count();
        prop_assert_eq!(d, oracle);
        let (rest, map) = h.remove_vertices(&u).unwrap();
        prop_assert_eq!(rest.edge_count(), h.edge_count() - d);
        prop_assert_eq!(rest.vertex_count(), h.vertex_count() - u.len());
        for (v, image) in map.iter().enumerate() {
            prop_assert_eq!(image.is_none(), u.contains(&(v as Vertex)));
        }
    }

    #[test]
    fn degree_sum(h in arb_hypergraph(3, 6)) {
        let stats = h.degree_stats();
        prop_assert_eq!(h.degrees().iter().sum::<usize>(), 3 * h.edge_count());
        prop_assert!(stats.min_degree <= stats.max_degree && stats.max_degree <= h.edge_count());
    }

    #[test]
    fn downward_matches_edges_through_vertex(h in arb_hypergraph(3, 6), v in 0u32..6) {
        prop_assume!((v as usize) < h.vertex_count());
        let down = h.downward(v).unwrap();
        prop_assert_eq!(down.vertex_count(), h.vertex_count());
        prop_assert_eq!(down.edge_count(), h.degree(v));
        for f in down.edges() {
            let mut e = f.to_vec();
            e.push(v);
            prop_assert!(h.contains_set(&e));
        }
    }

    #[test]
    fn common_neighbourhood_oracle(h in arb_hypergraph(3, 6), mask in any::<u64>()) {
        let n = h.vertex_count();
        prop_assume!(n >= 2);
        let pairs: Vec<[Vertex; 2]> = (0..n as Vertex)
            .flat_map(|a| (a + 1..n as Vertex).map(move |b| [a, b]))
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        let s = Hypergraph::new(2, n, &pairs).unwrap();
        let got = h.common_neighborhood(&s).unwrap();
        let oracle: Vec<Vertex> = (0..n as Vertex)
            .filter(|&u| pairs.iter().all(|p| h.contains_set(&[p[0], p[1], u])))
            .collect();
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn components_partition_vertices(h in arb_hypergraph(2, 7)) {
        let comps = h.components();
        let mut all: Vec<Vertex> = comps.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..h.vertex_count() as Vertex).collect::<Vec<_>>());
        for c in &comps {
            prop_assert!(h.is_component_closed(&c.vertices));
        }
    }

    #[test]
    fn canonical_form_is_invariant(h in arb_hypergraph(3, 6), seed in any::<u64>()) {
        let p = h.relabel(&permutation(h.vertex_count(), seed), h.vertex_count()).unwrap();
        let c = canonical(&h).unwrap();
        prop_assert_eq!(&c, &canonical(&p).unwrap());
        prop_assert!(is_isomorphic(&c, &h).unwrap());
    }

    #[test]
    fn detected_partition_is_valid(h in arb_hypergraph(2, 6)) {
        if let Ok(p) = PartiteHypergraph::detect(h.clone()) {
            for e in h.edges() {
                prop_assert_ne!(p.class_of(e[0]).unwrap(), p.class_of(e[1]).unwrap());
            }
        }
    }
}

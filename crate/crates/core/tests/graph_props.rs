mod common;

use std::collections::BTreeSet;

use common::{tree, tree_upto};
use proptest::prelude::*;
use tree_assoc::graph::{VertexSet, WeightedGraph};
use tree_assoc::io::{self, TreeFile};

fn edge_set(g: &WeightedGraph) -> BTreeSet<(String, String, u64)> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.label(e.u).to_string(), g.label(e.v).to_string());
            if a < b { (a, b, e.w) } else { (b, a, e.w) }
        })
        .collect()
}

proptest! {
    #[test]
    fn unique_path_reverses(g in tree_upto(9, 3), a in 0usize..9, b in 0usize..9) {
        let n = g.vertex_count();
        let (u, v) = (tree_assoc::VertexId(a % n), tree_assoc::VertexId(b % n));
        let there = g.unique_path(u, v).unwrap();
        let mut back = g.unique_path(v, u).unwrap();
        back.reverse();
        prop_assert_eq!(&there, &back);
        let distinct: BTreeSet<_> = there.iter().collect();
        prop_assert_eq!(distinct.len(), there.len());
        prop_assert_eq!(there.first(), Some(&u));
        prop_assert_eq!(there.last(), Some(&v));
    }

    #[test]
    fn induced_subgraph_edges(g in tree_upto(9, 3), mask in any::<u64>()) {
        let w = VertexSet::from_mask(mask & ((1u64 << g.vertex_count()) - 1));
        let h = g.induced_subgraph(&w).unwrap();
        let keep: BTreeSet<&str> = w.labels(&g).into_iter().collect();
        let expected: BTreeSet<_> = edge_set(&g)
            .into_iter()
            .filter(|(a, b, _)| keep.contains(a.as_str()) && keep.contains(b.as_str()))
            .collect();
        prop_assert_eq!(edge_set(&h), expected);
        prop_assert_eq!(h.vertex_count(), w.len());
    }

    #[test]
    fn components_partition(g in tree_upto(9, 3), mask in any::<u64>()) {
        let w = VertexSet::from_mask(mask & ((1u64 << g.vertex_count()) - 1));
        let h = g.induced_subgraph(&w).unwrap();
        let comps = h.connected_components();
        let mut all: Vec<_> = comps.iter().flat_map(|c| c.iter()).collect();
        all.sort();
        let n = all.len();
        all.dedup();
        prop_assert_eq!(all.len(), n);
        prop_assert_eq!(n, h.vertex_count());
        prop_assert!(comps.iter().all(|c| !c.is_empty()));
        // a forest: components = vertices - edges
        prop_assert_eq!(comps.len(), h.vertex_count() - h.edge_count());
        prop_assert_eq!(g.connected_components().len(), 1);
    }

    #[test]
    fn json_round_trip(g in tree(7, 5)) {
        let back = io::parse_json(&io::to_json(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(TreeFile::from_graph(&back), TreeFile::from_graph(&g));
    }

    #[test]
    fn text_round_trip(g in tree_upto(8, 5)) {
        let back = io::parse_text(&io::to_text(&g)).unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn malformed_json_reports_position() {
    let err = io::parse_json("{\"vertices\": [\"x1\",]\n}").unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("line"), "{msg}");
}

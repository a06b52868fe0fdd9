#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use tree_assoc::graph::{VertexId, WeightedGraph};
use tree_assoc::random::{all_labeled_trees, all_weightings, random_increasing_tree, random_tree};

pub fn tree(n: usize, wmax: u64) -> impl Strategy<Value = WeightedGraph> {
    any::<u64>().prop_map(move |seed| random_tree(n, wmax, seed).unwrap())
}

pub fn tree_upto(max_n: usize, wmax: u64) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n, any::<u64>()).prop_map(move |(n, seed)| random_tree(n, wmax, seed).unwrap())
}

pub fn increasing_upto(max_n: usize, wmax: u64) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n, any::<u64>())
        .prop_map(move |(n, seed)| random_increasing_tree(n, wmax, seed).unwrap().0)
}

pub fn path(weights: &[u64]) -> WeightedGraph {
    let labels: Vec<String> = (1..=weights.len() + 1).map(|i| format!("x{i}")).collect();
    let edges: Vec<(String, String, u64)> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| (labels[i].clone(), labels[i + 1].clone(), w))
        .collect();
    WeightedGraph::new(&labels, &edges).unwrap()
}

/// AHU encoding of the tree rooted at `r`.
fn encode(adj: &[Vec<usize>], r: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[r]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| encode(adj, c, r))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism class of an unweighted labeled tree: the smallest rooted
/// encoding over all roots.
fn shape(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    (0..n).map(|r| encode(&adj, r, usize::MAX)).min().unwrap()
}

/// One labeled representative per unlabeled tree on `n` vertices.
pub fn tree_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    all_labeled_trees(n)
        .filter(|e| seen.insert(shape(n, e)))
        .collect()
}

/// Every weighting of every unlabeled tree on `n` vertices, weights in
/// `1..=wmax`. Covers all weighted trees up to isomorphism (with repeats).
pub fn weighted_shapes(n: usize, wmax: u64) -> Vec<WeightedGraph> {
    let mut out = Vec::new();
    for edges in tree_shapes(n) {
        for w in all_weightings(n - 1, wmax) {
            out.push(tree_assoc::random::weighted_tree(n, &edges, &w).unwrap());
        }
    }
    out
}

pub fn ids(g: &WeightedGraph) -> Vec<VertexId> {
    g.vertices().collect()
}

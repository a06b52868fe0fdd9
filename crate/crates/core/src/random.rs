//! Labeled trees from Prüfer sequences: seeded random instances and
//! exhaustive enumeration. Vertices are labeled `x1..xn`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::increasing::is_increasing_tree;

/// Attempts allowed before rejection sampling gives up.
pub const MAX_ATTEMPTS: u64 = 1_000_000;

pub fn vertex_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into the edge list
/// of the labeled tree it encodes.
pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

pub fn weighted_tree(n: usize, edges: &[(usize, usize)], weights: &[u64]) -> Result<WeightedGraph> {
    let labels = vertex_labels(n);
    let edges: Vec<(&str, &str, u64)> = edges
        .iter()
        .zip(weights)
        .map(|(&(u, v), &w)| (labels[u].as_str(), labels[v].as_str(), w))
        .collect();
    WeightedGraph::new(&labels, &edges)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TooFewVertices { n, min: 2 })
    } else {
        Ok(())
    }
}

fn sample_tree(rng: &mut ChaCha8Rng, n: usize, wmax: u64) -> Result<WeightedGraph> {
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let edges = prufer_edges(&seq, n);
    let weights: Vec<u64> = (0..n - 1).map(|_| rng.gen_range(1..=wmax)).collect();
    weighted_tree(n, &edges, &weights)
}

/// A uniformly random labeled tree on `n ≥ 2` vertices with i.i.d. weights
/// in `1..=wmax`.
pub fn random_tree(n: usize, wmax: u64, seed: u64) -> Result<WeightedGraph> {
    check_n(n)?;
    if wmax == 0 {
        return Err(Error::InvalidWeightBound(0));
    }
    sample_tree(&mut ChaCha8Rng::seed_from_u64(seed), n, wmax)
}

/// Like [`random_tree`] but resamples until the tree is increasing. Returns
/// the tree and the number of rejected samples.
pub fn random_increasing_tree(n: usize, wmax: u64, seed: u64) -> Result<(WeightedGraph, u64)> {
    check_n(n)?;
    if wmax == 0 {
        return Err(Error::InvalidWeightBound(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for rejected in 0..MAX_ATTEMPTS {
        let g = sample_tree(&mut rng, n, wmax)?;
        if is_increasing_tree(&g) {
            return Ok((g, rejected));
        }
    }
    Err(Error::RejectionLimit(MAX_ATTEMPTS))
}

/// Every labeled tree on `n ≥ 2` vertices, one per Prüfer sequence, in
/// lexicographic order of the sequence.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut k| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        prufer_edges(&seq, n)
    })
}

/// Every weight assignment in `1..=wmax` for `m` edges.
pub fn all_weightings(m: usize, wmax: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = (wmax as usize).pow(m as u32);
    (0..total).map(move |mut k| {
        let mut w = vec![1; m];
        for slot in w.iter_mut().rev() {
            *slot = (k % wmax as usize) as u64 + 1;
            k /= wmax as usize;
        }
        w
    })
}

//! Associated primes of `I(G_ω)^t` for an increasing weighted tree, read off
//! the strong vertex covers.
//!
//! A cover `C` gives an associated prime `(C)` of the `t`-th power exactly
//! when `C` is strong and `s(C) + 1 ≤ t`. Everything here is a transcription
//! of that criterion over the `2^n` subsets of the vertex set; the
//! [`oracle`](crate::oracle) module checks it independently.

use std::collections::BTreeMap;

use crate::cover::{analyze_cover_unchecked, check_enumerable, enumerate_vertex_covers, CoverReport};
use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::increasing::is_increasing_tree;

/// `Ass(I(G_ω)^t)` as a list of prime supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssResult {
    pub t: u64,
    pub primes: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub astab: u64,
    pub ass_infinity: Vec<VertexSet>,
    /// First power at which each strong cover becomes associated, `s(C) + 1`.
    pub per_cover: BTreeMap<VertexSet, u64>,
}

fn check_tree(g: &WeightedGraph) -> Result<()> {
    if is_increasing_tree(g) {
        Ok(())
    } else {
        Err(Error::NotIncreasingTree)
    }
}

fn check_power(t: u64) -> Result<()> {
    if t == 0 {
        Err(Error::InvalidPower(t))
    } else {
        Ok(())
    }
}

fn threshold(report: &CoverReport) -> Option<u64> {
    report.strong.then_some(report.s as u64 + 1)
}

/// Whether `(C) ∈ Ass(I(G_ω)^t)`. Never true for `C = V`.
pub fn is_associated(g: &WeightedGraph, c: &VertexSet, t: u64) -> Result<bool> {
    check_tree(g)?;
    check_power(t)?;
    let report = analyze_cover_unchecked(g, c)?;
    Ok(threshold(&report).is_some_and(|first| first <= t))
}

fn strong_covers(g: &WeightedGraph) -> Result<Vec<(VertexSet, u64)>> {
    check_tree(g)?;
    check_enumerable(g)?;
    let mut out = Vec::new();
    // zero ideal: no associated primes to speak of
    if g.edge_count() == 0 {
        return Ok(out);
    }
    for c in enumerate_vertex_covers(g, false)? {
        let report = analyze_cover_unchecked(g, &c)?;
        if let Some(first) = threshold(&report) {
            out.push((c, first));
        }
    }
    Ok(out)
}

/// ```
/// use tree_assoc::{assoc::ass_power, WeightedGraph};
///
/// let g = WeightedGraph::new(
///     &["x1", "x2", "x3", "x4"],
///     &[("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 2)],
/// )
/// .unwrap();
/// assert_eq!(ass_power(&g, 1).unwrap().primes.len(), 3);
/// assert_eq!(ass_power(&g, 2).unwrap().primes.len(), 4);
/// ```
pub fn ass_power(g: &WeightedGraph, t: u64) -> Result<AssResult> {
    check_power(t)?;
    let primes = strong_covers(g)?
        .into_iter()
        .filter(|&(_, first)| first <= t)
        .map(|(c, _)| c)
        .collect();
    Ok(AssResult { t, primes })
}

/// The stable set: every strong cover.
pub fn ass_infinity(g: &WeightedGraph) -> Result<Vec<VertexSet>> {
    Ok(astab(g)?.ass_infinity)
}

/// `astab(I(G_ω)) = max { s(C) + 1 : C strong }`.
pub fn astab(g: &WeightedGraph) -> Result<StabilityReport> {
    check_tree(g)?;
    if g.edge_count() == 0 {
        return Err(Error::TrivialTree);
    }
    let strong = strong_covers(g)?;
    let astab = strong.iter().map(|&(_, first)| first).max().unwrap_or(1);
    Ok(StabilityReport {
        astab,
        ass_infinity: strong.iter().map(|(c, _)| c.clone()).collect(),
        per_cover: strong.into_iter().collect(),
    })
}

//! Vertex covers of weighted trees: enumeration, `ν_S`, the reduced graph
//! `G_S`, its rooted components, and strong-cover recognition with `s(C)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};
use crate::increasing::{is_increasing_tree, RootedIncreasingTree};

/// Cover enumeration walks all `2^n` subsets and refuses larger graphs.
pub const MAX_ENUMERATION_VERTICES: usize = 24;

pub fn is_vertex_cover(g: &WeightedGraph, c: &VertexSet) -> Result<bool> {
    g.check_set(c)?;
    Ok(g.edges().iter().all(|e| c.contains(e.u) || c.contains(e.v)))
}

/// A cover from which no vertex can be dropped.
pub fn is_minimal_cover(g: &WeightedGraph, c: &VertexSet) -> Result<bool> {
    if !is_vertex_cover(g, c)? {
        return Ok(false);
    }
    for v in c.iter() {
        let smaller = VertexSet::new(c.iter().filter(|&x| x != v));
        if is_vertex_cover(g, &smaller)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_enumerable(g: &WeightedGraph) -> Result<()> {
    if g.vertex_count() > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooManyVertices {
            n: g.vertex_count(),
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// All vertex covers (or only the inclusion-minimal ones) in canonical order.
pub fn enumerate_vertex_covers(g: &WeightedGraph, minimal_only: bool) -> Result<Vec<VertexSet>> {
    check_enumerable(g)?;
    let n = g.vertex_count();
    let edge_masks: Vec<u64> = g.edges().iter().map(|e| 1 << e.u.0 | 1 << e.v.0).collect();
    let covers = |m: u64| edge_masks.iter().all(|&e| m & e != 0);
    let mut out: Vec<VertexSet> = (0..1u64 << n)
        .filter(|&m| covers(m))
        .filter(|&m| !minimal_only || (0..n).all(|i| m >> i & 1 == 0 || !covers(m & !(1 << i))))
        .map(VertexSet::from_mask)
        .collect();
    out.sort();
    Ok(out)
}

pub fn check_independent(g: &WeightedGraph, s: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    match g.edges().iter().find(|e| s.contains(e.u) && s.contains(e.v)) {
        Some(e) => Err(Error::NotIndependent(
            g.label(e.u).to_string(),
            g.label(e.v).to_string(),
        )),
        None => Ok(()),
    }
}

/// `N_G(S)`: vertices outside `S` with a neighbor in `S`.
pub fn neighborhood(g: &WeightedGraph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    Ok(g.vertices()
        .filter(|&u| !s.contains(u))
        .filter(|&u| g.incident(u).unwrap().iter().any(|&(z, _)| s.contains(z)))
        .collect())
}

/// `ν_S(u)`: the smallest weight of an edge from `u` into `S`.
pub fn nu(g: &WeightedGraph, s: &VertexSet, u: VertexId) -> Result<u64> {
    check_independent(g, s)?;
    g.check_vertex(u)?;
    if s.contains(u) {
        return Err(Error::NotInNeighborhood(g.label(u).to_string()));
    }
    nu_unchecked(g, s, u).ok_or_else(|| Error::NotInNeighborhood(g.label(u).to_string()))
}

fn nu_unchecked(g: &WeightedGraph, s: &VertexSet, u: VertexId) -> Option<u64> {
    g.incident(u)
        .ok()?
        .iter()
        .filter(|&&(z, _)| s.contains(z))
        .map(|&(_, w)| w)
        .min()
}

fn nu_map(g: &WeightedGraph, s: &VertexSet, nbhd: &VertexSet) -> BTreeMap<VertexId, u64> {
    nbhd.iter()
        .map(|u| (u, nu_unchecked(g, s, u).expect("neighborhood vertex has an S-neighbor")))
        .collect()
}

/// `G_S`: the graph on `V \ S` keeping the edges of `G \ S` except those `uz`
/// with `u ∈ N_G(S)` and `ω(uz) ≥ ν_S(u)`. Both endpoints are tested.
pub fn reduced_graph(g: &WeightedGraph, s: &VertexSet) -> Result<WeightedGraph> {
    check_independent(g, s)?;
    let nbhd = neighborhood(g, s)?;
    let nus = nu_map(g, s, &nbhd);
    let removed = |u: VertexId, w: u64| nus.get(&u).is_some_and(|&n| w >= n);
    g.subgraph_filtered(&g.vertex_set().difference(s), |e| {
        !removed(e.u, e.w) && !removed(e.v, e.w)
    })
}

/// A connected component of `G_S`, tagged with its unique `N_G(S)` vertex
/// when it has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedComponent {
    /// Component vertices, as ids of the original graph.
    pub vertices: VertexSet,
    /// The component as a standalone graph (its own ids, same labels).
    pub subtree: WeightedGraph,
    /// Root as an id of `subtree`.
    pub root: Option<VertexId>,
}

impl RootedComponent {
    pub fn rooted_tree(&self) -> Option<Result<RootedIncreasingTree>> {
        self.root
            .map(|r| RootedIncreasingTree::new(self.subtree.clone(), r))
    }
}

/// Components of `G_S`, each rooted at its `N_G(S)` vertex if present.
pub fn decompose(g: &WeightedGraph, s: &VertexSet) -> Result<Vec<RootedComponent>> {
    if !is_increasing_tree(g) {
        return Err(Error::NotIncreasingTree);
    }
    decompose_unchecked(g, s)
}

fn decompose_unchecked(g: &WeightedGraph, s: &VertexSet) -> Result<Vec<RootedComponent>> {
    let gs = reduced_graph(g, s)?;
    let nbhd = neighborhood(g, s)?;
    let mut out = Vec::new();
    for comp in gs.connected_components() {
        let vertices = gs.translate(&comp, g)?;
        let subtree = gs.induced_subgraph(&comp)?;
        let roots: Vec<VertexId> = vertices.iter().filter(|&v| nbhd.contains(v)).collect();
        let root = match roots.as_slice() {
            [] => None,
            [r] => Some(subtree.vertex(g.label(*r))?),
            many => {
                return Err(Error::MultipleRoots(
                    many.iter().map(|&v| g.label(v).to_string()).collect(),
                ))
            }
        };
        out.push(RootedComponent {
            vertices,
            subtree,
            root,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub cover: VertexSet,
    /// `S = V \ C`.
    pub complement: VertexSet,
    /// `N_G(S)`.
    pub neighborhood: VertexSet,
    pub nu: BTreeMap<VertexId, u64>,
    pub components: Vec<RootedComponent>,
    /// `C = V`; such a cover is never strong and its `s` is reported as 0.
    pub full_cover: bool,
    pub minimal: bool,
    pub strong: bool,
    /// Special vertices of `C`, as ids of the original graph.
    pub special: VertexSet,
    /// `s(C) = |special|`.
    pub s: usize,
}

/// Classifies a vertex cover of an increasing weighted tree.
///
/// `C` is strong iff every component of `G_S` carries a root, and `s(C)` is
/// the sum of the rooted special counts of those components.
///
/// ```
/// use tree_assoc::{cover::analyze_cover, WeightedGraph};
///
/// let g = WeightedGraph::new(
///     &["x1", "x2", "x3", "x4"],
///     &[("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 2)],
/// )
/// .unwrap();
/// let c = g.vertex_set_of(&["x1", "x2", "x3"]).unwrap();
/// let report = analyze_cover(&g, &c).unwrap();
/// assert!(report.strong);
/// assert_eq!(report.special.labels(&g), vec!["x2"]);
/// assert_eq!(report.s, 1);
/// ```
pub fn analyze_cover(g: &WeightedGraph, c: &VertexSet) -> Result<CoverReport> {
    if !is_increasing_tree(g) {
        return Err(Error::NotIncreasingTree);
    }
    analyze_cover_unchecked(g, c)
}

// Caller has established that `g` is an increasing tree.
pub(crate) fn analyze_cover_unchecked(g: &WeightedGraph, c: &VertexSet) -> Result<CoverReport> {
    if !is_vertex_cover(g, c)? {
        return Err(Error::NotACover);
    }
    let complement = g.vertex_set().difference(c);
    let minimal = is_minimal_cover(g, c)?;
    if complement.is_empty() {
        return Ok(CoverReport {
            cover: c.clone(),
            complement,
            neighborhood: VertexSet::empty(),
            nu: BTreeMap::new(),
            components: Vec::new(),
            full_cover: true,
            minimal,
            strong: false,
            special: VertexSet::empty(),
            s: 0,
        });
    }
    let nbhd = neighborhood(g, &complement)?;
    let nu = nu_map(g, &complement, &nbhd);
    let components = decompose_unchecked(g, &complement)?;
    let strong = components.iter().all(|c| c.root.is_some());
    let mut special = VertexSet::empty();
    for comp in &components {
        if let Some(rooted) = comp.rooted_tree() {
            let local = rooted?.special_vertices();
            special = special.union(&comp.subtree.translate(&local, g)?);
        }
    }
    let s = special.len();
    Ok(CoverReport {
        cover: c.clone(),
        complement,
        neighborhood: nbhd,
        nu,
        components,
        full_cover: false,
        minimal,
        strong,
        special,
        s,
    })
}

/// Strong-cover test transcribed from the path definition: `C ≠ V` and
/// either `C` is minimal, or every `w ∈ C \ N_G(S)` reaches some
/// `x ∈ N_G(S)` through vertices outside `N_G(S)` with last edge weight
/// below `ν_S(x)`.
pub fn is_strong_cover_by_definition(g: &WeightedGraph, c: &VertexSet) -> Result<bool> {
    if !is_increasing_tree(g) {
        return Err(Error::NotIncreasingTree);
    }
    if !is_vertex_cover(g, c)? {
        return Err(Error::NotACover);
    }
    let s = g.vertex_set().difference(c);
    if s.is_empty() {
        return Ok(false);
    }
    if is_minimal_cover(g, c)? {
        return Ok(true);
    }
    let nbhd = neighborhood(g, &s)?;
    let nus = nu_map(g, &s, &nbhd);
    let reaches = |w: VertexId| {
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![w];
        seen[w.0] = true;
        while let Some(y) = stack.pop() {
            for &(x, wt) in g.incident(y).unwrap() {
                if let Some(&n) = nus.get(&x) {
                    if wt < n {
                        return true;
                    }
                } else if !s.contains(x) && !seen[x.0] {
                    seen[x.0] = true;
                    stack.push(x);
                }
            }
        }
        false
    };
    Ok(c.difference(&nbhd).iter().all(reaches))
}

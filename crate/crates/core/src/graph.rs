//! Immutable edge-weighted graphs.
//!
//! Vertices carry a string label and a dense internal index assigned in
//! declaration order. Every vertex set and result list is kept sorted by that
//! index, so anything derived from a graph is deterministic.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense index of a vertex inside one particular [`WeightedGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A set of vertices in canonical (declaration) order.
///
/// Sets compare first by size and then lexicographically, which is the order
/// used for every list of covers or prime supports this crate returns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(Vec<VertexId>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = VertexId>>(ids: I) -> Self {
        let mut v: Vec<VertexId> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from a bitmask over vertex indices.
    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).map(VertexId).collect())
    }

    /// Bitmask over vertex indices; `None` if some index is 64 or more.
    pub fn to_mask(&self) -> Option<u64> {
        self.0.iter().try_fold(0u64, |m, v| {
            (v.0 < 64).then(|| m | 1 << v.0)
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|v| !other.contains(*v)).collect())
    }

    pub fn labels<'g>(&self, g: &'g WeightedGraph) -> Vec<&'g str> {
        self.iter().map(|v| g.label(v)).collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: u64,
}

impl WeightedEdge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<WeightedEdge>,
    // neighbor lists sorted by neighbor index
    adj: Vec<Vec<(VertexId, u64)>>,
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}:{}", self.label(e.u), self.label(e.v), e.w))
            .collect();
        f.debug_struct("WeightedGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl WeightedGraph {
    /// Validates and builds a graph. Vertex order is the input order.
    ///
    /// ```
    /// use tree_assoc::WeightedGraph;
    ///
    /// let g = WeightedGraph::new(
    ///     &["x1", "x2", "x3", "x4"],
    ///     &[("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 2)],
    /// )
    /// .unwrap();
    /// assert_eq!(g.vertex_count(), 4);
    /// assert_eq!(g.edge_count(), 3);
    /// ```
    pub fn new<V: AsRef<str>, E: AsRef<str>>(vertices: &[V], edges: &[(E, E, u64)]) -> Result<Self> {
        let mut labels = Vec::with_capacity(vertices.len());
        let mut index = HashMap::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if v.is_empty() || v.chars().any(char::is_whitespace) {
                return Err(Error::InvalidLabel(v.to_string()));
            }
            if index.insert(v.to_string(), VertexId(labels.len())).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            labels.push(v.to_string());
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut out = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownEndpoint(a.to_string()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownEndpoint(b.to_string()))?;
            if u == v {
                return Err(Error::SelfLoop(a.to_string()));
            }
            if *w == 0 {
                return Err(Error::NonpositiveWeight(a.to_string(), b.to_string(), 0));
            }
            let au: &mut Vec<(VertexId, u64)> = &mut adj[u.0];
            if au.iter().any(|&(x, _)| x == v) {
                return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
            }
            au.push((v, *w));
            adj[v.0].push((u, *w));
            out.push(WeightedEdge { u, v, w: *w });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(WeightedGraph {
            labels,
            index,
            edges: out,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.vertices().collect())
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of `v`. Panics if `v` does not belong to this graph.
    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn vertex_set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Neighbors of `u` with the weight of the connecting edge.
    pub fn incident(&self, u: VertexId) -> Result<&[(VertexId, u64)]> {
        self.check_vertex(u)?;
        Ok(&self.adj[u.0])
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<u64> {
        self.adj
            .get(u.0)?
            .iter()
            .find(|&&(x, _)| x == v)
            .map(|&(_, w)| w)
    }

    pub fn neighbors(&self, u: VertexId) -> Result<VertexSet> {
        Ok(VertexSet(self.incident(u)?.iter().map(|&(x, _)| x).collect()))
    }

    pub fn degree(&self, u: VertexId) -> Result<usize> {
        Ok(self.incident(u)?.len())
    }

    pub fn leaves(&self) -> VertexSet {
        VertexSet(self.vertices().filter(|v| self.adj[v.0].len() == 1).collect())
    }

    /// `L_G(u)`: the neighbors of `u` that are leaves.
    pub fn leaf_neighbors(&self, u: VertexId) -> Result<VertexSet> {
        Ok(VertexSet(
            self.incident(u)?
                .iter()
                .map(|&(x, _)| x)
                .filter(|x| self.adj[x.0].len() == 1)
                .collect(),
        ))
    }

    /// Connected and `|E| = |V| - 1`. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        !self.labels.is_empty()
            && self.edges.len() + 1 == self.labels.len()
            && self.connected_components().len() == 1
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![VertexId(start)];
            let mut queue = VecDeque::from([VertexId(start)]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x.0] {
                    if !seen[y.0] {
                        seen[y.0] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// BFS parent pointers from `root`; `parent[root] = None`, unreachable
    /// vertices also `None`.
    pub(crate) fn parents_from(&self, root: VertexId) -> Vec<Option<VertexId>> {
        let mut parent = vec![None; self.labels.len()];
        let mut seen = vec![false; self.labels.len()];
        seen[root.0] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adj[x.0] {
                if !seen[y.0] {
                    seen[y.0] = true;
                    parent[y.0] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// The unique simple path `u -> ... -> v` in a tree.
    pub fn unique_path(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        Ok(self.path_in_tree(u, v))
    }

    // Caller guarantees a tree and valid ids.
    pub(crate) fn path_in_tree(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let parent = self.parents_from(v);
        let mut path = vec![u];
        let mut x = u;
        while let Some(p) = parent[x.0] {
            path.push(p);
            x = p;
        }
        path
    }

    /// Subgraph on `w` keeping exactly the edges with both ends in `w`.
    /// Labels and relative order are preserved.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<WeightedGraph> {
        self.check_set(w)?;
        self.subgraph_filtered(w, |_| true)
    }

    /// Induced subgraph on `w` further restricted to edges accepted by `keep`.
    pub(crate) fn subgraph_filtered(
        &self,
        w: &VertexSet,
        keep: impl Fn(&WeightedEdge) -> bool,
    ) -> Result<WeightedGraph> {
        let vertices: Vec<&str> = w.iter().map(|v| self.label(v)).collect();
        let edges: Vec<(&str, &str, u64)> = self
            .edges
            .iter()
            .filter(|e| w.contains(e.u) && w.contains(e.v) && keep(e))
            .map(|e| (self.label(e.u), self.label(e.v), e.w))
            .collect();
        WeightedGraph::new(&vertices, &edges)
    }

    /// Translates a set of this graph into the index space of `other`
    /// (matched by label).
    pub fn translate(&self, s: &VertexSet, other: &WeightedGraph) -> Result<VertexSet> {
        s.iter().map(|v| other.vertex(self.label(v))).collect()
    }
}

//! Increasing weighted trees: roots, the rooted special-vertex count, and
//! the maximal incident weight `μ`.

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};

/// Whether successive edge weights along `path` never decrease (or strictly
/// increase when `strict`). Paths with at most one edge are vacuously
/// increasing.
pub fn is_increasing_path(g: &WeightedGraph, path: &[VertexId], strict: bool) -> Result<bool> {
    let weights = path_weights(g, path)?;
    Ok(weights.windows(2).all(|p| {
        if strict {
            p[0] < p[1]
        } else {
            p[0] <= p[1]
        }
    }))
}

fn path_weights(g: &WeightedGraph, path: &[VertexId]) -> Result<Vec<u64>> {
    for &v in path {
        g.check_vertex(v)?;
    }
    for (i, &v) in path.iter().enumerate() {
        if path[..i].contains(&v) {
            return Err(Error::NotAPath(format!("`{}` repeats", g.label(v))));
        }
    }
    path.windows(2)
        .map(|p| {
            g.weight(p[0], p[1]).ok_or_else(|| {
                Error::NotAPath(format!(
                    "`{}` and `{}` are not adjacent",
                    g.label(p[0]),
                    g.label(p[1])
                ))
            })
        })
        .collect()
}

fn leaf_paths_increase(g: &WeightedGraph, root: VertexId, leaves: &VertexSet) -> bool {
    leaves.iter().all(|leaf| {
        let path = g.path_in_tree(leaf, root);
        path.windows(3).all(|p| {
            // tree paths: consecutive vertices are adjacent
            let a = g.weight(p[0], p[1]).unwrap();
            let b = g.weight(p[1], p[2]).unwrap();
            a <= b
        })
    })
}

/// Every vertex `v` such that each leaf-to-`v` path is increasing. Checked
/// by brute force over all (candidate, leaf) pairs.
pub fn valid_roots(g: &WeightedGraph) -> Result<VertexSet> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let leaves = g.leaves();
    Ok(g.vertices()
        .filter(|&v| leaf_paths_increase(g, v, &leaves))
        .collect())
}

pub fn is_increasing_tree(g: &WeightedGraph) -> bool {
    valid_roots(g).map(|r| !r.is_empty()).unwrap_or(false)
}

/// `μ(x)`: the largest weight of an edge at `x`.
pub fn mu(g: &WeightedGraph, x: VertexId) -> Result<u64> {
    g.incident(x)?
        .iter()
        .map(|&(_, w)| w)
        .max()
        .ok_or_else(|| Error::IsolatedVertex(g.label(x).to_string()))
}

/// An increasing weighted tree together with one of its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedIncreasingTree {
    tree: WeightedGraph,
    root: VertexId,
}

impl RootedIncreasingTree {
    pub fn new(tree: WeightedGraph, root: VertexId) -> Result<Self> {
        tree.check_vertex(root)?;
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        if !leaf_paths_increase(&tree, root, &tree.leaves()) {
            return Err(Error::InvalidRoot {
                root: tree.label(root).to_string(),
            });
        }
        Ok(RootedIncreasingTree { tree, root })
    }

    pub fn tree(&self) -> &WeightedGraph {
        &self.tree
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Vertices `w` with a path `u -> w -> x -> ... -> root` where
    /// `ω(uw) = ω(wx)`.
    ///
    /// On a tree `x` is forced to be the parent of `w` toward the root, so
    /// `w` is special iff some other neighbor meets it with the weight of its
    /// parent edge. The root is never special.
    pub fn special_vertices(&self) -> VertexSet {
        let parent = self.tree.parents_from(self.root);
        self.tree
            .vertices()
            .filter(|&w| {
                let Some(x) = parent[w.0] else {
                    return false;
                };
                let up = self.tree.weight(w, x).unwrap();
                self.tree
                    .incident(w)
                    .unwrap()
                    .iter()
                    .any(|&(u, wt)| u != x && wt == up)
            })
            .collect()
    }

    /// `s(root, T)`.
    pub fn special_count(&self) -> usize {
        self.special_vertices().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(v: &[&str], e: &[(&str, &str, u64)]) -> WeightedGraph {
        WeightedGraph::new(v, e).unwrap()
    }

    fn p4() -> WeightedGraph {
        graph(
            &["x1", "x2", "x3", "x4"],
            &[("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 2)],
        )
    }

    fn p5() -> WeightedGraph {
        graph(
            &["x1", "x2", "x3", "x4", "x5"],
            &[("x1", "x2", 3), ("x2", "x3", 2), ("x3", "x4", 2), ("x4", "x5", 3)],
        )
    }

    fn star() -> WeightedGraph {
        graph(&["v", "a", "b"], &[("v", "a", 1), ("v", "b", 2)])
    }

    fn e2() -> WeightedGraph {
        graph(&["x1", "x2"], &[("x1", "x2", 2)])
    }

    #[test]
    fn increasing_paths() {
        let g = p4();
        let path: Vec<VertexId> = (0..4).map(VertexId).collect();
        assert!(is_increasing_path(&g, &path, false).unwrap());
        assert!(!is_increasing_path(&g, &path, true).unwrap());
        assert!(is_increasing_path(&g, &path[2..], true).unwrap());
        let bad = [VertexId(0), VertexId(2)];
        assert!(matches!(is_increasing_path(&g, &bad, false), Err(Error::NotAPath(_))));
        let rep = [VertexId(0), VertexId(1), VertexId(0)];
        assert!(matches!(is_increasing_path(&g, &rep, false), Err(Error::NotAPath(_))));
    }

    #[test]
    fn roots() {
        let g = p4();
        assert_eq!(valid_roots(&g).unwrap(), g.vertex_set_of(&["x3", "x4"]).unwrap());
        assert!(valid_roots(&p5()).unwrap().is_empty());
        let s = star();
        assert_eq!(valid_roots(&s).unwrap(), s.vertex_set_of(&["v", "b"]).unwrap());
        assert!(is_increasing_tree(&g));
        assert!(!is_increasing_tree(&p5()));
        assert!(is_increasing_tree(&e2()));
        let trivial = graph(&["x1"], &[]);
        assert_eq!(valid_roots(&trivial).unwrap().len(), 1);
    }

    #[test]
    fn specials() {
        let g = p4();
        let t = RootedIncreasingTree::new(g.clone(), VertexId(3)).unwrap();
        assert_eq!(t.special_vertices(), g.vertex_set_of(&["x2"]).unwrap());
        assert_eq!(t.special_count(), 1);
        assert_eq!(RootedIncreasingTree::new(e2(), VertexId(1)).unwrap().special_count(), 0);
        assert_eq!(RootedIncreasingTree::new(star(), VertexId(0)).unwrap().special_count(), 0);
        assert!(matches!(
            RootedIncreasingTree::new(g, VertexId(0)),
            Err(Error::InvalidRoot { .. })
        ));
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&star(), VertexId(0)).unwrap(), 2);
        assert_eq!(mu(&e2(), VertexId(0)).unwrap(), 2);
        assert_eq!(mu(&p4(), VertexId(2)).unwrap(), 2);
        let trivial = graph(&["x1"], &[]);
        assert_eq!(mu(&trivial, VertexId(0)), Err(Error::IsolatedVertex("x1".into())));
    }
}

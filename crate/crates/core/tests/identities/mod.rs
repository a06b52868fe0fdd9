//! Oracle-side identities for monomial ideals built from weighted trees.
//! `Err` describes a violation; `Ok(None)` means the instance did not
//! qualify for the identity.
#![allow(dead_code)]

use std::collections::BTreeSet;

use tree_assoc::graph::{VertexId, VertexSet, WeightedGraph};
use tree_assoc::increasing::{mu, valid_roots, RootedIncreasingTree};
use tree_assoc::monomial::{edge_ideal, Monomial, MonomialIdeal};
use tree_assoc::oracle::{associated_primes, is_associated_oracle, DEFAULT_BUDGET};
use tree_assoc::Error;

pub type Check = Result<Option<()>, String>;

fn ass(i: &MonomialIdeal) -> BTreeSet<VertexSet> {
    match associated_primes(i, DEFAULT_BUDGET) {
        Ok(p) => p.into_iter().collect(),
        // the unit ideal has no associated primes
        Err(Error::UnitIdeal) => BTreeSet::new(),
        Err(e) => panic!("oracle failed: {e}"),
    }
}

fn full_support(i: &MonomialIdeal) -> VertexSet {
    (0..i.nvars()).map(VertexId).collect()
}

/// A leaf `y` on `x` whose edge is the lightest at `x`; the generator
/// `(xy)^ω` then satisfies both hypotheses of the power-reduction identity.
pub fn lightest_leaf_edge(g: &WeightedGraph) -> Option<(VertexId, VertexId, u64)> {
    g.leaves().iter().find_map(|y| {
        let &(x, w) = g.incident(y).ok()?.first()?;
        let lightest = g.incident(x).ok()?.iter().all(|&(_, wt)| wt >= w);
        lightest.then_some((x, y, w))
    })
}

fn hypotheses_hold(i: &MonomialIdeal, m: &Monomial, x: VertexId, y: VertexId, p: u64) -> bool {
    i.gens().iter().filter(|f| *f != m).all(|f| {
        let e = f.exponents();
        e[y.0] == 0 && (e[x.0] == 0 || e[x.0] >= p)
    })
}

/// `(I^t : x^p y^q) = I^{t-1}`.
pub fn power_reduction(g: &WeightedGraph, t: u64) -> Check {
    let Some((x, y, w)) = lightest_leaf_edge(g) else {
        return Ok(None);
    };
    let i = edge_ideal(g);
    let mut e = vec![0; g.vertex_count()];
    e[x.0] = w;
    e[y.0] = w;
    let m = Monomial::new(e);
    if !hypotheses_hold(&i, &m, x, y, w) {
        return Err(format!("{g:?}: chosen leaf violates the hypotheses"));
    }
    let lhs = i.power(t).unwrap().colon(&m).unwrap();
    let rhs = i.power(t - 1).unwrap();
    if lhs == rhs {
        Ok(Some(()))
    } else {
        Err(format!("{g:?} t={t}: {lhs} != {rhs}"))
    }
}

/// `Ass(I^t) \ {m} = ⋃_j Ass(I^t[x_j])`.
pub fn local(g: &WeightedGraph, t: u64) -> Check {
    let it = edge_ideal(g).power(t).unwrap();
    let full = full_support(&it);
    let mut lhs = ass(&it);
    lhs.remove(&full);
    let rhs: BTreeSet<VertexSet> = g
        .vertices()
        .flat_map(|j| ass(&it.localize(&VertexSet::new([j])).unwrap()))
        .collect();
    if lhs == rhs {
        Ok(Some(()))
    } else {
        Err(format!("{g:?} t={t}: {lhs:?} vs {rhs:?}"))
    }
}

/// `a ⊔ b` on `x1..x(n1+n2)`, `a` first.
pub fn disjoint_union(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
    let n1 = a.vertex_count();
    let n = n1 + b.vertex_count();
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let edges: Vec<(String, String, u64)> = a
        .edges()
        .iter()
        .map(|e| (e.u.0, e.v.0, e.w))
        .chain(b.edges().iter().map(|e| (e.u.0 + n1, e.v.0 + n1, e.w)))
        .map(|(u, v, w)| (labels[u].clone(), labels[v].clone(), w))
        .collect();
    WeightedGraph::new(&labels, &edges).unwrap()
}

/// For variable-disjoint `I`, `J`:
/// `Ass((I+J)^t) = { P ∪ Q : P ∈ Ass(I^i), Q ∈ Ass(J^{t-i+1}), 1 ≤ i ≤ t }`.
pub fn disjoint_support(a: &WeightedGraph, b: &WeightedGraph, t: u64) -> Check {
    let n1 = a.vertex_count();
    let sum = edge_ideal(&disjoint_union(a, b));
    let pick = |left: bool| {
        let gens = sum
            .gens()
            .iter()
            .filter(|m| m.support().iter().all(|v| (v.0 < n1) == left))
            .cloned()
            .collect();
        MonomialIdeal::new(sum.vars(), gens).unwrap()
    };
    let (i, j) = (pick(true), pick(false));
    if i.sum(&j).unwrap() != sum {
        return Err("split does not recover the sum".into());
    }
    let lhs = ass(&sum.power(t).unwrap());
    let mut rhs = BTreeSet::new();
    for k in 1..=t {
        let ps = ass(&i.power(k).unwrap());
        let qs = ass(&j.power(t - k + 1).unwrap());
        for p in &ps {
            for q in &qs {
                rhs.insert(p.union(q));
            }
        }
    }
    if lhs == rhs {
        Ok(Some(()))
    } else {
        Err(format!("{a:?} + {b:?} t={t}: {lhs:?} vs {rhs:?}"))
    }
}

/// A star centred at `v` with the given leaf weights.
pub fn star(weights: &[u64]) -> WeightedGraph {
    let mut labels = vec!["v".to_string()];
    labels.extend((1..=weights.len()).map(|i| format!("a{i}")));
    let edges: Vec<(String, String, u64)> = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| ("v".to_string(), labels[i + 1].clone(), w))
        .collect();
    WeightedGraph::new(&labels, &edges).unwrap()
}

/// `m ∈ Ass(v^m, I)` for a star centred at `v` and `m > μ(v)`.
pub fn star_membership(weights: &[u64], extra: u64) -> Check {
    let g = star(weights);
    let v = VertexId(0);
    let m = mu(&g, v).unwrap() + extra.max(1);
    let i = edge_ideal(&g).add_pure_power(v, m).unwrap();
    if is_associated_oracle(&i, &full_support(&i), DEFAULT_BUDGET).unwrap() {
        Ok(Some(()))
    } else {
        Err(format!("{g:?} m={m}: full support missing"))
    }
}

/// For a root `v` and `m > μ(v)`: `m ∈ Ass((v^m, I)^t)` iff `t ≥ s(v) + 1`,
/// checked for `t = 1..=s(v)+1`.
pub fn rooted_threshold(g: &WeightedGraph, root_pick: usize, extra: u64) -> Check {
    let roots = valid_roots(g).unwrap();
    if roots.is_empty() {
        return Ok(None);
    }
    let v = roots.as_slice()[root_pick % roots.len()];
    let s = RootedIncreasingTree::new(g.clone(), v).unwrap().special_count() as u64;
    let m = mu(g, v).unwrap() + extra.max(1);
    let base = edge_ideal(g).add_pure_power(v, m).unwrap();
    let full = full_support(&base);
    for t in 1..=s + 1 {
        let got = is_associated_oracle(&base.power(t).unwrap(), &full, DEFAULT_BUDGET).unwrap();
        if got != (t > s) {
            return Err(format!("{g:?} root {} m={m} t={t}: oracle says {got}, s={s}", g.label(v)));
        }
    }
    Ok(Some(()))
}

/// Every oracle prime of `I(G)^t` is a vertex cover of `G`.
pub fn radical_consistency(g: &WeightedGraph, t: u64) -> Check {
    for p in ass(&edge_ideal(g).power(t).unwrap()) {
        if !tree_assoc::cover::is_vertex_cover(g, &p).unwrap() {
            return Err(format!("{g:?} t={t}: {p:?} is not a cover"));
        }
    }
    Ok(Some(()))
}

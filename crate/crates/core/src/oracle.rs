//! Associated primes of monomial ideals by exhaustive witness search.
//!
//! A monomial prime `P` is associated to `I` iff some monomial `f ∉ I` has
//! `(I : f) = P`. Raising an exponent of `f` above `D_i`, the largest
//! exponent of `x_i` among the minimal generators, changes neither
//! membership of `f` nor `(I : f)`, so the search can stop at the box
//! `0 ≤ f_i ≤ D_i`. The walk is colexicographic (first variable fastest) and
//! skips every vector already in `I`: those are never witnesses and neither
//! are their multiples.
//!
//! This module shares nothing with the graph-side criterion beyond the
//! [`VertexSet`] type used to report supports.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::monomial::MonomialIdeal;

/// Witness-space budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Supports are bitmasks internally.
const MAX_VARS: usize = 64;

/// A prime `(x_i : i ∈ P)`, identified with its variable support.
pub type PrimeSupport = VertexSet;

/// `D_i` for every variable of the ambient ring.
pub fn witness_caps(ideal: &MonomialIdeal) -> Vec<u64> {
    let mut caps = vec![0; ideal.nvars()];
    for g in ideal.gens() {
        for (c, &e) in caps.iter_mut().zip(g.exponents()) {
            *c = (*c).max(e);
        }
    }
    caps
}

/// Number of exponent vectors in the capped box, `∏ (D_i + 1)`.
pub fn search_space(ideal: &MonomialIdeal) -> u128 {
    witness_caps(ideal)
        .iter()
        .fold(1u128, |acc, &d| acc.saturating_mul(d as u128 + 1))
}

struct Search {
    n: usize,
    caps: Vec<u64>,
    // generators, flattened row-major
    gens: Vec<u64>,
}

impl Search {
    fn new(ideal: &MonomialIdeal, budget: u64) -> Result<Self> {
        if ideal.nvars() > MAX_VARS {
            return Err(Error::TooManyVertices {
                n: ideal.nvars(),
                max: MAX_VARS,
            });
        }
        let size = search_space(ideal);
        if size > budget as u128 {
            return Err(Error::SearchSpaceTooLarge { size, budget });
        }
        Ok(Search {
            n: ideal.nvars(),
            caps: witness_caps(ideal),
            gens: ideal
                .gens()
                .iter()
                .flat_map(|g| g.exponents().iter().copied())
                .collect(),
        })
    }

    fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.gens.chunks_exact(self.n.max(1))
    }

    fn contains(&self, f: &[u64]) -> bool {
        self.rows().any(|g| g.iter().zip(f).all(|(a, b)| a <= b))
    }

    /// Visits every `f ∉ I` in the box. Returning `false` from `visit` stops
    /// the walk.
    fn standard_monomials(&self, mut visit: impl FnMut(&[u64]) -> bool) {
        let mut f = vec![0u64; self.n];
        self.walk(self.n, &mut f, &mut visit);
    }

    // Assigns coordinate `k - 1`; lower coordinates are still zero, so a
    // partial vector in `I` rules out all of its completions.
    fn walk(&self, k: usize, f: &mut [u64], visit: &mut impl FnMut(&[u64]) -> bool) -> bool {
        if k == 0 {
            return visit(f);
        }
        let i = k - 1;
        for a in 0..=self.caps[i] {
            f[i] = a;
            if self.contains(f) {
                break;
            }
            if !self.walk(i, f, visit) {
                f[i] = 0;
                return false;
            }
        }
        f[i] = 0;
        true
    }

    /// For `f ∉ I`: the support of `(I : f)` when that colon is a monomial
    /// prime, as a bitmask.
    fn colon_prime(&self, f: &[u64], deficits: &mut Vec<u64>) -> Option<u64> {
        deficits.clear();
        let mut vars_in_colon = 0u64;
        for g in self.rows() {
            let mut d = 0u64;
            for (j, (&a, &b)) in g.iter().zip(f).enumerate() {
                if a > b {
                    d |= 1 << j;
                }
            }
            // x_j f ∈ I through g iff g exceeds f only in x_j, by one
            if d.count_ones() == 1 {
                let j = d.trailing_zeros() as usize;
                if g[j] == f[j] + 1 {
                    vars_in_colon |= d;
                }
            }
            deficits.push(d);
        }
        // every g / gcd(g, f) must be divisible by one of those variables
        (vars_in_colon != 0 && deficits.iter().all(|&d| d & vars_in_colon != 0))
            .then_some(vars_in_colon)
    }

    /// `x_i f ∈ I` for every `i` in `mask`.
    fn socle_over(&self, f: &[u64], mask: u64) -> bool {
        let mut hit = 0u64;
        for g in self.rows() {
            let mut d = 0u64;
            let mut by_one = true;
            for (j, (&a, &b)) in g.iter().zip(f).enumerate() {
                if a > b {
                    d |= 1 << j;
                    by_one &= a == b + 1;
                }
            }
            if by_one && d.count_ones() == 1 {
                hit |= d;
            }
        }
        hit & mask == mask
    }
}

fn check_queryable(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Every monomial prime associated to `ideal`, in canonical order.
///
/// ```
/// use tree_assoc::monomial::{Monomial, MonomialIdeal};
/// use tree_assoc::oracle::{associated_primes, DEFAULT_BUDGET};
///
/// let vars = vec!["x1".to_string(), "x2".to_string()];
/// let i = MonomialIdeal::new(
///     &vars,
///     vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1])],
/// )
/// .unwrap();
/// let primes = associated_primes(&i, DEFAULT_BUDGET).unwrap();
/// assert_eq!(primes.len(), 2);
/// assert_eq!(primes[0].len(), 1); // (x1)
/// assert_eq!(primes[1].len(), 2); // (x1, x2)
/// ```
pub fn associated_primes(ideal: &MonomialIdeal, budget: u64) -> Result<Vec<PrimeSupport>> {
    check_queryable(ideal)?;
    let search = Search::new(ideal, budget)?;
    let mut found = BTreeSet::new();
    let mut deficits = Vec::new();
    search.standard_monomials(|f| {
        if let Some(mask) = search.colon_prime(f, &mut deficits) {
            found.insert(mask);
        }
        true
    });
    let mut out: Vec<PrimeSupport> = found.into_iter().map(VertexSet::from_mask).collect();
    out.sort();
    Ok(out)
}

/// Whether the single prime `P` is associated to `ideal`.
///
/// Localizes at the variables outside `P` first; `P` is associated to `I`
/// iff the maximal ideal of `P`'s variables is associated to the
/// localization, and that only needs a search over `P`'s variables.
pub fn is_associated_oracle(ideal: &MonomialIdeal, p: &PrimeSupport, budget: u64) -> Result<bool> {
    check_queryable(ideal)?;
    if p.is_empty() {
        return Err(Error::EmptySupport);
    }
    if let Some(v) = p.iter().find(|v| v.0 >= ideal.nvars()) {
        return Err(Error::UnknownVertex(format!("#{}", v.0)));
    }
    let outside = VertexSet::new(
        (0..ideal.nvars())
            .map(crate::graph::VertexId)
            .filter(|&v| !p.contains(v)),
    );
    let local = ideal.localize(&outside)?;
    if local.is_unit() {
        return Ok(false);
    }
    let search = Search::new(&local, budget)?;
    let mask = p.to_mask().ok_or(Error::TooManyVertices {
        n: ideal.nvars(),
        max: MAX_VARS,
    })?;
    let mut found = false;
    search.standard_monomials(|f| {
        found = search.socle_over(f, mask);
        !found
    });
    Ok(found)
}

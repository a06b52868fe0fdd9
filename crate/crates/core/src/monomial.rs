//! Exact monomial-ideal arithmetic over exponent vectors.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set in a
//! canonical order: by total degree, then by exponent vector descending.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};

/// `x^a` as the dense exponent vector `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u64>);

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e`.
    pub fn var_power(nvars: usize, i: usize, e: u64) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| VertexId(i)),
        )
    }
}

fn canonical_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

/// Drops every generator divisible by another one and sorts canonically.
pub fn minimalize(vars: &[String], mut gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    if let Some(g) = gens.iter().find(|g| g.nvars() != vars.len()) {
        return Err(Error::LengthMismatch {
            expected: vars.len(),
            got: g.nvars(),
        });
    }
    gens.sort_by(canonical_order);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal {
        vars: vars.to_vec(),
        gens: kept,
    })
}

/// `I(G_ω)`: one generator `(x_i x_j)^ω` per edge.
///
/// ```
/// use tree_assoc::{monomial::edge_ideal, WeightedGraph};
///
/// let g = WeightedGraph::new(&["x1", "x2"], &[("x1", "x2", 2)]).unwrap();
/// assert_eq!(edge_ideal(&g).to_string(), "(x1^2*x2^2)");
/// ```
pub fn edge_ideal(g: &WeightedGraph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .edges()
        .iter()
        .map(|e| {
            let mut m = vec![0; n];
            m[e.u.0] = e.w;
            m[e.v.0] = e.w;
            Monomial(m)
        })
        .collect();
    minimalize(g.labels(), gens).expect("edge monomials match the vertex count")
}

impl MonomialIdeal {
    pub fn new(vars: &[String], gens: Vec<Monomial>) -> Result<Self> {
        minimalize(vars, gens)
    }

    pub fn zero(vars: &[String]) -> Self {
        MonomialIdeal {
            vars: vars.to_vec(),
            gens: Vec::new(),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Minimal generators `𝒢(I)`.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn support(&self) -> VertexSet {
        self.gens
            .iter()
            .fold(VertexSet::empty(), |acc, g| acc.union(&g.support()))
    }

    fn check_len(&self, f: &Monomial) -> Result<()> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.nvars(),
                got: f.nvars(),
            })
        }
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        self.check_len(f)?;
        Ok(self.gens.iter().any(|g| g.divides(f)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        minimalize(&self.vars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// `(v^m) + I`.
    pub fn add_pure_power(&self, v: VertexId, m: u64) -> Result<MonomialIdeal> {
        if v.0 >= self.nvars() {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        if m == 0 {
            return Err(Error::InvalidPower(0));
        }
        let mut gens = self.gens.clone();
        gens.push(Monomial::var_power(self.nvars(), v.0, m));
        minimalize(&self.vars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        minimalize(&self.vars, gens)
    }

    /// `I^t`, `t ≥ 1`.
    pub fn power(&self, t: u64) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::InvalidPower(t));
        }
        let max_exp = self
            .gens
            .iter()
            .flat_map(|g| g.0.iter().copied())
            .max()
            .unwrap_or(0);
        max_exp.checked_mul(t).ok_or(Error::Overflow)?;
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : f)`, generated by `g / gcd(g, f)` over `g ∈ 𝒢(I)`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_len(f)?;
        minimalize(
            &self.vars,
            self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect(),
        )
    }

    /// `I[W]`: invert the variables of `W`, i.e. zero their exponents.
    pub fn localize(&self, w: &VertexSet) -> Result<MonomialIdeal> {
        if let Some(v) = w.iter().find(|v| v.0 >= self.nvars()) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        minimalize(
            &self.vars,
            self.gens
                .iter()
                .map(|g| {
                    let mut e = g.0.clone();
                    for v in w.iter() {
                        e[v.0] = 0;
                    }
                    Monomial(e)
                })
                .collect(),
        )
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.0.iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, x)| if e == 1 { x.clone() } else { format!("{x}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.display_monomial(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

//! Associated primes of powers of weighted edge ideals of increasing
//! weighted trees.
//!
//! For a weighted tree `G_ω` whose leaf-to-root weights never decrease, the
//! prime `(C)` of a vertex cover `C` is associated to `I(G_ω)^t` exactly
//! when `C` is a *strong* cover and `s(C) + 1 ≤ t`. The crate has two
//! independent halves:
//!
//! * the combinatorial side ([`graph`], [`increasing`], [`cover`],
//!   [`assoc`]) decides membership from the tree alone;
//! * the algebraic side ([`monomial`], [`oracle`]) computes associated
//!   primes of arbitrary monomial ideals by brute-force witness search.
//!
//! Agreement between the two is the main thing the test suites check.
//!
//! ```
//! use tree_assoc::{assoc, WeightedGraph};
//!
//! // x1 -1- x2 -1- x3 -2- x4
//! let g = WeightedGraph::new(
//!     &["x1", "x2", "x3", "x4"],
//!     &[("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 2)],
//! )
//! .unwrap();
//! assert_eq!(assoc::astab(&g).unwrap().astab, 2);
//! ```

pub mod assoc;
pub mod cover;
pub mod error;
pub mod graph;
pub mod increasing;
pub mod io;
pub mod monomial;
pub mod oracle;
pub mod random;

pub use error::{Error, Result};
pub use graph::{VertexId, VertexSet, WeightedEdge, WeightedGraph};

// Compiles and runs the Rust snippets of the guide as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/increasing-trees.md")]
    mod increasing_trees {}
    #[doc = include_str!("../../../book/src/strong-covers.md")]
    mod strong_covers {}
    #[doc = include_str!("../../../book/src/associated-primes.md")]
    mod associated_primes {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

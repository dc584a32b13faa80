//! Exact q-polynomial invariants of plane rooted trees.
//!
//! - [`qpoly`]: arithmetic in Z[q], Gaussian binomials, cyclotomic factors.
//! - [`tree`]: plane rooted trees, leaf removal, right weights, wedges,
//!   enumeration and delayed (leaf-labelled) trees.
//! - [`invariant`]: `Q(T)` by recursion and by the state product, the
//!   change-of-root identity, the delayed polynomial `Q(T, f)` and its
//!   block formula.
//! - [`presimplicial`]: topological trees with faces and degeneracies, the
//!   q-boundary and the reduction of a tree to `[n]_q! •`.

pub mod error;
pub mod invariant;
pub mod presimplicial;
pub mod qpoly;
pub mod tree;

pub use error::{Error, Result};
pub use invariant::{q_poly, q_poly_delayed, q_poly_state};
pub use qpoly::QPoly;
pub use tree::{DelayedTree, PlaneTree, VertexAddr};

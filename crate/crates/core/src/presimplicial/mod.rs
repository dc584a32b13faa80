//! Topological rooted trees with ordered leaves as an almost-simplicial set.
//!
//! `Y_n` is the set of topological trees (no vertex with exactly one child)
//! with `n + 1` leaves. Face `d_i` deletes the `i`-th leaf and smooths;
//! degeneracy `s_i` plants a cherry on the `i`-th leaf. The one-point tree is
//! the unique element of `Y_0` and counts its root as its single leaf.

mod chain;
mod identities;

pub use chain::{q_boundary, q_boundary_at, reduce_to_point, IntChain, QChain};
pub use identities::{
    check_identities, check_identities_bounded, IdentityReport, RelationCount, SimplicialWitness,
    Violation,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::tree::{PlaneTree, VertexAddr};

/// Default cap on leaf count for exhaustive topological enumeration.
pub const TOP_LEAF_LIMIT: usize = 7;

/// A plane tree with no unary vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopTree(PlaneTree);

impl TopTree {
    pub fn point() -> Self {
        TopTree(PlaneTree::point())
    }

    /// Wraps `tree` if it already has no unary vertex.
    pub fn new(tree: PlaneTree) -> Option<Self> {
        is_topological(&tree).then_some(TopTree(tree))
    }

    pub fn as_plane(&self) -> &PlaneTree {
        &self.0
    }

    pub fn into_plane(self) -> PlaneTree {
        self.0
    }

    pub fn is_point(&self) -> bool {
        self.0.is_point()
    }

    /// Leaf count; the one-point tree has one.
    pub fn leaf_count(&self) -> usize {
        self.0.leaf_count().max(1)
    }

    /// Simplicial degree `n` with `self` in `Y_n`.
    pub fn degree(&self) -> usize {
        self.leaf_count() - 1
    }

    fn leaf_addr(&self, i: usize) -> Result<VertexAddr> {
        if self.is_point() {
            return if i == 0 {
                Ok(VertexAddr::root())
            } else {
                Err(Error::IndexOutOfRange {
                    index: i,
                    leaves: 1,
                })
            };
        }
        let leaves = self.0.leaves();
        let n = leaves.len();
        leaves.into_iter().nth(i).ok_or(Error::IndexOutOfRange {
            index: i,
            leaves: n,
        })
    }
}

impl fmt::Display for TopTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for TopTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TopTree({})", self.0)
    }
}

/// True when no vertex, the root included, has exactly one child.
pub fn is_topological(tree: &PlaneTree) -> bool {
    tree.children().len() != 1 && tree.children().iter().all(is_topological)
}

/// Smooths away every vertex with exactly one child. A unary root is replaced
/// by its child.
pub fn normalize_topological(tree: &PlaneTree) -> TopTree {
    fn smooth(t: &PlaneTree) -> PlaneTree {
        let mut node = t;
        while node.children().len() == 1 {
            node = &node.children()[0];
        }
        PlaneTree::new(node.children().iter().map(smooth).collect())
    }
    TopTree(smooth(tree))
}

/// `d_i`: removes the `i`-th leaf (0-based, left to right) and smooths.
pub fn face(tree: &TopTree, i: usize) -> Result<TopTree> {
    if tree.is_point() {
        return Err(Error::NoFacesOnPoint);
    }
    let v = tree.leaf_addr(i)?;
    Ok(normalize_topological(&tree.0.remove_leaf(&v)?))
}

/// `s_i`: replaces the `i`-th leaf by a cherry, whose two leaves take
/// positions `i` and `i + 1`.
pub fn degeneracy(tree: &TopTree, i: usize) -> Result<TopTree> {
    let v = tree.leaf_addr(i)?;
    Ok(TopTree(tree.0.replace_at(&v, PlaneTree::star(2))?))
}

/// All topological trees with `leaf_count` leaves, in a fixed order.
pub fn enumerate_top_trees(leaf_count: usize) -> Result<Vec<TopTree>> {
    enumerate_top_trees_bounded(leaf_count, TOP_LEAF_LIMIT)
}

/// As [`enumerate_top_trees`] with an explicit cap.
pub fn enumerate_top_trees_bounded(leaf_count: usize, limit: usize) -> Result<Vec<TopTree>> {
    if leaf_count > limit {
        return Err(Error::BoundExceeded {
            requested: leaf_count,
            limit,
        });
    }
    if leaf_count == 0 {
        return Ok(Vec::new());
    }
    // forests[n]: sequences of topological trees with n leaves in total
    let mut trees: Vec<Vec<PlaneTree>> = vec![Vec::new(), vec![PlaneTree::point()]];
    let mut forests: Vec<Vec<Vec<PlaneTree>>> = vec![vec![Vec::new()]];
    for n in 1..=leaf_count {
        // forests of two or more trees, ordered by the first tree's leaf count
        let mut multi = Vec::new();
        for k in 1..n {
            for first in &trees[k] {
                for rest in &forests[n - k] {
                    let mut f = Vec::with_capacity(rest.len() + 1);
                    f.push(first.clone());
                    f.extend(rest.iter().cloned());
                    multi.push(f);
                }
            }
        }
        if n >= 2 {
            trees.push(multi.iter().cloned().map(PlaneTree::new).collect());
        }
        multi.extend(trees[n].iter().map(|t| vec![t.clone()]));
        forests.push(multi);
    }
    Ok(trees[leaf_count].iter().cloned().map(TopTree).collect())
}

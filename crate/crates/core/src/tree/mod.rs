//! Plane rooted trees.
//!
//! A [`PlaneTree`] is a node with an ordered list of child subtrees; the order
//! is the plane embedding and "right" means a larger child index. The root is
//! never a leaf, so the one-point tree `•` has no leaves.
//!
//! Trees are written in a bracket grammar, `Tree := "." | "(" Tree+ ")"`, whose
//! whitespace-free form is the canonical key used throughout the crate.

mod delayed;
mod enumerate;
mod parse;

pub use delayed::{parse_delayed, DelayedTree};
pub use enumerate::{
    enumerate_plane_trees, enumerate_plane_trees_bounded, random_plane_tree, PLANE_EDGE_LIMIT,
};
pub use parse::parse_tree;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A rooted tree with ordered children.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

/// Path of 0-based child indices from the root; empty for the root itself.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexAddr(pub Vec<usize>);

impl VertexAddr {
    pub fn root() -> Self {
        VertexAddr(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, i: usize) -> Self {
        let mut path = self.0.clone();
        path.push(i);
        VertexAddr(path)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for VertexAddr {
    fn from(path: Vec<usize>) -> Self {
        VertexAddr(path)
    }
}

impl From<&[usize]> for VertexAddr {
    fn from(path: &[usize]) -> Self {
        VertexAddr(path.to_vec())
    }
}

impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexAddr {
    type Err = Error;

    /// Dot-separated indices; `""` and `"ε"` are the root.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(VertexAddr::root());
        }
        let mut path = Vec::new();
        let mut offset = 0;
        for part in s.split('.') {
            let i = part.parse().map_err(|_| Error::Parse {
                offset,
                message: format!("bad vertex index {part:?}"),
            })?;
            path.push(i);
            offset += part.len() + 1;
        }
        Ok(VertexAddr(path))
    }
}

impl PlaneTree {
    /// The one-point tree `•`.
    pub fn point() -> Self {
        PlaneTree::default()
    }

    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    /// Root with `n` leaf children; `star(0)` is `•`.
    pub fn star(n: usize) -> Self {
        PlaneTree::new(vec![PlaneTree::point(); n])
    }

    /// A path with `n` edges rooted at one end.
    pub fn path(n: usize) -> Self {
        (0..n).fold(PlaneTree::point(), |t, _| PlaneTree::new(vec![t]))
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_point(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(PlaneTree::node_count)
            .sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.node_count() - 1
    }

    /// Leaves in left-to-right order. The root is never a leaf.
    pub fn leaves(&self) -> Vec<VertexAddr> {
        fn walk(t: &PlaneTree, path: &mut Vec<usize>, out: &mut Vec<VertexAddr>) {
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                if c.is_point() {
                    out.push(VertexAddr(path.clone()));
                } else {
                    walk(c, path, out);
                }
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.children
            .iter()
            .map(|c| if c.is_point() { 1 } else { c.leaf_count() })
            .sum()
    }

    /// The subtree hanging at `addr`.
    pub fn get(&self, addr: &VertexAddr) -> Option<&PlaneTree> {
        addr.0.iter().try_fold(self, |t, &i| t.children.get(i))
    }

    fn get_mut(&mut self, path: &[usize]) -> Option<&mut PlaneTree> {
        path.iter().try_fold(self, |t, &i| t.children.get_mut(i))
    }

    fn check_leaf(&self, v: &VertexAddr) -> Result<()> {
        let node = self
            .get(v)
            .ok_or_else(|| Error::InvalidAddress(v.clone()))?;
        if v.is_root() || !node.is_point() {
            return Err(Error::NotALeaf(v.clone()));
        }
        Ok(())
    }

    /// `T - v`: deletes the leaf `v` and its edge. A parent left without
    /// children becomes a leaf; nothing is smoothed.
    pub fn remove_leaf(&self, v: &VertexAddr) -> Result<PlaneTree> {
        self.check_leaf(v)?;
        let (last, parent) = v.0.split_last().expect("leaf is not the root");
        let mut out = self.clone();
        out.get_mut(parent)
            .expect("address checked")
            .children
            .remove(*last);
        Ok(out)
    }

    /// `r(T, v)`: edges strictly right of the root-to-`v` path, counting each
    /// hanging subtree together with the edge that attaches it.
    pub fn right_weight(&self, v: &VertexAddr) -> Result<usize> {
        self.check_leaf(v)?;
        let mut node = self;
        let mut weight = 0;
        for &i in &v.0 {
            weight += node.children[i + 1..]
                .iter()
                .map(|c| c.edge_count() + 1)
                .sum::<usize>();
            node = &node.children[i];
        }
        Ok(weight)
    }

    /// Every leaf removal `T - v` paired with `r(T, v)`, leaves in
    /// left-to-right order. Computes all of them in one traversal.
    pub fn leaf_removals(&self) -> Vec<(usize, PlaneTree)> {
        let sizes: Vec<usize> = self.children.iter().map(|c| c.edge_count() + 1).collect();
        let mut right = vec![0; sizes.len() + 1];
        for i in (0..sizes.len()).rev() {
            right[i] = right[i + 1] + sizes[i];
        }
        let mut out = Vec::new();
        for (i, c) in self.children.iter().enumerate() {
            if c.is_point() {
                let mut children = self.children.clone();
                children.remove(i);
                out.push((right[i + 1], PlaneTree::new(children)));
            } else {
                for (r, sub) in c.leaf_removals() {
                    let mut children = self.children.clone();
                    children[i] = sub;
                    out.push((r + right[i + 1], PlaneTree::new(children)));
                }
            }
        }
        out
    }

    /// Wedge (root) product: roots identified, children concatenated in order,
    /// so the first part ends up leftmost.
    pub fn wedge(parts: &[PlaneTree]) -> Result<PlaneTree> {
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(PlaneTree::new(
            parts
                .iter()
                .flat_map(|p| p.children.iter().cloned())
                .collect(),
        ))
    }

    /// For the edge above `e` (parent `v_1`, child `v_2`), returns `(E_1, E_2)`:
    /// edges on the root side and below `v_2`, excluding the edge itself.
    pub fn side_edge_counts(&self, e: &VertexAddr) -> Result<(usize, usize)> {
        if e.is_root() {
            return Err(Error::RootHasNoEdge);
        }
        let below = self
            .get(e)
            .ok_or_else(|| Error::InvalidAddress(e.clone()))?
            .edge_count();
        Ok((self.edge_count() - 1 - below, below))
    }

    /// Re-roots at the vertex `e`. The chain of former ancestors is reversed;
    /// each former parent is attached as the last child of its former child.
    pub fn reroot_across_edge(&self, e: &VertexAddr) -> Result<PlaneTree> {
        if e.is_root() {
            return Err(Error::RootHasNoEdge);
        }
        let target = self
            .get(e)
            .ok_or_else(|| Error::InvalidAddress(e.clone()))?;
        let mut up: Option<PlaneTree> = None;
        let mut node = self;
        for &i in &e.0 {
            let mut children: Vec<PlaneTree> = node
                .children
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| c.clone())
                .collect();
            children.extend(up.take());
            up = Some(PlaneTree::new(children));
            node = &node.children[i];
        }
        let mut children = target.children.clone();
        children.extend(up);
        Ok(PlaneTree::new(children))
    }

    /// Shuffles the child order at every vertex with a seeded generator.
    pub fn permute_children(&self, seed: u64) -> PlaneTree {
        fn go(t: &PlaneTree, rng: &mut ChaCha8Rng) -> PlaneTree {
            let mut children = t.children.clone();
            children.shuffle(rng);
            PlaneTree::new(children.iter().map(|c| go(c, rng)).collect())
        }
        go(self, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// All vertex addresses in pre-order, root first.
    pub fn vertices(&self) -> Vec<VertexAddr> {
        fn walk(t: &PlaneTree, path: &mut Vec<usize>, out: &mut Vec<VertexAddr>) {
            out.push(VertexAddr(path.clone()));
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                walk(c, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Replaces the subtree at `addr`. Used by the presimplicial degeneracies.
    pub(crate) fn replace_at(&self, addr: &VertexAddr, with: PlaneTree) -> Result<PlaneTree> {
        let mut out = self.clone();
        let slot = out
            .get_mut(&addr.0)
            .ok_or_else(|| Error::InvalidAddress(addr.clone()))?;
        *slot = with;
        Ok(out)
    }
}

impl fmt::Display for PlaneTree {
    /// Canonical whitespace-free serialization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.children.is_empty() {
            return f.write_str(".");
        }
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree({self})")
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

use std::fmt;
use std::str::FromStr;

use super::parse::Reader;
use super::{PlaneTree, VertexAddr};
use crate::error::{Error, Result};

/// A plane tree whose leaves carry positive delays.
///
/// Delays are stored in left-to-right leaf order, i.e. `delays[i]` belongs to
/// `tree.leaves()[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DelayedTree {
    tree: PlaneTree,
    delays: Vec<u32>,
}

impl DelayedTree {
    pub fn new(tree: PlaneTree, delays: Vec<u32>) -> Result<Self> {
        let leaves = tree.leaf_count();
        if delays.len() != leaves {
            return Err(Error::InvalidDelays(format!(
                "{} delays for {leaves} leaves",
                delays.len()
            )));
        }
        if delays.contains(&0) {
            return Err(Error::InvalidDelays("delays must be positive".into()));
        }
        Ok(DelayedTree { tree, delays })
    }

    /// Every leaf gets the same delay.
    pub fn uniform(tree: PlaneTree, delay: u32) -> Result<Self> {
        let n = tree.leaf_count();
        DelayedTree::new(tree, vec![delay; n])
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    /// Delays in left-to-right leaf order.
    pub fn delays(&self) -> &[u32] {
        &self.delays
    }

    pub fn delay_of(&self, leaf: &VertexAddr) -> Option<u32> {
        let idx = self.tree.leaves().iter().position(|v| v == leaf)?;
        Some(self.delays[idx])
    }

    /// `(T - v, f_v)` for the leaf at position `idx` in leaf order: surviving
    /// leaves count down (never below 1) and a newly exposed leaf gets delay 1.
    pub(crate) fn remove_leaf_at(&self, idx: usize) -> Result<DelayedTree> {
        let leaves = self.tree.leaves();
        let v = leaves.get(idx).ok_or(Error::IndexOutOfRange {
            index: idx,
            leaves: leaves.len(),
        })?;
        let tree = self.tree.remove_leaf(v)?;
        let mut delays: Vec<u32> = self
            .delays
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, &d)| d.saturating_sub(1).max(1))
            .collect();
        // The parent of v took v's slot in leaf order if it became a leaf.
        let parent = &v.0[..v.0.len() - 1];
        if !parent.is_empty()
            && tree
                .get(&VertexAddr::from(parent))
                .is_some_and(PlaneTree::is_point)
        {
            delays.insert(idx, 1);
        }
        Ok(DelayedTree { tree, delays })
    }

    fn write_node(
        &self,
        t: &PlaneTree,
        next_leaf: &mut usize,
        f: &mut fmt::Formatter<'_>,
    ) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in t.children().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if c.is_point() {
                write!(f, "{}", self.delays[*next_leaf])?;
                *next_leaf += 1;
            } else {
                self.write_node(c, next_leaf, f)?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for DelayedTree {
    /// Canonical form: integer leaves, siblings separated by one space,
    /// e.g. `(3 (1 1) 2)`. The one-point tree is `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tree.is_point() {
            return f.write_str(".");
        }
        self.write_node(&self.tree, &mut 0, f)
    }
}

impl fmt::Debug for DelayedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DelayedTree({self})")
    }
}

impl FromStr for DelayedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_delayed(s)
    }
}

/// Parses the tree grammar with leaves written as positive integers (their
/// delay); `.` means delay 1. A lone leaf token is the one-point tree.
pub fn parse_delayed(text: &str) -> Result<DelayedTree> {
    let mut reader = Reader::new(text, true);
    let tree = reader.document()?;
    let delays = if tree.is_point() {
        Vec::new()
    } else {
        std::mem::take(&mut reader.delays)
    };
    Ok(DelayedTree { tree, delays })
}

//! `Q(T, f)` for trees whose leaves carry delays, and the closed formula for
//! wedges of blocks with constant delay.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::q_poly;
use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, QPoly};
use crate::tree::{enumerate_plane_trees_bounded, random_plane_tree, DelayedTree, PlaneTree};

use rand::Rng;

/// Default cap on tree size for [`search_delayed`].
pub const DELAYED_SEARCH_LIMIT: usize = 6;

fn memo() -> &'static RwLock<HashMap<String, QPoly>> {
    static MEMO: OnceLock<RwLock<HashMap<String, QPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `Q(T, f) = Σ_{v leaf, f(v) = 1} q^{r(T,v)} Q(T - v, f_v)` with `Q(•, f) = 1`.
///
/// When no leaf has delay 1 the sum is empty and the value is 0.
pub fn q_poly_delayed(tree: &DelayedTree) -> QPoly {
    if tree.tree().is_point() {
        return QPoly::one();
    }
    let key = tree.to_string();
    if let Some(p) = memo().read().unwrap().get(&key) {
        return p.clone();
    }
    let weights = tree.tree().leaf_removals();
    let value: QPoly = tree
        .delays()
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == 1)
        .map(|(idx, _)| {
            let rest = tree.remove_leaf_at(idx).expect("index from leaf list");
            q_poly_delayed(&rest).shift(weights[idx].0)
        })
        .sum();
    memo().write().unwrap().insert(key, value.clone());
    value
}

/// Wedge `T_k ∨ ... ∨ T_1` of blocks with constant delays, listed left to
/// right; the last entry is `T_1` with delay `s_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub blocks: Vec<(PlaneTree, u32)>,
}

impl BlockSpec {
    pub fn new(blocks: Vec<(PlaneTree, u32)>) -> Self {
        BlockSpec { blocks }
    }

    /// Requires `s_1 = 1` and `s_{i-1} <= s_i <= E_{i-1} + ... + E_1 + 1`
    /// reading from the right.
    pub fn check_admissible(&self) -> Result<()> {
        let Some((_, s1)) = self.blocks.last() else {
            return Err(Error::InadmissibleDelays("no blocks".into()));
        };
        if *s1 != 1 {
            return Err(Error::InadmissibleDelays(format!(
                "rightmost block has delay {s1}, expected 1"
            )));
        }
        let mut below = 0usize;
        let mut prev = 1u32;
        for (i, (tree, s)) in self.blocks.iter().rev().enumerate() {
            if *s < prev || *s as usize > below + 1 {
                return Err(Error::InadmissibleDelays(format!(
                    "block {} (from the right) has delay {s}, allowed {prev}..={}",
                    i + 1,
                    below + 1
                )));
            }
            prev = *s;
            below += tree.edge_count();
        }
        Ok(())
    }

    /// A random admissible spec with 1 to 4 blocks, each with at least one
    /// edge, and at most `max_total_edges` edges overall.
    ///
    /// # Panics
    /// If `max_total_edges` is 0.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, max_total_edges: usize) -> BlockSpec {
        assert!(max_total_edges >= 1, "a block needs at least one edge");
        let total = rng.gen_range(1..=max_total_edges);
        let k = rng.gen_range(1..=total.min(4));
        let mut blocks = Vec::with_capacity(k);
        let mut budget = total;
        let mut below = 0usize;
        let mut prev = 1u32;
        // built right to left: T_1 first
        for i in 0..k {
            let reserve = k - i - 1;
            let edges = if reserve == 0 {
                budget
            } else {
                rng.gen_range(1..=budget - reserve)
            };
            budget -= edges;
            let s = if i == 0 {
                1
            } else {
                rng.gen_range(prev..=below as u32 + 1)
            };
            prev = s;
            below += edges;
            blocks.push((random_plane_tree(edges, rng), s));
        }
        blocks.reverse();
        BlockSpec { blocks }
    }

    /// The wedged tree with every leaf of block `i` labelled `s_i`.
    pub fn assemble(&self) -> Result<DelayedTree> {
        let trees: Vec<PlaneTree> = self.blocks.iter().map(|(t, _)| t.clone()).collect();
        let tree = PlaneTree::wedge(&trees)?;
        let delays = self
            .blocks
            .iter()
            .flat_map(|(t, s)| std::iter::repeat_n(*s, t.leaf_count()))
            .collect();
        DelayedTree::new(tree, delays)
    }
}

/// Closed form for an admissible [`BlockSpec`]:
/// `∏_{i=2}^{k} [E_i + E_{i-1} + ... + E_1 - s_i + 1; E_i]_q · ∏_i Q(T_i)`.
pub fn q_poly_block(spec: &BlockSpec) -> Result<QPoly> {
    spec.check_admissible()?;
    let mut acc: QPoly = spec.blocks.iter().map(|(t, _)| q_poly(t)).product();
    let mut below = 0i64;
    for (i, (tree, s)) in spec.blocks.iter().rev().enumerate() {
        let e = tree.edge_count() as i64;
        if i > 0 {
            let top = e + below - *s as i64 + 1;
            acc = &acc * &q_binomial(top as usize, e);
        }
        below += e;
    }
    Ok(acc)
}

/// All delayed trees with at most `max_edges` edges and delays in
/// `1..=edges` whose `Q(T, f)` equals `target`.
///
/// Ordered by edge count, then plane-tree enumeration order, then delays
/// lexicographically.
pub fn search_delayed(target: &QPoly, max_edges: usize) -> Result<Vec<DelayedTree>> {
    search_delayed_bounded(target, max_edges, DELAYED_SEARCH_LIMIT)
}

/// As [`search_delayed`] with an explicit cap.
pub fn search_delayed_bounded(
    target: &QPoly,
    max_edges: usize,
    limit: usize,
) -> Result<Vec<DelayedTree>> {
    if max_edges > limit {
        return Err(Error::BoundExceeded {
            requested: max_edges,
            limit,
        });
    }
    let mut found = Vec::new();
    for edges in 0..=max_edges {
        let top = edges.max(1) as u32;
        for tree in enumerate_plane_trees_bounded(edges, limit)? {
            let n = tree.leaf_count();
            let mut delays = vec![1u32; n];
            loop {
                let candidate = DelayedTree::new(tree.clone(), delays.clone())?;
                if q_poly_delayed(&candidate) == *target {
                    found.push(candidate);
                }
                // odometer, last leaf fastest
                let Some(pos) = delays.iter().rposition(|&d| d < top) else {
                    break;
                };
                delays[pos] += 1;
                delays[pos + 1..].iter_mut().for_each(|d| *d = 1);
            }
        }
    }
    Ok(found)
}

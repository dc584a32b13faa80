use rand::seq::SliceRandom;
use rand::Rng;

use super::PlaneTree;
use crate::error::{Error, Result};

/// Default cap on the edge count for exhaustive plane-tree enumeration.
pub const PLANE_EDGE_LIMIT: usize = 10;

/// All plane trees with `edges` edges, each once, in a fixed order.
pub fn enumerate_plane_trees(edges: usize) -> Result<Vec<PlaneTree>> {
    enumerate_plane_trees_bounded(edges, PLANE_EDGE_LIMIT)
}

/// As [`enumerate_plane_trees`] with an explicit cap.
///
/// Trees are ordered by the size of the first child, then recursively by the
/// first child and the remaining forest, so leaf-first shapes come first.
pub fn enumerate_plane_trees_bounded(edges: usize, limit: usize) -> Result<Vec<PlaneTree>> {
    if edges > limit {
        return Err(Error::BoundExceeded {
            requested: edges,
            limit,
        });
    }
    // forests[n]: ordered forests whose trees (with their root edges) total n edges
    let mut forests: Vec<Vec<Vec<PlaneTree>>> = vec![vec![Vec::new()]];
    let mut trees: Vec<Vec<PlaneTree>> = vec![vec![PlaneTree::point()]];
    for n in 1..=edges {
        let mut level = Vec::new();
        for k in 0..n {
            for first in &trees[k] {
                for rest in &forests[n - 1 - k] {
                    let mut f = Vec::with_capacity(rest.len() + 1);
                    f.push(first.clone());
                    f.extend(rest.iter().cloned());
                    level.push(f);
                }
            }
        }
        trees.push(level.iter().cloned().map(PlaneTree::new).collect());
        forests.push(level);
    }
    Ok(trees.swap_remove(edges))
}

/// A uniformly random plane tree with `edges` edges.
///
/// Shuffles `edges` up-steps and `edges + 1` down-steps, rotates to the unique
/// rotation that stays nonnegative until the final step (cycle lemma), and
/// reads the resulting Dyck word as a depth-first walk.
pub fn random_plane_tree<R: Rng + ?Sized>(edges: usize, rng: &mut R) -> PlaneTree {
    let mut steps: Vec<i32> = std::iter::repeat_n(1, edges)
        .chain(std::iter::repeat_n(-1, edges + 1))
        .collect();
    steps.shuffle(rng);
    let mut height = 0;
    let mut min = 0;
    let mut start = 0;
    for (i, s) in steps.iter().enumerate() {
        height += s;
        if height < min {
            min = height;
            start = i + 1;
        }
    }
    let len = steps.len();
    steps.rotate_left(start % len);
    steps.pop();

    let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
    for s in steps {
        if s > 0 {
            stack.push(Vec::new());
        } else {
            let children = stack.pop().expect("Dyck word is balanced");
            stack
                .last_mut()
                .expect("Dyck word is balanced")
                .push(PlaneTree::new(children));
        }
    }
    PlaneTree::new(stack.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use std::collections::{HashMap, HashSet};

    fn catalan_by_convolution(n: usize) -> usize {
        let mut c = vec![1usize];
        for m in 1..=n {
            c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
        }
        c[n]
    }

    #[test]
    fn small_listings() {
        assert_eq!(enumerate_plane_trees(0).unwrap(), vec![PlaneTree::point()]);
        let two: Vec<String> = enumerate_plane_trees(2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two, ["(..)", "((.))"]);
        assert_eq!(enumerate_plane_trees(4).unwrap().len(), 14);
    }

    #[test]
    fn catalan_counts_without_duplicates() {
        for n in 0..=8 {
            let trees = enumerate_plane_trees(n).unwrap();
            assert_eq!(trees.len(), catalan_by_convolution(n));
            let keys: HashSet<String> = trees.iter().map(ToString::to_string).collect();
            assert_eq!(keys.len(), trees.len());
            assert!(trees.iter().all(|t| t.edge_count() == n));
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_plane_trees(11),
            Err(Error::BoundExceeded {
                requested: 11,
                limit: 10
            })
        );
        assert_eq!(enumerate_plane_trees_bounded(3, 12).unwrap().len(), 5);
    }

    #[test]
    fn random_trees_have_requested_size_and_cover_all_shapes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut seen: HashMap<String, usize> = HashMap::new();
        for _ in 0..2000 {
            let t = random_plane_tree(3, &mut rng);
            assert_eq!(t.edge_count(), 3);
            *seen.entry(t.to_string()).or_default() += 1;
        }
        assert_eq!(seen.len(), 5);
        // uniform: each of the 5 shapes near 400
        assert!(seen.values().all(|&c| (300..500).contains(&c)), "{seen:?}");
        assert_eq!(random_plane_tree(0, &mut rng), PlaneTree::point());
    }
}

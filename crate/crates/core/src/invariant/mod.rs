//! The q-polynomial `Q(T)` of a plane rooted tree.
//!
//! `Q(•) = 1` and `Q(T) = Σ_{v leaf} q^{r(T,v)} Q(T - v)`. Two routes are
//! provided: the memoized recursion ([`q_poly`]) and the product of per-vertex
//! q-multinomial weights ([`q_poly_state`]). They must agree on every tree.

mod delayed;

pub use delayed::{
    q_poly_block, q_poly_delayed, search_delayed, search_delayed_bounded, BlockSpec,
    DELAYED_SEARCH_LIMIT,
};

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::qpoly::{q_integer, q_multinomial, QPoly};
use crate::tree::{PlaneTree, VertexAddr};

fn memo() -> &'static RwLock<HashMap<String, QPoly>> {
    static MEMO: OnceLock<RwLock<HashMap<String, QPoly>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `Q(T)` by the leaf-removal recursion, memoized on the canonical serialization.
pub fn q_poly(tree: &PlaneTree) -> QPoly {
    if tree.is_point() {
        return QPoly::one();
    }
    let key = tree.to_string();
    if let Some(p) = memo().read().unwrap().get(&key) {
        return p.clone();
    }
    let value: QPoly = tree
        .leaf_removals()
        .into_iter()
        .map(|(r, sub)| q_poly(&sub).shift(r))
        .sum();
    memo().write().unwrap().insert(key, value.clone());
    value
}

/// Edge counts of the child branches at a vertex, each counting its own
/// connecting edge, left to right.
fn branch_sizes(node: &PlaneTree) -> Vec<usize> {
    node.children().iter().map(|c| c.edge_count() + 1).collect()
}

/// `W(v)`: the q-multinomial of the branch sizes hanging above `v`. Leaves get 1.
pub fn boltzmann_weight(tree: &PlaneTree, v: &VertexAddr) -> Result<QPoly> {
    let node = tree
        .get(v)
        .ok_or_else(|| Error::InvalidAddress(v.clone()))?;
    Ok(q_multinomial(&branch_sizes(node)))
}

/// `Q(T)` as the product of [`boltzmann_weight`] over all vertices.
pub fn q_poly_state(tree: &PlaneTree) -> QPoly {
    fn go(t: &PlaneTree) -> QPoly {
        t.children()
            .iter()
            .map(go)
            .fold(q_multinomial(&branch_sizes(t)), |acc, w| &acc * &w)
    }
    go(tree)
}

/// Both sides of the change-of-root identity
/// `Q(T, v_1) [E_2 + 1]_q = Q(T, v_2) [E_1 + 1]_q`, cross-multiplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RerootCheck {
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub holds: bool,
}

/// Checks the change-of-root identity across the edge above `e`: `v_2` is the
/// vertex at `e` and `v_1` its parent, the endpoint on the current root's side.
/// Both `Q(T, v_1)` and `Q(T, v_2)` are computed by re-rooting.
pub fn check_reroot(tree: &PlaneTree, e: &VertexAddr) -> Result<RerootCheck> {
    let (e1, e2) = tree.side_edge_counts(e)?;
    let at_v2 = tree.reroot_across_edge(e)?;
    let parent = VertexAddr::from(&e.indices()[..e.indices().len() - 1]);
    let at_v1 = if parent.is_root() {
        tree.clone()
    } else {
        tree.reroot_across_edge(&parent)?
    };
    let lhs = &q_poly(&at_v1) * &q_integer(e2 + 1);
    let rhs = &q_poly(&at_v2) * &q_integer(e1 + 1);
    let holds = lhs == rhs;
    Ok(RerootCheck { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{cyclotomic_factor, q_binomial, q_factorial};
    use crate::tree::enumerate_plane_trees;

    fn t(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    /// Sums q^(total right weight) over every complete leaf-removal sequence,
    /// working on parent arrays instead of the recursive tree type.
    fn q_poly_by_sequences(tree: &PlaneTree) -> QPoly {
        // parent[i], children listed in plane order
        fn flatten(
            t: &PlaneTree,
            parent: Option<usize>,
            out: &mut Vec<(Option<usize>, Vec<usize>)>,
        ) -> usize {
            let id = out.len();
            out.push((parent, Vec::new()));
            for c in t.children() {
                let cid = flatten(c, Some(id), out);
                out[id].1.push(cid);
            }
            id
        }
        fn subtree_size(nodes: &[(Option<usize>, Vec<usize>)], alive: &[bool], v: usize) -> usize {
            1 + nodes[v]
                .1
                .iter()
                .filter(|&&c| alive[c])
                .map(|&c| subtree_size(nodes, alive, c))
                .sum::<usize>()
        }
        fn go(
            nodes: &[(Option<usize>, Vec<usize>)],
            alive: &mut Vec<bool>,
            acc: usize,
            out: &mut Vec<i64>,
        ) {
            let leaves: Vec<usize> = (1..nodes.len())
                .filter(|&v| alive[v] && nodes[v].1.iter().all(|&c| !alive[c]))
                .collect();
            if leaves.is_empty() {
                if out.len() <= acc {
                    out.resize(acc + 1, 0);
                }
                out[acc] += 1;
                return;
            }
            for v in leaves {
                let mut r = 0;
                let mut child = v;
                while let Some(par) = nodes[child].0 {
                    let sibs = &nodes[par].1;
                    let pos = sibs.iter().position(|&c| c == child).unwrap();
                    r += sibs[pos + 1..]
                        .iter()
                        .filter(|&&c| alive[c])
                        .map(|&c| subtree_size(nodes, alive, c))
                        .sum::<usize>();
                    child = par;
                }
                alive[v] = false;
                go(nodes, alive, acc + r, out);
                alive[v] = true;
            }
        }
        let mut nodes = Vec::new();
        flatten(tree, None, &mut nodes);
        let mut alive = vec![true; nodes.len()];
        let mut out = Vec::new();
        go(&nodes, &mut alive, 0, &mut out);
        p(&out)
    }

    #[test]
    fn base_values() {
        assert_eq!(q_poly(&PlaneTree::point()), QPoly::one());
        assert_eq!(q_poly(&t("(..)")), p(&[1, 1]));
        for n in 1..=6 {
            assert_eq!(q_poly(&PlaneTree::star(n)), q_factorial(n));
        }
        assert_eq!(q_poly(&PlaneTree::path(3)), QPoly::one());
    }

    #[test]
    fn wedge_of_two_stemmed_cherries() {
        let w = PlaneTree::wedge(&[t("((..))"), t("((..))")]).unwrap();
        assert_eq!(w, t("((..)(..))"));
        // frozen from q_poly_by_sequences
        let expected = &q_binomial(6, 3) * &p(&[1, 2, 1]);
        assert_eq!(q_poly_by_sequences(&w), expected);
        assert_eq!(q_poly(&w), expected);
    }

    #[test]
    fn recursion_matches_sequence_oracle() {
        for n in 0..=6 {
            for tree in enumerate_plane_trees(n).unwrap() {
                assert_eq!(q_poly(&tree), q_poly_by_sequences(&tree), "{tree}");
            }
        }
    }

    #[test]
    fn q_at_one_counts_removal_orders() {
        fn count_orders(t: &PlaneTree) -> u64 {
            if t.is_point() {
                return 1;
            }
            t.leaves()
                .iter()
                .map(|v| count_orders(&t.remove_leaf(v).unwrap()))
                .sum()
        }
        for n in 0..=6 {
            for tree in enumerate_plane_trees(n).unwrap() {
                assert_eq!(q_poly(&tree).eval(1), count_orders(&tree).into());
            }
        }
    }

    #[test]
    fn state_product() {
        assert_eq!(q_poly_state(&PlaneTree::point()), QPoly::one());
        assert_eq!(q_poly_state(&PlaneTree::star(3)), q_factorial(3));
        for n in 0..=6 {
            for tree in enumerate_plane_trees(n).unwrap() {
                assert_eq!(q_poly_state(&tree), q_poly(&tree), "{tree}");
            }
        }
    }

    #[test]
    fn boltzmann_weights() {
        let star = PlaneTree::star(4);
        assert_eq!(
            boltzmann_weight(&star, &VertexAddr(vec![2])).unwrap(),
            QPoly::one()
        );
        assert_eq!(
            boltzmann_weight(&star, &VertexAddr::root()).unwrap(),
            q_factorial(4)
        );
        let (a, b) = (t("((.).)"), t("(((.)))"));
        let w = PlaneTree::wedge(&[a.clone(), b.clone()]).unwrap();
        // root of wedge(A, B) with A and B each a single branch
        assert_eq!(
            boltzmann_weight(&w, &VertexAddr::root()).unwrap(),
            &q_binomial(6, 3) * &q_multinomial(&[2, 1])
        );
        let single = PlaneTree::wedge(&[t("((.))"), t("(((.)))")]).unwrap();
        assert_eq!(
            boltzmann_weight(&single, &VertexAddr::root()).unwrap(),
            q_binomial(5, 2)
        );
        assert!(matches!(
            boltzmann_weight(&star, &VertexAddr(vec![9])),
            Err(Error::InvalidAddress(_))
        ));
    }

    #[test]
    fn reroot_examples() {
        let one = check_reroot(&t("(.)"), &VertexAddr(vec![0])).unwrap();
        assert_eq!(
            (one.lhs.clone(), one.rhs.clone()),
            (QPoly::one(), QPoly::one())
        );
        assert!(one.holds);
        let path = check_reroot(&t("((.))"), &VertexAddr(vec![0])).unwrap();
        assert_eq!(path.lhs, p(&[1, 1]));
        assert_eq!(path.rhs, p(&[1, 1]));
        assert!(path.holds);
        assert_eq!(q_poly(&t("(..)")), p(&[1, 1]));
        assert_eq!(
            check_reroot(&t("(..)"), &VertexAddr::root()),
            Err(Error::RootHasNoEdge)
        );
    }

    #[test]
    fn reroot_identity_on_small_trees() {
        for n in 1..=5 {
            for tree in enumerate_plane_trees(n).unwrap() {
                for e in tree.vertices().into_iter().skip(1) {
                    assert!(check_reroot(&tree, &e).unwrap().holds, "{tree} at {e}");
                }
            }
        }
    }

    #[test]
    fn embedding_invariance_and_palindromes() {
        for n in 0..=6 {
            for tree in enumerate_plane_trees(n).unwrap() {
                let q = q_poly(&tree);
                assert!(q.is_palindromic());
                assert_eq!(q.coeff(0), 1.into());
                for seed in 0..5 {
                    assert_eq!(q_poly(&tree.permute_children(seed)), q);
                }
                assert!(cyclotomic_factor(&q).unwrap().is_complete());
            }
        }
    }
}

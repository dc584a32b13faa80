//! Exhaustive checking of the face/degeneracy relations.

use std::fmt;

use super::{
    degeneracy, enumerate_top_trees_bounded, face, is_topological, TopTree, TOP_LEAF_LIMIT,
};
use crate::error::Result;

/// Instances checked for one relation family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCount {
    pub relation: &'static str,
    pub checked: usize,
}

/// A failed relation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub tree: String,
    pub relation: &'static str,
    pub indices: (usize, usize),
    pub lhs: String,
    pub rhs: String,
}

/// A pair `(T, i)` with `s_i s_i (T) != s_{i+1} s_i (T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialWitness {
    pub tree: String,
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub max_leaves: usize,
    pub trees: usize,
    pub counts: Vec<RelationCount>,
    pub violations: Vec<Violation>,
    /// First `s_i s_i` counterexample found, in enumeration order.
    pub witness: Option<SimplicialWitness>,
    /// How many `(T, i)` pairs break `s_i s_i = s_{i+1} s_i`.
    pub simplicial_failures: usize,
}

impl IdentityReport {
    /// Relations (1), (2'), (3), (4) all hold and the extra simplicial
    /// relation was shown to fail.
    pub fn is_almost_simplicial(&self) -> bool {
        self.violations.is_empty() && self.witness.is_some()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "topological trees with <= {} leaves: {}",
            self.max_leaves, self.trees
        )?;
        for c in &self.counts {
            writeln!(f, "  {:<34} checked {}", c.relation, c.checked)?;
        }
        writeln!(f, "violations: {}", self.violations.len())?;
        for v in &self.violations {
            writeln!(
                f,
                "  {} at {} (i={}, j={}): {} != {}",
                v.relation, v.tree, v.indices.0, v.indices.1, v.lhs, v.rhs
            )?;
        }
        match &self.witness {
            Some(w) => write!(
                f,
                "s_i s_i != s_(i+1) s_i: {} failing pairs; e.g. T={} i={}: {} != {}",
                self.simplicial_failures, w.tree, w.index, w.lhs, w.rhs
            ),
            None => write!(f, "s_i s_i = s_(i+1) s_i held everywhere (no witness)"),
        }
    }
}

pub const FACE_FACE: &str = "(1) d_i d_j = d_(j-1) d_i, i<j";
pub const DEG_DEG: &str = "(2') s_i s_j = s_(j+1) s_i, i<j";
pub const FACE_DEG_BELOW: &str = "(3) d_i s_j = s_(j-1) d_i, i<j";
pub const FACE_DEG_ABOVE: &str = "(3) d_i s_j = s_j d_(i-1), i>j+1";
pub const FACE_DEG_ID: &str = "(4) d_i s_i = d_(i+1) s_i = id";

struct Checker {
    counts: Vec<RelationCount>,
    violations: Vec<Violation>,
}

impl Checker {
    fn check(
        &mut self,
        relation: &'static str,
        tree: &TopTree,
        ij: (usize, usize),
        lhs: &TopTree,
        rhs: &TopTree,
    ) {
        let slot = self
            .counts
            .iter_mut()
            .find(|c| c.relation == relation)
            .expect("relation registered");
        slot.checked += 1;
        let malformed = !is_topological(lhs.as_plane()) || !is_topological(rhs.as_plane());
        if lhs != rhs || malformed {
            self.violations.push(Violation {
                tree: tree.to_string(),
                relation,
                indices: ij,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
}

/// Checks relations (1), (2'), (3), (4) on every topological tree with at most
/// `max_leaves` leaves and every admissible index pair, and looks for pairs
/// breaking `s_i s_i = s_{i+1} s_i`.
pub fn check_identities(max_leaves: usize) -> Result<IdentityReport> {
    check_identities_bounded(max_leaves, TOP_LEAF_LIMIT)
}

/// As [`check_identities`] with an explicit cap on the leaf count.
pub fn check_identities_bounded(max_leaves: usize, limit: usize) -> Result<IdentityReport> {
    let mut checker = Checker {
        counts: [
            FACE_FACE,
            DEG_DEG,
            FACE_DEG_BELOW,
            FACE_DEG_ABOVE,
            FACE_DEG_ID,
        ]
        .into_iter()
        .map(|relation| RelationCount {
            relation,
            checked: 0,
        })
        .collect(),
        violations: Vec::new(),
    };
    let mut report = IdentityReport {
        max_leaves,
        ..Default::default()
    };
    for leaves in 1..=max_leaves {
        for t in enumerate_top_trees_bounded(leaves, limit)? {
            report.trees += 1;
            let m = t.leaf_count();

            // faces need at least 3 leaves to compose twice
            if m >= 3 {
                for j in 0..m {
                    for i in 0..j {
                        let lhs = face(&face(&t, j)?, i)?;
                        let rhs = face(&face(&t, i)?, j - 1)?;
                        checker.check(FACE_FACE, &t, (i, j), &lhs, &rhs);
                    }
                }
            }

            for j in 0..m {
                let sj = degeneracy(&t, j)?;
                for i in 0..j {
                    let lhs = degeneracy(&sj, i)?;
                    let rhs = degeneracy(&degeneracy(&t, i)?, j + 1)?;
                    checker.check(DEG_DEG, &t, (i, j), &lhs, &rhs);
                }
                // s_j(T) has m + 1 leaves, faces d_0 ..= d_m
                for i in 0..=m {
                    let lhs = face(&sj, i)?;
                    if i < j {
                        let rhs = degeneracy(&face(&t, i)?, j - 1)?;
                        checker.check(FACE_DEG_BELOW, &t, (i, j), &lhs, &rhs);
                    } else if i > j + 1 {
                        let rhs = degeneracy(&face(&t, i - 1)?, j)?;
                        checker.check(FACE_DEG_ABOVE, &t, (i, j), &lhs, &rhs);
                    } else {
                        checker.check(FACE_DEG_ID, &t, (i, j), &lhs, &t);
                    }
                }

                let lhs = degeneracy(&sj, j)?;
                let rhs = degeneracy(&sj, j + 1)?;
                if lhs != rhs {
                    report.simplicial_failures += 1;
                    report.witness.get_or_insert_with(|| SimplicialWitness {
                        tree: t.to_string(),
                        index: j,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                }
            }
        }
    }
    report.counts = checker.counts;
    report.violations = checker.violations;
    Ok(report)
}

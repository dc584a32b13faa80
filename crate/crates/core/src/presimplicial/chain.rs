//! Chains over Z[q] on topological trees and the q-boundary `Σ q^i d_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{face, TopTree};
use crate::qpoly::QPoly;

/// A finitely supported Z[q]-combination of topological trees. Zero
/// coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct QChain {
    terms: BTreeMap<TopTree, QPoly>,
}

impl QChain {
    pub fn zero() -> Self {
        QChain::default()
    }

    /// `1 · tree`.
    pub fn basis(tree: TopTree) -> Self {
        let mut c = QChain::zero();
        c.add_term(tree, &QPoly::one());
        c
    }

    pub fn add_term(&mut self, tree: TopTree, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(tree.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&tree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, tree: &TopTree) -> QPoly {
        self.terms.get(tree).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TopTree, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Specializes every coefficient at `q = x`.
    pub fn eval(&self, x: i64) -> IntChain {
        let mut out = IntChain::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), &c.eval(x));
        }
        out
    }
}

impl fmt::Display for QChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QChain[{self}]")
    }
}

/// A finitely supported Z-combination of topological trees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntChain {
    terms: BTreeMap<TopTree, BigInt>,
}

impl IntChain {
    pub fn zero() -> Self {
        IntChain::default()
    }

    pub fn basis(tree: TopTree) -> Self {
        let mut c = IntChain::zero();
        c.add_term(tree, &BigInt::one());
        c
    }

    pub fn add_term(&mut self, tree: TopTree, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(tree.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&tree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, tree: &TopTree) -> BigInt {
        self.terms.get(tree).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TopTree, &BigInt)> {
        self.terms.iter()
    }

    /// `Σ_i x^i d_i` extended linearly; `x = -1` is the alternating boundary.
    pub fn boundary_at(&self, x: i64) -> IntChain {
        let x = BigInt::from(x);
        let mut out = IntChain::zero();
        for (t, c) in &self.terms {
            if t.is_point() {
                continue;
            }
            let mut weight = c.clone();
            for i in 0..t.leaf_count() {
                out.add_term(face(t, i).expect("index within leaf count"), &weight);
                weight *= &x;
            }
        }
        out
    }
}

impl fmt::Display for IntChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{t}")?;
        }
        Ok(())
    }
}

/// `∂^q = Σ_i q^i d_i`, extended linearly; the one-point tree maps to zero.
pub fn q_boundary(chain: &QChain) -> QChain {
    let mut out = QChain::zero();
    for (t, c) in chain.iter() {
        if t.is_point() {
            continue;
        }
        for i in 0..t.leaf_count() {
            out.add_term(face(t, i).expect("index within leaf count"), &c.shift(i));
        }
    }
    out
}

/// `∂^q` with `q` specialized to `q_value`.
pub fn q_boundary_at(chain: &QChain, q_value: i64) -> IntChain {
    chain.eval(q_value).boundary_at(q_value)
}

/// Coefficient of `•` after rewriting `1 · tree` with `x ↦ ∂^q(x)` until only
/// `•` remains.
pub fn reduce_to_point(tree: &TopTree) -> QPoly {
    let mut chain = QChain::basis(tree.clone());
    while chain.iter().any(|(t, _)| !t.is_point()) {
        let mut next = QChain::zero();
        for (t, c) in chain.iter() {
            if t.is_point() {
                next.add_term(t.clone(), c);
            } else {
                for (s, d) in q_boundary(&QChain::basis(t.clone())).iter() {
                    next.add_term(s.clone(), &(c * d));
                }
            }
        }
        chain = next;
    }
    chain.coeff(&TopTree::point())
}

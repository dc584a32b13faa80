//! Cyclotomic polynomials and peeling of cyclotomic factors.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::QPoly;
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<HashMap<usize, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, via `(q^d - 1) / prod_{e | d, e < d} Phi_e`.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic(d: usize) -> QPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut phi = &QPoly::monomial(d) - &QPoly::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        phi = phi
            .div_exact(&cyclotomic(e))
            .expect("q^d - 1 is divisible by Phi_e for e | d");
    }
    cache().lock().unwrap().insert(d, phi.clone());
    phi
}

fn totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Result of [`cyclotomic_factor`]: `p = q^monomial_exponent * prod Phi_d^m * remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub monomial_exponent: usize,
    /// Cyclotomic index `d` to multiplicity.
    pub factors: BTreeMap<usize, usize>,
    pub remainder: QPoly,
}

impl CyclotomicFactorization {
    /// True when the input was a monomial times a product of cyclotomic polynomials.
    pub fn is_complete(&self) -> bool {
        self.remainder.is_one()
    }

    /// Multiplies the pieces back together.
    pub fn reassemble(&self) -> QPoly {
        let mut acc = self.remainder.shift(self.monomial_exponent);
        for (&d, &m) in &self.factors {
            let phi = cyclotomic(d);
            for _ in 0..m {
                acc = &acc * &phi;
            }
        }
        acc
    }

    /// LaTeX product such as `q^{2} \Phi_{2}^{2} \Phi_{3}`; includes the remainder
    /// only when it is not 1.
    pub fn to_latex(&self) -> String {
        let mut parts = Vec::new();
        match self.monomial_exponent {
            0 => {}
            1 => parts.push("q".to_string()),
            k => parts.push(format!("q^{{{k}}}")),
        }
        for (&d, &m) in &self.factors {
            if m == 1 {
                parts.push(format!("\\Phi_{{{d}}}"));
            } else {
                parts.push(format!("\\Phi_{{{d}}}^{{{m}}}"));
            }
        }
        if !self.remainder.is_one() || parts.is_empty() {
            parts.push(format!("({})", self.remainder.to_latex()));
        }
        parts.join(" ")
    }
}

/// Strips the largest power of `q`, then divides out every cyclotomic factor
/// `Phi_d` as often as it divides.
///
/// Every `d` with `phi(d)` at most the current degree is tried, so factors such
/// as `Phi_3` of a degree-2 input are found.
pub fn cyclotomic_factor(p: &QPoly) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    let monomial_exponent = p.low_order();
    let mut rest = QPoly::from_coeffs(p.coeffs()[monomial_exponent..].to_vec());
    let mut factors = BTreeMap::new();
    let deg0 = rest.degree().unwrap_or(0);
    // phi(d) >= sqrt(d / 2), so no d beyond 2 deg^2 can have phi(d) <= deg.
    let d_max = 2 * deg0 * deg0 + 2;
    for d in 1..=d_max {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        if totient(d) > deg {
            continue;
        }
        let phi = cyclotomic(d);
        while let Ok(q) = rest.div_exact(&phi) {
            rest = q;
            *factors.entry(d).or_insert(0) += 1;
        }
    }
    Ok(CyclotomicFactorization {
        monomial_exponent,
        factors,
        remainder: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{q_binomial, q_factorial, q_integer};

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_over_divisors_is_q_d_minus_one() {
        for d in 1..=30 {
            let prod: QPoly = (1..=d).filter(|e| d % e == 0).map(cyclotomic).product();
            assert_eq!(prod, &QPoly::monomial(d) - &QPoly::one());
            assert_eq!(cyclotomic(d).degree(), Some(totient(d)));
        }
    }

    #[test]
    fn factor_examples() {
        let f = cyclotomic_factor(&p(&[1, 1])).unwrap();
        assert_eq!(f.monomial_exponent, 0);
        assert_eq!(f.factors, BTreeMap::from([(2, 1)]));
        assert!(f.is_complete());

        let f = cyclotomic_factor(&p(&[0, 1, 1])).unwrap();
        assert_eq!(f.monomial_exponent, 1);
        assert_eq!(f.factors, BTreeMap::from([(2, 1)]));
        assert!(f.is_complete());

        let f = cyclotomic_factor(&p(&[1, 2, 1, 1])).unwrap();
        assert!(!f.is_complete());
        assert_eq!(f.reassemble(), p(&[1, 2, 1, 1]));

        assert_eq!(cyclotomic_factor(&QPoly::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn degree_two_input_finds_phi_three() {
        let f = cyclotomic_factor(&q_integer(3)).unwrap();
        assert_eq!(f.factors, BTreeMap::from([(3, 1)]));
        assert!(f.is_complete());
    }

    #[test]
    fn q_analogs_factor_completely() {
        for n in 0..=9 {
            let f = cyclotomic_factor(&q_factorial(n)).unwrap();
            assert!(f.is_complete());
            assert_eq!(f.reassemble(), q_factorial(n));
        }
        let f = cyclotomic_factor(&q_binomial(8, 3)).unwrap();
        assert!(f.is_complete());
    }

    #[test]
    fn reassembly_is_exact_on_non_cyclotomic_inputs() {
        for c in [&[3, 1][..], &[0, 0, 2, 5, -1], &[1, 2, 1, 1], &[-1, 1]] {
            let f = cyclotomic_factor(&p(c)).unwrap();
            assert_eq!(f.reassemble(), p(c));
        }
    }

    #[test]
    fn latex_rendering() {
        let f = cyclotomic_factor(&q_factorial(3).shift(2)).unwrap();
        assert_eq!(f.to_latex(), "q^{2} \\Phi_{2} \\Phi_{3}");
    }
}

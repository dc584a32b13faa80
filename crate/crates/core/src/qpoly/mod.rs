//! Exact arithmetic in Z[q].
//!
//! [`QPoly`] stores a dense, ascending coefficient vector of big integers and
//! is always normalized: the last stored coefficient is nonzero and the zero
//! polynomial is the empty vector.

mod analog;
mod cyclotomic;

pub use analog::{q_binomial, q_factorial, q_integer, q_multinomial};
pub use cyclotomic::{cyclotomic, cyclotomic_factor, CyclotomicFactorization};

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of Z[q].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Exact quotient `self / divisor` in Z[q].
    ///
    /// Fails with [`Error::NotDivisible`] when the division leaves a remainder
    /// or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(n_deg) = self.degree() else {
            return Ok(QPoly::zero());
        };
        if n_deg < d_deg {
            return Err(Error::NotDivisible);
        }
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n_deg - d_deg + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d_deg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// True when the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Largest `k` with `q^k` dividing `self`; zero for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Renders with LaTeX exponents (`q^{12}`).
    pub fn to_latex(&self) -> String {
        self.render(|k| match k {
            1 => "q".to_string(),
            _ => format!("q^{{{k}}}"),
        })
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&power(k));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for QPoly {
    /// Ascending plain text, e.g. `1 + 2q + 2q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| match k {
            1 => "q".to_string(),
            _ => format!("q^{k}"),
        }))
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        self.normalize();
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn normalization_trims_zeros() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn addition() {
        assert_eq!(&p(&[1, 1]) + &QPoly::zero(), p(&[1, 1]));
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1, 1]), p(&[1, 2, 1]));
        assert_eq!(q_integer(2) + q_integer(3), p(&[2, 2, 1]));
        assert!((p(&[1, 2]) - p(&[1, 2])).is_zero());
    }

    #[test]
    fn multiplication() {
        assert_eq!(&p(&[1, 1]) * &QPoly::one(), p(&[1, 1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
        assert!((&p(&[1, 1]) * &QPoly::zero()).is_zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[1, 2, 1]).div_exact(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            q_factorial(3).div_exact(&q_integer(2)).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            p(&[1, 1]).div_exact(&QPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // integral remainder but non-integral quotient
        assert_eq!(p(&[1, 1]).div_exact(&p(&[2, 2])), Err(Error::NotDivisible));
        assert!(QPoly::zero().div_exact(&p(&[3])).unwrap().is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 1, 1]).eval(1), BigInt::from(3));
        assert_eq!(p(&[1, 1]).eval(-1), BigInt::from(0));
        assert_eq!(q_factorial(4).eval(1), BigInt::from(24));
        assert_eq!(QPoly::zero().eval(7), BigInt::from(0));
    }

    #[test]
    fn plain_rendering() {
        assert_eq!(p(&[1, 2, 2, 1]).to_string(), "1 + 2q + 2q^2 + q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(p(&[1, -1, 1]).to_string(), "1 - q + q^2");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "-2q + q^3");
        assert_eq!(p(&[0, 1, 1, 2, 1]).to_latex(), "q + q^{2} + 2q^{3} + q^{4}");
    }

    #[test]
    fn shift_and_low_order() {
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[0, 0, 1, 1]).low_order(), 2);
        assert!(QPoly::zero().shift(3).is_zero());
    }

    #[test]
    fn big_coefficients_stay_exact() {
        // [25]_q! has central coefficients well beyond 2^64 / 25!.
        let f = q_factorial(25);
        let expected: BigInt = (1..=25u32).map(BigInt::from).product();
        assert_eq!(f.eval(1), expected);
        assert!(f.coeffs().iter().any(|c| c > &BigInt::from(u64::MAX)));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| QPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn div_exact_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn eval_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -4i64..5) {
            prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
            prop_assert_eq!((&a + &b).eval(x), a.eval(x) + b.eval(x));
        }
    }
}

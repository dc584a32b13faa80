//! q-integers, q-factorials, Gaussian binomials and q-multinomials.

use std::sync::{OnceLock, RwLock};

use super::QPoly;

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::from_i64s(&vec![1; n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`; `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_integer).product()
}

/// Rows of the q-Pascal triangle computed so far.
fn pascal_rows() -> &'static RwLock<Vec<Vec<QPoly>>> {
    static ROWS: OnceLock<RwLock<Vec<Vec<QPoly>>>> = OnceLock::new();
    ROWS.get_or_init(|| RwLock::new(vec![vec![QPoly::one()]]))
}

/// Gaussian binomial `[n choose k]_q`, zero when `k < 0` or `k > n`.
///
/// Built from the q-Pascal rule
/// `C(n, k) = C(n-1, k-1) + q^k C(n-1, k)` with `C(n, 0) = C(n, n) = 1`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    let Ok(k) = usize::try_from(k) else {
        return QPoly::zero();
    };
    if k > n {
        return QPoly::zero();
    }
    if k == 0 || k == n {
        return QPoly::one();
    }
    {
        let rows = pascal_rows().read().unwrap();
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal_rows().write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(QPoly::one());
        for j in 1..m {
            row.push(&prev[j - 1] + &prev[j].shift(j));
        }
        row.push(QPoly::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// q-multinomial `[a_1 + ... + a_k; a_1, ..., a_k]_q` as the telescoping product
/// `[a_2+a_1; a_2] [a_3+a_2+a_1; a_3] ... [a_k+...+a_1; a_k]`.
///
/// Empty and single-part inputs give 1.
pub fn q_multinomial(parts: &[usize]) -> QPoly {
    let mut acc = QPoly::one();
    let mut running = parts.first().copied().unwrap_or(0);
    for &a in parts.iter().skip(1) {
        running += a;
        acc = &acc * &q_binomial(running, a as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    /// Inversion generating function over 0/1 words with `k` ones: an
    /// enumeration-based Gaussian binomial independent of the Pascal rule.
    fn binomial_by_inversions(n: usize, k: usize) -> QPoly {
        let mut coeffs = vec![0i64; k * (n - k) + 1];
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut ones_seen = 0;
            let mut inv = 0;
            for bit in 0..n {
                if mask >> bit & 1 == 1 {
                    ones_seen += 1;
                } else {
                    inv += ones_seen;
                }
            }
            coeffs[inv] += 1;
        }
        p(&coeffs)
    }

    fn int_binomial(n: usize, k: usize) -> BigInt {
        let mut row = vec![BigInt::from(1)];
        for _ in 0..n {
            let mut next = vec![BigInt::from(1); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row[k].clone()
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(2), p(&[1, 1]));
        assert_eq!(q_integer(4), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0), QPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(5, 0), QPoly::one());
        assert_eq!(q_binomial(0, 0), QPoly::one());
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        // frozen from binomial_by_inversions(4, 2)
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(binomial_by_inversions(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(3, 4).is_zero());
    }

    #[test]
    fn gaussian_binomial_matches_inversion_count() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k as i64),
                    binomial_by_inversions(n, k),
                    "({n},{k})"
                );
            }
        }
    }

    #[test]
    fn gaussian_binomial_symmetry_and_q_equals_one() {
        for n in 0..=12 {
            for k in 0..=n {
                let b = q_binomial(n, k as i64);
                assert_eq!(b, q_binomial(n, (n - k) as i64));
                assert!(b.is_palindromic());
                assert_eq!(b.eval(1), int_binomial(n, k));
            }
        }
    }

    #[test]
    fn gaussian_binomial_matches_factorial_quotient() {
        for n in 0..=10 {
            for k in 0..=n {
                let denom = &q_factorial(k) * &q_factorial(n - k);
                let quotient = q_factorial(n).div_exact(&denom).unwrap();
                assert_eq!(q_binomial(n, k as i64), quotient);
            }
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(q_multinomial(&[]), QPoly::one());
        assert_eq!(q_multinomial(&[7]), QPoly::one());
        assert_eq!(q_multinomial(&[1, 1]), q_binomial(2, 1));
        assert_eq!(q_multinomial(&[2, 2]), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_multinomial(&[1, 1, 1]), q_factorial(3));
        assert_eq!(q_multinomial(&[0, 3, 0]), QPoly::one());
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn multinomial_is_symmetric_in_its_parts() {
        fn lists(len: usize) -> Vec<Vec<usize>> {
            if len == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for tail in lists(len - 1) {
                for a in 0..=4 {
                    let mut v = tail.clone();
                    v.push(a);
                    out.push(v);
                }
            }
            out
        }
        for len in 0..=4 {
            for parts in lists(len) {
                let reference = q_multinomial(&parts);
                for perm in permutations(&parts) {
                    assert_eq!(q_multinomial(&perm), reference, "{parts:?} vs {perm:?}");
                }
            }
        }
    }

    #[test]
    fn multinomial_equals_factorial_quotient() {
        let parts = [2, 1, 3];
        let denom: QPoly = parts.iter().map(|&a| q_factorial(a)).product();
        assert_eq!(
            q_multinomial(&parts),
            q_factorial(6).div_exact(&denom).unwrap()
        );
    }

    #[test]
    fn concurrent_memo_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || q_binomial(14 + t % 3, 5)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), binomial_by_inversions(14 + t % 3, 5));
        }
    }
}

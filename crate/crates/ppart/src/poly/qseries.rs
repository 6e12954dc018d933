//! q-binomial coefficients, as polynomials and as rational expressions.

use super::intpoly::IntPoly;
use super::laurent::{Laurent, RatFn};
use num_bigint::BigInt;
use num_traits::One;

/// Gaussian binomial `[n choose k]_q` for `n >= 0`, as a polynomial in `q`.
/// Zero when `k < 0` or `k > n`.
pub fn q_binomial_poly(n: i64, k: i64) -> IntPoly {
    if k < 0 || k > n || n < 0 {
        return IntPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
    let mut row: Vec<IntPoly> = vec![IntPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let left = if j >= 1 { row.get(j - 1) } else { None };
            let right = row.get(j);
            let mut val = left.cloned().unwrap_or_else(IntPoly::zero);
            if let Some(r) = right {
                val = &val + &(&IntPoly::monomial(j, BigInt::one()) * r);
            }
            next.push(val);
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(IntPoly::zero)
}

/// General q-binomial as a ratio of Laurent polynomials via the product
/// formula `prod_{i=0}^{k-1} (1 - q^{n-i}) / (1 - q^{i+1})`, valid for
/// negative `n`. When some `n - i = 0` the numerator vanishes and the whole
/// expression is zero.
pub fn q_binomial_rat(n: i64, k: i64) -> RatFn {
    if k < 0 {
        return RatFn::zero();
    }
    let mut num = Laurent::one();
    let mut den = Laurent::one();
    for i in 0..k {
        num = &num * &Laurent::one_minus_q(n - i);
        den = &den * &Laurent::one_minus_q(i + 1);
    }
    RatFn::ratio(num, den)
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::one(); n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent::RatFn;
    use num_bigint::BigInt;

    #[test]
    fn small_values() {
        assert_eq!(q_binomial_poly(2, 1), IntPoly::from_i64(&[1, 1]));
        assert_eq!(q_binomial_poly(4, 2), IntPoly::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial_poly(5, 0), IntPoly::one());
        assert_eq!(q_binomial_poly(2, 3), IntPoly::zero());
    }

    #[test]
    fn q_one_specialization_and_symmetry() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let p = q_binomial_poly(n, k);
                assert_eq!(p.eval_one(), crate::poly::ratpoly::binom(n, k));
                assert!(p.is_palindromic(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rational_form_matches_polynomial() {
        for n in 0..=6i64 {
            for k in 0..=n {
                let rat = q_binomial_rat(n, k);
                let poly = RatFn::from_poly(&q_binomial_poly(n, k));
                assert!(rat.equals(&poly), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn negative_upper_argument_reflection() {
        // [-n, k]_q = (-1)^k q^{-kn - k(k-1)/2} [n+k-1, k]_q
        for n in 1..=4i64 {
            for k in 0..=4i64 {
                let lhs = q_binomial_rat(-n, k);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let shift = -k * n - k * (k - 1) / 2;
                let rhs = RatFn::from_poly(&q_binomial_poly(n + k - 1, k))
                    .scale(BigInt::from(sign))
                    .mul_q_power(shift);
                assert!(lhs.equals(&rhs), "n={n} k={k}");
            }
        }
    }
}

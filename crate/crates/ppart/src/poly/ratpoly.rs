//! Dense univariate polynomials with exact rational coefficients.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `x` as a polynomial.
    pub fn variable() -> Self {
        RatPoly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute `x -> -x`.
    pub fn compose_neg(&self) -> Self {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Substitute `x -> x + c` for an integer shift.
    pub fn compose_shift(&self, c: i64) -> Self {
        let shift = RatPoly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(c)),
            BigRational::one(),
        ]);
        let mut acc = RatPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &RatPoly::constant(coeff.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    /// Monic version (nonzero input).
    pub fn monic(&self) -> Self {
        let lead = self.coeffs.last().expect("monic of zero polynomial");
        self.scale(&lead.recip())
    }

    /// Polynomial remainder of `self` divided by `d` (nonzero `d`).
    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let sub = &q * &d.coeffs[i];
                rem[k + i] -= sub;
            }
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        RatPoly::from_coeffs(rem)
    }

    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Sign of the leading coefficient; 0 for the zero polynomial.
    pub fn lead_sign(&self) -> i32 {
        match self.coeffs.last() {
            None => 0,
            Some(c) if c.is_positive() => 1,
            _ => -1,
        }
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = if mag.is_one() && i > 0 {
                None
            } else if mag.is_integer() {
                Some(mag.numer().to_string())
            } else {
                Some(format!("{}/{}", mag.numer(), mag.denom()))
            };
            let var_str = match i {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{}^{}", var, i)),
            };
            let term = match (coeff_str, var_str) {
                (Some(c), Some(v)) => format!("{}*{}", c, v),
                (Some(c), None) => c,
                (None, Some(v)) => v,
                (None, None) => unreachable!(),
            };
            out.push_str(&term);
        }
        out
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

/// Unique interpolating polynomial through integer arguments, exact Lagrange.
pub fn interpolate(points: &[(i64, BigRational)]) -> Result<RatPoly> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[i + 1..].iter().any(|(x2, _)| x2 == x) {
            return Err(Error::DuplicateArgument);
        }
    }
    let mut out = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(BigInt::from(xi - xj));
            let lin = RatPoly::from_coeffs(vec![
                BigRational::from_integer(BigInt::from(-xj)),
                BigRational::one(),
            ]);
            basis = &basis * &lin.scale(&denom.recip());
        }
        out = &out + &basis;
    }
    Ok(out)
}

/// Binomial coefficient `C(m + c, p)` as a polynomial in `m`.
pub fn binomial_in_m(c: i64, p: usize) -> RatPoly {
    let mut out = RatPoly::one();
    for i in 0..p {
        let lin = RatPoly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(c - i as i64)),
            BigRational::one(),
        ]);
        out = &out * &lin;
    }
    let mut fact = BigInt::one();
    for i in 1..=p {
        fact *= BigInt::from(i as i64);
    }
    out.scale(&BigRational::from_integer(fact).recip())
}

/// Ordinary binomial coefficient with the zero convention:
/// 0 when `k < 0` or when `0 <= n < k`; the product formula otherwise (n >= k >= 0).
/// Negative `n` with `k >= 0` also yields 0.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || n < k {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn interpolate_constant() {
        let p = interpolate(&[(0, rat(1)), (1, rat(1))]).unwrap();
        assert_eq!(p, RatPoly::one());
    }

    #[test]
    fn interpolate_square() {
        let p = interpolate(&[(0, rat(0)), (1, rat(1)), (2, rat(4))]).unwrap();
        assert_eq!(p, RatPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn interpolate_order_polynomial_values() {
        // Values 0,2,8,20 at m=1..4 give 2*C(m+1,3) = (m^3 - m)/3.
        let p = interpolate(&[(1, rat(0)), (2, rat(2)), (3, rat(8)), (4, rat(20))]).unwrap();
        let expected = binomial_in_m(1, 3).scale(&rat(2));
        assert_eq!(p, expected);
        assert_eq!(p.eval_int(5), rat(40));
    }

    #[test]
    fn duplicate_argument_rejected() {
        assert_eq!(
            interpolate(&[(1, rat(0)), (1, rat(1))]),
            Err(Error::DuplicateArgument)
        );
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(-2, 2), BigInt::zero());
        assert_eq!(binom(5, 0), BigInt::one());
    }

    #[test]
    fn compose_shift_and_neg() {
        // f(m) = m^2 + 1; f(m+2) = m^2 + 4m + 5; f(-m) = m^2 + 1.
        let f = RatPoly::from_i64(&[1, 0, 1]);
        assert_eq!(f.compose_shift(2), RatPoly::from_i64(&[5, 4, 1]));
        assert_eq!(f.compose_neg(), f);
    }

    #[test]
    fn render_rational_coeffs() {
        let p = binomial_in_m(1, 3).scale(&rat(2));
        assert_eq!(p.render("m"), "-1/3*m + 1/3*m^3");
    }
}

//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable; `coeffs[i]` is the coefficient of degree `i`.
/// Trailing zeros are trimmed; the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn monomial(deg: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Sum of all coefficients (evaluation at 1).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Largest `k` with `x^k` dividing the polynomial (0 for the zero polynomial).
    pub fn trailing_zero_degree(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let q = &top / lead;
            for i in 0..=dd {
                rem[k + i] -= &q * &d.coeffs[i];
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Canonical text form: terms in increasing degree, explicit `*` and `^`.
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
            out.push_str(&term_string(&mag, &[(var, i)]));
        }
        out
    }
}

/// Shared term renderer: magnitude times variable powers joined with `*`.
pub(crate) fn term_string(mag: &BigInt, vars: &[(&str, usize)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let all_zero = vars.iter().all(|&(_, e)| e == 0);
    if !mag.is_one() || all_zero {
        parts.push(mag.to_string());
    }
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{}^{}", v, e)),
        }
    }
    parts.join("*")
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
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
        IntPoly::from_coeffs(coeffs)
    }
}

//! Sparse bivariate polynomials in `t` and `q` with big-integer coefficients.

use super::intpoly::{term_string, IntPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul};

/// Terms map `(t-degree, q-degree)` to a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(t_deg: u32, q_deg: u32, c: BigInt) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(t_deg, q_deg, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t_deg: u32, q_deg: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((t_deg, q_deg)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(t_deg, q_deg));
        }
    }

    pub fn coeff(&self, t_deg: u32, q_deg: u32) -> BigInt {
        self.terms
            .get(&(t_deg, q_deg))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_q_degree(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Coefficient of `t^s` as a polynomial in `q`.
    pub fn t_slice(&self, s: u32) -> IntPoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if i == s {
                if coeffs.len() <= j as usize {
                    coeffs.resize(j as usize + 1, BigInt::zero());
                }
                coeffs[j as usize] = c.clone();
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Set `q = 1`, leaving a polynomial in `t`.
    pub fn eval_q_one(&self) -> IntPoly {
        let mut coeffs = Vec::new();
        for (&(i, _), c) in &self.terms {
            if coeffs.len() <= i as usize {
                coeffs.resize(i as usize + 1, BigInt::zero());
            }
            coeffs[i as usize] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Set `t = 1`, leaving a polynomial in `q`.
    pub fn eval_t_one(&self) -> IntPoly {
        let mut coeffs = Vec::new();
        for (&(_, j), c) in &self.terms {
            if coeffs.len() <= j as usize {
                coeffs.resize(j as usize + 1, BigInt::zero());
            }
            coeffs[j as usize] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Evaluation at `t = q = 1`.
    pub fn eval_one_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn from_q_poly(p: &IntPoly) -> Self {
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    pub fn from_t_poly(p: &IntPoly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    /// Canonical text form: terms in increasing total degree, `t` before `q`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(i, j)| (i + j, i, j));
        let mut out = String::new();
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
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
            out.push_str(&term_string(&mag, &[("t", i as usize), ("q", j as usize)]));
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

//! Laurent polynomials in `q` and formal ratios thereof.
//!
//! Used by the reciprocity identities, which substitute `q -> 1/q` and
//! evaluate q-binomial coefficients at negative upper arguments. Ratios are
//! never cancelled; equality is decided by cross-multiplication.

use super::intpoly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, c: BigInt) -> Self {
        let mut l = Laurent::zero();
        l.add_term(exp, c);
        l
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        let mut l = Laurent::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            l.add_term(i as i64, c.clone());
        }
        l
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_var(&self) -> Self {
        let mut l = Laurent::zero();
        for (&e, c) in &self.terms {
            l.add_term(-e, c.clone());
        }
        l
    }

    /// `1 - q^a` for any integer `a` (zero polynomial when `a = 0`).
    pub fn one_minus_q(a: i64) -> Self {
        let mut l = Laurent::one();
        l.add_term(a, BigInt::from(-1));
        l
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// A ratio of Laurent polynomials. The denominator is nonzero by construction.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: Laurent,
    pub den: Laurent,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        RatFn {
            num: Laurent::one(),
            den: Laurent::one(),
        }
    }

    pub fn from_laurent(l: Laurent) -> Self {
        RatFn {
            num: l,
            den: Laurent::one(),
        }
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        RatFn::from_laurent(Laurent::from_poly(p))
    }

    pub fn ratio(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }

    pub fn scale(&self, c: BigInt) -> RatFn {
        RatFn {
            num: &self.num * &Laurent::monomial(0, c),
            den: self.den.clone(),
        }
    }

    pub fn mul_q_power(&self, k: i64) -> RatFn {
        RatFn {
            num: &self.num * &Laurent::monomial(k, BigInt::one()),
            den: self.den.clone(),
        }
    }

    /// Substitute `q -> 1/q`.
    pub fn invert_var(&self) -> RatFn {
        RatFn {
            num: self.num.invert_var(),
            den: self.den.invert_var(),
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, rhs: &RatFn) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }
}

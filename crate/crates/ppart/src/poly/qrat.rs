//! Rational generating functions with structured denominators.
//!
//! Denominators are kept as multisets of factors `1 - t*q^a` and `1 - q^a`
//! and never expanded; series extraction divides the truncated numerator by
//! each factor with the geometric-series recurrence.

use super::bipoly::BiPoly;
use super::intpoly::IntPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// One denominator factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    /// `1 - q^a`, `a >= 1`.
    Q(u32),
    /// `1 - t*q^a`, `a >= 0`.
    TQ(u32),
}

impl Factor {
    pub fn render(&self) -> String {
        match *self {
            Factor::Q(1) => "(1-q)".to_string(),
            Factor::Q(a) => format!("(1-q^{})", a),
            Factor::TQ(0) => "(1-t)".to_string(),
            Factor::TQ(1) => "(1-t*q)".to_string(),
            Factor::TQ(a) => format!("(1-t*q^{})", a),
        }
    }
}

/// Numerator polynomial over a factored denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRational {
    pub num: BiPoly,
    den: Vec<Factor>,
}

/// Truncated bivariate power series; `coeffs[i][j]` is the coefficient of `t^i q^j`.
pub type SeriesGrid = Vec<Vec<BigInt>>;

impl QRational {
    pub fn new(num: BiPoly, mut den: Vec<Factor>) -> Result<Self> {
        if den.iter().any(|f| matches!(f, Factor::Q(0))) {
            return Err(Error::Invalid("denominator factor 1-q^0 is zero".into()));
        }
        den.sort();
        Ok(QRational { num, den })
    }

    pub fn from_poly(num: BiPoly) -> Self {
        QRational { num, den: Vec::new() }
    }

    pub fn den(&self) -> &[Factor] {
        &self.den
    }

    /// Taylor coefficients up to `t^t_max q^q_max`, exact.
    pub fn series(&self, t_max: usize, q_max: usize) -> SeriesGrid {
        let mut grid = vec![vec![BigInt::zero(); q_max + 1]; t_max + 1];
        for (&(i, j), c) in self.num.terms() {
            let (i, j) = (i as usize, j as usize);
            if i <= t_max && j <= q_max {
                grid[i][j] = c.clone();
            }
        }
        for f in &self.den {
            match *f {
                // divide by 1 - q^a:  c[i][j] += c[i][j-a]
                Factor::Q(a) => {
                    let a = a as usize;
                    for row in grid.iter_mut() {
                        for j in a..=q_max {
                            let prev = row[j - a].clone();
                            row[j] += prev;
                        }
                    }
                }
                // divide by 1 - t*q^a:  c[i][j] += c[i-1][j-a]
                Factor::TQ(a) => {
                    let a = a as usize;
                    for i in 1..=t_max {
                        for j in a..=q_max {
                            let prev = grid[i - 1][j - a].clone();
                            grid[i][j] += prev;
                        }
                    }
                }
            }
        }
        grid
    }

    /// Series in `q` alone (valid when no `t` appears anywhere).
    pub fn q_series(&self, q_max: usize) -> IntPoly {
        let grid = self.series(0, q_max);
        IntPoly::from_coeffs(grid.into_iter().next().unwrap())
    }

    /// Expanded denominator as a polynomial (product of the factors).
    pub fn den_expanded(&self) -> BiPoly {
        let mut out = BiPoly::one();
        for f in &self.den {
            let mut factor = BiPoly::one();
            match *f {
                Factor::Q(a) => factor.add_term(0, a, BigInt::from(-1)),
                Factor::TQ(a) => factor.add_term(1, a, BigInt::from(-1)),
            }
            out = &out * &factor;
        }
        out
    }

    /// Reduce to a polynomial when the denominator divides the numerator exactly.
    /// Only meaningful for `q`-only content; returns the quotient in `q`.
    pub fn reduce_to_q_poly(&self) -> Option<IntPoly> {
        if self.num.max_t_degree() != 0 {
            return None;
        }
        let den = self.den_expanded();
        if den.max_t_degree() != 0 {
            return None;
        }
        self.num.t_slice(0).exact_div(&den.t_slice(0))
    }

    pub fn render(&self) -> String {
        let num = self.num.render();
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self.den.iter().map(|f| f.render()).collect();
        let num = if self.num.terms().count() > 1 {
            format!("({})", num)
        } else {
            num
        };
        format!("{} / ({})", num, den.join("*"))
    }
}

/// `(a; q)_n` factor list for `a = t*q^j` or `a = q^j`.
pub fn q_pochhammer(t_present: bool, j: u32, n: u32) -> Vec<Factor> {
    (0..n)
        .map(|i| {
            if t_present {
                Factor::TQ(j + i)
            } else {
                Factor::Q(j + i)
            }
        })
        .collect()
}

/// `(t; q)_n = (1-t)(1-t*q)...(1-t*q^{n-1})`.
pub fn t_poch(n: u32) -> Vec<Factor> {
    q_pochhammer(true, 0, n)
}

/// `(q; q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn q_poch(n: u32) -> Vec<Factor> {
    q_pochhammer(false, 1, n)
}

//! Exact real-rootedness certificates via Sturm sequences.

use super::intpoly::IntPoly;
use super::ratpoly::RatPoly;
use crate::error::{Error, Result};
use num_rational::BigRational;

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(f: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_variations(signs: &[i32]) -> usize {
    let nonzero: Vec<i32> = signs.iter().cloned().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a squarefree polynomial.
fn distinct_real_roots(f: &RatPoly) -> usize {
    let chain = sturm_chain(f);
    // sign at +inf: sign of leading coefficient; at -inf: flipped for odd degree
    let at_pos: Vec<i32> = chain.iter().map(|p| p.lead_sign()).collect();
    let at_neg: Vec<i32> = chain
        .iter()
        .map(|p| {
            let d = p.degree().unwrap_or(0);
            let s = p.lead_sign();
            if d % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect();
    sign_variations(&at_neg) - sign_variations(&at_pos)
}

/// True iff every complex root of `f` is real, decided exactly.
/// A factor `t^k` is stripped first; constants are vacuously real-rooted.
pub fn real_rooted(f: &IntPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = f.trailing_zero_degree();
    let rational = RatPoly::from_coeffs(
        f.coeffs()[k..]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    );
    let deg = rational.degree().unwrap();
    if deg <= 1 {
        return Ok(true);
    }
    // squarefree part: repeated roots are real iff the squarefree part's are,
    // and all roots of f are real iff all roots of the squarefree part are
    let g = {
        let d = rational.derivative();
        let gcd = rational.gcd(&d);
        if gcd.degree() == Some(0) {
            rational.clone()
        } else {
            exact_quotient(&rational, &gcd)
        }
    };
    let gdeg = g.degree().unwrap();
    Ok(distinct_real_roots(&g) == gdeg)
}

fn exact_quotient(f: &RatPoly, d: &RatPoly) -> RatPoly {
    // f = q*d exactly by construction (d divides f)
    let dd = d.degree().unwrap();
    let fd = f.degree().unwrap();
    let lead = d.coeffs().last().unwrap().clone();
    let mut rem = f.coeffs().to_vec();
    let mut quot = vec![num_rational::BigRational::from_integer(0.into()); fd - dd + 1];
    for k in (0..=fd - dd).rev() {
        let q = &rem[k + dd] / &lead;
        for i in 0..=dd {
            let sub = &q * &d.coeffs()[i];
            rem[k + i] -= sub;
        }
        quot[k] = q;
    }
    RatPoly::from_coeffs(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_are_real_rooted() {
        assert!(real_rooted(&IntPoly::from_i64(&[1, 2, 1])).unwrap());
    }

    #[test]
    fn cyclotomic_is_not() {
        assert!(!real_rooted(&IntPoly::from_i64(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn eulerian_quadratic_is() {
        assert!(real_rooted(&IntPoly::from_i64(&[1, 4, 1])).unwrap());
    }

    #[test]
    fn monomial_factor_stripped() {
        assert!(real_rooted(&IntPoly::from_i64(&[0, 2])).unwrap());
        assert!(real_rooted(&IntPoly::from_i64(&[0, 0, 1, 1])).unwrap());
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(real_rooted(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn agrees_with_discriminant_on_quadratics() {
        for a in 1..6i64 {
            for b in -5..6i64 {
                for c in -5..6i64 {
                    let f = IntPoly::from_i64(&[c, b, a]);
                    let disc = b * b - 4 * a * c;
                    assert_eq!(real_rooted(&f).unwrap(), disc >= 0, "a={a} b={b} c={c}");
                }
            }
        }
    }
}

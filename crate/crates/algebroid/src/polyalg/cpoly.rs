//! Dense univariate polynomials over complex doubles.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::C64;

/// Polynomial in one complex variable, `coeffs[k]` multiplying `z^k`.
///
/// Invariant: the highest stored coefficient is nonzero unless the
/// polynomial is identically zero (empty coefficient vector).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CPoly {
    coeffs: Vec<C64>,
}

impl CPoly {
    pub fn new(coeffs: Vec<C64>) -> Self {
        let mut p = CPoly { coeffs };
        p.trim();
        p
    }

    /// Builds from `(re, im)` pairs, index = power of z.
    pub fn from_pairs(pairs: &[[f64; 2]]) -> Self {
        CPoly::new(pairs.iter().map(|p| C64::new(p[0], p[1])).collect())
    }

    pub fn zero() -> Self {
        CPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C64) -> Self {
        CPoly::new(vec![c])
    }

    pub fn one() -> Self {
        CPoly::constant(C64::new(1.0, 0.0))
    }

    /// The monomial `c * z^k`.
    pub fn monomial(c: C64, k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        CPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.re == 0.0 && last.im == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    /// Largest coefficient magnitude; 0 for the zero polynomial.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.norm()))
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Scale of the evaluation, `Σ |c_k| |z|^k`; used for relative residuals.
    pub fn eval_scale(&self, z: C64) -> f64 {
        let az = z.norm();
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * az + c.norm();
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        if self.coeffs.len() <= 1 {
            return CPoly::zero();
        }
        CPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * ((i + 1) as f64))
                .collect(),
        )
    }

    pub fn scale(&self, s: C64) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficients of `p(z + a)` (Taylor shift by repeated synthetic division).
    pub fn shift(&self, a: C64) -> CPoly {
        if self.is_zero() {
            return CPoly::zero();
        }
        let mut work = self.coeffs.clone();
        let n = work.len();
        let mut out = vec![C64::new(0.0, 0.0); n];
        for item in out.iter_mut() {
            // one synthetic division of `work` by (z - a): remainder is the
            // next Taylor coefficient, quotient replaces `work`
            let mut rem = C64::new(0.0, 0.0);
            for c in work.iter_mut().rev() {
                let t = *c + rem * a;
                rem = t;
                *c = t;
            }
            *item = work.remove(0);
            if work.is_empty() {
                break;
            }
        }
        CPoly::new(out)
    }

    /// Reversed coefficients, i.e. `z^n p(1/z)` for `n = deg p`.
    pub fn reversed(&self) -> CPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        CPoly::new(coeffs)
    }

    /// Drops trailing coefficients below `rel_tol` times the largest
    /// coefficient magnitude. Guards against degree inflation by round-off
    /// after long chains of polynomial arithmetic.
    pub fn truncate_noise(&self, rel_tol: f64) -> CPoly {
        let tol = rel_tol * self.max_coeff_norm();
        let mut coeffs = self.coeffs.clone();
        while let Some(last) = coeffs.last() {
            if last.norm() <= tol {
                coeffs.pop();
            } else {
                break;
            }
        }
        CPoly { coeffs }
    }

    /// Quotient of exact polynomial division.
    ///
    /// Fails with `InexactDivision` when the remainder is not negligible
    /// relative to the dividend, which signals corrupted coefficients.
    pub fn div_exact(&self, divisor: &CPoly) -> Result<CPoly> {
        let (q, r) = self.div_rem(divisor)?;
        let tol = 1e-8 * self.max_coeff_norm().max(1e-300);
        let rnorm = r.max_coeff_norm();
        if rnorm > tol {
            return Err(Error::InexactDivision { remainder_norm: rnorm });
        }
        Ok(q)
    }

    pub fn div_rem(&self, divisor: &CPoly) -> Result<(CPoly, CPoly)> {
        let d = divisor.degree().ok_or(Error::IdenticallyZero)?;
        let n = match self.degree() {
            None => return Ok((CPoly::zero(), CPoly::zero())),
            Some(n) if n < d => return Ok((CPoly::zero(), self.clone())),
            Some(n) => n,
        };
        let lead = divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C64::new(0.0, 0.0); n - d + 1];
        for k in (d..=n).rev() {
            let q = rem[k] / lead;
            quot[k - d] = q;
            for j in 0..=d {
                let t = divisor.coeffs[j] * q;
                rem[k - d + j] -= t;
            }
            rem[k] = C64::new(0.0, 0.0); // cancel exactly instead of leaving round-off
        }
        rem.truncate(d);
        Ok((CPoly::new(quot), CPoly::new(rem)))
    }

    /// Cauchy bound: every root has modulus below `1 + max |a_k / a_n|`.
    pub fn root_bound(&self) -> f64 {
        match self.degree() {
            None | Some(0) => 0.0,
            Some(n) => {
                let lead = self.coeffs[n].norm();
                let m = self.coeffs[..n].iter().fold(0.0, |m: f64, c| m.max(c.norm()));
                1.0 + m / lead
            }
        }
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i) + rhs.coeff(i);
        }
        CPoly::new(coeffs)
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        self + &(-rhs)
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        if self.is_zero() || rhs.is_zero() {
            return CPoly::zero();
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CPoly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn trim_and_degree() {
        let p = CPoly::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(CPoly::zero().degree(), None);
    }

    #[test]
    fn shift_matches_direct_eval() {
        let p = CPoly::from_pairs(&[[1.0, 0.0], [-2.0, 1.0], [0.0, 0.0], [3.0, -1.0]]);
        let a = c(0.7, -0.3);
        let q = p.shift(a);
        for &z in &[c(0.0, 0.0), c(1.0, 2.0), c(-0.5, 0.25)] {
            let d = (q.eval(z) - p.eval(z + a)).norm();
            assert!(d < 1e-12, "shift mismatch {d}");
        }
    }

    #[test]
    fn division_round_trip() {
        let a = CPoly::from_pairs(&[[2.0, 0.0], [0.0, 1.0], [1.0, 0.0]]);
        let b = CPoly::from_pairs(&[[-1.0, 0.5], [1.0, 0.0]]);
        let prod = &a * &b;
        let q = prod.div_exact(&b).unwrap();
        assert!((&q - &a).max_coeff_norm() < 1e-12);
    }

    #[test]
    fn inexact_division_detected() {
        let a = CPoly::from_pairs(&[[1.0, 0.0], [0.0, 0.0], [1.0, 0.0]]); // z^2 + 1
        let b = CPoly::from_pairs(&[[1.0, 0.0], [1.0, 0.0]]); // z + 1
        assert!(matches!(a.div_exact(&b), Err(Error::InexactDivision { .. })));
    }
}

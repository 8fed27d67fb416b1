//! Reduction between root multisets on the sphere and projective
//! coefficient tuples.
//!
//! A multiset `{w_1, ..., w_ν}` (∞ allowed) corresponds to the class
//! `[A_0 : ... : A_ν]` of the symmetric product `Π (e_1 - w_j e_0)`:
//! finite points contribute linear factors `w - w_j`, each ∞ contributes a
//! drop of the leading degree (a pure `e_0` factor).

use alloc::vec;
use alloc::vec::Vec;

use super::cpoly::CPoly;
use super::solve::{self, SolveOpts};
use super::types::SpherePoint;
use crate::error::{Error, Result};
use crate::C64;

/// Homogeneous coefficients `[A_0 : ... : A_ν]` of the multiset, ν =
/// `points.len()`, normalized so the largest-magnitude coefficient is 1.
pub fn reduce(points: &[SpherePoint]) -> Vec<C64> {
    let nu = points.len();
    let mut poly = CPoly::one();
    let mut infinite = 0usize;
    for p in points {
        match p {
            SpherePoint::Infinity => infinite += 1,
            SpherePoint::Finite(w) => {
                poly = &poly * &CPoly::new(vec![-w, C64::new(1.0, 0.0)]);
            }
        }
    }
    debug_assert_eq!(poly.degree(), Some(nu - infinite));
    let mut coeffs: Vec<C64> = (0..=nu).map(|k| poly.coeff(k)).collect();
    let (mut best, mut best_norm) = (C64::new(1.0, 0.0), 0.0);
    for &c in &coeffs {
        if c.norm() > best_norm {
            best_norm = c.norm();
            best = c;
        }
    }
    for c in coeffs.iter_mut() {
        *c /= best;
    }
    coeffs
}

/// Inverse of [`reduce`] up to multiset equality: the ν sphere points of a
/// projective tuple `[A_0 : ... : A_ν]`. Vanishing leading coefficients
/// produce ∞ entries, one per lost degree.
pub fn decompose(coeffs: &[C64], opts: &SolveOpts) -> Result<Vec<SpherePoint>> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidInput { detail: "tuple needs at least two entries" });
    }
    let nu = coeffs.len() - 1;
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
    if scale == 0.0 {
        return Err(Error::InvalidInput { detail: "all coefficients vanish" });
    }
    let mut top = coeffs.len();
    while top > 0 && coeffs[top - 1].norm() <= 1e-12 * scale {
        top -= 1;
    }
    let infinite = nu + 1 - top;
    let mut out = Vec::with_capacity(nu);
    if top > 1 {
        let mut finite = solve::roots(&CPoly::new(coeffs[..top].to_vec()), opts)?;
        solve::sort_canonical(&mut finite);
        out.extend(finite.into_iter().map(SpherePoint::Finite));
    }
    out.extend(core::iter::repeat(SpherePoint::Infinity).take(infinite));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_minus_one() {
        let pts = [SpherePoint::finite(1.0, 0.0), SpherePoint::finite(-1.0, 0.0)];
        let c = reduce(&pts);
        // w^2 - 1 -> [-1 : 0 : 1]
        assert!((c[0] - C64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!(c[1].norm() < 1e-15);
        assert!((c[2] - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn two_three() {
        let pts = [SpherePoint::finite(2.0, 0.0), SpherePoint::finite(3.0, 0.0)];
        let c = reduce(&pts);
        // w^2 - 5w + 6 -> [6 : -5 : 1], normalized by the entry 6
        let scale = c[0];
        assert!((c[1] / scale - C64::new(-5.0 / 6.0, 0.0)).norm() < 1e-15);
        assert!((c[2] / scale - C64::new(1.0 / 6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn all_poles() {
        let pts = [SpherePoint::Infinity, SpherePoint::Infinity];
        let c = reduce(&pts);
        assert!((c[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(c[1].norm() < 1e-15 && c[2].norm() < 1e-15);
        let back = decompose(&c, &SolveOpts::default()).unwrap();
        assert_eq!(back, pts);
    }

    #[test]
    fn decompose_six_minus_five_one() {
        let c = [C64::new(6.0, 0.0), C64::new(-5.0, 0.0), C64::new(1.0, 0.0)];
        let pts = decompose(&c, &SolveOpts::default()).unwrap();
        assert_eq!(pts.len(), 2);
        match (pts[0], pts[1]) {
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => {
                assert!((a - C64::new(2.0, 0.0)).norm() < 1e-10);
                assert!((b - C64::new(3.0, 0.0)).norm() < 1e-10);
            }
            _ => panic!("expected finite points"),
        }
    }
}

//! Divisor extraction: poles, a-points, and their multiplicities.

use alloc::vec::Vec;

use super::cpoly::CPoly;
use super::solve::{self, SolveOpts};
use super::types::{cluster_roots, AlgebroidEquation, Disc, Divisor1D, SpherePoint, CLUSTER_TOL};
use crate::error::{Error, Result};

/// Relative scale for "divisor point sits on the region boundary".
pub const BOUNDARY_TOL: f64 = 1e-9;

/// The pole divisor of `w` inside `region`: by the identity of divisors
/// `(w = ∞) = (A_ν = 0)`, these are exactly the zeros of the leading
/// coefficient, with multiplicities.
pub fn pole_divisor(eq: &AlgebroidEquation, region: Disc, opts: &SolveOpts) -> Result<Divisor1D> {
    zeros_in_region(eq.leading(), region, opts)
}

/// The a-point divisor `(w = a)` inside `region`. For finite `a` this is
/// the zero set of `ψ(·, a)` (for `a = 0`, of `A_0`); for `a = ∞` it
/// delegates to the pole divisor.
pub fn zero_divisor(
    eq: &AlgebroidEquation,
    a: SpherePoint,
    region: Disc,
    opts: &SolveOpts,
) -> Result<Divisor1D> {
    match a {
        SpherePoint::Infinity => pole_divisor(eq, region, opts),
        SpherePoint::Finite(a) => {
            let p = eq.value_poly(a);
            if p.is_zero() {
                return Err(Error::IdenticallyZero);
            }
            zeros_in_region(&p, region, opts)
        }
    }
}

/// Zeros of a polynomial inside a disc, clustered into multiplicities.
/// A cluster center within boundary tolerance of the circle is an error:
/// the enclosed count would be ill conditioned.
pub fn zeros_in_region(p: &CPoly, region: Disc, opts: &SolveOpts) -> Result<Divisor1D> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if p.degree() == Some(0) {
        return Ok(Divisor1D::empty());
    }
    let all = solve::roots(p, opts)?;
    let clustered = cluster_roots(&all, CLUSTER_TOL);
    let tol = BOUNDARY_TOL * (1.0 + region.radius);
    let mut entries = Vec::new();
    for (z, mult) in clustered.entries {
        let bd = region.boundary_distance(z);
        if bd.abs() < tol {
            return Err(Error::RootOnBoundary { point: z });
        }
        if bd < 0.0 {
            entries.push((z, mult));
        }
    }
    Ok(Divisor1D { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;
    use alloc::vec;

    fn disc(r: f64) -> Disc {
        Disc::origin(r)
    }

    fn sqrt_z() -> AlgebroidEquation {
        AlgebroidEquation::new(
            vec![
                CPoly::from_pairs(&[[0.0, 0.0], [-1.0, 0.0]]),
                CPoly::zero(),
                CPoly::one(),
            ],
            "w^2 - z",
        )
        .unwrap()
    }

    #[test]
    fn pole_divisor_of_z_w2_minus_1() {
        // z w^2 - 1: A_2 = z, single pole point at 0
        let eq = AlgebroidEquation::new(
            vec![
                CPoly::constant(C64::new(-1.0, 0.0)),
                CPoly::zero(),
                CPoly::from_pairs(&[[0.0, 0.0], [1.0, 0.0]]),
            ],
            "z w^2 - 1",
        )
        .unwrap();
        let d = pole_divisor(&eq, disc(2.0), &SolveOpts::default()).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert!(d.entries[0].0.norm() < 1e-12);
        assert_eq!(d.entries[0].1, 1);
    }

    #[test]
    fn sqrt_z_divisors() {
        let eq = sqrt_z();
        assert!(pole_divisor(&eq, disc(2.0), &SolveOpts::default()).unwrap().entries.is_empty());
        let d0 = zero_divisor(&eq, SpherePoint::finite(0.0, 0.0), disc(2.0), &SolveOpts::default())
            .unwrap();
        assert_eq!(d0.entries, vec![(C64::new(0.0, 0.0), 1)]);
        let d1 = zero_divisor(&eq, SpherePoint::finite(1.0, 0.0), disc(2.0), &SolveOpts::default())
            .unwrap();
        assert_eq!(d1.entries.len(), 1);
        assert!((d1.entries[0].0 - C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(zero_divisor(&eq, SpherePoint::Infinity, disc(2.0), &SolveOpts::default())
            .unwrap()
            .entries
            .is_empty());
    }

    #[test]
    fn factored_leading_coefficient() {
        // (z^2 - 1) w^2 - z: poles at +1 and -1
        let eq = AlgebroidEquation::new(
            vec![
                CPoly::from_pairs(&[[0.0, 0.0], [-1.0, 0.0]]),
                CPoly::zero(),
                CPoly::from_pairs(&[[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]]),
            ],
            "(z^2-1) w^2 - z",
        )
        .unwrap();
        let d = pole_divisor(&eq, disc(2.0), &SolveOpts::default()).unwrap();
        assert_eq!(d.entries.len(), 2);
        assert!((d.entries[0].0 - C64::new(-1.0, 0.0)).norm() < 1e-10);
        assert!((d.entries[1].0 - C64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn boundary_root_is_an_error() {
        let eq = sqrt_z();
        let r = zero_divisor(&eq, SpherePoint::finite(1.0, 0.0), disc(1.0), &SolveOpts::default());
        assert!(matches!(r, Err(Error::RootOnBoundary { .. })));
    }
}

//! Defining data of an algebroid function and the value-side containers.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Float;

use super::cpoly::CPoly;
use super::solve::{self, SolveOpts};
use crate::error::{Error, Result};
use crate::C64;

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SpherePoint {
    Finite(C64),
    Infinity,
}

impl SpherePoint {
    pub fn finite(re: f64, im: f64) -> Self {
        SpherePoint::Finite(C64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    /// Chordal distance on the sphere, bounded by 1, infinity-safe.
    pub fn chordal(&self, other: &SpherePoint) -> f64 {
        match (self, other) {
            (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
            (SpherePoint::Finite(a), SpherePoint::Infinity)
            | (SpherePoint::Infinity, SpherePoint::Finite(a)) => {
                1.0 / (1.0 + a.norm_sqr()).sqrt()
            }
            (SpherePoint::Finite(a), SpherePoint::Finite(b)) => {
                (a - b).norm() / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt()
            }
        }
    }
}

/// Open disc `|z - center| < radius` used as the working region.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Disc {
    pub center: C64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: C64, radius: f64) -> Self {
        Disc { center, radius }
    }

    pub fn origin(radius: f64) -> Self {
        Disc { center: C64::new(0.0, 0.0), radius }
    }

    pub fn contains(&self, z: C64) -> bool {
        (z - self.center).norm() < self.radius
    }

    /// Signed distance from the boundary circle (negative inside).
    pub fn boundary_distance(&self, z: C64) -> f64 {
        (z - self.center).norm() - self.radius
    }
}

/// Defining equation `A_ν(z) w^ν + ... + A_0(z) = 0` of a ν-valued
/// algebroid function. `a[j]` stores the coefficient of `w^j`.
///
/// Construction enforces `A_ν` not identically zero and rejects an obvious
/// common zero of all coefficients (the one-variable form of "coefficients
/// without common zeros"). Whether the equation is irreducible is certified
/// or refuted downstream by monodromy transitivity and recorded here.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AlgebroidEquation {
    nu: usize,
    a: Vec<CPoly>,
    pub label: String,
    pub irreducibility: Irreducibility,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Irreducibility {
    Certified,
    Refuted,
    Unknown,
}

impl AlgebroidEquation {
    pub fn new(a: Vec<CPoly>, label: impl Into<String>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidInput { detail: "need at least A_0 and A_1" });
        }
        let nu = a.len() - 1;
        if a[nu].is_zero() {
            return Err(Error::InvalidInput { detail: "A_nu must not vanish identically" });
        }
        let eq = AlgebroidEquation {
            nu,
            a,
            label: label.into(),
            irreducibility: Irreducibility::Unknown,
        };
        eq.check_no_common_zero()?;
        Ok(eq)
    }

    /// Sheet count ν.
    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Coefficient polynomials `A_0 ..= A_ν`.
    pub fn coeffs(&self) -> &[CPoly] {
        &self.a
    }

    pub fn a(&self, j: usize) -> &CPoly {
        &self.a[j]
    }

    pub fn leading(&self) -> &CPoly {
        &self.a[self.nu]
    }

    /// A common polynomial factor of all `A_j` would show up as a common
    /// complex zero; check the zeros of the lowest-degree nonzero
    /// coefficient against the rest.
    fn check_no_common_zero(&self) -> Result<()> {
        let probe = self
            .a
            .iter()
            .filter(|p| !p.is_zero())
            .min_by_key(|p| p.degree().unwrap_or(0))
            .expect("A_nu nonzero");
        if probe.degree() == Some(0) {
            return Ok(());
        }
        let zeros = solve::roots(probe, &SolveOpts::default())?;
        'outer: for z in zeros {
            for p in self.a.iter().filter(|p| !p.is_zero()) {
                let v = p.eval(z).norm();
                if v > 1e-9 * p.eval_scale(z).max(1e-300) {
                    continue 'outer;
                }
            }
            return Err(Error::CommonFactor { point: z });
        }
        Ok(())
    }

    /// `ψ(z, w) = Σ_j A_j(z) w^j` with compensated (Kahan) summation of
    /// the ν+1 terms. Overflow saturates to IEEE infinities.
    pub fn eval_psi(&self, z: C64, w: C64) -> C64 {
        let mut sum = C64::new(0.0, 0.0);
        let mut comp = C64::new(0.0, 0.0);
        let mut wp = C64::new(1.0, 0.0);
        for (j, aj) in self.a.iter().enumerate() {
            if j > 0 {
                wp *= w;
            }
            let term = aj.eval(z) * wp;
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        sum
    }

    /// Scale companion to `eval_psi` for relative residual tests.
    pub fn psi_scale(&self, z: C64, w: C64) -> f64 {
        let aw = w.norm();
        let mut wp = 1.0;
        let mut acc = 0.0;
        for (j, aj) in self.a.iter().enumerate() {
            if j > 0 {
                wp *= aw;
            }
            acc += aj.eval_scale(z) * wp;
        }
        acc
    }

    /// `ψ(z, ·)` as a polynomial in `w` at fixed `z`.
    pub fn fiber_poly(&self, z: C64) -> CPoly {
        CPoly::new(self.a.iter().map(|p| p.eval(z)).collect())
    }

    /// `ψ(·, a)` as a polynomial in `z` at fixed finite value `a`.
    pub fn value_poly(&self, a: C64) -> CPoly {
        let mut acc = CPoly::zero();
        let mut ap = C64::new(1.0, 0.0);
        for (j, pj) in self.a.iter().enumerate() {
            if j > 0 {
                ap *= a;
            }
            acc = &acc + &pj.scale(ap);
        }
        acc
    }

    /// Equation satisfied by `u = 1/w`: coefficient order reversed.
    pub fn reciprocal(&self, label: impl Into<String>) -> Result<AlgebroidEquation> {
        let mut rev = self.a.clone();
        rev.reverse();
        AlgebroidEquation::new(rev, label)
    }

    /// Root multiset of `ψ(z, ·) = 0`. A drop of the `w`-degree at `z`
    /// (leading coefficients vanishing) is returned as infinite roots, one
    /// per lost degree: the sheets there run through the pole divisor.
    pub fn roots_at(&self, z: C64, opts: &SolveOpts) -> Result<RootSet> {
        let fiber = self.fiber_poly(z);
        let coeffs = fiber.coeffs();
        let scale = fiber.max_coeff_norm();
        if scale == 0.0 {
            return Err(Error::IdenticallyZero);
        }
        let mut top = coeffs.len();
        while top > 0 && coeffs[top - 1].norm() <= 1e-12 * scale {
            top -= 1;
        }
        let infinite = self.nu + 1 - top;
        let mut finite = Vec::new();
        if top > 1 {
            let reduced = CPoly::new(coeffs[..top].to_vec());
            finite = solve::roots(&reduced, opts)?;
            solve::sort_canonical(&mut finite);
        }
        Ok(RootSet { point: z, finite, infinite })
    }
}

/// The ν solution values at one point, canonically sorted; infinite roots
/// are carried as a count.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RootSet {
    pub point: C64,
    pub finite: Vec<C64>,
    pub infinite: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.finite.len() + self.infinite
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sphere_points(&self) -> Vec<SpherePoint> {
        let mut v: Vec<SpherePoint> = self.finite.iter().map(|&z| SpherePoint::Finite(z)).collect();
        v.extend(core::iter::repeat(SpherePoint::Infinity).take(self.infinite));
        v
    }

    /// Largest relative residual of the finite roots in the fiber equation.
    pub fn max_residual(&self, eq: &AlgebroidEquation) -> f64 {
        self.finite
            .iter()
            .map(|&w| eq.eval_psi(self.point, w).norm() / eq.psi_scale(self.point, w).max(1e-300))
            .fold(0.0, f64::max)
    }

    /// Optimal-assignment chordal distance to another multiset of the same
    /// total size (these stay tiny, so cubic search is fine).
    pub fn multiset_distance(&self, other: &RootSet) -> f64 {
        let a = self.sphere_points();
        let b = other.sphere_points();
        assert_eq!(a.len(), b.len(), "multisets must have equal size");
        let (_, total) = crate::polyalg::assign::min_cost_assignment(&a, &b);
        total
    }
}

/// Divisor on the plane: distinct locations with positive multiplicities.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Divisor1D {
    pub entries: Vec<(C64, usize)>,
}

impl Divisor1D {
    pub fn empty() -> Self {
        Divisor1D { entries: Vec::new() }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Simple support: every multiplicity replaced by one.
    pub fn support(&self) -> Divisor1D {
        Divisor1D { entries: self.entries.iter().map(|&(z, _)| (z, 1)).collect() }
    }
}

/// Clusters a root list into divisor entries by union-find on pairwise
/// distance below `tol_scale * (1 + |z|)`; multiplicity = cluster size and
/// location = cluster mean.
pub fn cluster_roots(roots: &[C64], tol_scale: f64) -> Divisor1D {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let tol = tol_scale * (1.0 + roots[i].norm().max(roots[j].norm()));
            if (roots[i] - roots[j]).norm() < tol {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut entries: Vec<(C64, usize)> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        if let Some(idx) = reps.iter().position(|&x| x == r) {
            let (sum, count) = (entries[idx].0 * entries[idx].1 as f64 + roots[i], entries[idx].1 + 1);
            entries[idx] = (sum / count as f64, count);
        } else {
            reps.push(r);
            entries.push((roots[i], 1));
        }
    }
    entries.sort_by(|a, b| {
        a.0.re
            .partial_cmp(&b.0.re)
            .unwrap()
            .then_with(|| a.0.im.partial_cmp(&b.0.im).unwrap())
    });
    Divisor1D { entries }
}

/// Default clustering scale used crate-wide.
pub const CLUSTER_TOL: f64 = 1e-6;

//! Polynomial algebra of algebroid equations: evaluation, root solving,
//! resultants and discriminants, Vieta identities, divisor extraction, and
//! the symmetric-product reduction between root multisets and coefficient
//! tuples.

pub mod assign;
mod cpoly;
mod divisor;
mod reduce;
mod resultant;
mod solve;
mod types;

pub use cpoly::CPoly;
pub use divisor::{pole_divisor, zero_divisor, zeros_in_region, BOUNDARY_TOL};
pub use reduce::{decompose, reduce};
pub use resultant::{discriminant, sylvester_resultant, vieta_products};
pub use solve::{roots, sort_canonical, SolveOpts};
pub use types::{
    cluster_roots, AlgebroidEquation, Disc, Divisor1D, Irreducibility, RootSet, SpherePoint,
    CLUSTER_TOL,
};

use crate::C64;

/// `ψ(z, w) = Σ_j A_j(z) w^j`, compensated summation over the terms.
pub fn eval_psi(eq: &AlgebroidEquation, z: C64, w: C64) -> C64 {
    eq.eval_psi(z, w)
}

/// Root multiset of `ψ(z, ·) = 0`, degree drops reported as infinite roots.
pub fn roots_at(
    eq: &AlgebroidEquation,
    z: C64,
    opts: &SolveOpts,
) -> crate::error::Result<RootSet> {
    eq.roots_at(z, opts)
}

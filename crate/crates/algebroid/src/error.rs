//! Crate-wide error type.

use core::fmt;

use crate::C64;

/// Errors reported by the numerical and combinatorial operations.
///
/// Every variant carries enough context to locate the offending input;
/// callers that can recover (e.g. by jittering a quadrature node or moving
/// the reference point) do so explicitly, never silently.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Error {
    /// The simultaneous root iteration failed to reach tolerance.
    SolverDiverged { point: C64 },
    /// The leading coefficient vanishes at the requested point.
    PoleAtPoint { point: C64 },
    /// A divisor point lies within tolerance of the region boundary,
    /// making the enclosed count ill conditioned.
    RootOnBoundary { point: C64 },
    /// The polynomial whose zeros were requested is identically zero.
    IdenticallyZero,
    /// Polynomial division left a remainder above tolerance.
    InexactDivision { remainder_norm: f64 },
    /// The coefficient polynomials share a common zero.
    CommonFactor { point: C64 },
    /// A tracking path comes closer to a critical point than the clearance.
    PathTooClose { point: C64, critical: C64 },
    /// Root matching between consecutive tracking steps became ambiguous.
    TrackingAmbiguous { point: C64 },
    /// Two critical points are too close to receive disjoint loops.
    CriticalPointsTooClose { a: C64, b: C64 },
    /// No branch locus of the expression passes through the query point.
    NotABranchPoint,
    /// A divisor point coincides with the reference point of the domain.
    ValueAtReference { point: C64 },
    /// A quadrature node sits on a critical point even after jittering.
    BoundaryHitsCritical { node: C64 },
    /// The ring fit for Puiseux coefficients is ill conditioned.
    FitIllConditioned { detail: &'static str },
    /// The volume profile has a divergent tail integral (parabolic case).
    ParabolicProfile,
    /// A structural precondition on the input data failed.
    InvalidInput { detail: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SolverDiverged { point } => {
                write!(f, "root iteration diverged at z = {point}")
            }
            Error::PoleAtPoint { point } => {
                write!(f, "leading coefficient vanishes at z = {point}")
            }
            Error::RootOnBoundary { point } => {
                write!(f, "divisor point {point} lies on the region boundary")
            }
            Error::IdenticallyZero => write!(f, "polynomial is identically zero"),
            Error::InexactDivision { remainder_norm } => {
                write!(f, "polynomial division left remainder of norm {remainder_norm:e}")
            }
            Error::CommonFactor { point } => {
                write!(f, "coefficients share a common zero near z = {point}")
            }
            Error::PathTooClose { point, critical } => {
                write!(f, "path point {point} violates clearance of critical point {critical}")
            }
            Error::TrackingAmbiguous { point } => {
                write!(f, "root matching ambiguous near z = {point}")
            }
            Error::CriticalPointsTooClose { a, b } => {
                write!(f, "critical points {a} and {b} are too close for disjoint loops")
            }
            Error::NotABranchPoint => write!(f, "query point lies on no branch locus"),
            Error::ValueAtReference { point } => {
                write!(f, "divisor point {point} coincides with the reference point")
            }
            Error::BoundaryHitsCritical { node } => {
                write!(f, "quadrature node {node} hits a critical point")
            }
            Error::FitIllConditioned { detail } => write!(f, "ring fit ill conditioned: {detail}"),
            Error::ParabolicProfile => {
                write!(f, "volume profile is parabolic: tail integral of t/V(t) diverges")
            }
            Error::InvalidInput { detail } => write!(f, "invalid input: {detail}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

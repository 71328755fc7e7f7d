//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The requested point sits on a pole (gamma pole, ζ(1), log of 0, …).
    #[error("pole or singularity: {0}")]
    Pole(String),

    /// Input outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Stokes-sector form was called with the phase lying on a Stokes line
    /// (or vice versa); the caller must switch to the line form.
    #[error("phase lies on a Stokes line (theta/pi = {theta_over_pi}); use the line form")]
    OnStokesLine { theta_over_pi: f64 },

    /// Quadrature refinement stalled before reaching the tail bound.
    #[error("quadrature failed: {message} (est_error = {est_error:.3e})")]
    QuadratureFailure { message: String, est_error: f64 },

    /// The Mellin-Barnes integrand grows at the truncation heights, so the
    /// contour representation is invalid at this phase.
    #[error("MB form invalid at this phase (theta/pi = {theta_over_pi})")]
    MbPhaseInvalid { theta_over_pi: f64 },

    /// A series or continued fraction did not converge within its cap.
    #[error("did not converge: {0}")]
    NonConvergence(String),
}

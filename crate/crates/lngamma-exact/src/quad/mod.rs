//! Quadrature machinery: double-exponential rules on finite and
//! semi-infinite intervals, symmetric-excision principal-value integrals,
//! vertical-line (Mellin-Barnes) panel integration, and a composite
//! Gauss-Laguerre alternative.
//!
//! Integrand closures receive the abscissa as an MPFR real and must compute
//! at the precision of that argument (`t.prec()`); the principal-value
//! driver raises precision internally and relies on this convention.

mod de;
mod laguerre;
mod pv;
mod vertical;

pub use de::{exp_sinh, tanh_sinh};
pub use laguerre::gauss_laguerre_composite;
pub use pv::pv_semi_infinite;
pub use vertical::vertical_line_sum;

use crate::precision::PrecisionContext;

/// Quadrature scheme selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    DoubleExponential,
    GaussLaguerreComposite,
}

/// Scheme parameters for the semi-infinite, principal-value and
/// vertical-line integrals.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    pub max_nodes: usize,
    /// Absolute bound the truncated tails must reach.
    pub abs_tail_bound: f64,
    /// Half-width of the symmetric excision around a principal-value pole.
    pub pv_window: f64,
}

impl QuadratureSpec {
    /// Defaults tied to a context: tail bound 10^-(working+2), excision
    /// half-width 10^-(working/4).
    pub fn for_ctx(ctx: &PrecisionContext) -> Self {
        let w = ctx.working_digits();
        QuadratureSpec {
            scheme: Scheme::DoubleExponential,
            max_nodes: 400_000,
            abs_tail_bound: ctx.eps(2),
            pv_window: 10f64.powf(-(w as f64) / 4.0),
        }
    }

    pub fn validate(&self) -> bool {
        self.max_nodes >= 64 && self.abs_tail_bound > 0.0 && self.pv_window > 0.0
    }
}

/// Outcome of one quadrature: value, a-posteriori error estimate
/// (difference of successive refinement levels, not a rigorous bound),
/// node count, and whether refinement stalled before the tolerance.
#[derive(Debug, Clone)]
pub struct QuadOutcome {
    pub value: crate::precision::HPComplex,
    pub est_error: f64,
    pub nodes: usize,
    pub stalled: bool,
}

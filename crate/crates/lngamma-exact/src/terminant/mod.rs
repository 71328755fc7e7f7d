//! The regularisation engine.
//!
//! A generalised Type I terminant is the divergent tail
//!
//!   S^I_{p,q}(N, z^β) = Σ_{k≥N} Γ(pk+q)·(−z^β)^k.
//!
//! Borel summation swaps the gamma-function integral with the sum and
//! replaces the geometric series by its regularised value, leaving a
//! Cauchy integral whose singularity structure carries the whole Stokes
//! phenomenon: inside the primary sector the integral alone is the
//! regularised value; each line crossing adds a closed-form subdominant
//! exponential (the jump); on a line the integral becomes a principal
//! value plus a half-weight residue. The same values come independently
//! from a Mellin-Barnes contour integral, which this module also provides.

mod borel;
mod jump;
mod mb;
mod series;

pub use borel::{terminant_line, terminant_primary, terminant_sector};
pub use jump::terminant_jump;
pub use mb::{mb_exponential, terminant_mb};
pub use series::{geometric_regularised, log_series_regularised};

use crate::precision::HPComplex;

/// The tuple (p, q, β, N) defining S^I_{p,q}(N, z^β).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TerminantSpec {
    pub p: f64,
    pub q: f64,
    pub beta: f64,
    pub n: i64,
}

impl TerminantSpec {
    pub fn new(p: f64, q: f64, beta: f64, n: i64) -> Self {
        let s = TerminantSpec { p, q, beta, n };
        assert!(s.is_valid(), "need p>0, beta>0, N>=1 and p·N+q > 0");
        s
    }

    /// p > 0, β > 0, N ≥ 1 and Re(pN+q) > 0 (convergence of the Borel
    /// integral at the origin).
    pub fn is_valid(&self) -> bool {
        self.p > 0.0 && self.beta > 0.0 && self.n >= 1 && self.p * self.n as f64 + self.q > 0.0
    }
}

/// Which algorithm produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Borel,
    Mb,
    JumpClosedForm,
    DirectSum,
}

/// Computed value with method tag, a-posteriori error estimate and
/// diagnostics. The estimate is a difference of refinement levels, not a
/// rigorous bound; warnings are non-empty whenever refinement stalled.
#[derive(Debug, Clone)]
pub struct EvalReport {
    pub value: HPComplex,
    pub method: Method,
    pub est_error: f64,
    pub nodes_used: usize,
    pub terms_used: usize,
    pub warnings: Vec<String>,
}

impl EvalReport {
    pub fn new(value: HPComplex, method: Method) -> Self {
        EvalReport {
            value,
            method,
            est_error: 0.0,
            nodes_used: 0,
            terms_used: 0,
            warnings: Vec::new(),
        }
    }
}

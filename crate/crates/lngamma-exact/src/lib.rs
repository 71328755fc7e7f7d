//! Arbitrary-precision evaluation of ln Γ(z) from its complete Stirling
//! expansion.
//!
//! The divergent tail of the Stirling series is regularised rather than
//! truncated: the tail is an infinite sum of generalised Type I terminants
//! Σ_{k≥N} Γ(pk+q)(−z^β)^k, and the [`terminant`] module computes their
//! regularised values by Borel-summed Cauchy integrals (with explicit
//! step-function Stokes jumps), by the closed-form jump, and by
//! Mellin-Barnes contour quadrature. The [`stirling`] module assembles
//! ln Γ(z) = F(z) + TS_N(z) + remainder (+ Stokes discontinuity) and
//! cross-checks three independent remainder routes: Borel, Mellin-Barnes
//! and an incomplete-gamma sum.
//!
//! Everything is carried by [`precision::HPComplex`], a pair of MPFR reals
//! at an explicit working precision, so results can be requested to any
//! number of decimal digits (30 or more is routine).
//!
//! ```
//! use lngamma_exact::precision::{PolarPoint, PrecisionContext};
//! use lngamma_exact::stirling::{lngamma_asymptotic, Method, StirlingRequest};
//!
//! let ctx = PrecisionContext::new(30);
//! let z = PolarPoint::from_f64(3.0, 0.0, &ctx); // Γ(3) = 2
//! let req = StirlingRequest::new(z, ctx).with_method(Method::Borel);
//! let out = lngamma_asymptotic(&req).unwrap();
//! let ln2 = out.value.re.to_f64();
//! assert!((ln2 - 2f64.ln()).abs() < 1e-14);
//! ```

pub mod error;
pub mod precision;
pub mod quad;
pub mod special;
pub mod stirling;
pub mod terminant;

pub use error::{Error, Result};
pub use precision::{HPComplex, PolarPoint, PrecisionContext, SectorLocation};

//! Building-block special functions: even-index Bernoulli numbers, cosecant
//! polynomials at unity, Riemann zeta for complex argument, the upper
//! incomplete gamma function, the error function, and an independent ln Γ
//! reference oracle (recurrence + optimally truncated Stirling series; no
//! terminants, no contour integrals).

mod bernoulli;
mod erf;
mod incgamma;
mod lngamma_ref;
mod zeta;

pub use bernoulli::{
    bernoulli_even, bernoulli_even_rational, cosecant_poly_unity, cosecant_poly_unity_rational,
    EXACT_BERNOULLI_CAP,
};
pub use erf::erf_hp;
pub use incgamma::upper_incomplete_gamma;
pub use lngamma_ref::{gamma_ref, lngamma_reference};
pub use zeta::zeta;

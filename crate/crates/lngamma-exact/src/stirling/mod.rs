//! Assembly of ln Γ(z) from the complete Stirling expansion:
//!
//!   ln Γ(z) = F(z) + TS_N(z) + remainder (+ Stokes-discontinuity term),
//!
//! where F is the standard Stirling approximation, TS_N the truncated
//! algebraic series, and the remainder the regularised value of the
//! divergent tail computed by one of three independent routes (Borel-summed
//! integrals, a Mellin-Barnes contour, or an incomplete-gamma sum). For
//! π/2 < θ ≤ π the subdominant exponentials switch on as the explicit SD
//! term −ln(1 − e^{2πiz}); on the line θ = π/2 the Borel route takes the
//! principal-value form with the half-weight SD. The lower half-plane is
//! evaluated by Schwarz reflection.

mod paris;
mod remainder;
mod series;
mod stokes;

pub use paris::paris_remainder;
pub use remainder::{borel_remainder, borel_remainder_line};
pub use series::{optimal_truncation, stirling_f, truncated_series};
pub use stokes::{
    conventional_multiplier, smoothed_multiplier, stokes_discontinuity, OmegaRule, SdWeight,
};

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{HPComplex, PolarPoint, PrecisionContext};
use crate::quad::QuadratureSpec;
use crate::special::lngamma_reference;
use crate::terminant::EvalReport;

/// Remainder route for the assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Borel,
    Mb,
    ParisGamma,
}

/// One ln Γ evaluation request. `n_trunc = None` selects the optimal
/// truncation ceil(π|z|).
#[derive(Debug, Clone)]
pub struct StirlingRequest {
    pub z: PolarPoint,
    pub n_trunc: Option<i64>,
    pub method: Method,
    pub n_sum_cap: usize,
    pub ctx: PrecisionContext,
}

impl StirlingRequest {
    pub fn new(z: PolarPoint, ctx: PrecisionContext) -> Self {
        StirlingRequest {
            z,
            n_trunc: None,
            method: Method::Borel,
            n_sum_cap: 100_000,
            ctx,
        }
    }
    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }
    pub fn with_truncation(mut self, n: i64) -> Self {
        assert!(n >= 1);
        self.n_trunc = Some(n);
        self
    }
    pub fn with_n_sum_cap(mut self, cap: usize) -> Self {
        self.n_sum_cap = cap;
        self
    }
}

/// The four assembly components; the value is their exact sum.
#[derive(Debug, Clone)]
pub struct LnGammaComponents {
    pub stirling_f: HPComplex,
    pub truncated_series: HPComplex,
    pub remainder: HPComplex,
    pub stokes_discontinuity: HPComplex,
}

#[derive(Debug, Clone)]
pub struct LnGammaResult {
    pub value: HPComplex,
    pub components: LnGammaComponents,
    pub report: EvalReport,
}

/// Largest |TS_N| term in decimal digits, used to size the cancellation
/// guard: at small |z| the truncated terms grow huge and cancel against
/// the remainder.
fn cancellation_digits(modulus: f64, n: i64) -> u32 {
    let mut worst: f64 = 0.0;
    for k in 1..n.max(2) {
        let kf = k as f64;
        // log10 |z·(2z)^{−2k}·Γ(2k−1)·c_k(1)|, with |c_k(1)| = 2ζ(2k)/π^{2k}
        let lg = modulus.log10() - 2.0 * kf * (2.0 * modulus).log10()
            + ln_gamma_f64(2.0 * kf - 1.0) * std::f64::consts::LOG10_E
            + (2.0f64).log10()
            - 2.0 * kf * std::f64::consts::PI.log10();
        worst = worst.max(lg);
    }
    worst.max(0.0).ceil() as u32
}

fn ln_gamma_f64(x: f64) -> f64 {
    // Stirling with a few corrections; only used to size precision raises.
    if x < 8.0 {
        return ln_gamma_f64(x + 1.0) - x.ln();
    }
    let inv = 1.0 / x;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + inv / 12.0
        - inv.powi(3) / 360.0
}

fn conj_result(r: LnGammaResult) -> LnGammaResult {
    LnGammaResult {
        value: r.value.conj(),
        components: LnGammaComponents {
            stirling_f: r.components.stirling_f.conj(),
            truncated_series: r.components.truncated_series.conj(),
            remainder: r.components.remainder.conj(),
            stokes_discontinuity: r.components.stokes_discontinuity.conj(),
        },
        report: r.report,
    }
}

/// ln Γ(z) from the regularised complete expansion, θ ∈ (−π, π].
pub fn lngamma_asymptotic(req: &StirlingRequest) -> Result<LnGammaResult> {
    let ctx = &req.ctx;
    let theta = req.z.theta.to_f64();
    if theta <= -std::f64::consts::PI - 1e-15 || theta > std::f64::consts::PI + 1e-15 {
        return Err(Error::Domain(
            "assembly is specified for theta in (-pi, pi]".into(),
        ));
    }
    // Γ poles: non-positive real integers (θ = π with integer modulus; 0 is
    // excluded by modulus > 0)
    let pi_f = ctx.pi();
    let on_negative_axis = (req.z.theta.clone() - &pi_f).abs().to_f64() < ctx.eps(-6);
    if on_negative_axis {
        let m = req.z.modulus.to_f64();
        if (m - m.round()).abs() < ctx.eps(-6) {
            return Err(Error::Pole(format!("Gamma pole at z = -{}", m.round())));
        }
    }

    // Lower half-plane (θ < −π/2 and the lower line): Schwarz reflection.
    // The direct forms cover (−π/2, π] only.
    let half_pi = std::f64::consts::FRAC_PI_2;
    if theta < -half_pi + 1e-18 {
        let creq = StirlingRequest {
            z: req.z.conj(),
            n_trunc: req.n_trunc,
            method: req.method,
            n_sum_cap: req.n_sum_cap,
            ctx: ctx.clone(),
        };
        return Ok(conj_result(lngamma_asymptotic(&creq)?));
    }

    let n = req
        .n_trunc
        .unwrap_or_else(|| optimal_truncation(req.z.modulus.to_f64()));

    // Size the working precision to the cancellation between TS_N and the
    // remainder (dominant at small |z|).
    let extra = cancellation_digits(req.z.modulus.to_f64(), n) + 5;
    let eval_ctx = ctx.with_extra(extra);
    let z_hi = PolarPoint::new(
        eval_ctx.float_from(&req.z.modulus),
        eval_ctx.float_from(&req.z.theta),
    );
    let quad = QuadratureSpec::for_ctx(&eval_ctx);

    // Stokes-line test at the working tolerance: exact θ = π/2 takes the
    // principal-value route.
    let line_dist = (z_hi.theta.clone() - eval_ctx.pi() / 2u32).abs();
    let on_line = line_dist.to_f64() < eval_ctx.eps(0) * 10.0;

    let f_term = stirling_f(&z_hi, &eval_ctx)?;
    let ts = truncated_series(&z_hi, n, &eval_ctx);

    let (rem_report, sd): (EvalReport, HPComplex) = if on_line {
        match req.method {
            Method::Borel => {
                let r = borel_remainder_line(
                    &z_hi.modulus,
                    n,
                    0,
                    req.n_sum_cap,
                    &quad,
                    &eval_ctx,
                )?;
                let sd = stokes_discontinuity(&z_hi, 0, SdWeight::Half, &eval_ctx)?;
                (r, sd)
            }
            Method::Mb => {
                // the contour remainder is the full analytic function: no SD
                let r = remainder::mb_remainder(&z_hi, n, &quad, &eval_ctx)?;
                (r, eval_ctx.zero())
            }
            Method::ParisGamma => {
                // principal-branch incomplete gammas give the upper-side
                // limit on the cut; the full SD restores ln Γ
                let r = paris_remainder(&z_hi, n, req.n_sum_cap, &eval_ctx)?;
                let sd = stokes_discontinuity(&z_hi, 0, SdWeight::Full, &eval_ctx)?;
                (r, sd)
            }
        }
    } else {
        let above = theta > half_pi;
        match req.method {
            Method::Borel => {
                let r = borel_remainder(&z_hi, n, 0, req.n_sum_cap, &quad, &eval_ctx)?;
                let sd = if above {
                    stokes_discontinuity(&z_hi, 0, SdWeight::Full, &eval_ctx)?
                } else {
                    eval_ctx.zero()
                };
                (r, sd)
            }
            Method::Mb => {
                let r = remainder::mb_remainder(&z_hi, n, &quad, &eval_ctx)?;
                (r, eval_ctx.zero())
            }
            Method::ParisGamma => {
                let r = paris_remainder(&z_hi, n, req.n_sum_cap, &eval_ctx)?;
                let sd = if above {
                    stokes_discontinuity(&z_hi, 0, SdWeight::Full, &eval_ctx)?
                } else {
                    eval_ctx.zero()
                };
                (r, sd)
            }
        }
    };

    let value = &(&(&f_term + &ts) + &rem_report.value) + &sd;
    let round = |v: &HPComplex| {
        HPComplex::new(ctx.float_from(&v.re), ctx.float_from(&v.im))
    };
    let mut report = rem_report.clone();
    report.value = round(&rem_report.value);
    Ok(LnGammaResult {
        value: round(&value),
        components: LnGammaComponents {
            stirling_f: round(&f_term),
            truncated_series: round(&ts),
            remainder: round(&rem_report.value),
            stokes_discontinuity: round(&sd),
        },
        report,
    })
}

/// Difference against the independent reference oracle, as a decimal-digit
/// agreement count (min over real and imaginary parts).
pub fn digits_vs_reference(result: &LnGammaResult, z: &PolarPoint, ctx: &PrecisionContext) -> Result<u32> {
    let zc = z.to_cartesian();
    let reference = lngamma_reference(&zc, ctx)?;
    Ok(digits_agree(&result.value, &reference))
}

/// Decimal digits on which a and b agree (component-wise minimum, measured
/// relative to b's magnitude).
pub fn digits_agree(a: &HPComplex, b: &HPComplex) -> u32 {
    let count = |x: &Float, y: &Float| -> u32 {
        let diff = (x.clone() - y).abs();
        if diff.is_zero() {
            return 200;
        }
        let scale = y.clone().abs().max(&Float::with_val(y.prec(), 1e-30));
        let rel = (diff / scale).to_f64();
        if rel <= 0.0 {
            200
        } else {
            (-rel.log10()).max(0.0).floor() as u32
        }
    };
    count(&a.re, &b.re).min(count(&a.im, &b.im))
}

pub(crate) use remainder::mb_remainder;

//! Mellin-Barnes regularisation of the generalised terminant:
//!
//!   S^I_{p,q}(N, z^β) = ∫_{c−i∞}^{c+i∞} z^{βs} Γ(ps+q) /
//!                       (e^{−iπs} − e^{iπs}) ds,
//!
//! with max(N−1, −q/p) < c < N so the kernel poles at s = N, N+1, …
//! (the series terms) stay to the right and the Γ(ps+q) poles to the left.
//! The denominator is −2i·sin(πs). Validity at a given phase is decided
//! numerically: growth of the integrand at the truncation heights means
//! the contour form does not exist there.

use rug::Float;

use super::{EvalReport, Method, TerminantSpec};
use crate::error::{Error, Result};
use crate::precision::{pow_polar, HPComplex, PolarPoint, PrecisionContext};
use crate::quad::{vertical_line_sum, QuadratureSpec};
use crate::special::gamma_ref;

pub fn terminant_mb(
    spec: &TerminantSpec,
    z: &PolarPoint,
    quad: &QuadratureSpec,
    ctx: &PrecisionContext,
) -> Result<EvalReport> {
    assert!(spec.is_valid());
    let prec = ctx.bits();
    let c_lo = (spec.n as f64 - 1.0).max(-spec.q / spec.p);
    let c = 0.5 * (c_lo + spec.n as f64);
    let theta_over_pi = z.theta.to_f64() / std::f64::consts::PI;

    let ln_r = z.modulus.clone().ln();
    let theta = z.theta.clone();
    let ctx_f = ctx.clone();
    let f = move |t: &Float| -> HPComplex {
        let tp = t.prec();
        let s = HPComplex::new(Float::with_val(tp, c), Float::with_val(tp, t));
        // z^{βs} with the unwound phase
        let beta_s = s.scale(&Float::with_val(tp, spec.beta));
        let log_z = HPComplex::new(Float::with_val(tp, &ln_r), Float::with_val(tp, &theta));
        let zpow = (&beta_s * &log_z).exp();
        // Γ(ps+q), Re > 0 on the whole contour
        let a = HPComplex::new(
            Float::with_val(tp, spec.p) * &s.re + Float::with_val(tp, spec.q),
            Float::with_val(tp, spec.p) * &s.im,
        );
        let gamma = match gamma_ref(&a, &ctx_f) {
            Ok(g) => HPComplex::new(Float::with_val(tp, &g.re), Float::with_val(tp, &g.im)),
            Err(_) => return HPComplex::new(Float::with_val(tp, 0), Float::with_val(tp, 0)),
        };
        // 1/(e^{−iπs} − e^{iπs}) = −1/(2i sin πs) = (i/2)/sin(πs)
        let pi = Float::with_val(tp, rug::float::Constant::Pi);
        let pis = HPComplex::new(s.re.clone() * &pi, s.im.clone() * &pi);
        let den = pis.sin();
        let half_i = HPComplex::new(Float::with_val(tp, 0), Float::with_val(tp, 0.5));
        &(&(&zpow * &gamma) * &half_i) / &den
    };

    let out = vertical_line_sum(f, 4.0, quad.abs_tail_bound, quad.max_nodes, ctx).map_err(
        |e| match e {
            Error::NonConvergence(_) => Error::MbPhaseInvalid { theta_over_pi },
            other => other,
        },
    )?;
    // ds = i dt
    let value = out.value.mul_i();
    let mut report = EvalReport::new(
        HPComplex::new(Float::with_val(prec, &value.re), Float::with_val(prec, &value.im)),
        Method::Mb,
    );
    report.est_error = out.est_error;
    report.nodes_used = out.nodes;
    if out.stalled {
        report.warnings.push("vertical-line panel stalled".into());
    }
    Ok(report)
}

/// The Mellin-Barnes form of the exponential: e^{−z} = (1/2πi)·
/// ∫_{c−i∞}^{c+i∞} Γ(s) z^{−s} ds for |arg z| < π/2, c > 0. Used as the
/// engine's closed-form identity check and inside the jump derivation.
pub fn mb_exponential(
    z: &PolarPoint,
    quad: &QuadratureSpec,
    ctx: &PrecisionContext,
) -> Result<HPComplex> {
    let prec = ctx.bits();
    let c = 0.5f64;
    let ln_r = z.modulus.clone().ln();
    let theta = z.theta.clone();
    let ctx_f = ctx.clone();
    let f = move |t: &Float| -> HPComplex {
        let tp = t.prec();
        let s = HPComplex::new(Float::with_val(tp, c), Float::with_val(tp, t));
        let log_z = HPComplex::new(Float::with_val(tp, &ln_r), Float::with_val(tp, &theta));
        let zpow = (&(-&s) * &log_z).exp();
        let gamma = match gamma_ref(
            &HPComplex::new(
                Float::with_val(ctx_f.bits(), &s.re),
                Float::with_val(ctx_f.bits(), &s.im),
            ),
            &ctx_f,
        ) {
            Ok(g) => HPComplex::new(Float::with_val(tp, &g.re), Float::with_val(tp, &g.im)),
            Err(_) => return HPComplex::new(Float::with_val(tp, 0), Float::with_val(tp, 0)),
        };
        &zpow * &gamma
    };
    let out = vertical_line_sum(f, 4.0, quad.abs_tail_bound, quad.max_nodes, ctx).map_err(
        |e| match e {
            Error::NonConvergence(_) => Error::MbPhaseInvalid {
                theta_over_pi: z.theta.to_f64() / std::f64::consts::PI,
            },
            other => other,
        },
    )?;
    // (1/2πi)·(i ∫ dt) = ∫ dt / (2π)
    let two_pi = ctx.pi() * 2u32;
    Ok(HPComplex::new(
        Float::with_val(prec, &out.value.re) / &two_pi,
        Float::with_val(prec, &out.value.im) / &two_pi,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::PolarPoint;

    #[test]
    fn exponential_identity_at_one() {
        let ctx = PrecisionContext::new(30);
        let quad = QuadratureSpec::for_ctx(&ctx);
        let z = PolarPoint::from_f64(1.0, 0.0, &ctx);
        let v = mb_exponential(&z, &quad, &ctx).unwrap();
        let expect = ctx.float(-1.0).exp();
        let d = (v.re.clone() - expect).abs().to_f64();
        assert!(d < 1e-28, "d = {d:.3e}");
        assert!(v.im.to_f64().abs() < 1e-28);
    }

    #[test]
    fn mb_phase_invalid_beyond_half_pi() {
        // e^{-z} MB kernel decays like e^{(|θ|−π/2)|t|}: beyond π/2 it grows
        let ctx = PrecisionContext::new(20);
        let quad = QuadratureSpec::for_ctx(&ctx);
        let theta = ctx.pi() * ctx.float(0.7);
        let z = PolarPoint::new(ctx.float(1.0), theta);
        match mb_exponential(&z, &quad, &ctx) {
            Err(Error::MbPhaseInvalid { .. }) => {}
            other => panic!("expected MbPhaseInvalid, got {other:?}"),
        }
    }
}

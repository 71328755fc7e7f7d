//! Closed-form Stokes jump: the difference between the regularised values
//! of S^I_{p,q}(N, z^β e^{−2liπ}) and S^I_{p,q}(N, z^β e^{−2(l−1)iπ}),
//!
//!   ΔS^I_l = (2πi/p)·z^{−βq/p}·e^{(2l−1)iqπ/p}·exp(−z^{−β/p}·e^{(2l−1)iπ/p}).
//!
//! No quadrature: this is the residue picked up by the Cauchy integral as
//! its pole crosses the contour.

use rug::Float;

use super::TerminantSpec;
use crate::precision::{pow_polar_f64, HPComplex, PolarPoint, PrecisionContext};

pub fn terminant_jump(
    spec: &TerminantSpec,
    z: &PolarPoint,
    l: i64,
    ctx: &PrecisionContext,
) -> HPComplex {
    assert!(spec.is_valid());
    let prec = ctx.bits();
    let factor = pow_polar_f64(z, -spec.beta * spec.q / spec.p);
    let arg_scale = pow_polar_f64(z, -spec.beta / spec.p);
    let phase = ctx.pi() * ctx.float((2 * l - 1) as f64 / spec.p);
    let rot = HPComplex::new(ctx.float(0.0), phase).exp();
    let q_phase = ctx.pi() * ctx.float((2 * l - 1) as f64 * spec.q / spec.p);
    let q_rot = HPComplex::new(ctx.float(0.0), q_phase).exp();
    let inner = -&(&arg_scale * &rot);
    let coef = HPComplex::new(
        ctx.float(0.0),
        Float::with_val(prec, 2) * ctx.pi() / Float::with_val(prec, spec.p),
    );
    &(&(&coef * &factor) * &q_rot) * &inner.exp()
}

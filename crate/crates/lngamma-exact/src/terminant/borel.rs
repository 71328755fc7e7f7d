//! Borel-summed regularised values of S^I_{p,q}(N, z^β): the Cauchy
//! integral in the primary sector, its continuation with subdominant
//! exponential sums in every other sector, and the principal-value form
//! with half-weight residues on the Stokes lines.
//!
//! After the substitution s = t^p, the sector Cauchy integral is
//!
//!   S^I_{p,q}(N, z^β) = (−1)^N z^{β(N−1)} ∫_0^∞ t^{pN+q−1} e^{−t} /
//!                        (t^p + z^{−β}) dt,
//!
//! verified term-by-term against the Borel-sum form (the 1/p prefactor is
//! absorbed by ds = p·t^{p−1} dt).

use rug::ops::Pow;
use rug::Float;

use super::{EvalReport, Method, TerminantSpec};
use crate::error::{Error, Result};
use crate::precision::{
    pow_polar, pow_polar_f64, sector_locate, HPComplex, PolarPoint, PrecisionContext, Side,
};
use crate::quad::{exp_sinh, pv_semi_infinite, tanh_sinh, QuadOutcome, QuadratureSpec, Scheme};

fn lift(z: &HPComplex, prec: u32) -> HPComplex {
    HPComplex::new(Float::with_val(prec, &z.re), Float::with_val(prec, &z.im))
}

/// ∫_0^∞ t^{c−1} e^{−t} / (t^p + w) dt with pole-aware splitting: when a
/// root of t^p = −w sits close to the positive axis inside the mass of the
/// integrand, the contour is split at the root's abscissa so the
/// double-exponential rule sees the pole beyond an endpoint (a logarithmic
/// cost) instead of mid-interval (a catastrophic one).
fn cauchy_kernel_integral(
    p: f64,
    c: f64,
    w: &HPComplex,
    theta_unwound: f64,
    beta: f64,
    quad: &QuadratureSpec,
    tol_abs: f64,
    ctx: &PrecisionContext,
) -> QuadOutcome {
    let prec = ctx.bits();
    let pf = ctx.float(p);
    let cm1 = ctx.float(c - 1.0);
    let wre = w.re.clone();
    let wim = w.im.clone();
    let mut f = move |t: &Float| {
        let tp = t.prec();
        let num = Float::with_val(tp, t.pow(&cm1)) * (-t.clone()).exp();
        let tpow = HPComplex::from_re(Float::with_val(tp, t.pow(&pf)));
        let den = &tpow + &HPComplex::new(Float::with_val(tp, &wre), Float::with_val(tp, &wim));
        HPComplex::from_re(num) * den.recip()
    };

    // nearest pole angle to the positive real axis: (π − β|θ|)/p
    let alpha = (std::f64::consts::PI - beta * theta_unwound.abs()) / p;
    let r0 = w.abs().to_f64().powf(1.0 / p);
    let wd = ctx.working_digits() as f64;
    let mass_cut = c.max(1.0) + (wd + 14.0) * std::f64::consts::LN_10;
    if alpha.sin().abs() < 0.25 && r0 <= 1.25 * mass_cut {
        let split = ctx.float(r0 * alpha.cos().max(0.5));
        let head = tanh_sinh(&mut f, &ctx.float(0.0), &split, tol_abs / 2.0, quad.max_nodes, ctx);
        let tail = exp_sinh(&mut f, &split, 1.0, tol_abs / 2.0, quad.max_nodes, ctx);
        QuadOutcome {
            value: &head.value + &tail.value,
            est_error: head.est_error + tail.est_error,
            nodes: head.nodes + tail.nodes,
            stalled: head.stalled || tail.stalled,
        }
    } else if quad.scheme == Scheme::GaussLaguerreComposite {
        crate::quad::gauss_laguerre_composite(&mut f, tol_abs, quad.max_nodes, ctx)
    } else {
        exp_sinh(&mut f, &ctx.float(0.0), c, tol_abs, quad.max_nodes, ctx)
    }
    .clamp_prec(prec)
}

impl QuadOutcome {
    fn clamp_prec(mut self, prec: u32) -> Self {
        if self.value.prec() != prec {
            self.value = HPComplex::new(
                Float::with_val(prec, &self.value.re),
                Float::with_val(prec, &self.value.im),
            );
        }
        self
    }
}

/// Regularised value in the primary sector |arg z| < π/β (Cauchy integral
/// alone). Near-line phases stay valid but cost a warning and doubled
/// guard digits.
pub fn terminant_primary(
    spec: &TerminantSpec,
    z: &PolarPoint,
    quad: &QuadratureSpec,
    ctx: &PrecisionContext,
) -> Result<EvalReport> {
    assert!(spec.is_valid());
    let tol = ctx.line_tol();
    let loc = sector_locate(&z.theta, spec.beta, &tol);
    if loc.on_line || loc.m != 0 {
        return Err(Error::OnStokesLine {
            theta_over_pi: z.theta.to_f64() / std::f64::consts::PI,
        });
    }
    let theta = z.theta.to_f64();
    let line_dist = std::f64::consts::PI / spec.beta - theta.abs();
    let mut warnings = Vec::new();
    let eval_ctx = if line_dist < 1e-5 {
        warnings.push(format!(
            "phase within {line_dist:.2e} rad of a Stokes line; raising working precision"
        ));
        ctx.with_extra(ctx.working_digits())
    } else {
        ctx.clone()
    };

    let w = pow_polar_f64(z, -spec.beta);
    let c = spec.p * spec.n as f64 + spec.q;
    let pref = pow_polar_f64(z, spec.beta * (spec.n - 1) as f64);
    let pref_mag = pref.abs().to_f64();
    let tol_abs = (quad.abs_tail_bound / pref_mag.max(1e-300)).min(1e280);
    let w_hi = lift(&w, eval_ctx.bits());
    let out = cauchy_kernel_integral(
        spec.p,
        c,
        &w_hi,
        theta,
        spec.beta,
        quad,
        tol_abs,
        &eval_ctx,
    );
    if out.stalled {
        warnings.push("quadrature refinement stalled before the tail bound".into());
    }
    let mut value = &pref * &out.value;
    if spec.n % 2 == 1 {
        value = -&value;
    }
    let mut report = EvalReport::new(lift(&value, ctx.bits()), Method::Borel);
    report.est_error = out.est_error * pref_mag;
    report.nodes_used = out.nodes;
    report.warnings = warnings;
    Ok(report)
}

/// Subdominant exponential sum of the sector forms:
/// ±(2πi/p)·z_M^{−βq/p}·Σ_{j=1}^{M} e^{±i(2j−1)qπ/p}·exp(−z_M^{−β/p}·e^{±i(2j−1)π/p}).
fn sector_exponential_sum(
    spec: &TerminantSpec,
    z_m: &PolarPoint,
    m: i64,
    sign_pos: bool,
    ctx: &PrecisionContext,
) -> HPComplex {
    let prec = ctx.bits();
    let sgn = if sign_pos { 1.0 } else { -1.0 };
    let factor = pow_polar_f64(z_m, -spec.beta * spec.q / spec.p);
    let arg_scale = pow_polar_f64(z_m, -spec.beta / spec.p);
    let mut sum = ctx.zero();
    for j in 1..=m {
        let phase = ctx.pi() * ctx.float(sgn * (2 * j - 1) as f64 / spec.p);
        let rot = HPComplex::new(ctx.float(0.0), phase).exp();
        let q_phase = ctx.pi() * ctx.float(sgn * (2 * j - 1) as f64 * spec.q / spec.p);
        let q_rot = HPComplex::new(ctx.float(0.0), q_phase).exp();
        let inner = -&(&arg_scale * &rot);
        sum = &sum + &(&q_rot * &inner.exp());
    }
    // ±(2πi/p)·z_M^{−βq/p}·sum
    let coef = Float::with_val(prec, 2) * ctx.pi() / Float::with_val(prec, spec.p);
    let i_coef = HPComplex::new(ctx.float(0.0), ctx.float(sgn) * coef);
    &(&i_coef * &factor) * &sum
}

/// Regularised value in any Stokes sector: the Cauchy integral evaluated at
/// z_M = z·e^(±2Miπ/β) (back inside the primary sector) plus the
/// accumulated subdominant exponentials of the crossed lines. M = 0
/// delegates to the primary form.
pub fn terminant_sector(
    spec: &TerminantSpec,
    z: &PolarPoint,
    quad: &QuadratureSpec,
    ctx: &PrecisionContext,
) -> Result<EvalReport> {
    assert!(spec.is_valid());
    let tol = ctx.line_tol();
    let loc = sector_locate(&z.theta, spec.beta, &tol);
    if loc.on_line {
        return Err(Error::OnStokesLine {
            theta_over_pi: z.theta.to_f64() / std::f64::consts::PI,
        });
    }
    if loc.m == 0 {
        return terminant_primary(spec, z, quad, ctx);
    }
    let m = loc.m;
    // negative phases rotate up into the primary sector and take the
    // positive-signed exponentials; positive phases mirror them
    let (z_m, sign_pos) = match loc.side {
        Side::LowerRotation => (z.rotated(m, spec.beta), true),
        Side::UpperRotation => (z.rotated(-m, spec.beta), false),
    };
    let mut report = terminant_primary(spec, &z_m, quad, ctx)?;
    let expsum = sector_exponential_sum(spec, &z_m, m, sign_pos, ctx);
    report.value = &report.value + &expsum;
    report.terms_used = m as usize;
    Ok(report)
}

/// Regularised value exactly on a Stokes line |z|·e^(±i(2M+1)π/β): the
/// principal-value Cauchy integral, the exponential sums of the crossed
/// lines, and the half-weight residue of the pole sitting on the contour.
pub fn terminant_line(
    spec: &TerminantSpec,
    modulus: &Float,
    m: i64,
    side: Side,
    quad: &QuadratureSpec,
    ctx: &PrecisionContext,
) -> Result<EvalReport> {
    assert!(spec.is_valid() && m >= 0);
    let prec = ctx.bits();
    let sgn = match side {
        Side::LowerRotation => 1.0, // arg z = −(2M+1)π/β
        Side::UpperRotation => -1.0,
    };
    // a = |z|^{−β}, pole of the substituted kernel at t0 = a^{1/p}
    let a = Float::with_val(prec, modulus.clone().pow(-spec.beta));
    let t0 = Float::with_val(prec, a.clone().pow(1.0 / spec.p));
    let c = spec.p * spec.n as f64 + spec.q;

    // φ(t) = t^{c−1} e^{−t} (t−t0)/(t^p − a), stable near t0 through
    // ψ(t0+u) = a·expm1(p·log1p(u/t0))/u; the excision keeps every node
    // off the pole itself.
    let pf = spec.p;
    let cm1 = c - 1.0;
    let a_c = a.clone();
    let t0_c = t0.clone();
    let phi = move |t: &Float| {
        let tp = t.prec();
        let num = Float::with_val(tp, t.pow(cm1)) * (-t.clone()).exp();
        let t0l = Float::with_val(tp, &t0_c);
        let al = Float::with_val(tp, &a_c);
        let u = Float::with_val(tp, t - &t0l);
        let near = u.clone().abs() < Float::with_val(tp, &t0l) * 0.25f64;
        let psi = if near {
            // (t^p − a)/(t − t0) without cancellation
            let ratio = u.clone() / &t0l;
            let e = Float::with_val(tp, ratio.ln_1p() * pf).exp_m1();
            al * e / u
        } else {
            let tpw = Float::with_val(tp, t.pow(pf));
            (tpw - al) / u
        };
        HPComplex::from_re(num / psi)
    };

    let pref_mag = modulus.clone().pow(spec.beta * (spec.n - 1) as f64);
    let tol_abs = (quad.abs_tail_bound / pref_mag.to_f64().max(1e-300)).min(1e280);
    let pv = pv_semi_infinite(phi, &t0, quad.pv_window, tol_abs, quad.max_nodes, ctx)?;

    // −|z|^{β(N−1)} · PV-integral
    let mut value = pv.value.scale(&pref_mag);
    value = -&value;

    // crossed-line exponentials: ±(2πi/p)|z|^{−βq/p} Σ_j e^{±2ijqπ/p}
    // exp(−t0·e^{±2ijπ/p})
    let factor = Float::with_val(prec, a.clone().pow(spec.q / spec.p));
    let two_pi_over_p = Float::with_val(prec, 2) * ctx.pi() / Float::with_val(prec, spec.p);
    for j in 1..=m {
        let phase = ctx.pi() * ctx.float(sgn * 2.0 * j as f64 / spec.p);
        let rot = HPComplex::new(ctx.float(0.0), phase).exp();
        let q_phase = ctx.pi() * ctx.float(sgn * 2.0 * j as f64 * spec.q / spec.p);
        let q_rot = HPComplex::new(ctx.float(0.0), q_phase).exp();
        let inner = -&rot.scale(&t0);
        let term = &q_rot * &inner.exp();
        let coef = HPComplex::new(ctx.float(0.0), ctx.float(sgn) * two_pi_over_p.clone());
        value = &value + &(&(&coef * &term).scale(&factor));
    }
    // half-weight residue of the on-contour pole: ±(πi/p)|z|^{−βq/p} e^{−t0}
    let half = HPComplex::new(
        ctx.float(0.0),
        ctx.float(sgn) * ctx.pi() / Float::with_val(prec, spec.p),
    );
    let e_t0 = (-t0.clone()).exp();
    value = &value + &half.scale(&(factor * e_t0));

    let mut report = EvalReport::new(value, Method::Borel);
    report.est_error = pv.est_error * pref_mag.to_f64();
    report.nodes_used = pv.nodes;
    report.terms_used = m as usize;
    if pv.stalled {
        report.warnings.push("PV quadrature stalled".into());
    }
    Ok(report)
}

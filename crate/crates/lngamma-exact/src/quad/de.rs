//! Double-exponential rules.
//!
//! `tanh_sinh` integrates over a finite interval with the map
//! x = tanh((π/2)·sinh u); `exp_sinh` integrates over [r, ∞) for integrands
//! with e^{-t} decay using t = r + exp(u − e^{-u}). Both refine by halving
//! the trapezoid step in u and reusing previous nodes; the returned error
//! estimate is the difference of the last two refinement levels.

use rug::Float;

use super::QuadOutcome;
use crate::precision::{HPComplex, PrecisionContext};

/// Node of the exp-sinh rule: offset g = exp(u − e^{-u}) from the left
/// endpoint and the transformed trapezoid weight g·(1 + e^{-u}).
pub(crate) struct EsNode {
    pub g: Float,
    pub w: Float,
}

fn prec_zero(ctx: &PrecisionContext) -> HPComplex {
    ctx.zero()
}

/// tanh-sinh abscissa data at |u| = u: returns (1−tanh v, weight) with
/// v = (π/2)·sinh u; 1−tanh v is kept separate so callers can form
/// endpoint offsets without cancellation.
fn ts_point(u: &Float, pi_half: &Float) -> (Float, Float) {
    let v = u.clone().sinh() * pi_half;
    // 1 - tanh(v) = 2 / (e^{2v} + 1)
    let e2v = (v.clone() * 2u32).exp();
    let omt = Float::with_val(u.prec(), 2) / (e2v + 1u32);
    // w = (π/2) cosh u / cosh^2 v
    let ch = v.cosh();
    let w = u.clone().cosh() * pi_half / ch.clone().square();
    (omt, w)
}

/// Integrate f over [a, b] by tanh-sinh refinement down to absolute
/// tolerance `tol_abs` (capped by `max_nodes`).
pub fn tanh_sinh<F>(
    mut f: F,
    a: &Float,
    b: &Float,
    tol_abs: f64,
    max_nodes: usize,
    ctx: &PrecisionContext,
) -> QuadOutcome
where
    F: FnMut(&Float) -> HPComplex,
{
    let prec = ctx.bits();
    let pi_half = ctx.pi() / 2u32;
    let half = Float::with_val(prec, b.clone() - a) / 2u32;
    let wd = ctx.working_digits() as f64;
    // u-range: far enough that 1−tanh(v) drops below the square of the
    // working epsilon (near-endpoint poles magnify small offsets).
    let u_max = ((2.0 * (wd + 10.0) * std::f64::consts::LN_10) / std::f64::consts::PI).asinh();
    let omt_cut = 10f64.powf(-(2.0 * wd + 24.0).min(4900.0));

    let mut sum = prec_zero(ctx);
    let mut nodes = 0usize;
    let mut prev: Option<HPComplex> = None;
    let mut est = f64::INFINITY;
    let mut h = 1.0f64;
    let mut value = prec_zero(ctx);
    let mut stalled = true;

    for level in 0..=14 {
        if level > 0 {
            h /= 2.0;
        }
        // level 0: all multiples of h including 0; level > 0: odd multiples.
        let mut j = if level == 0 { 0u64 } else { 1u64 };
        loop {
            let uj = h * j as f64;
            if uj > u_max {
                break;
            }
            let u = Float::with_val(prec, uj);
            let (omt, w) = ts_point(&u, &pi_half);
            if omt.to_f64() < omt_cut {
                break;
            }
            if j == 0 {
                let x = Float::with_val(prec, a.clone() + &half);
                sum = &sum + &f(&x).scale(&w);
                nodes += 1;
            } else {
                let off = half.clone() * &omt;
                let xp = Float::with_val(prec, b.clone() - &off);
                let xm = Float::with_val(prec, a.clone() + &off);
                let fv = &f(&xp) + &f(&xm);
                sum = &sum + &fv.scale(&w);
                nodes += 2;
            }
            if nodes > max_nodes {
                break;
            }
            j += if level == 0 { 1 } else { 2 };
        }
        let hh = Float::with_val(prec, h);
        value = sum.scale(&(hh * &half));
        if let Some(p) = &prev {
            est = (&value - p).abs().to_f64();
            let scale_eps = value.abs().to_f64() * ctx.eps(0);
            if est <= tol_abs.max(scale_eps) {
                stalled = false;
                break;
            }
        }
        prev = Some(value.clone());
        if nodes > max_nodes {
            break;
        }
    }
    QuadOutcome {
        value,
        est_error: if est.is_finite() { est } else { 0.0 },
        nodes,
        stalled,
    }
}

/// Generate exp-sinh levels 0..=max_level at `prec` bits.
///
/// `u_pos_max` bounds the decaying side (t up to ~e^{u_pos_max}) and
/// `u_neg_max` the origin side (t down to exp(−e^{u_neg_max})). Level 0
/// holds all integer multiples of h=1, level ℓ the odd multiples of 2^{-ℓ}.
pub(crate) fn exp_sinh_levels(
    prec: u32,
    max_level: u32,
    u_pos_max: f64,
    u_neg_max: f64,
) -> Vec<Vec<EsNode>> {
    let mut levels = Vec::new();
    let mut h = 1.0f64;
    for level in 0..=max_level {
        if level > 0 {
            h /= 2.0;
        }
        let mut v = Vec::new();
        let mut push = |uj: f64| {
            let u = Float::with_val(prec, uj);
            let emu = (-u.clone()).exp();
            let g = (u - &emu).exp();
            let w = g.clone() * (emu + 1u32);
            v.push(EsNode { g, w });
        };
        if level == 0 {
            push(0.0);
        }
        let mut j = if level == 0 { 1u64 } else { 1u64 };
        loop {
            let uj = h * j as f64;
            let mut any = false;
            if uj <= u_pos_max {
                push(uj);
                any = true;
            }
            if uj <= u_neg_max {
                push(-uj);
                any = true;
            }
            if !any {
                break;
            }
            j += if level == 0 { 1 } else { 2 };
        }
        levels.push(v);
    }
    levels
}

/// u-range defaults for exp-sinh given the working digits and the smallest
/// algebraic power t^(c-1) at the origin (origin_power = Re c).
pub(crate) fn es_ranges(wd: f64, origin_power: f64) -> (f64, f64) {
    let u_pos = (2.4 * (wd + 12.0) * std::f64::consts::LN_10 + 60.0).ln();
    let u_neg = (2.4 * (wd + 12.0) * std::f64::consts::LN_10 / origin_power.max(0.02)).ln();
    (u_pos, u_neg.max(3.0))
}

/// Integrate f over [r, ∞) for integrands decaying like e^{-t}, with an
/// algebraic behaviour t^(c-1) at the left endpoint (pass origin_power =
/// Re c; use 1.0 when the integrand is regular there).
pub fn exp_sinh<F>(
    mut f: F,
    r: &Float,
    origin_power: f64,
    tol_abs: f64,
    max_nodes: usize,
    ctx: &PrecisionContext,
) -> QuadOutcome
where
    F: FnMut(&Float) -> HPComplex,
{
    let prec = ctx.bits();
    let wd = ctx.working_digits() as f64;
    let (u_pos, u_neg) = es_ranges(wd, origin_power);
    let levels = exp_sinh_levels(prec, 13, u_pos, u_neg);

    let mut sum = prec_zero(ctx);
    let mut nodes = 0usize;
    let mut prev: Option<HPComplex> = None;
    let mut est = f64::INFINITY;
    let mut value = prec_zero(ctx);
    let mut stalled = true;
    let mut h = 1.0f64;

    for (level, tbl) in levels.iter().enumerate() {
        if level > 0 {
            h /= 2.0;
        }
        for node in tbl {
            let t = Float::with_val(prec, node.g.clone() + r);
            sum = &sum + &f(&t).scale(&node.w);
            nodes += 1;
            if nodes > max_nodes {
                break;
            }
        }
        let hh = Float::with_val(prec, h);
        value = sum.scale(&hh);
        if let Some(p) = &prev {
            est = (&value - p).abs().to_f64();
            let scale_eps = value.abs().to_f64() * ctx.eps(0);
            if est <= tol_abs.max(scale_eps) {
                stalled = false;
                break;
            }
        }
        prev = Some(value.clone());
        if nodes > max_nodes {
            break;
        }
    }
    QuadOutcome {
        value,
        est_error: if est.is_finite() { est } else { 0.0 },
        nodes,
        stalled,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::PrecisionContext;

    #[test]
    fn tanh_sinh_poly() {
        let ctx = PrecisionContext::new(30);
        // ∫_0^1 x^3 dx = 1/4
        let out = tanh_sinh(
            |x| HPComplex::from_re(x.clone().square() * x),
            &ctx.float(0.0),
            &ctx.float(1.0),
            1e-45,
            100_000,
            &ctx,
        );
        let d = (out.value.re.to_f64() - 0.25).abs();
        assert!(d < 1e-40, "d = {d:.3e}, stalled = {}", out.stalled);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let ctx = PrecisionContext::new(30);
        // ∫_0^1 dx/√x = 2
        let out = tanh_sinh(
            |x| HPComplex::from_re(x.clone().sqrt().recip()),
            &ctx.float(0.0),
            &ctx.float(1.0),
            1e-45,
            200_000,
            &ctx,
        );
        assert!((out.value.re.to_f64() - 2.0).abs() < 1e-38);
    }

    #[test]
    fn exp_sinh_gamma_values() {
        let ctx = PrecisionContext::new(30);
        // ∫_0^∞ t^4 e^{-t} dt = 24
        let out = exp_sinh(
            |t| {
                let t4 = t.clone().square().square();
                HPComplex::from_re(t4 * (-t.clone()).exp())
            },
            &ctx.float(0.0),
            5.0,
            1e-42,
            200_000,
            &ctx,
        );
        assert!((out.value.re.to_f64() - 24.0).abs() < 1e-38);
        // fractional power at the origin: ∫_0^∞ t^{-1/2} e^{-t} dt = √π
        let out = exp_sinh(
            |t| HPComplex::from_re(t.clone().sqrt().recip() * (-t.clone()).exp()),
            &ctx.float(0.0),
            0.5,
            1e-42,
            200_000,
            &ctx,
        );
        let sqrt_pi = ctx.pi().sqrt().to_f64();
        assert!((out.value.re.to_f64() - sqrt_pi).abs() < 1e-38);
    }
}

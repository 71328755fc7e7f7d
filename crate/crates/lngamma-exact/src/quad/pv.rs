//! Cauchy principal value of ∫_0^∞ φ(t)/(t−t0) dt for φ analytic near the
//! pole and decaying like e^{-t}.
//!
//! Symmetric excision: the interval (t0−ε, t0+ε) is removed and its
//! contribution restored analytically from the odd part of φ,
//!
//!   PV∫_{t0−ε}^{t0+ε} φ(t)/(t−t0) dt = 2·Σ_m φ^(2m+1)(t0) ε^(2m+1) /
//!                                      ((2m+1)!·(2m+1)),
//!
//! with the derivatives taken from finite differences well outside the
//! window. Naive node-pairing across the pole loses half the digits; the
//! whole routine therefore runs with a third more working digits.

use rug::Float;

use super::{exp_sinh, tanh_sinh, QuadOutcome};
use crate::error::{Error, Result};
use crate::precision::{HPComplex, PrecisionContext};

/// Solve the 4x4 Vandermonde-type system Σ_m γ_m j^(2m+1) = d_j, j=1..4.
fn solve_odd_stencil(d: &[HPComplex; 4], prec: u32) -> [HPComplex; 4] {
    // A[j][m] = (j+1)^(2m+1)
    let mut a: [[Float; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| Float::new(prec)));
    for (j, row) in a.iter_mut().enumerate() {
        let base = (j + 1) as u64;
        for (m, e) in row.iter_mut().enumerate() {
            *e = Float::with_val(prec, base.pow(2 * m as u32 + 1));
        }
    }
    let mut rhs = d.clone();
    // Gaussian elimination without pivoting (matrix is tiny and well scaled
    // after row normalisation).
    for col in 0..4 {
        let inv = a[col][col].clone().recip();
        for m in col..4 {
            a[col][m] *= &inv;
        }
        rhs[col] = rhs[col].scale(&inv);
        for row in 0..4 {
            if row == col {
                continue;
            }
            let factor = a[row][col].clone();
            if factor.is_zero() {
                continue;
            }
            for m in col..4 {
                let t = a[col][m].clone() * &factor;
                a[row][m] -= t;
            }
            let sub = rhs[col].scale(&factor);
            let updated = &rhs[row] - &sub;
            rhs[row] = updated;
        }
    }
    rhs
}

/// PV ∫_0^∞ φ(t)/(t−t0) dt, t0 > 0.
pub fn pv_semi_infinite<F>(
    mut phi: F,
    t0: &Float,
    pv_window: f64,
    tol_abs: f64,
    max_nodes: usize,
    ctx: &PrecisionContext,
) -> Result<QuadOutcome>
where
    F: FnMut(&Float) -> HPComplex,
{
    if !t0.is_sign_positive() || t0.is_zero() {
        return Err(Error::Domain("PV pole must satisfy t0 > 0".into()));
    }
    let ctx2 = ctx.with_extra(ctx.working_digits() / 3 + 12);
    let prec2 = ctx2.bits();
    let t0h = Float::with_val(prec2, t0);
    let t0f = t0.to_f64();

    let eps = Float::with_val(prec2, pv_window.min(t0f * 1e-3));
    let epsf = eps.to_f64();

    // Flanks. The integrand is φ(t)/(t−t0); the pole sits ε beyond each
    // endpoint, which tanh-sinh/exp-sinh absorb at a logarithmic cost.
    let left_b = Float::with_val(prec2, t0h.clone() - &eps);
    let mut g = |t: &Float| {
        let d = Float::with_val(t.prec(), t - &t0h);
        let v = phi(t);
        HPComplex::new(v.re / &d, v.im / &d)
    };
    let left = tanh_sinh(&mut g, &ctx2.float(0.0), &left_b, tol_abs / 3.0, max_nodes, &ctx2);
    let right_a = Float::with_val(prec2, t0h.clone() + &eps);
    let right = exp_sinh(&mut g, &right_a, 1.0, tol_abs / 3.0, max_nodes, &ctx2);

    // Window from the odd part of φ. Stencil step far outside the window.
    let wd = ctx.working_digits() as f64;
    let h = Float::with_val(prec2, t0f * 10f64.powf(-wd / 8.0));
    let mut d = [ctx2.zero(), ctx2.zero(), ctx2.zero(), ctx2.zero()];
    for (j, dj) in d.iter_mut().enumerate() {
        let u = h.clone() * Float::with_val(prec2, (j + 1) as u32);
        let tp = Float::with_val(prec2, t0h.clone() + &u);
        let tm = Float::with_val(prec2, t0h.clone() - &u);
        let diff = &phi(&tp) - &phi(&tm);
        *dj = diff.scale(&Float::with_val(prec2, 0.5));
    }
    let gam = solve_odd_stencil(&d, prec2);
    let rho = Float::with_val(prec2, eps.clone() / &h);
    let mut window = ctx2.zero();
    let mut rho_pow = rho.clone();
    for (m, gm) in gam.iter().enumerate() {
        let coef = rho_pow.clone() * Float::with_val(prec2, 2) / Float::with_val(prec2, 2 * m as u32 + 1);
        window = &window + &gm.scale(&coef);
        rho_pow *= rho.clone().square();
    }

    let mut value = &(&left.value + &right.value) + &window;
    // round back to the caller's precision
    value = HPComplex::new(ctx.float_from(&value.re), ctx.float_from(&value.im));
    let est = left.est_error + right.est_error + epsf * epsf * window.abs().to_f64();
    Ok(QuadOutcome {
        value,
        est_error: est,
        nodes: left.nodes + right.nodes + 8,
        stalled: left.stalled || right.stalled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pv_known_value() {
        // PV ∫_0^∞ e^{-t}/(t-1) dt = -e^{-1}·Ei(1)  (≈ -0.697174883331735...)
        let ctx = PrecisionContext::new(30);
        let out = pv_semi_infinite(
            |t| HPComplex::from_re((-t.clone()).exp()),
            &ctx.float(1.0),
            1e-11,
            1e-42,
            400_000,
            &ctx,
        )
        .unwrap();
        let expected = -0.6971748832350660993; // e^{-1}·Ei(1), 20 digits
        let d = (out.value.re.to_f64() - expected).abs();
        assert!(d < 1e-18, "pv = {}, d = {d:.3e}", out.value.re.to_f64());
        assert!(out.value.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn pv_odd_cancellation() {
        // φ(t) = t e^{-t}: PV ∫ t e^{-t}/(t-t0) dt = t0·PV∫e^{-t}/(t-t0) + 1
        let ctx = PrecisionContext::new(30);
        let t0 = ctx.float(2.5);
        let a = pv_semi_infinite(
            |t| HPComplex::from_re(t.clone() * (-t.clone()).exp()),
            &t0,
            1e-11,
            1e-42,
            400_000,
            &ctx,
        )
        .unwrap();
        let b = pv_semi_infinite(
            |t| HPComplex::from_re((-t.clone()).exp()),
            &t0,
            1e-11,
            1e-42,
            400_000,
            &ctx,
        )
        .unwrap();
        let rhs = b.value.re.clone() * &t0 + ctx.float(1.0);
        let d = (a.value.re.clone() - rhs).abs().to_f64();
        assert!(d < 1e-38, "d = {d:.3e}");
    }
}

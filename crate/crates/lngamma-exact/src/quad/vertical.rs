//! Vertical-line (Mellin-Barnes) integration: ∫_{-∞}^{∞} f(t) dt taken in
//! panels of fixed height, growing the truncation until the last panel
//! contributes less than the tail bound and has been decreasing for three
//! consecutive panels. Integrand growth at the truncation heights is an
//! error: the contour representation is invalid at that phase.

use rug::Float;

use super::{tanh_sinh, QuadOutcome};
use crate::error::{Error, Result};
use crate::precision::{HPComplex, PrecisionContext};

pub fn vertical_line_sum<F>(
    mut f: F,
    panel_height: f64,
    tol_abs: f64,
    max_nodes: usize,
    ctx: &PrecisionContext,
) -> Result<QuadOutcome>
where
    F: FnMut(&Float) -> HPComplex,
{
    let mut total = ctx.zero();
    let mut est = 0.0f64;
    let mut nodes = 0usize;
    let mut stalled = false;

    for dir in [1.0f64, -1.0] {
        let mut decreasing_streak = 0usize;
        let mut growth_streak = 0usize;
        let mut prev_mag = f64::INFINITY;
        let mut k = 0usize;
        loop {
            let (lo, hi) = if dir > 0.0 {
                (k as f64 * panel_height, (k + 1) as f64 * panel_height)
            } else {
                (-((k + 1) as f64) * panel_height, -(k as f64 * panel_height))
            };
            let out = tanh_sinh(
                &mut f,
                &ctx.float(lo),
                &ctx.float(hi),
                tol_abs / 8.0,
                max_nodes,
                ctx,
            );
            total = &total + &out.value;
            est += out.est_error;
            nodes += out.nodes;
            stalled |= out.stalled;
            let mag = out.value.abs().to_f64();
            if mag < prev_mag {
                decreasing_streak += 1;
                growth_streak = 0;
            } else {
                decreasing_streak = 0;
                growth_streak += 1;
            }
            if mag < tol_abs && decreasing_streak >= 3 {
                break;
            }
            if growth_streak >= 2 && mag > tol_abs * 1e12 && k > 3 {
                return Err(Error::NonConvergence(
                    "vertical-line integrand grows at the truncation heights".into(),
                ));
            }
            prev_mag = mag;
            k += 1;
            if nodes > max_nodes || k > 4000 {
                return Err(Error::QuadratureFailure {
                    message: "vertical-line tail did not reach the bound".into(),
                    est_error: mag,
                });
            }
        }
    }
    Ok(QuadOutcome {
        value: total,
        est_error: est,
        nodes,
        stalled,
    })
}

//! Upper incomplete gamma Γ(a, x) for complex a and x.
//!
//! Route selection:
//!  * Legendre continued fraction (modified Lentz) when x is large and in
//!    the right half-plane — the fraction degenerates near the negative
//!    axis, so it is never used there;
//!  * for non-positive integer a = −m, the exact decomposition through
//!    E₁(x), whose Maclaurin series has no cancellation for Re x < 0;
//!  * otherwise Γ(a) − γ(a, x) with the Kummer series for γ and a
//!    precision raise sized to the e^{|x|} cancellation.

use rug::Float;

use super::lngamma_ref::gamma_ref;
use crate::error::{Error, Result};
use crate::precision::{log_branch, HPComplex, PrecisionContext};

/// e^{x}·x^{a} etc. need the principal power x^a = exp(a·Log x).
fn pow_principal(x: &HPComplex, a: &HPComplex) -> Result<HPComplex> {
    Ok((a * &log_branch(x, 0)?).exp())
}

/// Legendre continued fraction for Γ(a,x), valid off the negative real
/// axis; used only for Re x ≥ 0 where convergence is geometric-in-√(k|x|).
fn upper_cf(a: &HPComplex, x: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let prec = ctx.bits();
    let one = ctx.one();
    let tiny = ctx.complex(1e-290, 0.0);
    // b0 = x + 1 − a
    let b0 = &(&x.clone() + &one) - a;
    let mut f = if b0.is_zero() { tiny.clone() } else { b0 };
    let mut c = f.clone();
    let mut d = ctx.zero();
    let tol = ctx.eps(4);
    for j in 1..=400_000u32 {
        // a_j = −j(j − a), b_j = x + 2j + 1 − a
        let jf = Float::with_val(prec, j);
        let j_minus_a = &HPComplex::from_re(jf.clone()) - a;
        let aj = -&j_minus_a.scale(&jf);
        let bj = &(&x.clone() + &HPComplex::from_re(Float::with_val(prec, 2 * j + 1))) - a;
        let mut dn = &(&aj * &d) + &bj;
        if dn.is_zero() {
            dn = tiny.clone();
        }
        let mut cn = &(&aj * &c.recip()) + &bj;
        if cn.is_zero() {
            cn = tiny.clone();
        }
        d = dn.recip();
        let delta = &cn * &d;
        f = &f * &delta;
        c = cn;
        if (&delta - &one).abs().to_f64() < tol {
            // Γ(a,x) = e^{−x} x^{a} / f
            let pref = &pow_principal(x, a)? * &(-x).exp();
            return Ok(&pref / &f);
        }
    }
    Err(Error::NonConvergence(
        "incomplete-gamma continued fraction hit the iteration cap".into(),
    ))
}

/// E₁(x) = −γ − Log x − Σ_{k≥1} (−x)^k/(k·k!); the raise covers the
/// alternating cancellation, which only bites for Re x > 0.
fn e1_series(x: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let cancel = (x.re.to_f64() + x.abs().to_f64()).max(0.0) * std::f64::consts::LOG10_E;
    let ctx2 = ctx.with_extra(cancel.ceil() as u32 + 12);
    let prec = ctx2.bits();
    let xh = HPComplex::new(ctx2.float_from(&x.re), ctx2.float_from(&x.im));
    let mut term = -&xh; // (−x)^k / k!
    let mut acc = ctx2.zero();
    let tol = ctx.eps(8);
    let mut converged = false;
    for k in 1..=2_000_000u32 {
        let contrib = term.scale(&Float::with_val(prec, k).recip());
        acc = &acc + &contrib;
        if contrib.abs().to_f64() < tol && Float::with_val(prec, k) > xh.abs() {
            converged = true;
            break;
        }
        term = &term * &(-&xh);
        term = term.scale(&Float::with_val(prec, k + 1).recip());
    }
    if !converged {
        return Err(Error::NonConvergence("E1 series".into()));
    }
    let v = &(&(-&acc) - &log_branch(&xh, 0)?) - &HPComplex::from_re(ctx2.euler());
    Ok(HPComplex::new(ctx.float_from(&v.re), ctx.float_from(&v.im)))
}

/// Γ(−m, x) = (−1)^m/m!·[E₁(x) − e^{−x} Σ_{j=0}^{m−1} (−1)^j j!/x^{j+1}].
fn upper_nonpositive_integer(m: u32, x: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let prec = ctx.bits();
    let e1 = e1_series(x, ctx)?;
    let mut sum = ctx.zero();
    let inv_x = x.recip();
    let mut pow = inv_x.clone(); // x^{-(j+1)}
    let mut fact = Float::with_val(prec, 1);
    for j in 0..m {
        let term = pow.scale(&fact);
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        fact *= Float::with_val(prec, j + 1);
        pow = &pow * &inv_x;
    }
    let e_minus_x = (-x).exp();
    let mut v = &e1 - &(&e_minus_x * &sum);
    let m_fact = Float::with_val(prec, Float::factorial(m));
    v = v.scale(&m_fact.recip());
    if m % 2 == 1 {
        v = -&v;
    }
    Ok(v)
}

/// Kummer series for the lower function: γ(a,x) = x^a e^{−x} Σ_{n≥0}
/// x^n / (a(a+1)···(a+n)); then Γ(a,x) = Γ(a) − γ(a,x).
fn upper_via_lower_series(a: &HPComplex, x: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let cancel = (x.re.to_f64() + x.abs().to_f64()).max(0.0) * std::f64::consts::LOG10_E;
    let ctx2 = ctx.with_extra(cancel.ceil() as u32 + 12);
    let prec = ctx2.bits();
    let ah = HPComplex::new(ctx2.float_from(&a.re), ctx2.float_from(&a.im));
    let xh = HPComplex::new(ctx2.float_from(&x.re), ctx2.float_from(&x.im));
    let mut denom = ah.clone(); // a(a+1)...(a+n)
    let mut term = denom.recip(); // x^n / (a...(a+n))
    let mut acc = term.clone();
    let tol = ctx.eps(8);
    let mut converged = false;
    for n in 1..=2_000_000u32 {
        let a_plus_n = &ah + &HPComplex::from_re(Float::with_val(prec, n));
        denom = &denom * &a_plus_n;
        term = &(&term * &xh) / &a_plus_n;
        acc = &acc + &term;
        if term.abs().to_f64() < tol * acc.abs().to_f64().max(1e-30)
            && Float::with_val(prec, n) > xh.abs()
        {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence("lower incomplete gamma series".into()));
    }
    let lower = &(&pow_principal(&xh, &ah)? * &(-&xh).exp()) * &acc;
    let gamma_a = gamma_ref(&ah, &ctx2)?;
    let v = &gamma_a - &lower;
    Ok(HPComplex::new(ctx.float_from(&v.re), ctx.float_from(&v.im)))
}

/// Γ(a, x) to working precision. Accepts non-positive integer a and complex
/// x anywhere off x = 0 (x = 0 needs Re a > 0, where Γ(a,0) = Γ(a)).
pub fn upper_incomplete_gamma(
    a: &HPComplex,
    x: &HPComplex,
    ctx: &PrecisionContext,
) -> Result<HPComplex> {
    if x.is_zero() {
        if a.re.to_f64() > 0.0 {
            return gamma_ref(a, ctx);
        }
        return Err(Error::Domain(
            "Gamma(a, 0) requires Re a > 0".into(),
        ));
    }
    let ax = x.abs().to_f64();
    let aa = a.abs().to_f64();
    let wd = ctx.working_digits() as f64;
    let cf_ok = x.re.to_f64() >= 0.0 && ax >= (aa + 8.0).max(0.30 * wd * std::f64::consts::LN_10);
    if cf_ok {
        return upper_cf(a, x, ctx);
    }
    // integer detection for a ≤ 0
    let ar = a.re.to_f64();
    if a.im.is_zero() && ar <= 0.25 && (ar - ar.round()).abs() < ctx.eps(-6) && ar.round() <= 0.0 {
        return upper_nonpositive_integer((-ar.round()) as u32, x, ctx);
    }
    upper_via_lower_series(a, x, ctx)
}

//! Error function for complex argument: Maclaurin series with a
//! cancellation-sized precision raise for moderate |w|, Laplace continued
//! fraction for erfc at large |w| in the right half-plane, oddness
//! elsewhere.

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{HPComplex, PrecisionContext};

fn erf_series(w: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    // cancellation in the alternating series is ~e^{|w|^2}
    let raise = (w.norm_sqr().to_f64() * std::f64::consts::LOG10_E).ceil() as u32 + 10;
    let ctx2 = ctx.with_extra(raise);
    let prec = ctx2.bits();
    let wh = HPComplex::new(ctx2.float_from(&w.re), ctx2.float_from(&w.im));
    let w2 = &wh * &wh;
    let mut term = wh.clone(); // w^{2k+1} / k!
    let mut acc = ctx2.zero();
    let tol = ctx.eps(6);
    for k in 0..100_000u32 {
        let den = Float::with_val(prec, 2 * k + 1);
        let contrib = HPComplex::new(term.re.clone() / &den, term.im.clone() / &den);
        acc = if k % 2 == 0 { &acc + &contrib } else { &acc - &contrib };
        if contrib.abs().to_f64() < tol && k > 2 {
            break;
        }
        term = &term * &w2;
        term = term.scale(&Float::with_val(prec, k + 1).recip());
    }
    let two_over_sqrt_pi = Float::with_val(prec, 2) / ctx2.pi().sqrt();
    let v = acc.scale(&two_over_sqrt_pi);
    HPComplex::new(ctx.float_from(&v.re), ctx.float_from(&v.im))
}

/// Modified-Lentz evaluation of erfc(w)·√π·e^{w^2} = 1/(w+ (1/2)/(w+ 1/(w+ (3/2)/(w+ ...))))
fn erfc_cf(w: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let prec = ctx.bits();
    let tiny = ctx.complex(1e-300, 0.0);
    let mut f = w.clone();
    if f.is_zero() {
        f = tiny.clone();
    }
    let mut c = f.clone();
    let mut d = ctx.zero();
    let tol = ctx.eps(4);
    for n in 1..=200_000u32 {
        let a = Float::with_val(prec, n) / 2u32;
        // b = w (odd steps add a/w pattern through Lentz recurrences)
        let b = w;
        let mut dn = &HPComplex::from_re(a.clone()) * &d;
        dn = &dn + b;
        if dn.is_zero() {
            dn = tiny.clone();
        }
        let mut cn = &HPComplex::from_re(a) * &c.recip();
        cn = &cn + b;
        if cn.is_zero() {
            cn = tiny.clone();
        }
        d = dn.recip();
        let delta = &cn * &d;
        f = &f * &delta;
        c = cn;
        if (&delta - &ctx.one()).abs().to_f64() < tol {
            let w2 = &(w * w) - &ctx.zero();
            let pref = (-&w2).exp().scale(&ctx.pi().sqrt().recip());
            return Ok(&pref / &f);
        }
    }
    Err(Error::NonConvergence("erfc continued fraction".into()))
}

/// erf(w) to working precision.
pub fn erf_hp(w: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    if w.is_zero() {
        return Ok(ctx.zero());
    }
    if w.re.is_sign_negative() && !w.re.is_zero() {
        let v = erf_hp(&(-w), ctx)?;
        return Ok(-&v);
    }
    let wd = ctx.working_digits() as f64;
    let n2 = w.norm_sqr().to_f64();
    // series while the e^{|w|^2} cancellation stays affordable
    if n2 * std::f64::consts::LOG10_E <= (2.0 * wd).min(600.0) {
        return Ok(erf_series(w, ctx));
    }
    // large |w|, Re w ≥ 0: erfc via continued fraction
    if w.re.to_f64() * w.re.to_f64() * std::f64::consts::LOG10_E > wd + 12.0 && w.re > w.im.clone().abs() {
        // erfc underflows below the working tolerance: erf = 1
        return Ok(ctx.one());
    }
    let erfc = erfc_cf(w, ctx)?;
    Ok(&ctx.one() - &erfc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_and_limits() {
        let ctx = PrecisionContext::new(30);
        assert!(erf_hp(&ctx.zero(), &ctx).unwrap().is_zero());
        // erf → 1 along the positive reals
        let v = erf_hp(&ctx.complex(40.0, 0.0), &ctx).unwrap();
        assert!((v.re.to_f64() - 1.0).abs() < 1e-44);
        // oddness
        let a = erf_hp(&ctx.complex(1.3, 0.4), &ctx).unwrap();
        let b = erf_hp(&ctx.complex(-1.3, -0.4), &ctx).unwrap();
        assert!((&a + &b).abs().to_f64() < 1e-42);
    }

    #[test]
    fn erf_one_frozen() {
        // Taylor oracle with exact rationals: erf(1) = (2/√π)·Σ (−1)^k/(k!(2k+1)),
        // frozen to 40 digits.
        let ctx = PrecisionContext::new(40);
        let v = erf_hp(&ctx.one(), &ctx).unwrap();
        let expect = Float::parse("0.8427007929497148693412206350826092592961")
            .map(|p| Float::with_val(ctx.bits(), p))
            .unwrap();
        assert!((v.re - expect).abs().to_f64() < 1e-39);
    }

    #[test]
    fn series_cf_consistency() {
        let ctx = PrecisionContext::new(30);
        // a point large enough for the CF, small enough for the series
        let w = ctx.complex(7.5, 1.0);
        let s = erf_series(&w, &ctx);
        let c = &ctx.one() - &erfc_cf(&w, &ctx).unwrap();
        assert!((&s - &c).abs().to_f64() < 1e-40);
    }
}

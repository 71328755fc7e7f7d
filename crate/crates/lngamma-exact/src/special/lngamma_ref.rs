//! Reference ln Γ(z) on the principal branch, independent of the
//! regularisation engine: upward recurrence pushes z far enough right that
//! an optimally truncated Stirling series converges below the working
//! tolerance, then ln Γ(z) = ln Γ(z+m) − Σ_{j<m} ln(z+j) with principal
//! logarithms (the identity holds exactly on the cut plane, and on the cut
//! itself with the from-above convention).

use rug::Float;

use super::bernoulli::bernoulli_even;
use crate::error::{Error, Result};
use crate::precision::{log_branch, HPComplex, PrecisionContext};

/// True when z sits (to working accuracy) on a pole of Γ.
fn near_pole(z: &HPComplex, ctx: &PrecisionContext) -> bool {
    if !z.im.is_zero() {
        return false;
    }
    let re = z.re.to_f64();
    if re > 0.5 {
        return false;
    }
    let nearest = re.round();
    nearest <= 0.0 && (re - nearest).abs() < ctx.eps(-2)
}

/// ln Γ(z), Arg z ∈ (−π, π], to working precision.
pub fn lngamma_reference(z: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    if near_pole(z, ctx) {
        return Err(Error::Pole(format!(
            "Gamma pole at z = {}",
            z.re.to_f64()
        )));
    }
    let prec = ctx.bits();
    let w = ctx.working_digits();

    // Recurrence target: |z+m| ≥ 10·working_digits keeps the Stirling tail
    // below 10^-(working+5) after ~working/4 terms.
    let radius = 10.0 * w as f64;
    let (re, im) = z.to_f64s();
    let m = if (re * re + im * im).sqrt() >= radius && re > 0.0 {
        0u32
    } else {
        let need = (radius * radius - im * im).max(0.0).sqrt() - re;
        need.ceil().max(1.0) as u32
    };

    let zs = HPComplex::new(z.re.clone() + Float::with_val(prec, m), z.im.clone());

    // Stirling series at zs.
    let log_zs = log_branch(&zs, 0)?;
    let half = Float::with_val(prec, 0.5);
    let mut acc = &HPComplex::new(zs.re.clone() - &half, zs.im.clone()) * &log_zs;
    acc = &acc - &zs;
    let two_pi = ctx.pi() * 2u32;
    acc.re += two_pi.ln() * &half; // + ln(2π)/2
    let inv = zs.recip();
    let inv2 = &inv * &inv;
    let mut pow = inv.clone();
    let tol = ctx.eps(6);
    let mut converged = false;
    for k in 1..=(4 * w as usize) {
        let b = bernoulli_even(k, ctx);
        let den = Float::with_val(prec, (2 * k * (2 * k - 1)) as u64);
        let term = pow.scale(&(b / den));
        acc = &acc + &term;
        if term.abs().to_f64() < tol {
            converged = true;
            break;
        }
        pow = &pow * &inv2;
    }
    if !converged {
        return Err(Error::NonConvergence(
            "Stirling tail did not reach the working tolerance".into(),
        ));
    }

    // Downward recurrence: subtract the principal logs of z, z+1, ..., z+m−1.
    let mut sum = ctx.zero();
    for j in 0..m {
        let zj = HPComplex::new(z.re.clone() + Float::with_val(prec, j), z.im.clone());
        if zj.is_zero() {
            return Err(Error::Pole("Gamma pole".into()));
        }
        sum = &sum + &log_branch(&zj, 0)?;
    }
    Ok(&acc - &sum)
}

/// Γ(z) = exp(lngamma_reference(z)).
pub fn gamma_ref(z: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    Ok(lngamma_reference(z, ctx)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        let ctx = PrecisionContext::new(30);
        // ln Γ(1) = 0
        let v = lngamma_reference(&ctx.one(), &ctx).unwrap();
        assert!(v.abs().to_f64() < 1e-42);
        // ln Γ(1/2) = (1/2) ln π
        let v = lngamma_reference(&ctx.complex(0.5, 0.0), &ctx).unwrap();
        let expect = ctx.pi().ln() / 2u32;
        assert!((v.re - expect).abs().to_f64() < 1e-42);
        assert!(v.im.is_zero());
        // ln Γ(5) = ln 24
        let v = lngamma_reference(&ctx.complex(5.0, 0.0), &ctx).unwrap();
        let expect = ctx.float(24.0).ln();
        assert!((v.re - expect).abs().to_f64() < 1e-42);
    }

    #[test]
    fn printed_reference_value() {
        // ln Γ(3 e^{iπ(1/2 + 1/100)}) to the 26 printed digits.
        let ctx = PrecisionContext::new(30);
        let t = ctx.float(0.5) + ctx.float(1.0) / ctx.float(100.0);
        let theta = ctx.pi() * t;
        let z = HPComplex::new(
            ctx.float(3.0) * theta.clone().cos(),
            ctx.float(3.0) * theta.sin(),
        );
        let v = lngamma_reference(&z, &ctx).unwrap();
        let re_expect = Float::parse("-4.4448078360199294879676721")
            .map(|p| Float::with_val(ctx.bits(), p))
            .unwrap();
        let im_expect = Float::parse("-0.68426539470619315579497619")
            .map(|p| Float::with_val(ctx.bits(), p))
            .unwrap();
        assert!((v.re - re_expect).abs().to_f64() < 1e-25);
        assert!((v.im - im_expect).abs().to_f64() < 1e-25);
    }

    #[test]
    fn recurrence_property() {
        let ctx = PrecisionContext::new(30);
        for (re, im) in [(2.3, 4.1), (0.7, -2.9), (11.0, 0.5)] {
            let z = ctx.complex(re, im);
            let z1 = ctx.complex(re + 1.0, im);
            let a = lngamma_reference(&z1, &ctx).unwrap();
            let b = lngamma_reference(&z, &ctx).unwrap();
            let lz = log_branch(&z, 0).unwrap();
            let d = (&(&a - &b) - &lz).abs().to_f64();
            assert!(d < 1e-41, "d = {d:.3e}");
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex(-1.25, 2.5);
        let a = lngamma_reference(&z.conj(), &ctx).unwrap();
        let b = lngamma_reference(&z, &ctx).unwrap().conj();
        assert!((&a - &b).abs().to_f64() < 1e-40);
    }

    #[test]
    fn pole_errors() {
        let ctx = PrecisionContext::new(30);
        assert!(lngamma_reference(&ctx.zero(), &ctx).is_err());
        assert!(lngamma_reference(&ctx.complex(-3.0, 0.0), &ctx).is_err());
        assert!(lngamma_reference(&ctx.complex(-3.0, 0.1), &ctx).is_ok());
    }
}

//! Regularised elementary series: the geometric series (the crucial step
//! inside Borel summation) and the logarithmic series it induces.

use crate::error::{Error, Result};
use crate::precision::{log_branch, HPComplex, PrecisionContext};

/// Regularised value of Σ_{k≥N} z^k: z^N/(1−z) everywhere except the pole
/// at z = 1 (equality for Re z < 1, regularised assignment for Re z ≥ 1).
pub fn geometric_regularised(z: &HPComplex, n: i64, ctx: &PrecisionContext) -> Result<HPComplex> {
    let one = ctx.one();
    let den = &one - z;
    if den.abs().to_f64() < ctx.eps(-4) {
        return Err(Error::Pole("geometric series pole at z = 1".into()));
    }
    if n < 0 {
        return Err(Error::Domain("geometric tail needs N >= 0".into()));
    }
    Ok(&z.powi(n) / &den)
}

/// Regularised value of Σ_{k≥1} (−1)^{k+1} z^k / k: ln(1+z) on the
/// principal branch for all z except the logarithmic singularity at −1.
pub fn log_series_regularised(z: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let w = &ctx.one() + z;
    if w.abs().to_f64() < ctx.eps(-6) {
        return Err(Error::Pole("logarithmic singularity at z = -1".into()));
    }
    log_branch(&w, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_examples() {
        let ctx = PrecisionContext::new(30);
        // empty tail at z=0: 1/(1−0) = 1
        let v = geometric_regularised(&ctx.zero(), 0, &ctx).unwrap();
        assert!((&v - &ctx.one()).abs().to_f64() < 1e-44);
        // divergent point z=2: regularised value 1/(1−2) = −1
        let v = geometric_regularised(&ctx.complex(2.0, 0.0), 0, &ctx).unwrap();
        assert!((v.re.to_f64() + 1.0).abs() < 1e-44);
        // pole
        assert!(geometric_regularised(&ctx.one(), 0, &ctx).is_err());
    }

    #[test]
    fn geometric_partial_sum_oracle() {
        // convergent regime: Σ_{k=3}^{200} (1/2)^k → (1/2)^3/(1−1/2) = 1/4
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex(0.5, 0.0);
        let v = geometric_regularised(&z, 3, &ctx).unwrap();
        assert!((v.re.to_f64() - 0.25).abs() < 1e-40);
        let mut partial = ctx.zero();
        let mut pow = z.powi(3);
        for _ in 3..=200 {
            partial = &partial + &pow;
            pow = &pow * &z;
        }
        let d = (&partial - &v).abs().to_f64();
        assert!(d < 1e-42, "d = {d:.3e}");
    }

    #[test]
    fn log_series_examples() {
        let ctx = PrecisionContext::new(30);
        // alternating harmonic series: ln 2
        let v = log_series_regularised(&ctx.one(), &ctx).unwrap();
        let expect = ctx.float(2.0).ln();
        assert!((v.re - expect).abs().to_f64() < 1e-44);
        // divergent point z=3: regularised value ln 4
        let v = log_series_regularised(&ctx.complex(3.0, 0.0), &ctx).unwrap();
        let expect = ctx.float(4.0).ln();
        assert!((v.re - expect).abs().to_f64() < 1e-44);
        // near the singularity: z = −1 + 1e−6 → ln(1e−6)
        let v = log_series_regularised(&ctx.complex(-1.0 + 1e-6, 0.0), &ctx).unwrap();
        let expect = ctx.float(1e-6).ln();
        assert!((v.re - expect).abs().to_f64() < 1e-30);
        assert!(log_series_regularised(&ctx.complex(-1.0, 0.0), &ctx).is_err());
    }

    #[test]
    fn log_series_partial_sums_converge_inside() {
        let ctx = PrecisionContext::new(30);
        let z = ctx.complex(0.3, 0.4);
        let v = log_series_regularised(&z, &ctx).unwrap();
        let mut acc = ctx.zero();
        let mut pow = z.clone();
        for k in 1..=260u32 {
            let t = pow.scale(&ctx.float(k as f64).recip());
            acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
            pow = &pow * &z;
        }
        assert!((&acc - &v).abs().to_f64() < 1e-35);
    }
}

//! Even-index Bernoulli numbers B_{2k} and the cosecant polynomials at
//! unity c_k(1) = (−1)^k 2^{2k} B_{2k} / (2k)!.
//!
//! Exact rationals via the tangent-number triangle up to k = 512 (cached,
//! append-only); high-precision floats from ζ(2k) beyond that.

use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::{Complete, Float, Integer, Rational};

use crate::precision::PrecisionContext;

/// Largest k for which B_{2k} is produced as an exact rational.
pub const EXACT_BERNOULLI_CAP: usize = 512;

fn tangent_numbers(n: usize) -> Vec<Integer> {
    // Brent-Harvey triangle: T[k] ends as the k-th tangent number.
    let mut t: Vec<Integer> = Vec::with_capacity(n + 1);
    t.push(Integer::from(0)); // unused slot 0
    t.push(Integer::from(1));
    for k in 2..=n {
        let prev = t[k - 1].clone();
        t.push(prev * Integer::from(k as u64 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = t[j - 1].clone() * Integer::from((j - k) as u64);
            let b = t[j].clone() * Integer::from((j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    t
}

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Exact B_{2k} for 1 ≤ k ≤ EXACT_BERNOULLI_CAP.
///
/// B_{2k} = (−1)^{k−1} · 2k · T_k / (4^k (4^k − 1)).
pub fn bernoulli_even_rational(k: usize) -> Rational {
    assert!(k >= 1 && k <= EXACT_BERNOULLI_CAP, "k out of exact range");
    let mut guard = cache().lock().unwrap();
    if guard.len() < k {
        let n = (k.max(guard.len() * 2)).max(16).min(EXACT_BERNOULLI_CAP);
        let t = tangent_numbers(n);
        guard.clear();
        for j in 1..=n {
            let four_j = Integer::from(1) << (2 * j as u32); // 4^j
            let den = four_j.clone() * (four_j - Integer::from(1));
            let mut num = t[j].clone() * Integer::from(2 * j as u64);
            if j % 2 == 0 {
                num = -num;
            }
            guard.push(Rational::from((num, den)));
        }
    }
    guard[k - 1].clone()
}

/// B_{2k} at working precision; exact below the cap, ζ(2k)-based above it
/// (where ζ(2k) is 1 to well beyond any working precision in use).
pub fn bernoulli_even(k: usize, ctx: &PrecisionContext) -> Float {
    if k <= EXACT_BERNOULLI_CAP {
        let r = bernoulli_even_rational(k);
        ctx.float(0.0) + r
    } else {
        // |B_{2k}| = 2 (2k)! ζ(2k) / (2π)^{2k}
        let prec = ctx.bits();
        let two_k = 2 * k as u32;
        let fact = Float::with_val(prec, Float::factorial(two_k));
        let two_pi = ctx.pi() * 2u32;
        let mut zeta2k = ctx.float(1.0);
        let mut n = 2u32;
        loop {
            let term = Float::with_val(prec, n).pow(-(two_k as i64));
            if term.clone().abs().to_f64() < ctx.eps(4) {
                break;
            }
            zeta2k += term;
            n += 1;
        }
        let mag = Float::with_val(prec, 2) * fact * zeta2k / two_pi.pow(two_k);
        if k % 2 == 0 {
            -mag
        } else {
            mag
        }
    }
}

/// Exact c_k(1) = (−1)^k 2^{2k} B_{2k} / (2k)!.
pub fn cosecant_poly_unity_rational(k: usize) -> Rational {
    let b = bernoulli_even_rational(k);
    let mut num = Integer::from(1) << (2 * k as u32);
    if k % 2 == 1 {
        num = -num;
    }
    let fact = Integer::factorial(2 * k as u32).complete();
    b * Rational::from((num, fact))
}

/// c_k(1) at working precision.
pub fn cosecant_poly_unity(k: usize, ctx: &PrecisionContext) -> Float {
    if k <= EXACT_BERNOULLI_CAP {
        ctx.float(0.0) + cosecant_poly_unity_rational(k)
    } else {
        let prec = ctx.bits();
        let b = bernoulli_even(k, ctx);
        let two_2k = Float::with_val(prec, 2).pow(2 * k as u32);
        let fact = Float::with_val(prec, Float::factorial(2 * k as u32));
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        ctx.float(sign) * two_2k * b / fact
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values_exact() {
        assert_eq!(bernoulli_even_rational(1), Rational::from((1, 6)));
        assert_eq!(bernoulli_even_rational(2), Rational::from((-1, 30)));
        assert_eq!(bernoulli_even_rational(3), Rational::from((1, 42)));
        assert_eq!(bernoulli_even_rational(15), Rational::from((8615841276005i64, 14322)));
    }

    #[test]
    fn signs_alternate() {
        for k in 1..60 {
            let b = bernoulli_even_rational(k);
            let expect_positive = k % 2 == 1;
            assert_eq!(b.cmp0() == std::cmp::Ordering::Greater, expect_positive);
        }
    }

    #[test]
    fn zeta_formula_cross_check() {
        // B_{2k} = (−1)^{k−1} (2k)! ζ(2k) / (2^{2k−1} π^{2k}) with ζ(2)=π²/6,
        // ζ(4)=π⁴/90 gives 1/6 and −1/30 independently of the triangle.
        let ctx = PrecisionContext::new(40);
        let pi2 = ctx.pi().square();
        let b2 = Float::with_val(ctx.bits(), 2) / (pi2.clone() * 2u32) * pi2.clone() / 6u32;
        assert!((b2 - bernoulli_even(1, &ctx)).abs().to_f64() < 1e-50);
        let pi4 = ctx.pi().square().square();
        let b4 = -Float::with_val(ctx.bits(), 24) / (pi4.clone() * 8u32) * pi4 / 90u32;
        assert!((b4 - bernoulli_even(2, &ctx)).abs().to_f64() < 1e-50);
    }

    #[test]
    fn cosecant_values() {
        assert_eq!(cosecant_poly_unity_rational(1), Rational::from((-1, 3)));
        assert_eq!(cosecant_poly_unity_rational(2), Rational::from((-1, 45)));
        // c_k(1) < 0 for all k ≥ 1: (−1)^k and sign(B_{2k}) = (−1)^{k−1}
        // always multiply to −1.
        for k in 1..40 {
            assert!(cosecant_poly_unity_rational(k).cmp0() == std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn float_path_above_cap_matches_scaling() {
        let ctx = PrecisionContext::new(30);
        // ratio B_{2k+2}/B_{2k} ≈ −(2k+1)(2k+2)/(2π)² for large k
        let a = bernoulli_even(EXACT_BERNOULLI_CAP + 1, &ctx);
        let b = bernoulli_even(EXACT_BERNOULLI_CAP + 2, &ctx);
        let k = (EXACT_BERNOULLI_CAP + 1) as f64;
        let expect = -(2.0 * k + 1.0) * (2.0 * k + 2.0) / (4.0 * std::f64::consts::PI.powi(2));
        let got = (b / a).to_f64();
        assert!((got / expect - 1.0).abs() < 1e-3);
    }
}

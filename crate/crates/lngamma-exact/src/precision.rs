//! Arbitrary-precision complex arithmetic, precision bookkeeping,
//! branch-aware logarithms/powers and Stokes-sector classification.
//!
//! All numerics in the crate are carried by [`HPComplex`], a pair of MPFR
//! reals. A [`PrecisionContext`] fixes the working precision: every value
//! created under a context carries `working_digits` decimal digits
//! (`target_digits` plus guard digits that absorb cancellation in the
//! principal-value integrals and in the Stokes-discontinuity terms).

use rug::float::{Constant, Special};
use rug::ops::Pow;
use rug::Float;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

const LOG2_10: f64 = 3.321928094887362;

/// Decimal-digit bookkeeping for a computation.
///
/// `working_digits = target_digits + guard_digits` with
/// `guard_digits = max(15, ceil(0.2 * target_digits))`, so intermediate
/// cancellation (the SD terms are ~1e-8 against O(1) values) does not eat
/// into the requested digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionContext {
    target_digits: u32,
    guard_digits: u32,
    working_digits: u32,
    bits: u32,
}

impl PrecisionContext {
    pub fn new(target_digits: u32) -> Self {
        assert!(target_digits >= 1, "target_digits must be positive");
        let guard = 15.max((0.2 * target_digits as f64).ceil() as u32);
        Self::with_guard(target_digits, guard)
    }

    pub fn with_guard(target_digits: u32, guard_digits: u32) -> Self {
        assert!(target_digits >= 1 && guard_digits >= 10);
        let working = target_digits + guard_digits;
        let bits = (working as f64 * LOG2_10).ceil() as u32 + 16;
        PrecisionContext {
            target_digits,
            guard_digits,
            working_digits: working,
            bits,
        }
    }

    /// Same target, `extra` more working digits. Used where a routine knows
    /// it is about to cancel `extra` digits (large truncated-series terms at
    /// small |z|, PV windows, ...).
    pub fn with_extra(&self, extra: u32) -> Self {
        Self::with_guard(self.target_digits, self.guard_digits + extra)
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }
    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }
    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// 10^(-(working_digits + off)); `off` may be negative.
    pub fn eps(&self, off: i32) -> f64 {
        let e = -(self.working_digits as i32 + off);
        10f64.powi(e.max(-307))
    }

    pub fn float(&self, v: f64) -> Float {
        Float::with_val(self.bits, v)
    }
    pub fn float_from(&self, v: &Float) -> Float {
        Float::with_val(self.bits, v)
    }
    pub fn pi(&self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }
    pub fn euler(&self) -> Float {
        Float::with_val(self.bits, Constant::Euler)
    }
    pub fn complex(&self, re: f64, im: f64) -> HPComplex {
        HPComplex::new(self.float(re), self.float(im))
    }
    pub fn zero(&self) -> HPComplex {
        self.complex(0.0, 0.0)
    }
    pub fn one(&self) -> HPComplex {
        self.complex(1.0, 0.0)
    }
    /// Default on-line tolerance for sector classification, 10^(-working/2).
    pub fn line_tol(&self) -> Float {
        let mut t = self.float(10.0);
        t = t.pow(-((self.working_digits / 2) as i32));
        t
    }
}

/// Complex value as two MPFR reals; precision is carried by the parts.
#[derive(Debug, Clone, PartialEq)]
pub struct HPComplex {
    pub re: Float,
    pub im: Float,
}

impl HPComplex {
    pub fn new(re: Float, im: Float) -> Self {
        HPComplex { re, im }
    }

    pub fn from_re(re: Float) -> Self {
        let im = Float::with_val(re.prec(), 0);
        HPComplex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        HPComplex::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, s: &Float) -> Self {
        HPComplex::new(self.re.clone() * s, self.im.clone() * s)
    }

    pub fn norm_sqr(&self) -> Float {
        let mut t = self.re.clone().square();
        t += self.im.clone().square();
        t
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in (−π, π]; real-axis values get 0 or π exactly.
    pub fn arg(&self) -> Float {
        if self.im.is_zero() {
            if self.re.is_sign_negative() && !self.re.is_zero() {
                Float::with_val(self.prec(), Constant::Pi)
            } else {
                Float::with_val(self.prec(), 0)
            }
        } else {
            self.im.clone().atan2(&self.re)
        }
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        HPComplex::new(self.re.clone() / &n, -self.im.clone() / &n)
    }

    /// Multiply by i.
    pub fn mul_i(&self) -> Self {
        HPComplex::new(-self.im.clone(), self.re.clone())
    }

    pub fn exp(&self) -> Self {
        let m = self.re.clone().exp();
        let c = self.im.clone().cos();
        let s = self.im.clone().sin();
        HPComplex::new(m.clone() * c, m * s)
    }

    /// Principal natural logarithm, Im ∈ (−π, π].
    pub fn ln(&self) -> Self {
        HPComplex::new(self.abs().ln(), self.arg())
    }

    pub fn sin(&self) -> Self {
        let (a, b) = (&self.re, &self.im);
        HPComplex::new(
            a.clone().sin() * b.clone().cosh(),
            a.clone().cos() * b.clone().sinh(),
        )
    }

    pub fn cos(&self) -> Self {
        let (a, b) = (&self.re, &self.im);
        HPComplex::new(
            a.clone().cos() * b.clone().cosh(),
            -(a.clone().sin() * b.clone().sinh()),
        )
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let half = Float::with_val(self.prec(), 0.5);
        let m = self.abs().sqrt();
        let a = self.arg() * &half;
        HPComplex::new(m.clone() * a.clone().cos(), m * a.sin())
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, mut n: i64) -> Self {
        let prec = self.prec();
        let mut base = self.clone();
        let mut inv = false;
        if n < 0 {
            inv = true;
            n = -n;
        }
        let mut acc = HPComplex::new(Float::with_val(prec, 1), Float::with_val(prec, 0));
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        if inv {
            acc.recip()
        } else {
            acc
        }
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &HPComplex {
    type Output = HPComplex;
    fn add(self, rhs: &HPComplex) -> HPComplex {
        HPComplex::new(self.re.clone() + &rhs.re, self.im.clone() + &rhs.im)
    }
}

impl Sub for &HPComplex {
    type Output = HPComplex;
    fn sub(self, rhs: &HPComplex) -> HPComplex {
        HPComplex::new(self.re.clone() - &rhs.re, self.im.clone() - &rhs.im)
    }
}

impl Mul for &HPComplex {
    type Output = HPComplex;
    fn mul(self, rhs: &HPComplex) -> HPComplex {
        let re = self.re.clone() * &rhs.re - self.im.clone() * &rhs.im;
        let im = self.re.clone() * &rhs.im + self.im.clone() * &rhs.re;
        HPComplex::new(re, im)
    }
}

impl Div for &HPComplex {
    type Output = HPComplex;
    fn div(self, rhs: &HPComplex) -> HPComplex {
        let n = rhs.norm_sqr();
        let re = (self.re.clone() * &rhs.re + self.im.clone() * &rhs.im) / &n;
        let im = (self.im.clone() * &rhs.re - self.re.clone() * &rhs.im) / &n;
        HPComplex::new(re, im)
    }
}

impl Neg for &HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        HPComplex::new(-self.re.clone(), -self.im.clone())
    }
}

/// |z| and an *unwound* phase: theta lives on the real line, not mod 2π,
/// so sector indices M ≠ 0 stay representable (z_M = z·e^(±2Miπ/β)
/// bookkeeping needs the winding).
#[derive(Debug, Clone, PartialEq)]
pub struct PolarPoint {
    pub modulus: Float,
    pub theta: Float,
}

impl PolarPoint {
    pub fn new(modulus: Float, theta: Float) -> Self {
        assert!(
            modulus.is_sign_positive() && !modulus.is_zero(),
            "modulus must be > 0"
        );
        PolarPoint { modulus, theta }
    }

    pub fn from_f64(modulus: f64, theta: f64, ctx: &PrecisionContext) -> Self {
        Self::new(ctx.float(modulus), ctx.float(theta))
    }

    /// Point |z|·e^(iπ·t) with t given exactly; places phases exactly on or
    /// off Stokes lines.
    pub fn from_theta_over_pi(modulus: f64, t: &Float, ctx: &PrecisionContext) -> Self {
        let theta = ctx.pi() * t;
        Self::new(ctx.float(modulus), theta)
    }

    pub fn to_cartesian(&self) -> HPComplex {
        let c = self.theta.clone().cos();
        let s = self.theta.clone().sin();
        HPComplex::new(self.modulus.clone() * c, self.modulus.clone() * s)
    }

    pub fn conj(&self) -> Self {
        PolarPoint {
            modulus: self.modulus.clone(),
            theta: -self.theta.clone(),
        }
    }

    /// Rotate the unwound phase by 2πk/β.
    pub fn rotated(&self, k: i64, beta: f64) -> Self {
        let prec = self.theta.prec();
        let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
        let shift = two_pi * Float::with_val(prec, k) / Float::with_val(prec, beta);
        PolarPoint {
            modulus: self.modulus.clone(),
            theta: self.theta.clone() + shift,
        }
    }
}

/// Which rotation a phase belongs to, relative to the Stokes lines
/// (2M±1)π/β.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    UpperRotation,
    LowerRotation,
}

/// Stokes-sector index plus an on-line flag. Off a line, theta lies
/// strictly inside (±(2M−1)π/β, ±(2M+1)π/β); on a line, theta equals
/// ±(2M+1)π/β to working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorLocation {
    pub m: i64,
    pub on_line: bool,
    pub side: Side,
}

/// Classify `theta` against the Stokes lines (2M+1)π/β. Total function;
/// ties break toward `on_line` when |theta − line| ≤ tol.
pub fn sector_locate(theta: &Float, beta: f64, tol: &Float) -> SectorLocation {
    let prec = theta.prec();
    let pi = Float::with_val(prec, Constant::Pi);
    let side = if theta.is_sign_negative() && !theta.is_zero() {
        Side::LowerRotation
    } else {
        Side::UpperRotation
    };
    // x = |theta|·β/π: lines sit at odd integers of x.
    let x = theta.clone().abs() * Float::with_val(prec, beta) / &pi;
    let k = x
        .clone()
        .add(Float::with_val(prec, 1))
        .div(Float::with_val(prec, 2))
        .floor()
        .to_f64() as i64; // x ∈ [2k−1, 2k+1)
    let line_lo = 2 * k - 1;
    let line_hi = 2 * k + 1;
    let scale = pi / Float::with_val(prec, beta);
    let d_lo = if line_lo >= 1 {
        (x.clone() - Float::with_val(prec, line_lo)).abs() * scale.clone()
    } else {
        Float::with_val(prec, Special::Infinity)
    };
    let d_hi = (x.clone() - Float::with_val(prec, line_hi)).abs() * scale;
    if d_lo <= *tol && d_lo <= d_hi {
        SectorLocation {
            m: k - 1,
            on_line: true,
            side,
        }
    } else if d_hi <= *tol {
        SectorLocation {
            m: k,
            on_line: true,
            side,
        }
    } else {
        SectorLocation {
            m: k,
            on_line: false,
            side,
        }
    }
}

/// ln|z| + i·(Arg z + 2πk) with Arg ∈ (−π, π].
pub fn log_branch(z: &HPComplex, k: i64) -> Result<HPComplex> {
    if z.is_zero() {
        return Err(Error::Domain("log of zero".into()));
    }
    let prec = z.prec();
    let mut im = z.arg();
    if k != 0 {
        let two_pi_k = Float::with_val(prec, Constant::Pi) * Float::with_val(prec, 2 * k);
        im += two_pi_k;
    }
    Ok(HPComplex::new(z.abs().ln(), im))
}

/// z^a = exp(a·(ln|z| + iθ)) with the *unwound* theta of the polar point.
pub fn pow_polar(z: &PolarPoint, a: &HPComplex) -> HPComplex {
    let log = HPComplex::new(z.modulus.clone().ln(), z.theta.clone());
    (a * &log).exp()
}

/// z^a for real exponent a.
pub fn pow_polar_f64(z: &PolarPoint, a: f64) -> HPComplex {
    let prec = z.modulus.prec();
    let af = Float::with_val(prec, a);
    let re = z.modulus.clone().ln() * &af;
    let im = z.theta.clone() * &af;
    HPComplex::new(re, im).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30)
    }

    #[test]
    fn context_guard_digits() {
        let c = ctx();
        assert_eq!(c.working_digits(), 45);
        assert!(c.working_digits() >= c.target_digits() + 10);
        let c200 = PrecisionContext::new(200);
        assert_eq!(c200.working_digits(), 240);
    }

    #[test]
    fn log_branch_examples() {
        let c = ctx();
        // log 1 = 0
        let l = log_branch(&c.one(), 0).unwrap();
        assert!(l.abs().to_f64() < 1e-40);
        // log(−1) = iπ on the principal branch
        let l = log_branch(&c.complex(-1.0, 0.0), 0).unwrap();
        assert!(l.re.clone().abs().to_f64() < 1e-40);
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        // branch shift by 2πi: log(−1, k=1) = 3iπ
        let l = log_branch(&c.complex(-1.0, 0.0), 1).unwrap();
        assert!((l.im.to_f64() - 3.0 * std::f64::consts::PI).abs() < 1e-14);
        assert!(log_branch(&c.zero(), 0).is_err());
    }

    #[test]
    fn exp_log_roundtrip() {
        let c = ctx();
        let pts = [(1.5, -2.25), (-3.0, 0.125), (0.001, 7.5), (-2.0, -8.0)];
        for (re, im) in pts {
            for k in [-2i64, 0, 3] {
                let z = c.complex(re, im);
                let w = log_branch(&z, k).unwrap().exp();
                let d = (&w - &z).abs().to_f64();
                assert!(d < 1e-40 * z.abs().to_f64().max(1.0), "d = {d:.3e}");
            }
        }
    }

    #[test]
    fn pow_polar_examples() {
        let c = ctx();
        // full winding, half power: (1, θ=2π)^(1/2) = −1
        let z = PolarPoint::new(c.float(1.0), c.pi() * 2u32);
        let w = pow_polar(&z, &c.complex(0.5, 0.0));
        assert!((w.re.to_f64() + 1.0).abs() < 1e-40);
        assert!(w.im.to_f64().abs() < 1e-40);
        // e^i = cos 1 + i sin 1
        let z = PolarPoint::new(c.float(1.0).exp(), c.float(0.0));
        let w = pow_polar(&z, &c.complex(0.0, 1.0));
        assert!((w.re.to_f64() - 1f64.cos()).abs() < 1e-15);
        assert!((w.im.to_f64() - 1f64.sin()).abs() < 1e-15);
        // (3 e^{0.6πi})^(−2) against a repeated-multiplication oracle
        let th = c.pi() * c.float(0.6);
        let z = PolarPoint::new(c.float(3.0), th);
        let w = pow_polar(&z, &c.complex(-2.0, 0.0));
        let zc = z.to_cartesian();
        let oracle = (&zc * &zc).recip();
        assert!((&w - &oracle).abs().to_f64() < 1e-42);
    }

    #[test]
    fn pow_polar_additivity() {
        let c = ctx();
        let z = PolarPoint::new(c.float(2.7), c.pi() * c.float(1.3));
        let a = c.complex(0.75, -1.5);
        let b = c.complex(-2.25, 0.5);
        let lhs = &pow_polar(&z, &a) * &pow_polar(&z, &b);
        let rhs = pow_polar(&z, &(&a + &b));
        let rel = (&lhs - &rhs).abs() / rhs.abs();
        assert!(rel.to_f64() < 1e-42);
    }

    #[test]
    fn sector_locate_examples() {
        let c = ctx();
        let tol = c.line_tol();
        // θ=0, β=2 → primary sector
        let s = sector_locate(&c.float(0.0), 2.0, &tol);
        assert_eq!((s.m, s.on_line), (0, false));
        // θ=π/2, β=2 → on the first line
        let th = c.pi() / 2u32;
        let s = sector_locate(&th, 2.0, &c.float(1e-40));
        assert_eq!((s.m, s.on_line), (0, true));
        // θ=0.51π, β=2 → sector M=1, upper
        let th = c.pi() * c.float(0.51);
        let s = sector_locate(&th, 2.0, &tol);
        assert_eq!((s.m, s.on_line, s.side), (1, false, Side::UpperRotation));
        // mirror
        let th = c.pi() * c.float(-0.51);
        let s = sector_locate(&th, 2.0, &tol);
        assert_eq!((s.m, s.on_line, s.side), (1, false, Side::LowerRotation));
        // deep sector: θ = 2.3π, β=1 → lines at odd π: 2.3 ∈ (1, 3) → M=1
        let th = c.pi() * c.float(2.3);
        let s = sector_locate(&th, 1.0, &tol);
        assert_eq!((s.m, s.on_line), (1, false));
    }

    #[test]
    fn sector_locally_constant() {
        let c = ctx();
        let tol = c.float(1e-12);
        let th0 = c.pi() * c.float(0.5) + c.float(5e-12); // just off the line
        let s0 = sector_locate(&th0, 2.0, &tol);
        // perturbing by < tol/2 never changes M
        for d in [-2e-12, -1e-12, 1e-12, 2e-12] {
            let s = sector_locate(&(th0.clone() + c.float(d)), 2.0, &tol);
            if !s.on_line && !s0.on_line {
                assert_eq!(s.m, s0.m);
            }
        }
    }
}

//! Oscillatory Bessel-type kernels
//!
//!   K̃_{it}(x) = ∫_ℝ cos(2x sinh v) e^{itv} dv,
//!   J⁻_{it}(x) = ∫_ℝ cos(2x cosh v) e^{itv} dv,
//!
//! regularized either by truncation plus two tail integrations by parts, or
//! by shifting the contour off the real axis. A K-Bessel primitive
//! K(t, w) = ∫_0^∞ e^{-w cosh s} cos(ts) ds (|arg w| < π, shifted contour)
//! provides the analytic continuation to complex kernel arguments:
//!
//!   K̃_{it}(x) = 2 cosh(πt/2) K(t, 2x),
//!   J⁻_{it}(x) = K(t, 2ix) + K(t, -2ix).

use crate::special::contour::adaptive_quad;
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

type C = Complex64;

/// Which oscillatory kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    KTilde,
    JMinus,
}

/// Regularization scheme for the defining integral on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselScheme {
    /// Truncate |v| ≤ V with x·e^V = 3000(1+|t|), two integrations by parts
    /// on each oscillatory tail.
    TruncateIbp,
    /// Shift the two exponential halves to Im(v) = ±π/8.
    Rotate,
}

fn s_fn(kind: KernelKind, v: C) -> C {
    match kind {
        KernelKind::KTilde => v.sinh(),
        KernelKind::JMinus => v.cosh(),
    }
}

fn truncate_ibp(kind: KernelKind, t: f64, x: f64) -> Result<C> {
    let vmax = (3000.0 * (1.0 + t.abs()) / x).ln().max(1.5);
    // core: 2 ∫_0^V cos(2x S(v)) cos(tv) dv
    let g = |v: f64| {
        let s = s_fn(kind, C::new(v, 0.0)).re;
        C::new(2.0 * (2.0 * x * s).cos() * (t * v).cos(), 0.0)
    };
    let (core, _) = adaptive_quad(&g, 0.0, vmax, 1e-10, 1e-13)?;
    // tails: (1/2) Σ_{ε1,ε2} ∫_V^∞ e^{i(2 ε1 x S + ε2 t v)} dv, two IBPs each
    let mut tail = C::new(0.0, 0.0);
    let i = C::new(0.0, 1.0);
    for &e1 in &[1.0f64, -1.0] {
        for &e2 in &[1.0f64, -1.0] {
            let (s, sp, spp) = {
                let (sh, ch) = (vmax.sinh(), vmax.cosh());
                match kind {
                    KernelKind::KTilde => (sh, ch, sh),
                    KernelKind::JMinus => (ch, sh, ch),
                }
            };
            let phi = 2.0 * e1 * x * s + e2 * t * vmax;
            let dphi = 2.0 * e1 * x * sp + e2 * t;
            let ddphi = 2.0 * e1 * x * spp;
            let g1 = ddphi / (i * dphi * dphi);
            tail += -(i * phi).exp() / (i * dphi) * (C::new(1.0, 0.0) + g1) * 0.5;
        }
    }
    Ok(core + tail)
}

fn rotate_scheme(kind: KernelKind, t: f64, x: f64) -> Result<C> {
    let b = PI / 8.0;
    let sinb = b.sin();
    let smax = ((45.0 + t.abs() * b + 5.0) / (2.0 * x * sinb)).asinh() + 0.5;
    let mut total = C::new(0.0, 0.0);
    let i = C::new(0.0, 1.0);
    for &e1 in &[1.0f64, -1.0] {
        // vertical leg 0 → i e1 b
        let fv = |y: f64| {
            let v = i * e1 * y;
            (i * (2.0 * e1 * x) * s_fn(kind, v)).exp() * (v * t).cos() * (i * e1)
        };
        let (leg1, _) = adaptive_quad(&fv, 0.0, b, 1e-10, 1e-14)?;
        // horizontal leg i e1 b → i e1 b + smax
        let fh = |sg: f64| {
            let v = C::new(sg, e1 * b);
            (i * (2.0 * e1 * x) * s_fn(kind, v)).exp() * (v * t).cos()
        };
        let (leg2, _) = adaptive_quad(&fh, 0.0, smax, 1e-10, 1e-14)?;
        total += leg1 + leg2;
    }
    Ok(total)
}

/// Evaluate a kernel by the named scheme; `x > 0`.
pub fn bessel_kernel_scheme(kind: KernelKind, t: f64, x: f64, scheme: BesselScheme) -> Result<C> {
    if !(x > 0.0) {
        return Err(CoreError::InvalidParameter(format!(
            "bessel kernel requires x > 0, got {x}"
        )));
    }
    match scheme {
        BesselScheme::TruncateIbp => truncate_ibp(kind, t, x),
        BesselScheme::Rotate => rotate_scheme(kind, t, x),
    }
}

/// Primary evaluation (truncation + tail integration by parts).
pub fn bessel_kernel(kind: KernelKind, t: f64, x: f64) -> Result<C> {
    bessel_kernel_scheme(kind, t, x, BesselScheme::TruncateIbp)
}

/// K(t, w) = ∫_0^∞ e^{-w cosh s} cos(ts) ds for |arg w| < π, by shifting the
/// contour to Im(s) = -arg(w)/2 where the exponent decays.
pub fn k_bessel_complex(t: f64, w: C) -> Result<C> {
    let gamma = w.arg();
    if !(gamma.abs() < PI - 1e-9) || w.norm() == 0.0 {
        return Err(CoreError::Region(format!(
            "k_bessel_complex needs |arg w| < π and w ≠ 0, got w = {w}"
        )));
    }
    let c0 = -gamma / 2.0;
    let i = C::new(0.0, 1.0);
    let decay = (gamma / 2.0).cos(); // = cos(γ + c0) at large σ
    let smax = (2.0 * (50.0 + t.abs() * c0.abs() + 5.0) / (w.norm() * decay * 0.7))
        .ln()
        .max(1.0)
        + 1.0;
    let mut total = C::new(0.0, 0.0);
    if c0 != 0.0 {
        let fv = |y: f64| {
            let s = i * y * c0.signum();
            (-(w * s.cosh())).exp() * (s * t).cos() * (i * c0.signum())
        };
        let (leg1, _) = adaptive_quad(&fv, 0.0, c0.abs(), 1e-11, 1e-300)?;
        total += leg1;
    }
    let fh = |sg: f64| {
        let s = C::new(sg, c0);
        (-(w * s.cosh())).exp() * (s * t).cos()
    };
    let (leg2, _) = adaptive_quad(&fh, 0.0, smax, 1e-11, 1e-300)?;
    total += leg2;
    Ok(total)
}

/// K̃_{it}(x) for complex x with |arg x| < π/2.
pub fn ktilde_complex(t: f64, x: C) -> Result<C> {
    Ok(k_bessel_complex(t, 2.0 * x)? * 2.0 * (PI * t / 2.0).cosh())
}

/// J⁻_{it}(x) for complex x with |arg x| < π/2 (both rotated pieces).
pub fn jminus_complex(t: f64, x: C) -> Result<C> {
    let i = C::new(0.0, 1.0);
    Ok(k_bessel_complex(t, 2.0 * i * x)? + k_bessel_complex(t, -2.0 * i * x)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schemes_agree() {
        for &(kind, t, x) in &[
            (KernelKind::KTilde, 0.0, 1.0),
            (KernelKind::KTilde, 5.0, 2.0),
            (KernelKind::JMinus, 3.0, 10.0),
            (KernelKind::JMinus, 0.5, 0.7),
        ] {
            let a = bessel_kernel_scheme(kind, t, x, BesselScheme::TruncateIbp).unwrap();
            let b = bessel_kernel_scheme(kind, t, x, BesselScheme::Rotate).unwrap();
            assert!(
                (a - b).norm() < 1e-6,
                "{kind:?} t={t} x={x}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn ktilde_real_and_even_in_t() {
        let v1 = bessel_kernel(KernelKind::KTilde, 5.0, 2.0).unwrap();
        let v2 = bessel_kernel(KernelKind::KTilde, -5.0, 2.0).unwrap();
        assert!(v1.im.abs() < 1e-8, "{v1}");
        assert!((v1 - v2.conj()).norm() < 1e-9);
        assert!((v1 - v2).norm() < 1e-8);
    }

    #[test]
    fn ktilde_matches_k_bessel_identity() {
        for &(t, x) in &[(0.0, 1.0), (4.0, 1.5), (9.0, 3.0)] {
            let direct = bessel_kernel(KernelKind::KTilde, t, x).unwrap();
            let viak = ktilde_complex(t, C::new(x, 0.0)).unwrap();
            assert!(
                (direct - viak).norm() < 2e-6 * (1.0 + viak.norm()),
                "t={t} x={x}: {direct} vs {viak}"
            );
        }
    }

    #[test]
    fn jminus_matches_rotated_k_pieces() {
        for &(t, x) in &[(3.0, 10.0), (1.0, 2.0)] {
            let direct = bessel_kernel(KernelKind::JMinus, t, x).unwrap();
            let viak = jminus_complex(t, C::new(x, 0.0)).unwrap();
            assert!(
                (direct - viak).norm() < 2e-6 * (1.0 + viak.norm()),
                "t={t} x={x}: {direct} vs {viak}"
            );
        }
    }

    #[test]
    fn k_bessel_complex_conjugation_and_positivity() {
        let w = C::new(1.3, 2.1);
        let a = k_bessel_complex(4.0, w).unwrap();
        let b = k_bessel_complex(4.0, w.conj()).unwrap();
        assert!((a.conj() - b).norm() < 1e-12 * (1.0 + a.norm()));
        // real positive argument, t = 0: classical K_0 > 0
        let k0 = k_bessel_complex(0.0, C::new(2.0, 0.0)).unwrap();
        assert!(k0.re > 0.0 && k0.im.abs() < 1e-12);
        // K_0(2) = 0.11389387274953343565...
        assert!((k0.re - 0.113893872749533).abs() < 1e-10);
    }

    #[test]
    fn jminus_derivative_bound_pattern() {
        let t = 3.0;
        let x = 10.0;
        let h = 1e-4;
        let f = |x: f64| bessel_kernel(KernelKind::JMinus, t, x).unwrap();
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        let bound = 100.0 * (1.0 + t / x);
        assert!(d.norm() < bound, "derivative {d} exceeds {bound}");
        assert!(f(x).norm().is_finite());
    }

    #[test]
    fn rejects_nonpositive_x() {
        assert!(bessel_kernel(KernelKind::KTilde, 1.0, 0.0).is_err());
        assert!(bessel_kernel(KernelKind::JMinus, 1.0, -2.0).is_err());
    }
}

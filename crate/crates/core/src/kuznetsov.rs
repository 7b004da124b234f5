//! Integral kernels of the GL(3) Kuznetsov formula: the meromorphic factors
//! G̃± and G, the trigonometric factors S^{±±}, the w₄-kernel in both its
//! Mellin–Barnes and Bessel representations, the w₆ double Mellin–Barnes
//! kernel, the Φ_w transforms against h_{T,M}, and the ȟ transform.

use crate::lfun::{AfeWeightTable, AfeWhich};
use crate::special::bessel::{jminus_complex, k_bessel_complex};
use crate::special::contour::adaptive_quad;
use crate::special::gamma::lgamma;
use crate::spectral::{SpectralGrid, SpectralTriple, TestFunctionParams};
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

type C = Complex64;

fn near_nonpositive_integer(z: C) -> bool {
    z.im.abs() < 1e-8 && z.re < 0.5 && (z.re - z.re.round()).abs() < 1e-8 && z.re.round() <= 0.0
}

/// G̃^±(s, μ) = π^{-3s}/(12288 π^{7/2}) ·
/// (Π Γ(½(s−μₖ))/Γ(½(1−s+μₖ)) ± i Π Γ(½(1+s−μₖ))/Γ(½(2−s+μₖ))).
pub fn g_tilde(sign: i32, s: C, mu: &SpectralTriple) -> Result<C> {
    assert!(sign == 1 || sign == -1);
    let mus = mu.mu();
    let mut l1 = C::new(0.0, 0.0);
    let mut l2 = C::new(0.0, 0.0);
    for k in 0..3 {
        let a1 = (s - mus[k]) / 2.0;
        let b1 = (1.0 - s + mus[k]) / 2.0;
        let a2 = (1.0 + s - mus[k]) / 2.0;
        let b2 = (2.0 - s + mus[k]) / 2.0;
        for z in [a1, b1, a2, b2] {
            if near_nonpositive_integer(z) {
                return Err(CoreError::Pole(format!("g_tilde near pole at argument {z}")));
            }
        }
        l1 += lgamma(a1) - lgamma(b1);
        l2 += lgamma(a2) - lgamma(b2);
    }
    let pref = -3.0 * s * PI.ln() - (12288.0 * PI.powf(3.5)).ln();
    let i = C::new(0.0, 1.0);
    Ok((pref + l1).exp() + (sign as f64) * i * (pref + l2).exp())
}

/// G(s, μ) = Γ(s₁+s₂)⁻¹ Π Γ(s₁−μₖ)Γ(s₂+μₖ).
pub fn g_double(s1: C, s2: C, mu: &SpectralTriple) -> Result<C> {
    let mus = mu.mu();
    let mut acc = -lgamma(s1 + s2);
    for k in 0..3 {
        let a = s1 - mus[k];
        let b = s2 + mus[k];
        if near_nonpositive_integer(a) || near_nonpositive_integer(b) {
            return Err(CoreError::Pole(format!(
                "g_double near pole: s1-mu={a}, s2+mu={b}"
            )));
        }
        acc += lgamma(a) + lgamma(b);
    }
    Ok(acc.exp())
}

/// The four trigonometric factors S^{ε₁ε₂}(s, μ).
pub fn s_trig(eps: (i32, i32), s1: C, s2: C, mu: &SpectralTriple) -> Result<C> {
    let nu = mu.nu();
    let mus = mu.mu();
    let guard = |den: C, what: &str| -> Result<C> {
        if den.norm() < 1e-8 {
            Err(CoreError::Pole(format!("s_trig denominator {what} ~ 0")))
        } else {
            Ok(den)
        }
    };
    let c = |k: usize| (1.5 * PI * nu[k]).cos();
    let sden = |k: usize| (1.5 * PI * nu[k]).sin();
    match eps {
        (1, 1) => Ok(c(0) * c(1) * c(2) / (24.0 * PI * PI)),
        (1, -1) => {
            let den = guard(sden(0), "sin(3πν₁/2)")? * guard(sden(2), "sin(3πν₃/2)")?
                * guard((PI * (s1 + s2)).sin(), "sin(π(s₁+s₂))")?;
            Ok(-c(1) * (PI * (s1 - mus[0])).sin() * (PI * (s2 + mus[1])).sin()
                * (PI * (s2 + mus[2])).sin()
                / (32.0 * PI * PI * den))
        }
        (-1, 1) => {
            let den = guard(sden(1), "sin(3πν₂/2)")? * guard(sden(2), "sin(3πν₃/2)")?
                * guard((PI * (s1 + s2)).sin(), "sin(π(s₁+s₂))")?;
            Ok(-c(0) * (PI * (s1 - mus[0])).sin() * (PI * (s1 - mus[1])).sin()
                * (PI * (s2 + mus[2])).sin()
                / (32.0 * PI * PI * den))
        }
        (-1, -1) => {
            let den = guard(sden(1), "sin(3πν₂/2)")? * guard(sden(0), "sin(3πν₁/2)")?;
            Ok(c(2) * (PI * (s1 - mus[1])).sin() * (PI * (s2 + mus[1])).sin()
                / (32.0 * PI * PI * den))
        }
        _ => Err(CoreError::InvalidParameter("eps components must be ±1".into())),
    }
}


/// Any-branch log of sin(w), stable for large |Im w|.
fn log_sin(w: C) -> C {
    let i = C::new(0.0, 1.0);
    if w.im > 2.0 {
        // sin w ≈ (i/2) e^{-iw}
        -i * w + C::new(0.5f64.ln(), PI / 2.0) + (C::new(1.0, 0.0) - (2.0 * i * w).exp()).ln()
    } else if w.im < -2.0 {
        i * w + C::new(0.5f64.ln(), -PI / 2.0) + (C::new(1.0, 0.0) - (-2.0 * i * w).exp()).ln()
    } else {
        w.sin().ln()
    }
}

/// Any-branch log of cos(w), stable for large |Im w|.
fn log_cos(w: C) -> C {
    let i = C::new(0.0, 1.0);
    if w.im > 2.0 {
        -i * w - C::new(2f64.ln(), 0.0) + (C::new(1.0, 0.0) + (2.0 * i * w).exp()).ln()
    } else if w.im < -2.0 {
        i * w - C::new(2f64.ln(), 0.0) + (C::new(1.0, 0.0) + (-2.0 * i * w).exp()).ln()
    } else {
        w.cos().ln()
    }
}

/// Any-branch log of S^{ε₁ε₂}(s, μ) (exponentiation cancels the branch).
fn log_s_trig(eps: (i32, i32), s1: C, s2: C, mu: &SpectralTriple) -> Result<C> {
    let nu = mu.nu();
    let mus = mu.mu();
    let lc = |k: usize| log_cos(1.5 * PI * nu[k]);
    let ls_nu = |k: usize| log_sin(1.5 * PI * nu[k]);
    let ipi = C::new(0.0, PI);
    match eps {
        (1, 1) => Ok(lc(0) + lc(1) + lc(2) - (24.0 * PI * PI).ln()),
        (1, -1) => Ok(ipi
            + lc(1)
            + log_sin(PI * (s1 - mus[0]))
            + log_sin(PI * (s2 + mus[1]))
            + log_sin(PI * (s2 + mus[2]))
            - ls_nu(0)
            - ls_nu(2)
            - log_sin(PI * (s1 + s2))
            - (32.0 * PI * PI).ln()),
        (-1, 1) => Ok(ipi
            + lc(0)
            + log_sin(PI * (s1 - mus[0]))
            + log_sin(PI * (s1 - mus[1]))
            + log_sin(PI * (s2 + mus[2]))
            - ls_nu(1)
            - ls_nu(2)
            - log_sin(PI * (s1 + s2))
            - (32.0 * PI * PI).ln()),
        (-1, -1) => Ok(lc(2) + log_sin(PI * (s1 - mus[1])) + log_sin(PI * (s2 + mus[1]))
            - ls_nu(1)
            - ls_nu(0)
            - (32.0 * PI * PI).ln()),
        _ => Err(CoreError::InvalidParameter("eps components must be ±1".into())),
    }
}

// ---------------------------------------------------------------------------
// K_{w4}: Mellin–Barnes representation.

/// Evaluation route for the w₄ kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KW4Method {
    Mellin,
    Bessel,
}

/// K_{w4}(y; μ) = ∫ |y|^{-u} G̃^{sgn y}(u, μ) du/2πi along a bent contour:
/// vertical at Re(u) = `abscissa` through the pole heights and the
/// stationary-phase window, bending left beyond it where Stirling decay
/// takes over.
pub fn k_w4_mellin(y: f64, mu: &SpectralTriple, abscissa: f64) -> Result<C> {
    if y == 0.0 {
        return Err(CoreError::InvalidParameter("y must be nonzero".into()));
    }
    for m in mu.mu() {
        if m.re.abs() > 0.2 {
            return Err(CoreError::Region(
                "default w4 contour requires μ near the imaginary axis".into(),
            ));
        }
    }
    let sign = if y > 0.0 { 1 } else { -1 };
    let p = PI.powi(3) * y.abs();
    let tmax = mu.mu().iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    let v0 = 2.72 * p.cbrt() + tmax + 15.0;
    let vend = v0 + 55.0;
    let kappa = 1.0;
    let lny = y.abs().ln();
    let f = |v: f64| {
        let (re, dre) = if v.abs() <= v0 {
            (abscissa, 0.0)
        } else {
            (abscissa - kappa * (v.abs() - v0), -kappa * v.signum())
        };
        let u = C::new(re, v);
        let du = C::new(dre, 1.0);
        match g_tilde(sign, u, mu) {
            Ok(g) => (-u * lny).exp() * g * du,
            Err(_) => C::new(0.0, 0.0),
        }
    };
    let (total, _err) = adaptive_quad(&f, -vend, vend, 1e-9, 1e-300)?;
    Ok(total / C::new(0.0, 2.0 * PI)) // the integrand carries du/dv already
}


/// Fixed-step variant of the bent-contour Mellin integral, for the Φ
/// quadratures where the kernel is evaluated across a whole μ-lattice.
pub fn k_w4_mellin_fixed(y: f64, mu: &SpectralTriple, abscissa: f64, step: f64) -> Result<C> {
    if y == 0.0 {
        return Err(CoreError::InvalidParameter("y must be nonzero".into()));
    }
    let sign = if y > 0.0 { 1 } else { -1 };
    let p = PI.powi(3) * y.abs();
    let tmax = mu.mu().iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    let v0 = 2.72 * p.cbrt() + tmax + 15.0;
    let vend = v0 + 55.0;
    let kappa = 1.0;
    let lny = y.abs().ln();
    // integrate the three straight pieces separately: the contour has
    // corners at ±v0 where a single midpoint grid loses two orders
    let mut acc = C::new(0.0, 0.0);
    for (a, b) in [(-vend, -v0), (-v0, v0), (v0, vend)] {
        let n = ((b - a) / step).ceil() as usize;
        let h = (b - a) / n as f64;
        let mut seg = C::new(0.0, 0.0);
        for j in 0..n {
            let v = a + (j as f64 + 0.5) * h;
            let (re, dre) = if v.abs() <= v0 {
                (abscissa, 0.0)
            } else {
                (abscissa - kappa * (v.abs() - v0), -kappa * v.signum())
            };
            let u = C::new(re, v);
            let du = C::new(dre, 1.0);
            if let Ok(g) = g_tilde(sign, u, mu) {
                seg += (-u * lny).exp() * g * du;
            }
        }
        acc += seg * h;
    }
    Ok(acc / C::new(0.0, 2.0 * PI))
}

// ---------------------------------------------------------------------------
// K_{w4}: Bessel representation.

/// The two u-integrals of the Bessel representation:
/// (1/3072π⁵)[∫ J⁻(2√u)(π³|y|/u^{3/2})^{-μ₃} e^{-2iπ³y/u} du/u
///          + ∫ K̃(2√u)(π³|y|/u^{3/2})^{-μ₃} e^{+2iπ³y/u} du/u].
///
/// Near u = 0 each integral is deformed into the half-plane where its phase
/// factor decays; beyond the stationary region the J⁻ tail is split into
/// its two rotated K-Bessel pieces.
pub fn k_w4_bessel(y: f64, mu: &SpectralTriple, rel_tol: f64) -> Result<C> {
    if y == 0.0 {
        return Err(CoreError::InvalidParameter("y must be nonzero".into()));
    }
    let mus = mu.mu();
    for m in mus {
        if m.re.abs() > 1e-9 {
            return Err(CoreError::Region(
                "bessel route requires μ on the imaginary axis".into(),
            ));
        }
    }
    let eps = y.signum();
    let p = PI.powi(3) * y.abs();
    let tord = (mus[0] - mus[1]).im;
    let mu3 = mus[2];
    let lnp = p.ln();
    let gfac = |u: C| (-mu3 * (lnp - 1.5 * u.ln())).exp() / u;
    let i = C::new(0.0, 1.0);
    let kt_scale = 2.0 * (PI * tord / 2.0).cosh();

    // K̃ term: phase e^{+2iεP/u}; deform toward arg(u) = -ε·θ near zero.
    let theta_k = -eps * 0.5;
    let ub = (2.0 * (2.0 * p).sqrt()).max(1.0);
    let spiral_k = |tau: f64| -> C {
        let u = ub * tau * (i * theta_k * (1.0 - tau)).exp();
        let du = ub * (i * theta_k * (1.0 - tau)).exp() * (C::new(1.0, 0.0) - i * theta_k * tau);
        let kt = match k_bessel_complex(tord, 4.0 * u.sqrt()) {
            Ok(v) => v * kt_scale,
            Err(_) => return C::new(0.0, 0.0),
        };
        kt * gfac(u) * (2.0 * i * eps * p / u).exp() * du
    };
    let (ik_near, _) = adaptive_quad(&spiral_k, 1e-4, 1.0, rel_tol, 1e-300)?;
    let uk_max = ((tord.abs() + 45.0) / 4.0).powi(2).max(ub + 10.0);
    let real_k = |u: f64| {
        let uc = C::new(u, 0.0);
        let kt = match k_bessel_complex(tord, C::new(4.0 * u.sqrt(), 0.0)) {
            Ok(v) => v * kt_scale,
            Err(_) => return C::new(0.0, 0.0),
        };
        kt * gfac(uc) * (2.0 * i * eps * p / uc).exp()
    };
    let (ik_far, _) = adaptive_quad(&real_k, ub, uk_max, rel_tol, 1e-300)?;

    // J⁻ term: phase e^{-2iεP/u}; deform toward arg(u) = +ε·θ near zero.
    let theta_j = eps * 0.5;
    let ua = (0.3 * p.powf(2.0 / 3.0)).max(0.5);
    let spiral_j = |tau: f64| -> C {
        let u = ua * tau * (i * theta_j * (1.0 - tau)).exp();
        let du = ua * (i * theta_j * (1.0 - tau)).exp() * (C::new(1.0, 0.0) - i * theta_j * tau);
        let jm = match jminus_complex(tord, u.sqrt() * 2.0) {
            Ok(v) => v,
            Err(_) => return C::new(0.0, 0.0),
        };
        jm * gfac(u) * (-2.0 * i * eps * p / u).exp() * du
    };
    let (ij_near, _) = adaptive_quad(&spiral_j, 1e-4, 1.0, rel_tol, 1e-300)?;
    let wfar = (2.5 * p).cbrt().max((tord.abs() + 40.0) / 4.0) + 2.0;
    let ufar = wfar * wfar;
    let real_j = |u: f64| {
        let uc = C::new(u, 0.0);
        let jm = match jminus_complex(tord, C::new(2.0 * u.sqrt(), 0.0)) {
            Ok(v) => v,
            Err(_) => return C::new(0.0, 0.0),
        };
        jm * gfac(uc) * (-2.0 * i * eps * p / uc).exp()
    };
    let (ij_mid, _) = adaptive_quad(&real_j, ua, ufar, rel_tol, 1e-300)?;
    // Far tails in w = √u: J⁻(2w) = K(t, 4iw) + K(t, -4iw); the -4iw piece
    // decays on the upward ray, the +4iw piece on the downward one.
    let mut ij_far = C::new(0.0, 0.0);
    for &(piece_sign, ray) in &[(-1.0f64, 1.0f64), (1.0, -1.0)] {
        let dir = (i * ray * PI / 4.0).exp();
        let leg = |xi: f64| -> C {
            let w = wfar + xi * dir;
            let u = w * w;
            let kp = match k_bessel_complex(tord, 4.0 * i * piece_sign * w) {
                Ok(v) => v,
                Err(_) => return C::new(0.0, 0.0),
            };
            kp * gfac(u) * (-2.0 * i * eps * p / u).exp() * 2.0 * w * dir
        };
        let (v, _) = adaptive_quad(&leg, 0.0, 14.0, rel_tol, 1e-300)?;
        ij_far += v;
    }
    Ok((ij_near + ij_mid + ij_far + ik_near + ik_far) / (3072.0 * PI.powi(5)))
}

/// K_{w4}(y; μ) by the requested route.
pub fn k_w4(y: f64, mu: &SpectralTriple, method: KW4Method) -> Result<C> {
    match method {
        KW4Method::Mellin => k_w4_mellin(y, mu, 0.25),
        KW4Method::Bessel => k_w4_bessel(y, mu, 1e-9),
    }
}

// ---------------------------------------------------------------------------
// K_{w6}: double Mellin–Barnes kernel.

/// K^{ε₁ε₂}_{w6}(y; μ) = ∫∫ |4π²y₁|^{-s₁}|4π²y₂|^{-s₂} G(s,μ) S^{ε₁ε₂}(s,μ)
/// ds₁ds₂/(2πi)², with εᵢ = sgn(yᵢ).
pub fn k_w6(y1: f64, y2: f64, mu: &SpectralTriple) -> Result<C> {
    if y1 == 0.0 || y2 == 0.0 {
        return Err(CoreError::InvalidParameter(
            "y components must be nonzero".into(),
        ));
    }
    if y1 > 0.0 && y2 > 0.0 {
        k_w6_plus_plus(y1, y2, mu)
    } else {
        k_w6_general(y1, y2, mu)
    }
}

/// Fast path for S^{++}: the factor has no s-dependence and the integrand
/// decays exponentially in every direction, so a fixed tensor trapezoid grid
/// applies; the coupled 1/Γ(s₁+s₂) lives on the diagonal sum grid.
fn k_w6_plus_plus(y1: f64, y2: f64, mu: &SpectralTriple) -> Result<C> {
    let mus = mu.mu();
    let tmax = mus.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    let vmax = tmax + 14.0;
    let h = 0.15;
    let n = (2.0 * vmax / h).ceil() as usize;
    let c0 = 0.5;
    let l1 = (4.0 * PI * PI * y1).ln();
    let l2 = (4.0 * PI * PI * y2).ln();
    let spp = s_trig((1, 1), C::new(c0, 0.0), C::new(c0, 0.0), mu)?;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for j in 0..n {
        let v = -vmax + (j as f64 + 0.5) * h;
        let s1 = C::new(c0, v);
        let mut la = -s1 * l1;
        let mut lb = -s1 * l2;
        for k in 0..3 {
            la += lgamma(s1 - mus[k]);
            lb += lgamma(s1 + mus[k]);
        }
        a.push(la.exp());
        b.push(lb.exp());
    }
    let mut cdiag = Vec::with_capacity(2 * n - 1);
    for m in 0..(2 * n - 1) {
        let v = -2.0 * vmax + (m as f64 + 1.0) * h;
        cdiag.push((-lgamma(C::new(2.0 * c0, v))).exp());
    }
    let mut acc = C::new(0.0, 0.0);
    for (j, &aj) in a.iter().enumerate() {
        let mut row = C::new(0.0, 0.0);
        for (k, &bk) in b.iter().enumerate() {
            row += bk * cdiag[j + k];
        }
        acc += aj * row;
    }
    // (i dv₁)(i dv₂)/(2πi)² = dv₁dv₂/(4π²)
    Ok(acc * spp * h * h / (4.0 * PI * PI))
}

/// General-sign kernel on left-bent contours with Re(s₁)+Re(s₂) < 1, as
/// the 1/sin(π(s₁+s₂)) factor of the mixed signs requires.
fn k_w6_general(y1: f64, y2: f64, mu: &SpectralTriple) -> Result<C> {
    let eps = (y1.signum() as i32, y2.signum() as i32);
    let mus = mu.mu();
    let tmax = mus.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    let v0 = tmax + 12.0;
    let vend = v0 + 40.0;
    let kappa = 0.7;
    let base = 0.45;
    let h = 0.12;
    let path = |v: f64| -> (C, C) {
        if v.abs() <= v0 {
            (C::new(base, v), C::new(0.0, 1.0))
        } else {
            (
                C::new(base - kappa * (v.abs() - v0), v),
                C::new(-kappa * v.signum(), 1.0),
            )
        }
    };
    let l1 = (4.0 * PI * PI * y1.abs()).ln();
    let l2 = (4.0 * PI * PI * y2.abs()).ln();
    let n = (2.0 * vend / h).ceil() as usize;
    let mus = mu.mu();
    let mut acc = C::new(0.0, 0.0);
    for j1 in 0..n {
        let v1 = -vend + (j1 as f64 + 0.5) * h;
        let (s1, ds1) = path(v1);
        for j2 in 0..n {
            let v2 = -vend + (j2 as f64 + 0.5) * h;
            let (s2, ds2) = path(v2);
            // assemble in log space: the mixed-sign sine factors overflow
            // long before the Gamma decay brings the product back down
            let mut lt = -lgamma(s1 + s2) - s1 * l1 - s2 * l2;
            let mut bad = false;
            for k in 0..3 {
                let a = s1 - mus[k];
                let b = s2 + mus[k];
                if near_nonpositive_integer(a) || near_nonpositive_integer(b) {
                    bad = true;
                    break;
                }
                lt += lgamma(a) + lgamma(b);
            }
            if bad {
                continue;
            }
            lt += match log_s_trig(eps, s1, s2, mu) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if lt.re > 650.0 || !lt.re.is_finite() {
                continue;
            }
            acc += lt.exp() * ds1 * ds2;
        }
    }
    // each ds carries its dv-parametrization; (2πi)² = -4π²
    Ok(acc * h * h / C::new(-4.0 * PI * PI, 0.0))
}

// ---------------------------------------------------------------------------
// Φ transforms and the ȟ transform.

/// Which Φ transform.
#[derive(Debug, Clone, Copy)]
pub enum PhiKernel {
    W4 { y: f64 },
    W5 { y: f64 },
    W6 { y1: f64, y2: f64 },
}

/// Optional AFE weight factor multiplying h (the h₁/h₂ test functions).
#[derive(Debug, Clone, Copy)]
pub struct PhiWeight {
    pub which: AfeWhich,
    pub sigma: f64,
    pub tau: f64,
    pub y: f64,
    pub cutoff_a: u32,
}

/// Grid controls for the Φ and ȟ quadratures.
#[derive(Debug, Clone, Copy)]
pub struct PhiOptions {
    pub radius_in_m: f64,
    pub spacing: f64,
    pub weight: Option<PhiWeight>,
}

impl Default for PhiOptions {
    fn default() -> Self {
        Self {
            radius_in_m: 3.0,
            spacing: 0.35,
            weight: None,
        }
    }
}

/// Φ_w(y) = ∫ h(μ)·K_w(y; μ) d_spec μ over the localization region, with an
/// optional multiplicative AFE-weight factor per node
/// (Φ_{w5}(y) uses K_{w4}(−y; −μ)).
pub fn phi_transform(
    kernel: PhiKernel,
    params: &TestFunctionParams,
    opts: &PhiOptions,
) -> Result<C> {
    let grid = SpectralGrid::build(params, opts.radius_in_m, opts.spacing)?;
    let weight = opts.weight;
    let f = move |mu: &SpectralTriple| -> C {
        let kv = match kernel {
            // abscissa 0.45 keeps the contour clear of the pole heights
            // that dominate the small-y kernels
            PhiKernel::W4 { y } => k_w4_mellin_fixed(y, mu, 0.45, 0.05),
            PhiKernel::W5 { y } => k_w4_mellin_fixed(-y, &mu.neg(), 0.45, 0.05),
            PhiKernel::W6 { y1, y2 } => k_w6(y1, y2, mu),
        };
        let mut v = match kv {
            Ok(v) => v,
            Err(_) => return C::new(0.0, 0.0),
        };
        if let Some(w) = weight {
            let hh = (165.0 * w.cutoff_a as f64 / (50.0 * PI * PI)).sqrt() + 0.5;
            let table = match AfeWeightTable::build(w.sigma, w.tau, mu, w.cutoff_a, hh) {
                Ok(t) => t,
                Err(_) => return C::new(0.0, 0.0),
            };
            v *= match w.which {
                AfeWhich::W => table.w(w.y),
                AfeWhich::WTilde => table.w_tilde(w.y),
            };
        }
        v
    };
    Ok(grid.sum_weighted(f))
}

/// ȟ_{T,M}(v₁, v₂) = (3/T³) ∫ h_{T,M}(μ) v₁^{−ν₁} v₂^{−μ₂} d_spec μ.
pub fn h_check_transform(
    v1: f64,
    v2: f64,
    params: &TestFunctionParams,
    radius_in_m: f64,
    spacing: f64,
) -> Result<C> {
    if !(v1 > 0.0 && v2 > 0.0) {
        return Err(CoreError::InvalidParameter("v1, v2 must be positive".into()));
    }
    let grid = SpectralGrid::build(params, radius_in_m, spacing)?;
    let (l1, l2) = (v1.ln(), v2.ln());
    let s = grid.sum_weighted(|mu| {
        let nu1 = mu.nu()[0];
        let mu2 = mu.mu()[1];
        (-nu1 * l1 - mu2 * l2).exp()
    });
    Ok(s * 3.0 / params.t.powi(3))
}

/// One row of a kernel decay scan.
#[derive(Debug, Clone)]
pub struct DecayScanRow {
    pub kernel: String,
    pub y1: f64,
    pub y2: Option<f64>,
    pub t: f64,
    pub m: f64,
    pub value: C,
    pub abs: f64,
    pub error_estimate: f64,
}

/// Scan Φ_{w4} (y2 = None) or Φ_{w6} (y2 = Some) over a list of arguments;
/// the error estimate is the difference against a 1.5× coarser lattice.
pub fn phi_scan(
    params: &TestFunctionParams,
    ys: &[(f64, Option<f64>)],
    opts: &PhiOptions,
) -> Result<Vec<DecayScanRow>> {
    let mut rows = Vec::new();
    for &(y1, y2) in ys {
        let kernel = match y2 {
            None => PhiKernel::W4 { y: y1 },
            Some(y2) => PhiKernel::W6 { y1, y2 },
        };
        let v = phi_transform(kernel, params, opts)?;
        let coarse = phi_transform(
            kernel,
            params,
            &PhiOptions {
                spacing: opts.spacing * 1.5,
                ..*opts
            },
        )?;
        rows.push(DecayScanRow {
            kernel: match y2 {
                None => "w4".into(),
                Some(_) => "w6".into(),
            },
            y1,
            y2,
            t: params.t,
            m: params.m,
            value: v,
            abs: v.norm(),
            error_estimate: (v - coarse).norm(),
        });
    }
    Ok(rows)
}

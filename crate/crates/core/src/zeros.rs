//! The weighted argument principle on rectangular boxes, verification
//! harnesses on functions with known zeros, and the weighted zero-density
//! pipeline shape.

use crate::lfun::zeta;
use crate::special::contour::adaptive_quad;
use crate::special::gamma::lgamma;
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

type C = Complex64;

/// Rectangle [W₀, W₁] × [−H, H] with a non-vanishing abscissa W inside.
#[derive(Debug, Clone, Copy)]
pub struct ZeroBox {
    pub w0: f64,
    pub w1: f64,
    pub h: f64,
    pub w: f64,
}

impl ZeroBox {
    pub fn new(w0: f64, w1: f64, h: f64, w: f64) -> Result<Self> {
        if !(w0 < w && w < w1) {
            return Err(CoreError::InvalidParameter(format!(
                "need W0 < W < W1, got {w0} < {w} < {w1}"
            )));
        }
        if !(h > 0.0) {
            return Err(CoreError::InvalidParameter("need H > 0".into()));
        }
        Ok(Self { w0, w1, h, w })
    }

    fn contains(&self, z: C) -> bool {
        z.re >= self.w0 - 1e-12
            && z.re <= self.w1 + 1e-12
            && z.im.abs() <= self.h + 1e-12
    }
}

/// A holomorphic function with bookkeeping for the box checks.
pub struct AnalyticHandle<'a> {
    pub evaluator: Box<dyn Fn(C) -> C + Sync + 'a>,
    /// Optional direct log-evaluator on the W₁ line; phase tracking is used
    /// otherwise.
    pub log_evaluator: Option<Box<dyn Fn(C) -> C + Sync + 'a>>,
    pub known_zeros: Vec<C>,
    pub nonvanishing_abscissa: f64,
}

impl<'a> AnalyticHandle<'a> {
    pub fn from_fn<F: Fn(C) -> C + Sync + 'a>(
        f: F,
        known_zeros: Vec<C>,
        nonvanishing_abscissa: f64,
    ) -> Result<Self> {
        for z in &known_zeros {
            if z.re >= nonvanishing_abscissa {
                return Err(CoreError::InvalidParameter(format!(
                    "known zero {z} lies in the claimed non-vanishing half-plane"
                )));
            }
        }
        Ok(Self {
            evaluator: Box::new(f),
            log_evaluator: None,
            known_zeros,
            nonvanishing_abscissa,
        })
    }
}

/// 4H Σ cos(πγ/2H) sinh(π(β−W₀)/2H) over the zeros β+iγ in the box.
pub fn weighted_count_lhs(zeros: &[C], bx: &ZeroBox) -> Result<f64> {
    let mut acc = 0.0;
    for &z in zeros {
        if !bx.contains(z) {
            return Err(CoreError::InvalidParameter(format!(
                "zero {z} lies outside the box"
            )));
        }
        acc += (PI * z.im / (2.0 * bx.h)).cos() * (PI * (z.re - bx.w0) / (2.0 * bx.h)).sinh();
    }
    Ok(4.0 * bx.h * acc)
}

/// Unwrapped log f along the vertical line Re = x for t in [-H, H]:
/// a sequential phase-tracking grid refined until adjacent jumps are small.
fn tracked_log_line<'a>(
    f: &AnalyticHandle<'a>,
    x: f64,
    h: f64,
    n0: usize,
) -> Result<(Vec<f64>, Vec<C>)> {
    let mut n = n0.max(64);
    loop {
        let ts: Vec<f64> = (0..=n).map(|j| -h + 2.0 * h * j as f64 / n as f64).collect();
        let vals: Vec<C> = ts.iter().map(|&t| (f.evaluator)(C::new(x, t))).collect();
        if vals.iter().any(|v| v.norm() < 1e-300) {
            return Err(CoreError::Quadrature(format!(
                "function vanishes on the line Re = {x}"
            )));
        }
        let mut max_jump = 0.0f64;
        let mut logs = Vec::with_capacity(vals.len());
        // anchor the branch at t = 0 by the principal argument there
        let mid = n / 2;
        let mut arg = vals[mid].arg();
        let mut prev = arg;
        let mut args = vec![0.0f64; vals.len()];
        args[mid] = arg;
        for j in (0..mid).rev() {
            let mut a = vals[j].arg();
            while a - prev > PI {
                a -= 2.0 * PI;
            }
            while a - prev < -PI {
                a += 2.0 * PI;
            }
            max_jump = max_jump.max((a - prev).abs());
            args[j] = a;
            prev = a;
        }
        prev = arg;
        for j in (mid + 1)..=n {
            let mut a = vals[j].arg();
            while a - prev > PI {
                a -= 2.0 * PI;
            }
            while a - prev < -PI {
                a += 2.0 * PI;
            }
            max_jump = max_jump.max((a - prev).abs());
            args[j] = a;
            prev = a;
        }
        arg = 0.0;
        let _ = arg;
        for (v, &a) in vals.iter().zip(args.iter()) {
            logs.push(C::new(v.norm().ln(), a));
        }
        if max_jump < 0.5 || n >= 1_048_576 {
            if max_jump >= 0.5 {
                return Err(CoreError::Quadrature(format!(
                    "phase tracking on Re = {x} did not resolve (jump {max_jump:.2} rad)"
                )));
            }
            return Ok((ts, logs));
        }
        n *= 2;
    }
}

/// The three boundary integrals of the weighted argument principle:
/// ∫cos·log|f(W₀+it)| + ∫sinh·log|f(α±iH)| − Re∫cos(π(W₁−W₀+it)/2iH)·log f(W₁+it).
pub fn argument_principle_rhs(f: &AnalyticHandle, bx: &ZeroBox) -> Result<(f64, f64)> {
    let h = bx.h;
    // left edge
    let g1 = |t: f64| {
        let v = (f.evaluator)(C::new(bx.w0, t));
        C::new((PI * t / (2.0 * h)).cos() * v.norm().ln(), 0.0)
    };
    let (i1, e1) = adaptive_quad(&g1, -h, h, 1e-11, 1e-13)?;
    // horizontal edges
    let g2 = |alpha: f64| {
        let vu = (f.evaluator)(C::new(alpha, h));
        let vd = (f.evaluator)(C::new(alpha, -h));
        C::new(
            (PI * (alpha - bx.w0) / (2.0 * h)).sinh() * (vu.norm() * vd.norm()).ln(),
            0.0,
        )
    };
    let (i2, e2) = adaptive_quad(&g2, bx.w0, bx.w1, 1e-11, 1e-13)?;
    // right edge needs log f itself
    let (i3, e3) = if let Some(lf) = &f.log_evaluator {
        let g3 = |t: f64| {
            let w = (PI * C::new(bx.w1 - bx.w0, t) / C::new(0.0, 2.0 * h)).cos();
            w * lf(C::new(bx.w1, t))
        };
        let (v, e) = adaptive_quad(&g3, -h, h, 1e-10, 1e-12)?;
        (v.re, e)
    } else {
        // refine the tracked grid until the Simpson value stabilizes
        let mut n0 = 512usize;
        let mut last: Option<f64> = None;
        let out;
        loop {
            let (ts, logs) = tracked_log_line(f, bx.w1, h, n0)?;
            let n = ts.len() - 1;
            let step = (ts[n] - ts[0]) / n as f64;
            let mut acc = C::new(0.0, 0.0);
            for (j, (&t, &lg)) in ts.iter().zip(logs.iter()).enumerate() {
                let w = (PI * C::new(bx.w1 - bx.w0, t) / C::new(0.0, 2.0 * h)).cos();
                let coeff = if j == 0 || j == n {
                    1.0
                } else if j % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                acc += w * lg * coeff;
            }
            let val = (acc * step / 3.0).re;
            if let Some(prev) = last {
                let diff = (val - prev).abs();
                if diff < 1e-11 * (1.0 + val.abs()) || n0 >= 1 << 18 {
                    out = (val, diff);
                    break;
                }
            }
            last = Some(val);
            n0 *= 2;
        }
        out
    };
    Ok((i1.re + i2.re - i3, e1 + e2 + e3))
}

/// Residual report pairing the two sides of the identity.
#[derive(Debug, Clone, Copy)]
pub struct BoxResidual {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub quadrature_error: f64,
}

/// |LHS − RHS| for the supplied zero list and box.
pub fn verify_box(f: &AnalyticHandle, bx: &ZeroBox) -> Result<BoxResidual> {
    let inside: Vec<C> = f
        .known_zeros
        .iter()
        .copied()
        .filter(|z| bx.contains(*z))
        .collect();
    let lhs = weighted_count_lhs(&inside, bx)?;
    let (rhs, qerr) = argument_principle_rhs(f, bx)?;
    Ok(BoxResidual {
        lhs,
        rhs,
        residual: (lhs - rhs).abs(),
        quadrature_error: qerr,
    })
}

// ---------------------------------------------------------------------------
// ζ zeros for the fixtures.

/// Re ξ(1/2+it) with ξ(s) = ½s(s−1)π^{-s/2}Γ(s/2)ζ(s); real on the line.
fn xi_on_line(t: f64) -> f64 {
    let s = C::new(0.5, t);
    let v = 0.5 * s * (s - 1.0) * ((-s / 2.0) * PI.ln() + lgamma(s / 2.0)).exp()
        * zeta(s).unwrap_or(C::new(f64::NAN, 0.0));
    v.re
}

/// Locate a zero of ζ on the critical line by bisecting sign changes of ξ.
pub fn zeta_zero_near(lo: f64, hi: f64) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let (mut fa, fb) = (xi_on_line(a), xi_on_line(b));
    if fa * fb > 0.0 {
        return Err(CoreError::InvalidParameter(format!(
            "no sign change of the completed function in [{lo}, {hi}]"
        )));
    }
    let _ = fb;
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let fm = xi_on_line(m);
        if fa * fm <= 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
        if b - a < 1e-12 {
            break;
        }
    }
    Ok(0.5 * (a + b))
}

// ---------------------------------------------------------------------------
// The weighted zero-density pipeline.

/// Family moments on the three box edges. At desk scale the "family" is a
/// single Eisenstein datum and the averages are plain values.
pub trait MomentProvider {
    /// avg |LM(1/2 + W₀ + it)|²
    fn lm_sq_w0(&self, t: f64) -> f64;
    /// avg |LM(1/2 + α ± iH)|²
    fn lm_sq_horiz(&self, alpha: f64, upper: bool) -> f64;
    /// LM(3/2 + it) (the pipeline tracks the logarithm branch)
    fn lm_w1(&self, t: f64) -> C;
}

/// Exact unit moments: |LM|² ≡ 1, LM ≡ 1.
pub struct ExactUnitMoments;

impl MomentProvider for ExactUnitMoments {
    fn lm_sq_w0(&self, _t: f64) -> f64 {
        1.0
    }
    fn lm_sq_horiz(&self, _alpha: f64, _upper: bool) -> f64 {
        1.0
    }
    fn lm_w1(&self, _t: f64) -> C {
        C::new(1.0, 0.0)
    }
}

/// |LM|² = 1 + c on the W₀ line, exact elsewhere.
pub struct ConstOffsetMoments {
    pub c: f64,
}

impl MomentProvider for ConstOffsetMoments {
    fn lm_sq_w0(&self, _t: f64) -> f64 {
        1.0 + self.c
    }
    fn lm_sq_horiz(&self, _alpha: f64, _upper: bool) -> f64 {
        1.0
    }
    fn lm_w1(&self, _t: f64) -> C {
        C::new(1.0, 0.0)
    }
}

/// The three pieces and the assembled upper bound
/// (log T/2)·[∫cos·(m₀−1) + ∫sinh·(m₊+m₋−2) − 2Re∫cos(...)·log LM].
#[derive(Debug, Clone, Copy)]
pub struct PipelineReport {
    pub piece_left: f64,
    pub piece_horizontal: f64,
    pub piece_right: f64,
    pub bound: f64,
}

/// Assemble the weighted zero-density upper bound from moment data on the
/// box 1/2 + [1/log T, 1] × [−H, H].
pub fn density_pipeline<P: MomentProvider>(
    provider: &P,
    h: f64,
    log_t: f64,
) -> Result<PipelineReport> {
    if !(h > 0.0 && log_t > 0.0) {
        return Err(CoreError::InvalidParameter("need H > 0 and log T > 0".into()));
    }
    let w0 = 1.0 / log_t;
    let w1 = 1.0;
    let g1 = |t: f64| C::new((PI * t / (2.0 * h)).cos() * (provider.lm_sq_w0(t) - 1.0), 0.0);
    let (p1, _) = adaptive_quad(&g1, -h, h, 1e-9, 1e-12)?;
    let g2 = |alpha: f64| {
        C::new(
            (PI * (alpha - w0) / (2.0 * h)).sinh()
                * (provider.lm_sq_horiz(alpha, true) + provider.lm_sq_horiz(alpha, false) - 2.0),
            0.0,
        )
    };
    let (p2, _) = adaptive_quad(&g2, w0, w1, 1e-9, 1e-12)?;
    // sequential phase tracking on the right edge
    let n = 4096usize;
    let ts: Vec<f64> = (0..=n).map(|j| -h + 2.0 * h * j as f64 / n as f64).collect();
    let vals: Vec<C> = ts.iter().map(|&t| provider.lm_w1(t)).collect();
    let mid = n / 2;
    let mut args = vec![0.0f64; n + 1];
    args[mid] = vals[mid].arg();
    for j in (0..mid).rev() {
        let mut a = vals[j].arg();
        while a - args[j + 1] > PI {
            a -= 2.0 * PI;
        }
        while a - args[j + 1] < -PI {
            a += 2.0 * PI;
        }
        args[j] = a;
    }
    for j in (mid + 1)..=n {
        let mut a = vals[j].arg();
        while a - args[j - 1] > PI {
            a -= 2.0 * PI;
        }
        while a - args[j - 1] < -PI {
            a += 2.0 * PI;
        }
        args[j] = a;
    }
    let step = 2.0 * h / n as f64;
    let mut acc = C::new(0.0, 0.0);
    for j in 0..=n {
        let lg = C::new(vals[j].norm().ln(), args[j]);
        let w = (PI * C::new(w1 - w0, ts[j]) / C::new(0.0, 2.0 * h)).cos();
        let coeff = if j == 0 || j == n {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };
        acc += w * lg * coeff;
    }
    let p3 = 2.0 * (acc * step / 3.0).re;
    let bound = 0.5 * log_t * (p1.re + p2.re - p3);
    Ok(PipelineReport {
        piece_left: p1.re,
        piece_horizontal: p2.re,
        piece_right: p3,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn lhs_weights_vanish_at_boundary() {
        let bx = ZeroBox::new(0.0, 1.0, 0.5, 0.9).unwrap();
        // zero at β = W0: sinh(0) = 0
        let v = weighted_count_lhs(&[C::new(0.0, 0.2)], &bx).unwrap();
        assert_eq!(v, 0.0);
        // zero at γ = ±H: cos(π/2) = 0
        let v = weighted_count_lhs(&[C::new(0.4, 0.5)], &bx).unwrap();
        assert!(v.abs() < 1e-12);
        // center zero: 4H sinh(π(W1−W0)/4H) exactly
        let v = weighted_count_lhs(&[C::new(0.5, 0.0)], &bx).unwrap();
        let expect = 4.0 * 0.5 * (PI * 0.5 / (2.0 * 0.5)).sinh();
        assert!((v - expect).abs() < 1e-12);
        // outside rejected
        assert!(weighted_count_lhs(&[C::new(2.0, 0.0)], &bx).is_err());
    }

    #[test]
    fn rhs_zero_for_unit_function() {
        let bx = ZeroBox::new(0.0, 1.0, 0.5, 0.9).unwrap();
        let f = AnalyticHandle::from_fn(|_| C::new(1.0, 0.0), vec![], 0.0).unwrap();
        let (rhs, _) = argument_principle_rhs(&f, &bx).unwrap();
        assert!(rhs.abs() < 1e-10);
    }

    #[test]
    fn lemma_equality_linear_and_quadratic() {
        let bx = ZeroBox::new(0.0, 1.0, 0.5, 0.9).unwrap();
        let rho = C::new(0.3, 0.1);
        let f = AnalyticHandle::from_fn(move |s| s - rho, vec![rho], 0.9).unwrap();
        let r = verify_box(&f, &bx).unwrap();
        assert!(r.residual < 1e-8, "residual {}", r.residual);

        let (r1, r2) = (C::new(0.25, -0.2), C::new(0.6, 0.3));
        let f2 = AnalyticHandle::from_fn(move |s| (s - r1) * (s - r2), vec![r1, r2], 0.9).unwrap();
        let r = verify_box(&f2, &bx).unwrap();
        assert!(r.residual < 1e-8, "residual {}", r.residual);
    }

    #[test]
    fn lemma_equality_random_polynomials() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let w0 = rng.gen_range(-0.5..0.0);
            let w1 = rng.gen_range(0.8..1.6);
            let h = rng.gen_range(0.4..1.2);
            let bx = ZeroBox::new(w0, w1, h, w1 - 0.05).unwrap();
            let nz = rng.gen_range(1..=3);
            let zeros: Vec<C> = (0..nz)
                .map(|_| {
                    C::new(
                        rng.gen_range(w0 + 0.05..w1 - 0.15),
                        rng.gen_range(-h + 0.05..h - 0.05),
                    )
                })
                .collect();
            let zs = zeros.clone();
            let f = AnalyticHandle::from_fn(
                move |s| zs.iter().fold(C::new(1.0, 0.0), |acc, &z| acc * (s - z)),
                zeros,
                w1 - 0.06,
            )
            .unwrap();
            let r = verify_box(&f, &bx).unwrap();
            assert!(r.residual < 1e-8, "residual {} for box {bx:?}", r.residual);
        }
    }

    #[test]
    fn monotone_in_added_zero() {
        let bx = ZeroBox::new(0.0, 1.0, 0.5, 0.9).unwrap();
        let one = weighted_count_lhs(&[C::new(0.5, 0.0)], &bx).unwrap();
        let two = weighted_count_lhs(&[C::new(0.5, 0.0), C::new(0.4, 0.1)], &bx).unwrap();
        assert!(two > one);
    }

    #[test]
    fn zeta_zero_locations() {
        let g1 = zeta_zero_near(14.0, 14.3).unwrap();
        assert!((g1 - 14.134725).abs() < 1e-5, "{g1}");
        let g2 = zeta_zero_near(20.9, 21.1).unwrap();
        assert!((g2 - 21.022040).abs() < 1e-5, "{g2}");
    }

    #[test]
    fn pipeline_exact_and_offset() {
        let r = density_pipeline(&ExactUnitMoments, 2.0, 20.0f64.ln()).unwrap();
        assert!(r.bound.abs() < 1e-9, "{r:?}");
        let c = 0.37;
        let h = 1.5;
        let logt = 25.0f64.ln();
        let r = density_pipeline(&ConstOffsetMoments { c }, h, logt).unwrap();
        let expect = 0.5 * logt * c * 4.0 * h / PI;
        assert!((r.bound - expect).abs() < 1e-6 * expect, "{} vs {expect}", r.bound);
    }
}

//! Shared quadrature engines: vertical-line contour integrals and an
//! adaptive Gauss–Kronrod rule for parametrized complex paths.

use crate::{CoreError, Result};
use num_complex::Complex64;

type C = Complex64;

/// Quadrature scheme for vertical-line integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Scheme {
    Trapezoid,
    DoubleExponential,
}

/// Vertical-line integration recipe: Re(u) = abscissa, |Im(u)| ≤ half_height.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct ContourSpec {
    pub abscissa: f64,
    pub half_height: f64,
    pub nodes: usize,
    pub scheme: Scheme,
}

impl ContourSpec {
    pub fn new(abscissa: f64, half_height: f64, nodes: usize, scheme: Scheme) -> Result<Self> {
        if nodes < 16 {
            return Err(CoreError::InvalidParameter(format!(
                "contour needs at least 16 nodes, got {nodes}"
            )));
        }
        if !half_height.is_finite() || half_height <= 0.0 {
            return Err(CoreError::InvalidParameter(format!(
                "half_height must be positive finite, got {half_height}"
            )));
        }
        Ok(Self {
            abscissa,
            half_height,
            nodes,
            scheme,
        })
    }

    pub fn trapezoid(abscissa: f64, half_height: f64, nodes: usize) -> Result<Self> {
        Self::new(abscissa, half_height, nodes, Scheme::Trapezoid)
    }
}

/// (1/2πi) ∫ f(c+iy)·i dy over |y| ≤ half_height, by the chosen scheme.
///
/// Returns the value and an error estimate from node-halving.
pub fn vertical_line_integral<F>(f: F, spec: &ContourSpec) -> Result<(C, f64)>
where
    F: Fn(C) -> C,
{
    let n = spec.nodes | 1; // odd node count so halving reuses the grid
    let c = spec.abscissa;
    let hh = spec.half_height;
    let (ys, ws): (Vec<f64>, Vec<f64>) = match spec.scheme {
        Scheme::Trapezoid => {
            let h = 2.0 * hh / (n - 1) as f64;
            (0..n)
                .map(|j| {
                    let y = -hh + j as f64 * h;
                    let w = if j == 0 || j == n - 1 { h / 2.0 } else { h };
                    (y, w)
                })
                .unzip()
        }
        Scheme::DoubleExponential => {
            // tanh((π/2)sinh w) must stay strictly inside (-1, 1) in f64
            let wmax = 3.0f64;
            let h = 2.0 * wmax / (n - 1) as f64;
            (0..n)
                .map(|j| {
                    let w = -wmax + j as f64 * h;
                    let sh = (std::f64::consts::FRAC_PI_2) * w.sinh();
                    let y = hh * sh.tanh();
                    let dy = hh * (std::f64::consts::FRAC_PI_2) * w.cosh() / sh.cosh().powi(2);
                    let wt = if j == 0 || j == n - 1 { dy * h / 2.0 } else { dy * h };
                    (y, wt)
                })
                .unzip()
        }
    };
    let mut vals = Vec::with_capacity(n);
    for (&y, _) in ys.iter().zip(ws.iter()) {
        let u = C::new(c, y);
        let v = f(u);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(CoreError::NonFiniteSample {
                location: format!("{u}"),
                value: format!("{v}"),
            });
        }
        vals.push(v);
    }
    let full: C = ys
        .iter()
        .zip(ws.iter())
        .zip(vals.iter())
        .map(|((_, &w), &v)| v * w)
        .sum();
    // coarse grid: every other node, doubled weights (endpoints handled the
    // same way as the fine rule)
    let mut coarse = C::new(0.0, 0.0);
    let mut j = 0;
    while j < n {
        let w = if j == 0 || j == n - 1 {
            ws[j] // endpoint weight below is adjusted after the loop
        } else {
            ws[j]
        };
        coarse += vals[j] * w * 2.0;
        let _ = w;
        j += 2;
    }
    // endpoints of the coarse rule got full h instead of h: correct by halving
    coarse -= vals[0] * ws[0] + vals[n - 1] * ws[n - 1];
    let two_pi = 2.0 * std::f64::consts::PI;
    let value = full / two_pi;
    let err = (full - coarse).norm() / two_pi;
    Ok((value, err))
}

// ---------------------------------------------------------------------------
// Gauss–Kronrod 7-15 adaptive rule on a real parameter interval.

const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15<F: Fn(f64) -> C>(f: &F, a: f64, b: f64) -> (C, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let fc = f(mid);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(mid - dx);
        let f2 = f(mid + dx);
        kron += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
    }
    kron *= half;
    gauss *= half;
    (kron, (kron - gauss).norm())
}

/// Adaptive GK15 integration of a complex-valued function of a real
/// parameter. Stops when the local error estimates sum below
/// `rel_tol·|total| + abs_tol`. Returns (value, error_sum).
pub fn adaptive_quad<F: Fn(f64) -> C>(
    f: &F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<(C, f64)> {
    const MAX_INTERVALS: usize = 40_000;
    let (v0, e0) = gk15(f, a, b);
    if !v0.re.is_finite() || !v0.im.is_finite() {
        return Err(CoreError::NonFiniteSample {
            location: format!("[{a}, {b}]"),
            value: format!("{v0}"),
        });
    }
    // max-heap of (error, a, b, value)
    let mut heap: Vec<(f64, f64, f64, C)> = vec![(e0, a, b, v0)];
    let mut total = v0;
    let mut err_sum = e0;
    while err_sum > rel_tol * total.norm() + abs_tol && heap.len() < MAX_INTERVALS {
        // pop the worst interval
        let (idx, _) = heap
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .0.total_cmp(&y.1 .0))
            .unwrap();
        let (e, ia, ib, iv) = heap.swap_remove(idx);
        if (ib - ia).abs() < 1e-14 * (b - a).abs() {
            // refinement exhausted
            heap.push((0.0, ia, ib, iv));
            err_sum -= e;
            continue;
        }
        let m = 0.5 * (ia + ib);
        let (v1, e1) = gk15(f, ia, m);
        let (v2, e2) = gk15(f, m, ib);
        if !(v1 + v2).re.is_finite() || !(v1 + v2).im.is_finite() {
            return Err(CoreError::NonFiniteSample {
                location: format!("[{ia}, {ib}]"),
                value: format!("{}", v1 + v2),
            });
        }
        total += v1 + v2 - iv;
        err_sum += e1 + e2 - e;
        heap.push((e1, ia, m, v1));
        heap.push((e2, m, ib, v2));
    }
    Ok((total, err_sum.max(0.0)))
}

/// A straight segment in the complex plane with its parametrization.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub start: C,
    pub end: C,
}

impl Segment {
    pub fn new(start: C, end: C) -> Self {
        Self { start, end }
    }
}

/// ∫ f(u) du along a polyline, each segment integrated adaptively.
pub fn polyline_quad<F: Fn(C) -> C>(
    f: &F,
    segments: &[Segment],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<(C, f64)> {
    let mut total = C::new(0.0, 0.0);
    let mut err = 0.0;
    for seg in segments {
        let d = seg.end - seg.start;
        let g = |t: f64| f(seg.start + d * t) * d;
        let (v, e) = adaptive_quad(&g, 0.0, 1.0, rel_tol, abs_tol / segments.len() as f64)?;
        total += v;
        err += e;
    }
    Ok((total, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::lgamma;

    #[test]
    fn zero_integrand() {
        let spec = ContourSpec::trapezoid(2.0, 40.0, 257).unwrap();
        let (v, _) = vertical_line_integral(|_| C::new(0.0, 0.0), &spec).unwrap();
        assert_eq!(v, C::new(0.0, 0.0));
    }

    #[test]
    fn cahen_mellin_identity() {
        // (1/2πi)∫_(2) Γ(u) X^{-u} du = e^{-X} for X = 1/2
        let x: f64 = 0.5;
        let spec = ContourSpec::trapezoid(2.0, 40.0, 2049).unwrap();
        let f = |u: C| (lgamma(u) - u * x.ln()).exp();
        let (v, err) = vertical_line_integral(f, &spec).unwrap();
        let expect = (-x).exp();
        assert!((v - expect).norm() < 1e-8, "val {v}, err {err}");
        // doubling nodes improves the reported estimate
        let spec2 = ContourSpec::trapezoid(2.0, 40.0, 4097).unwrap();
        let (_, err2) = vertical_line_integral(f, &spec2).unwrap();
        assert!(err2 <= err * 0.5 + 1e-15, "err {err} err2 {err2}");
    }

    #[test]
    fn linear_in_integrand_and_abscissa_shift() {
        let spec = ContourSpec::trapezoid(2.0, 40.0, 1025).unwrap();
        let x: f64 = 0.5;
        let f = |u: C| (lgamma(u) - u * x.ln()).exp();
        let g = |u: C| (lgamma(u + 1.0) - u * 0.8) * (u * u * 0.05).exp();
        let (vf, _) = vertical_line_integral(f, &spec).unwrap();
        let (vg, _) = vertical_line_integral(g, &spec).unwrap();
        let comb = |u: C| f(u) * 2.0 + g(u) * C::new(0.0, -3.0);
        let (vc, _) = vertical_line_integral(comb, &spec).unwrap();
        assert!((vc - (vf * 2.0 + vg * C::new(0.0, -3.0))).norm() < 1e-10);
        // entire integrand: shifting the abscissa leaves the Γ-integral alone
        let spec3 = ContourSpec::trapezoid(2.5, 40.0, 1025).unwrap();
        let (vf3, _) = vertical_line_integral(f, &spec3).unwrap();
        assert!((vf3 - vf).norm() < 1e-8);
    }

    #[test]
    fn nonfinite_sample_reported() {
        let spec = ContourSpec::trapezoid(0.0, 1.0, 17).unwrap();
        let r = vertical_line_integral(|u| 1.0 / u, &spec);
        assert!(matches!(r, Err(CoreError::NonFiniteSample { .. })));
    }

    #[test]
    fn adaptive_quad_oscillatory() {
        // ∫_0^1 e^{50 i t} dt = (e^{50i} - 1)/(50 i)
        let f = |t: f64| C::new(0.0, 50.0 * t).exp();
        let (v, _) = adaptive_quad(&f, 0.0, 1.0, 1e-12, 1e-14).unwrap();
        let expect = (C::new(0.0, 50.0).exp() - 1.0) / C::new(0.0, 50.0);
        assert!((v - expect).norm() < 1e-11);
    }

    #[test]
    fn de_scheme_endpoint_friendly() {
        // ∫_{-1}^{1} 1/sqrt(1-y²)·(1/2π) dy via DE on the unit segment
        let spec = ContourSpec::new(0.0, 1.0, 401, Scheme::DoubleExponential).unwrap();
        let f = |u: C| C::new(1.0 / (1.0 - u.im * u.im).sqrt(), 0.0);
        let (v, _) = vertical_line_integral(f, &spec).unwrap();
        assert!((v.re - 0.5).abs() < 1e-6, "{v}");
    }
}

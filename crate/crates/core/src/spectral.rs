//! Spectral/Langlands parameter algebra, the Weyl group action, the localized
//! test function h_{T,M} with its factors ψ and P, the spectral measure, and
//! the normalizing factors of the two Eisenstein families.

use crate::lfun::zeta;
use crate::{tree_sum, CoreError, Result};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

type C = Complex64;

const ZERO_SUM_TOL: f64 = 1e-10;

/// Langlands parameter μ = (μ₁,μ₂,μ₃) with μ₁+μ₂+μ₃ = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTriple {
    mu: [C; 3],
}

impl SpectralTriple {
    pub fn new(mu: [C; 3]) -> Result<Self> {
        let s = mu[0] + mu[1] + mu[2];
        let scale = mu.iter().map(|z| z.norm()).fold(1.0, f64::max);
        if s.norm() > ZERO_SUM_TOL * scale {
            return Err(CoreError::InvalidParameter(format!(
                "mu coordinates must sum to zero, got {s}"
            )));
        }
        Ok(Self { mu })
    }

    /// Construct from ν-coordinates (must also sum to zero).
    pub fn from_nu(nu: [C; 3]) -> Result<Self> {
        let s = nu[0] + nu[1] + nu[2];
        let scale = nu.iter().map(|z| z.norm()).fold(1.0, f64::max);
        if s.norm() > ZERO_SUM_TOL * scale {
            return Err(CoreError::InvalidParameter(format!(
                "nu coordinates must sum to zero, got {s}"
            )));
        }
        let mu = [2.0 * nu[0] + nu[1], nu[1] - nu[0], -nu[0] - 2.0 * nu[1]];
        Ok(Self { mu })
    }

    /// Purely imaginary triple i·(t₁, t₂, −t₁−t₂).
    pub fn imaginary(t1: f64, t2: f64) -> Self {
        Self {
            mu: [C::new(0.0, t1), C::new(0.0, t2), C::new(0.0, -t1 - t2)],
        }
    }

    pub fn mu(&self) -> [C; 3] {
        self.mu
    }

    /// ν-coordinates νₖ = (μₖ − μₖ₊₁)/3 (indices mod 3).
    pub fn nu(&self) -> [C; 3] {
        [
            (self.mu[0] - self.mu[1]) / 3.0,
            (self.mu[1] - self.mu[2]) / 3.0,
            (self.mu[2] - self.mu[0]) / 3.0,
        ]
    }

    pub fn norm(&self) -> f64 {
        self.mu.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn conj(&self) -> Self {
        Self {
            mu: [self.mu[0].conj(), self.mu[1].conj(), self.mu[2].conj()],
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            mu: [-self.mu[0], -self.mu[1], -self.mu[2]],
        }
    }
}

/// Direction of the μ ↔ ν coordinate change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    MuToNu,
    NuToMu,
}

/// Apply the linear maps between μ- and ν-coordinates. The input triple is
/// read as μ- or ν-values according to `direction`.
pub fn mu_nu_convert(
    direction: ConvertDirection,
    triple: &SpectralTriple,
) -> Result<SpectralTriple> {
    match direction {
        ConvertDirection::MuToNu => SpectralTriple::new(triple.nu()),
        ConvertDirection::NuToMu => {
            let v = triple.mu;
            SpectralTriple::new([2.0 * v[0] + v[1], v[1] - v[0], -v[0] - 2.0 * v[1]])
        }
    }
}

/// The six elements of the Weyl group acting by coordinate permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylElement {
    I,
    W2,
    W3,
    W4,
    W5,
    W6,
}

impl WeylElement {
    pub const ALL: [WeylElement; 6] = [
        WeylElement::I,
        WeylElement::W2,
        WeylElement::W3,
        WeylElement::W4,
        WeylElement::W5,
        WeylElement::W6,
    ];

    /// Index permutation: output slot k holds input slot perm[k].
    pub fn perm(&self) -> [usize; 3] {
        match self {
            WeylElement::I => [0, 1, 2],
            WeylElement::W2 => [0, 2, 1],
            WeylElement::W3 => [1, 0, 2],
            WeylElement::W4 => [1, 2, 0],
            WeylElement::W5 => [2, 0, 1],
            WeylElement::W6 => [2, 1, 0],
        }
    }
}

/// Permute the coordinates of μ by the Weyl element.
pub fn weyl_apply(w: WeylElement, mu: &SpectralTriple) -> SpectralTriple {
    let p = w.perm();
    SpectralTriple {
        mu: [mu.mu[p[0]], mu.mu[p[1]], mu.mu[p[2]]],
    }
}

/// Default direction angle of μ₀ on the zero-sum circle, chosen to keep all
/// |μ₀ₖ| and |ν₀ₖ| away from the Weyl chamber walls at desk scale.
pub const DEFAULT_DIRECTION_ANGLE: f64 = 0.3335;

/// Default degree cutoff of the polynomial factor P.
pub const DEFAULT_POLY_CUTOFF: u32 = 0;

/// Parameters (T, M = T^θ, A, μ₀) of the localized test function h_{T,M}.
#[derive(Debug, Clone, Copy)]
pub struct TestFunctionParams {
    pub t: f64,
    pub theta: f64,
    pub m: f64,
    pub a: u32,
    pub mu0: SpectralTriple,
    pub nu0: [C; 3],
}

impl TestFunctionParams {
    /// μ₀ = iT·√(2/3)·(cos(θ_d + 2πk/3))ₖ for a direction angle θ_d; the
    /// scaling gives ‖μ₀‖ = T exactly.
    pub fn new(t: f64, theta: f64, a: u32, direction_angle: f64) -> Result<Self> {
        if !(t > 0.0) || !(theta > 0.0 && theta < 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "need T > 0 and θ in (0,1), got T={t}, θ={theta}"
            )));
        }
        let r = (2.0f64 / 3.0).sqrt() * t;
        let mut ts = [0.0f64; 3];
        for (k, v) in ts.iter_mut().enumerate() {
            *v = r * (direction_angle + 2.0 * PI * k as f64 / 3.0).cos();
        }
        let mean = (ts[0] + ts[1] + ts[2]) / 3.0;
        let mu0 = SpectralTriple::imaginary(ts[0] - mean, ts[1] - mean);
        Self::with_mu0(t, theta, a, mu0)
    }

    /// As `new` with an explicit localization center.
    pub fn with_mu0(t: f64, theta: f64, a: u32, mu0: SpectralTriple) -> Result<Self> {
        let m = t.powf(theta);
        for z in mu0.mu() {
            let r = z.norm();
            if !(r >= t / 8.0 && r <= 4.0 * t) {
                return Err(CoreError::InvalidParameter(format!(
                    "|mu0_k| = {r} outside the generic window [T/8, 4T] = [{}, {}]",
                    t / 8.0,
                    4.0 * t
                )));
            }
        }
        let nu0 = mu0.nu();
        Ok(Self {
            t,
            theta,
            m,
            a,
            mu0,
            nu0,
        })
    }

    pub fn default_at(t: f64) -> Result<Self> {
        Self::new(t, 0.5, DEFAULT_POLY_CUTOFF, DEFAULT_DIRECTION_ANGLE)
    }

    /// ψ(μ) = exp(μ₁² + μ₂² + μ₃²).
    pub fn psi(mu: &SpectralTriple) -> C {
        let m = mu.mu();
        (m[0] * m[0] + m[1] * m[1] + m[2] * m[2]).exp()
    }

    /// P(μ) = Π_{0≤n≤A} Π_k (νₖ − (1+2n)/3)(νₖ + (1+2n)/3) / |ν₀ₖ|².
    pub fn poly_p(&self, mu: &SpectralTriple) -> C {
        let nu = mu.nu();
        let mut prod = C::new(1.0, 0.0);
        for n in 0..=self.a {
            let root = (1.0 + 2.0 * n as f64) / 3.0;
            for k in 0..3 {
                let norm = self.nu0[k].norm_sqr();
                prod *= (nu[k] - root) * (nu[k] + root) / norm;
            }
        }
        prod
    }

    /// h_{T,M}(μ) = P(μ)²·(Σ_w ψ((w(μ)−μ₀)/M))².
    pub fn h(&self, mu: &SpectralTriple) -> C {
        let mut s = C::new(0.0, 0.0);
        for w in WeylElement::ALL {
            let wm = weyl_apply(w, mu);
            let d = SpectralTriple {
                mu: [
                    (wm.mu[0] - self.mu0.mu[0]) / self.m,
                    (wm.mu[1] - self.mu0.mu[1]) / self.m,
                    (wm.mu[2] - self.mu0.mu[2]) / self.m,
                ],
            };
            s += Self::psi(&d);
        }
        let p = self.poly_p(mu);
        p * p * s * s
    }
}

/// tan(z) saturating to ±i for large |Im z| where sinh/cosh overflow.
fn tan_stable(z: C) -> C {
    if z.im.abs() > 20.0 {
        C::new(0.0, z.im.signum())
    } else {
        z.tan()
    }
}

/// spec(μ) = Π_k 3νₖ tan(3πνₖ/2). Rejects evaluation within 1e-6 of a
/// tangent pole (3νₖ at an odd integer).
pub fn spec_density(mu: &SpectralTriple) -> Result<C> {
    let nu = mu.nu();
    let mut prod = C::new(1.0, 0.0);
    for k in 0..3 {
        let w = 3.0 * nu[k];
        let r = w.re;
        let cand = 2.0 * ((r - 1.0) / 2.0).round() + 1.0;
        if (w - cand).norm() < 1e-6 {
            return Err(CoreError::Pole(format!(
                "spec_density tangent pole: 3nu_{k} = {w}"
            )));
        }
        prod *= w * tan_stable(1.5 * PI * nu[k]);
    }
    Ok(prod)
}

// ---------------------------------------------------------------------------
// Quadrature lattice on the imaginary hyperplane.

/// Midpoint lattice covering the union of the Weyl-translated localization
/// balls, with per-node h·spec values cached.
pub struct SpectralGrid {
    pub params: TestFunctionParams,
    pub nodes: Vec<(f64, f64)>,
    /// cell area
    pub weight: f64,
    /// h(μ)·spec(μ) per node
    pub hspec: Vec<C>,
}

impl SpectralGrid {
    /// Build a lattice of the given absolute spacing covering all Weyl images
    /// of μ₀ to radius `radius_in_m`·M.
    pub fn build(params: &TestFunctionParams, radius_in_m: f64, spacing: f64) -> Result<Self> {
        let m0 = params.mu0.mu();
        let t0 = [m0[0].im, m0[1].im, m0[2].im];
        let r = radius_in_m * params.m;
        let mut lo1 = f64::INFINITY;
        let mut hi1 = f64::NEG_INFINITY;
        for &v in &t0 {
            lo1 = lo1.min(v);
            hi1 = hi1.max(v);
        }
        let (lo, hi) = (lo1 - r, hi1 + r);
        let n = ((hi - lo) / spacing).ceil() as usize + 1;
        let h = (hi - lo) / n as f64;
        let radius2 = r * r;
        // Weyl images of (t₁, t₂) are the ordered pairs (t0[i], t0[j]), i ≠ j.
        let centers: Vec<(f64, f64)> = WeylElement::ALL
            .iter()
            .map(|w| {
                let p = w.perm();
                (t0[p[0]], t0[p[1]])
            })
            .collect();
        let mut nodes = Vec::new();
        for j1 in 0..n {
            let t1 = lo + (j1 as f64 + 0.5) * h;
            for j2 in 0..n {
                let t2 = lo + (j2 as f64 + 0.5) * h;
                let inside = centers
                    .iter()
                    .any(|&(c1, c2)| (t1 - c1).powi(2) + (t2 - c2).powi(2) <= radius2);
                if inside {
                    nodes.push((t1, t2));
                }
            }
        }
        let params = *params;
        // On the imaginary hyperplane μ = (it₁, it₂, −i(t₁+t₂)) the measure
        // picks up dμ₁dμ₂ = i² dt₁dt₂, hence the −1 Jacobian below; it makes
        // h·dspec a nonnegative real density.
        let hspec: Vec<C> = nodes
            .par_iter()
            .map(|&(t1, t2)| {
                let mu = SpectralTriple::imaginary(t1, t2);
                let sd = spec_density(&mu).unwrap_or(C::new(0.0, 0.0));
                -params.h(&mu) * sd
            })
            .collect();
        Ok(Self {
            params,
            nodes,
            weight: h * h,
            hspec,
        })
    }

    /// Default lattice for plain h-integrals: spacing M/3.2, radius 10M.
    pub fn for_h(params: &TestFunctionParams) -> Result<Self> {
        Self::build(params, 10.0, params.m / 3.2)
    }

    /// ∫ h(μ)·f(μ) d_spec μ over the lattice (no 1/192π⁵ factor), with f
    /// evaluated in parallel and reduced deterministically.
    pub fn sum_weighted<F>(&self, f: F) -> C
    where
        F: Fn(&SpectralTriple) -> C + Sync,
    {
        let vals: Vec<C> = self
            .nodes
            .par_iter()
            .zip(self.hspec.par_iter())
            .map(|(&(t1, t2), &hs)| {
                if hs.norm() == 0.0 {
                    return C::new(0.0, 0.0);
                }
                let mu = SpectralTriple::imaginary(t1, t2);
                hs * f(&mu)
            })
            .collect();
        tree_sum(&vals) * self.weight
    }

    /// ∫ h d_spec μ (no normalization).
    pub fn h_mass(&self) -> C {
        tree_sum(&self.hspec) * self.weight
    }
}

/// 𝓗-style normalized spectral integral:
/// (1/192π⁵) ∫ h_{T,M}(μ) d_spec μ over the truncated lattice.
pub fn integrate_h_dspec(params: &TestFunctionParams, spacing_divisor: f64) -> Result<f64> {
    let grid = SpectralGrid::build(params, 10.0, params.m / spacing_divisor)?;
    let v = grid.h_mass() / (192.0 * PI.powi(5));
    if v.im.abs() > 1e-8 * v.re.abs().max(1e-300) {
        return Err(CoreError::Quadrature(format!(
            "spectral integral should be real, got {v}"
        )));
    }
    if !v.re.is_finite() {
        return Err(CoreError::Quadrature("non-finite spectral integral".into()));
    }
    Ok(v.re)
}

// ---------------------------------------------------------------------------
// Normalizing factors.

/// Inputs for the Eisenstein normalizing factors.
#[derive(Debug, Clone)]
pub enum NormalizerInputs {
    /// Minimal family: ν-triple on the imaginary axis.
    Minimal { nu: [C; 3] },
    /// Maximal family: scalar μ plus L(1, Ad²g) and the pair
    /// (L(1+3μ, g), conjugate value).
    Maximal {
        mu: C,
        adjoint_value: f64,
        l_pair: (C, C),
    },
}

/// 𝒩 for the minimal family ((1/16)Π|ζ(1+3νₖ)|²) or the maximal one
/// (8·L(1,Ad²g)·|L(1+3μ,g)|²).
pub fn normalizer(inputs: &NormalizerInputs) -> Result<C> {
    match inputs {
        NormalizerInputs::Minimal { nu } => {
            let mut prod = C::new(1.0 / 16.0, 0.0);
            for k in 0..3 {
                let z = zeta(C::new(1.0, 0.0) + 3.0 * nu[k])?;
                prod *= z.norm_sqr();
            }
            Ok(prod)
        }
        NormalizerInputs::Maximal {
            mu: _,
            adjoint_value,
            l_pair,
        } => {
            if !(*adjoint_value > 0.0) {
                return Err(CoreError::InvalidParameter(
                    "adjoint L-value must be positive".into(),
                ));
            }
            Ok(C::new(8.0 * adjoint_value, 0.0) * l_pair.0 * l_pair.1)
        }
    }
}

/// Least-squares slope of log y against log x.
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_nu_roundtrip_and_examples() {
        let mu = SpectralTriple::new([C::new(2.0, 0.0), C::new(-1.0, 0.0), C::new(-1.0, 0.0)])
            .unwrap();
        let nu = mu.nu();
        assert!((nu[0] - 1.0).norm() < 1e-14);
        assert!(nu[1].norm() < 1e-14);
        assert!((nu[2] + 1.0).norm() < 1e-14);
        let back = SpectralTriple::from_nu(nu).unwrap();
        for k in 0..3 {
            assert!((back.mu()[k] - mu.mu()[k]).norm() < 1e-14);
        }
        let zero = SpectralTriple::new([C::new(0.0, 0.0); 3]).unwrap();
        assert!(zero.nu().iter().all(|z| z.norm() == 0.0));
        let nu_t = mu_nu_convert(ConvertDirection::MuToNu, &mu).unwrap();
        let mu_t = mu_nu_convert(ConvertDirection::NuToMu, &nu_t).unwrap();
        for k in 0..3 {
            assert!((mu_t.mu()[k] - mu.mu()[k]).norm() < 1e-14);
        }
    }

    #[test]
    fn zero_sum_enforced() {
        assert!(
            SpectralTriple::new([C::new(1.0, 0.0), C::new(1.0, 0.0), C::new(1.0, 0.0)]).is_err()
        );
    }

    #[test]
    fn weyl_orbit_is_s3() {
        let mu = SpectralTriple::imaginary(0.7, -0.2);
        let mut seen: Vec<[C; 3]> = Vec::new();
        for w in WeylElement::ALL {
            let v = weyl_apply(w, &mu).mu();
            assert!(!seen
                .iter()
                .any(|s| s.iter().zip(v.iter()).all(|(a, b)| (a - b).norm() < 1e-15)));
            seen.push(v);
        }
        assert_eq!(seen.len(), 6);
        let id = weyl_apply(WeylElement::I, &mu).mu();
        assert_eq!(id, mu.mu());
        let rev = weyl_apply(WeylElement::W6, &mu).mu();
        assert_eq!(rev, [mu.mu()[2], mu.mu()[1], mu.mu()[0]]);
    }

    #[test]
    fn weyl_closure_under_composition() {
        let mu = SpectralTriple::imaginary(0.3, 0.9);
        for a in WeylElement::ALL {
            for b in WeylElement::ALL {
                let v = weyl_apply(a, &weyl_apply(b, &mu));
                let found = WeylElement::ALL.iter().any(|&c| {
                    (0..3).all(|k| (weyl_apply(c, &mu).mu()[k] - v.mu()[k]).norm() < 1e-15)
                });
                assert!(found);
            }
        }
    }

    #[test]
    fn poly_p_roots() {
        let params = TestFunctionParams::new(20.0, 0.5, 2, DEFAULT_DIRECTION_ANGLE).unwrap();
        for n in 0..=params.a {
            let root = (1.0 + 2.0 * n as f64) / 3.0;
            for sign in [1.0, -1.0] {
                let mu = SpectralTriple::from_nu([
                    C::new(sign * root, 0.0),
                    C::new(0.17, 0.0),
                    C::new(-sign * root - 0.17, 0.0),
                ])
                .unwrap();
                assert!(params.poly_p(&mu).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn poly_p_bounded_near_center() {
        let params = TestFunctionParams::new(20.0, 0.5, 2, DEFAULT_DIRECTION_ANGLE).unwrap();
        let p = params.poly_p(&params.mu0).norm();
        assert!(p <= 2f64.powi(9), "p = {p}"); // 2^{3(A+1)}
        assert!(p >= 1.0);
    }

    #[test]
    fn h_properties() {
        let params = TestFunctionParams::default_at(20.0).unwrap();
        let mu = SpectralTriple::imaginary(13.0, -9.0);
        let base = params.h(&mu);
        for w in WeylElement::ALL {
            let v = params.h(&weyl_apply(w, &mu));
            assert!((v - base).norm() <= 1e-12 * base.norm());
        }
        assert!(base.im.abs() <= 1e-10 * base.norm().max(1e-300));
        assert!(base.re >= 0.0);
        // ψ(0) = 1 dominates; the five remaining Weyl terms are ≤ e^{-c(T/M)²}
        let h0 = params.h(&params.mu0);
        let p0 = params.poly_p(&params.mu0);
        assert!((h0 / (p0 * p0) - 1.0).norm() < 1e-2);
        let far = SpectralTriple::imaginary(
            params.mu0.mu()[0].im + 12.0 * params.m,
            params.mu0.mu()[1].im - 11.0 * params.m,
        );
        let pfar = params.poly_p(&far);
        assert!(params.h(&far).norm() <= (-50.0f64).exp() * (pfar * pfar).norm());
    }

    #[test]
    fn spec_density_values() {
        let f = {
            let nu = C::new(0.0, 1.0);
            3.0 * nu * (1.5 * PI * nu).tan()
        };
        assert!((f.re + 3.0 * (1.5 * PI).tanh()).abs() < 1e-12);
        assert!(f.im.abs() < 1e-12);
        let mu = SpectralTriple::from_nu([C::new(0.0, 1.0), C::new(0.0, 1.0), C::new(0.0, -2.0)])
            .unwrap();
        let v = spec_density(&mu).unwrap();
        let f1 = -3.0 * (1.5 * PI).tanh();
        let f3 = -6.0 * (3.0 * PI).tanh();
        assert!((v.re - f1 * f1 * f3).abs() < 1e-9 * v.norm());
        let v2 = spec_density(&mu.neg()).unwrap();
        assert!((v - v2).norm() < 1e-12 * v.norm());
    }

    #[test]
    fn spec_density_pole_rejected() {
        let mu = SpectralTriple::from_nu([
            C::new(1.0 / 3.0, 0.0),
            C::new(0.11, 0.0),
            C::new(-1.0 / 3.0 - 0.11, 0.0),
        ])
        .unwrap();
        assert!(spec_density(&mu).is_err());
    }

    #[test]
    fn integrate_h_positive_and_converged() {
        let params = TestFunctionParams::default_at(20.0).unwrap();
        let v = integrate_h_dspec(&params, 3.2).unwrap();
        assert!(v > 0.0);
        let v2 = integrate_h_dspec(&params, 6.4).unwrap();
        assert!((v - v2).abs() < 0.01 * v.abs(), "v={v} v2={v2}");
    }

    #[test]
    fn grid_integrand_nonnegative() {
        let params = TestFunctionParams::default_at(20.0).unwrap();
        let grid = SpectralGrid::for_h(&params).unwrap();
        let max = grid.hspec.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for z in &grid.hspec {
            assert!(z.re >= -1e-10 * max);
            assert!(z.im.abs() <= 1e-10 * max);
        }
    }

    #[test]
    fn normalizer_values() {
        let nu = [C::new(0.0, 2.0), C::new(0.0, 3.0), C::new(0.0, -5.0)];
        let v = normalizer(&NormalizerInputs::Minimal { nu }).unwrap();
        assert!(v.re > 0.0 && v.im.abs() < 1e-12 * v.re);
        let mut expect = 1.0 / 16.0;
        for k in 0..3 {
            expect *= zeta(C::new(1.0, 0.0) + 3.0 * nu[k]).unwrap().norm_sqr();
        }
        assert!((v.re - expect).abs() < 1e-10 * expect);

        let m = normalizer(&NormalizerInputs::Maximal {
            mu: C::new(0.0, 1.0),
            adjoint_value: 1.0,
            l_pair: (C::new(1.0, 0.0), C::new(1.0, 0.0)),
        })
        .unwrap();
        assert!((m - 8.0).norm() < 1e-14);
    }

    #[test]
    fn direction_window_enforced() {
        let ok = SpectralTriple::imaginary(20.0, -10.0);
        assert!(TestFunctionParams::with_mu0(20.0, 0.5, 0, ok).is_ok());
        let wall = SpectralTriple::imaginary(20.0, -20.0); // μ₃ = 0
        assert!(TestFunctionParams::with_mu0(20.0, 0.5, 0, wall).is_err());
    }
}

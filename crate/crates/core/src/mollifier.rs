//! Mollifier calculus: the coefficients x_ℓ with their contour representation,
//! mollifier values, the Euler products H₁/H₂ behind the zeta-ratio
//! prefactors, and the 𝒮₁, 𝒮₂, Δ evaluations by finite sum, contour
//! integral, and closed form.

use crate::arith::{gcd, moebius_sieve, primes_up_to};
use crate::lfun::{zeta, CoefficientTable};
use crate::special::contour::adaptive_quad;
use crate::spectral::{SpectralGrid, TestFunctionParams};
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

type C = Complex64;

/// Mollifier data: length L (= T^δ), the line σ, and the coefficient table
/// x_ℓ for ℓ ≤ L².
#[derive(Debug, Clone)]
pub struct MollifierSpec {
    pub l: f64,
    pub delta_exp: f64,
    pub sigma: f64,
    /// x[ℓ] for ℓ = 1..=⌊L²⌋ (index 0 unused).
    pub coeffs: Vec<f64>,
}

impl MollifierSpec {
    pub fn new(l: f64, delta_exp: f64, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma <= 1.0) {
            return Err(CoreError::InvalidParameter(format!(
                "sigma must lie in (0, 1], got {sigma}"
            )));
        }
        Ok(Self {
            l,
            delta_exp,
            sigma,
            coeffs: x_coeffs(l)?,
        })
    }

    pub fn x(&self, ell: u64) -> f64 {
        self.coeffs.get(ell as usize).copied().unwrap_or(0.0)
    }
}

/// The piecewise coefficients: x_ℓ = μ(ℓ) for ℓ ≤ L,
/// μ(ℓ)·log(L²/ℓ)/log L for L < ℓ ≤ L², 0 beyond.
pub fn x_coeffs(l: f64) -> Result<Vec<f64>> {
    if !(l > 1.0) {
        return Err(CoreError::InvalidParameter(format!(
            "mollifier length must exceed 1, got {l}"
        )));
    }
    let cap = (l * l).floor() as usize;
    let mu = moebius_sieve(cap);
    let logl = l.ln();
    let mut x = vec![0.0f64; cap + 1];
    for (ell, xe) in x.iter_mut().enumerate().skip(1) {
        let m = mu[ell] as f64;
        if m == 0.0 {
            continue;
        }
        let lf = ell as f64;
        *xe = if lf <= l {
            m
        } else {
            m * (l * l / lf).ln() / logl
        };
    }
    Ok(x)
}

/// (1/2πi) ∫ X^u u⁻² du over a vertical line (= log X for X ≥ 1, else 0),
/// evaluated numerically with two tail integrations by parts.
fn mellin_log_plus(x: f64) -> Result<C> {
    let a = x.ln();
    if a.abs() < 1e-9 {
        return Ok(C::new(0.0, 0.0));
    }
    let c = if a > 0.0 {
        (2.0 / a).clamp(0.3, 3.0)
    } else {
        (40.0 / a.abs()).min(300.0)
    };
    let ymax = (460.0 / a.abs().max(1e-2).sqrt()).max(200.0);
    let f = |y: f64| {
        let u = C::new(c, y);
        (u * a).exp() / (u * u)
    };
    let (core, _) = adaptive_quad(&f, -ymax, ymax, 1e-11, 1e-14)?;
    // two integrations by parts on each oscillatory tail, boundary terms kept
    let i = C::new(0.0, 1.0);
    let ia = i * a;
    let up = C::new(c, ymax);
    let ep = (up * a).exp();
    let tail_p = ep * (-1.0 / (up * up * ia) + (-2.0 * i / (up * up * up)) / (ia * ia));
    let um = C::new(c, -ymax);
    let em = (um * a).exp();
    let tail_m = em * (1.0 / (um * um * ia) + (2.0 * i / (um * um * um)) / (ia * ia));
    Ok((core + tail_p + tail_m) / (2.0 * PI))
}

/// The contour representation of x_ℓ:
/// μ(ℓ)(1/2πi)∫((L²/ℓ)^u − (L/ℓ)^u) u⁻² du / log L.
pub fn x_contour_check(ell: u64, l: f64) -> Result<C> {
    let mu = crate::arith::moebius(ell) as f64;
    if mu == 0.0 {
        return Ok(C::new(0.0, 0.0));
    }
    let lf = ell as f64;
    let i1 = mellin_log_plus(l * l / lf)?;
    let i2 = mellin_log_plus(l / lf)?;
    Ok(mu * (i1 - i2) / l.ln())
}

/// M(s) = Σ_{ℓ≤L²} A(1,ℓ) x_ℓ ℓ^{-s}.
pub fn mollifier_value(s: C, coeffs: &CoefficientTable, spec: &MollifierSpec) -> Result<C> {
    let cap = (spec.l * spec.l).floor() as u64;
    let mut acc = C::new(0.0, 0.0);
    for ell in 1..=cap {
        let x = spec.x(ell);
        if x == 0.0 {
            continue;
        }
        acc += coeffs.get(1, ell)? * x * (-s * (ell as f64).ln()).exp();
    }
    Ok(acc)
}

/// Mollifier with A(1,ℓ) ≡ coefficients of ζ (all 1).
pub fn mollifier_value_zeta(s: C, spec: &MollifierSpec) -> C {
    let cap = (spec.l * spec.l).floor() as u64;
    let mut acc = C::new(0.0, 0.0);
    for ell in 1..=cap {
        let x = spec.x(ell);
        if x == 0.0 {
            continue;
        }
        acc += x * (-s * (ell as f64).ln()).exp();
    }
    acc
}

// ---------------------------------------------------------------------------
// Euler products H₁ and H₂.

/// Which Euler product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerKind {
    H1,
    H2,
}

fn primes_1e5() -> &'static Vec<u64> {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| primes_up_to(100_000))
}

/// H₁/H₂: the Euler product of the local factors of G₁/G₂ divided by the
/// local factors of the zeta-ratio prefactor, so that
/// G₁ = ζ(1+u+v+2σ)/(ζ(1+u+2σ)ζ(1+v+2σ))·H₁ and
/// G₂ = ζ(1+u+v+2σ)/(ζ(1+u)ζ(1+v))·H₂.
pub fn euler_h(kind: EulerKind, u: C, v: C, sigma: f64, prime_cap: u64) -> Result<C> {
    let margin = 0.05;
    let ok = match kind {
        EulerKind::H1 => {
            u.re + 2.0 * sigma > -0.5 + margin
                && v.re + 2.0 * sigma > -0.5 + margin
                && u.re + v.re + 2.0 * sigma > -0.5 + margin
        }
        EulerKind::H2 => {
            u.re > -0.5 + margin
                && v.re > -0.5 + margin
                && u.re + v.re + 2.0 * sigma > -0.5 + margin
        }
    };
    if !ok {
        return Err(CoreError::Region(format!(
            "({u}, {v}, sigma={sigma}) outside the absolute-convergence region of {kind:?}"
        )));
    }
    let mut acc = C::new(0.0, 0.0);
    for &p in primes_1e5().iter().filter(|&&p| p <= prime_cap) {
        let lp = (p as f64).ln();
        let (a, b) = match kind {
            EulerKind::H1 => (
                (-(u + 1.0 + 2.0 * sigma) * lp).exp(),
                (-(v + 1.0 + 2.0 * sigma) * lp).exp(),
            ),
            EulerKind::H2 => ((-(u + 1.0) * lp).exp(), (-(v + 1.0) * lp).exp()),
        };
        let cc = (-(u + v + 1.0 + 2.0 * sigma) * lp).exp();
        let d = match kind {
            EulerKind::H1 => (-(u + v + 2.0 + 4.0 * sigma) * lp).exp(),
            EulerKind::H2 => (-(u + v + 2.0) * lp).exp(),
        };
        let one = C::new(1.0, 0.0);
        let local = (one - a - b + cc + d) * (one - cc) / ((one - a) * (one - b));
        acc += local.ln();
    }
    Ok(acc.exp())
}

// ---------------------------------------------------------------------------
// 𝒮₁, Δ, 𝒮₂.

/// Evaluation method for 𝒮₁ and Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    Finite,
    Contour,
    Closed,
}

/// Σ_d d^{-α} (Σ_{(ℓ,d)=1} x_{dℓ} ℓ^{-β})², the diagonal square structure
/// shared by the finite 𝒮₁ and Δ sums.
fn square_sum(spec: &MollifierSpec, alpha: f64, beta: f64) -> f64 {
    let cap = (spec.l * spec.l).floor() as u64;
    let mut total = 0.0f64;
    for d in 1..=cap {
        if spec.x(d) == 0.0 {
            // x_{dℓ} = 0 for every ℓ when d is not squarefree
            continue;
        }
        let mut inner = 0.0f64;
        for ell in 1..=cap / d {
            let x = spec.x(d * ell);
            if x == 0.0 {
                continue;
            }
            if gcd(ell as i64, d as i64) != 1 {
                continue;
            }
            inner += x * (ell as f64).powf(-beta);
        }
        total += (d as f64).powf(-alpha) * inner * inner;
    }
    total
}

/// 𝒮₁ = ζ(1+2σ)·Σ_d Σ_{(ℓᵢ,d)=1} x_{dℓ₁}x_{dℓ₂}/(dℓ₁ℓ₂)^{1+2σ}
/// by the finite sum, or by the double vertical-line contour integral of
/// its generating identity on Re = 1/log T lines.
pub fn s1_eval(method: SumMethod, l: f64, sigma: f64, t_for_truncation: f64) -> Result<C> {
    if l < 2.0 {
        return Err(CoreError::InvalidParameter("need L >= 2".into()));
    }
    if !(sigma > 0.0 && sigma <= 1.0) {
        return Err(CoreError::InvalidParameter("sigma in (0, 1]".into()));
    }
    match method {
        SumMethod::Finite => {
            let spec = MollifierSpec::new(l, 0.0, sigma)?;
            let z = zeta(C::new(1.0 + 2.0 * sigma, 0.0))?;
            Ok(z * square_sum(&spec, 1.0 + 2.0 * sigma, 1.0 + 2.0 * sigma))
        }
        SumMethod::Contour => s1_contour(l, sigma, t_for_truncation),
        SumMethod::Closed => Err(CoreError::InvalidParameter(
            "no closed form is defined for S1".into(),
        )),
    }
}

/// Direct tensor quadrature on Re(u) = Re(v) = 1/log T with |Im| ≤ 250 and
/// per-axis prime-power tables feeding the coupled H₁ local factors.
fn s1_contour(l: f64, sigma: f64, t_tr: f64) -> Result<C> {
    let c1 = 1.0 / t_tr.ln();
    let y = 250.0f64;
    let h = 0.08f64;
    let n = (2.0 * y / h).ceil() as usize;
    let logl = l.ln();
    let kker = |w: C| -> C { ((2.0 * w * logl).exp() - (w * logl).exp()) / (w * w) / logl };
    let mut axis_k = Vec::with_capacity(n);
    let mut axis_zinv = Vec::with_capacity(n);
    let mut nodes = Vec::with_capacity(n);
    for j in 0..n {
        let im = -y + (j as f64 + 0.5) * h;
        let u = C::new(c1, im);
        nodes.push(u);
        axis_k.push(kker(u));
        axis_zinv.push(1.0 / zeta(u + (1.0 + 2.0 * sigma))?);
    }
    let mut zsum = Vec::with_capacity(2 * n - 1);
    for m in 0..(2 * n - 1) {
        let im = -2.0 * y + (m as f64 + 1.0) * h;
        zsum.push(zeta(C::new(2.0 * c1 + 1.0 + 2.0 * sigma, im))?);
    }
    let p0 = 200u64;
    let primes: Vec<u64> = primes_1e5().iter().copied().filter(|&p| p <= p0).collect();
    let mut apow: Vec<Vec<C>> = Vec::with_capacity(primes.len());
    for &p in &primes {
        let lp = (p as f64).ln();
        let row: Vec<C> = nodes
            .iter()
            .map(|&u| (-(u + 1.0 + 2.0 * sigma) * lp).exp())
            .collect();
        apow.push(row);
    }
    let pfac: Vec<f64> = primes
        .iter()
        .map(|&p| (p as f64).powf(1.0 + 2.0 * sigma))
        .collect();
    // tail of ln H₁ beyond p0: the leading local term is
    // c(a+b) − c² − ... = O(p^{-2-4σ}); fold the real part at the abscissae
    let tail_ln: f64 = primes_1e5()
        .iter()
        .filter(|&&p| p > p0)
        .map(|&p| {
            let pf = p as f64;
            pf.powf(-2.0 - 4.0 * sigma - 3.0 * c1) * (2.0 - pf.powf(-2.0 * sigma - c1))
                - pf.powf(-2.0 - 4.0 * sigma - 2.0 * c1)
        })
        .sum();
    let tail = tail_ln.exp();
    let one = C::new(1.0, 0.0);
    let mut acc = C::new(0.0, 0.0);
    for j in 0..n {
        for k in 0..n {
            let mut lnh = C::new(0.0, 0.0);
            for pi in 0..primes.len() {
                let a = apow[pi][j];
                let b = apow[pi][k];
                let d = a * b;
                let cc = d * pfac[pi];
                let local = (one - a - b + cc + d) * (one - cc) / ((one - a) * (one - b));
                lnh += local.ln();
            }
            let h1 = lnh.exp() * tail;
            acc += zsum[j + k] * axis_zinv[j] * axis_zinv[k] * h1 * axis_k[j] * axis_k[k];
        }
    }
    // (i dv)²/(2πi)² = +1/(4π²)
    let z = zeta(C::new(1.0 + 2.0 * sigma, 0.0))?;
    Ok(z * acc * h * h / (4.0 * PI * PI))
}

/// Δ by the finite triple sum or by the closed form
/// L^{-2σ}(−1+L^{-2σ})/(2σ log L)².
pub fn delta_eval(method: SumMethod, l: f64, sigma: f64) -> Result<C> {
    if l < 2.0 {
        return Err(CoreError::InvalidParameter("need L >= 2".into()));
    }
    match method {
        SumMethod::Finite => {
            let spec = MollifierSpec::new(l, 0.0, sigma)?;
            Ok(C::new(square_sum(&spec, 1.0 + 2.0 * sigma, 1.0), 0.0))
        }
        SumMethod::Closed => {
            let l2s = l.powf(-2.0 * sigma);
            Ok(C::new(
                l2s * (-1.0 + l2s) / (2.0 * sigma * l.ln()).powi(2),
                0.0,
            ))
        }
        SumMethod::Contour => Err(CoreError::InvalidParameter(
            "delta has finite and closed methods only".into(),
        )),
    }
}

/// 𝒮₂ pieces: the assembled value plus the spectral ratio and the finite Δ.
#[derive(Debug, Clone, Copy)]
pub struct S2Value {
    pub value: C,
    /// ∫h·Π(−μₖ²/4π²)^{-σ} dspec / ∫h dspec
    pub spectral_ratio: f64,
    pub delta_finite: f64,
}

/// 𝒮₂ = ζ(1−2σ)·Δ·(∫h Π(−μₖ²/4π²)^{-σ} dspec / ∫h dspec).
pub fn s2_eval(l: f64, sigma: f64, params: &TestFunctionParams) -> Result<S2Value> {
    if !(sigma > 1.0 / params.t.ln()) {
        return Err(CoreError::InvalidParameter(format!(
            "sigma must exceed 1/log T = {}",
            1.0 / params.t.ln()
        )));
    }
    let delta = delta_eval(SumMethod::Finite, l, sigma)?.re;
    let grid = SpectralGrid::for_h(params)?;
    let weighted = grid.sum_weighted(|mu| {
        let mut prod = C::new(1.0, 0.0);
        for k in 0..3 {
            let m = mu.mu()[k];
            let arg = -m * m / (4.0 * PI * PI);
            if arg.re < 0.0 && arg.im.abs() < 0.1 * arg.re.abs() {
                // principal power undefined this close to the cut
                return C::new(f64::NAN, f64::NAN);
            }
            prod *= (-sigma * arg.ln()).exp();
        }
        prod
    });
    let mass = grid.h_mass();
    let ratio = (weighted / mass).re;
    let z = zeta(C::new(1.0 - 2.0 * sigma, 0.0))?;
    Ok(S2Value {
        value: z * delta * ratio,
        spectral_ratio: ratio,
        delta_finite: delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_coeffs_examples() {
        let x = x_coeffs(10.0).unwrap();
        assert_eq!(x[6], 1.0);
        assert_eq!(x[20], 0.0);
        let expect = -(100.0f64 / 30.0).ln() / 10.0f64.ln();
        assert!((x[30] - expect).abs() < 1e-12);
        assert!((expect + 0.52288).abs() < 1e-4);
        assert!(x.iter().all(|v| v.abs() <= 1.0 + 1e-12));
    }

    #[test]
    fn x_contour_matches_piecewise() {
        let l = 10.0;
        let x = x_coeffs(l).unwrap();
        for ell in [2u64, 6, 7, 30, 51, 97] {
            let v = x_contour_check(ell, l).unwrap();
            assert!(
                (v.re - x[ell as usize]).abs() < 1e-5 && v.im.abs() < 1e-6,
                "ell={ell}: {v} vs {}",
                x[ell as usize]
            );
        }
        let v = x_contour_check(101 * 101, l).unwrap();
        assert!(v.norm() < 1e-6, "{v}");
    }

    #[test]
    fn mollifier_value_cases() {
        let spec = MollifierSpec::new(10.0, 0.0, 0.1).unwrap();
        let direct: f64 = (1..=100u64)
            .map(|e| spec.x(e) * (e as f64).powf(-3.0))
            .sum();
        let v = mollifier_value_zeta(C::new(3.0, 0.0), &spec);
        assert!((v.re - direct).abs() < 1e-14 && v.im.abs() < 1e-15);
        let tiny = MollifierSpec {
            l: 1.2,
            delta_exp: 0.0,
            sigma: 0.1,
            coeffs: vec![0.0, 1.0],
        };
        let v = mollifier_value_zeta(C::new(5.0, 0.0), &tiny);
        assert!((v - 1.0).norm() < 1e-15);
    }

    #[test]
    fn euler_h_region_guard() {
        assert!(euler_h(EulerKind::H1, C::new(-2.0, 0.0), C::new(0.0, 0.0), 0.05, 1000).is_err());
        assert!(euler_h(EulerKind::H2, C::new(-0.6, 0.0), C::new(0.0, 0.0), 0.3, 1000).is_err());
    }

    #[test]
    fn euler_h1_matches_triple_sum() {
        let sigma = 0.05;
        let u = C::new(0.2, 0.0);
        let v = C::new(0.2, 0.0);
        let cap = 10_000usize;
        let mu = moebius_sieve(cap);
        // independent full ℓ-ranges; precompute the summand table
        let lterm: Vec<f64> = (0..=cap)
            .map(|e| {
                if e == 0 || mu[e] == 0 {
                    0.0
                } else {
                    mu[e] as f64 * (e as f64).powf(-(1.0 + 2.0 * sigma) - u.re)
                }
            })
            .collect();
        let mut g1 = 0.0f64;
        let mut su_max = 0.0f64;
        for d in 1..=cap {
            if mu[d] == 0 {
                continue;
            }
            let df = d as f64;
            let dterm = df.powf(-(1.0 + 2.0 * sigma) - u.re - v.re);
            let mut su = 0.0f64;
            for ell in 1..=cap {
                if lterm[ell] != 0.0 && gcd(ell as i64, d as i64) == 1 {
                    su += lterm[ell];
                }
            }
            su_max = su_max.max(su.abs());
            g1 += dterm * su * su;
        }
        // untruncated d-tail allowance: Σ_{d>cap} μ²(d) d^{-1.5} · su²
        let d_tail = (6.0 / (PI * PI)) * 2.0 / (cap as f64).sqrt() * su_max * su_max;
        let h1 = euler_h(EulerKind::H1, u, v, sigma, 100_000).unwrap();
        let zr = zeta(C::new(1.0, 0.0) + u + v + 2.0 * sigma).unwrap()
            / (zeta(C::new(1.0, 0.0) + u + 2.0 * sigma).unwrap()
                * zeta(C::new(1.0, 0.0) + v + 2.0 * sigma).unwrap());
        let g1_from_h = (zr * h1).re;
        assert!(
            (g1 - g1_from_h).abs() < 1e-3 * g1.abs() + d_tail,
            "{g1} vs {g1_from_h} (tail allowance {d_tail:.2e})"
        );
    }

    #[test]
    fn delta_finite_positive_and_closed_value() {
        let closed = delta_eval(SumMethod::Closed, 100.0, 0.1).unwrap();
        let expect =
            100.0f64.powf(-0.2) * (-1.0 + 100.0f64.powf(-0.2)) / (0.2 * 100.0f64.ln()).powi(2);
        assert!((closed.re - expect).abs() < 1e-15);
        let finite = delta_eval(SumMethod::Finite, 100.0, 0.1).unwrap();
        assert!(finite.re > 0.0);
        assert!(finite.im.abs() < 1e-15);
    }

    #[test]
    fn s1_finite_small_l() {
        let v = s1_eval(SumMethod::Finite, 10.0, 0.1, 1000.0).unwrap();
        assert!(v.re.is_finite() && v.re > 0.0);
    }
}

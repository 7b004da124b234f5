//! Dirichlet-series utilities: ζ by Euler–Maclaurin, Hecke relations,
//! Eisenstein Fourier coefficients with their L-function factorizations, the
//! smooth cutoff G(u), and the approximate-functional-equation weights W / W̃
//! in full, truncated, asymptotic, and expanded form.

use crate::arith::{divisors, gcd, moebius};
use crate::special::gamma::{lgamma, ratio_poly_eval};
use crate::spectral::SpectralTriple;
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::PI;

type C = Complex64;

/// Bernoulli numbers B_{2k}/(2k)! for the Euler–Maclaurin corrections.
const B2K_OVER_FACT: [f64; 8] = [
    8.333333333333333e-2,   // B2/2!
    -1.3888888888888889e-3, // B4/4!
    3.306878306878307e-5,   // B6/6!
    -8.267195767195768e-7,  // B8/8!
    2.08767569878681e-8,    // B10/10!
    -5.284190138687493e-10, // B12/12!
    1.3382536530684679e-11, // B14/14!
    -3.2896526488930005e-13, // B16/16!
];

/// Riemann ζ(s) by Euler–Maclaurin with N = 50 + 3|Im s| initial terms and
/// correction order 8. Accurate to ~1e-10 relative for |Im s| ≤ 200,
/// Re s ≥ -1.
pub fn zeta(s: C) -> Result<C> {
    if (s - 1.0).norm() < 1e-12 {
        return Err(CoreError::Pole("zeta pole at s = 1".into()));
    }
    if s.re < -3.0 {
        return Err(CoreError::Region(format!(
            "zeta implemented for Re(s) > -3, got {s}"
        )));
    }
    let n = 50 + (3.0 * s.im.abs()).ceil() as usize;
    let nf = n as f64;
    let mut sum = C::new(0.0, 0.0);
    for k in 1..n {
        sum += (-s * (k as f64).ln()).exp();
    }
    let npow = (-s * nf.ln()).exp(); // N^{-s}
    sum += npow * nf / (s - 1.0); // N^{1-s}/(s-1)
    sum += npow * 0.5;
    // Σ_k B_{2k}/(2k)! · s(s+1)···(s+2k-2) · N^{-s-2k+1}
    let mut poch = s;
    let mut nshift = npow * nf; // N^{-s+1}
    for (k, &b) in B2K_OVER_FACT.iter().enumerate() {
        nshift = nshift / (nf * nf); // N^{-s-2k+1}
        sum += poch * b * nshift;
        let kk = 2 * (k + 1) as i32;
        poch *= (s + (kk - 1) as f64) * (s + kk as f64);
    }
    Ok(sum)
}

// ---------------------------------------------------------------------------
// Coefficient tables.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    CuspInput,
    EisensteinMin,
    EisensteinMax,
}

/// Associative table (m, n) → A(m, n) with provenance.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub kind: TableKind,
    entries: HashMap<(u64, u64), C>,
    pub provenance: String,
}

impl CoefficientTable {
    /// Validated user-supplied cusp-form coefficients (A(1,1) must be 1).
    pub fn cusp_input(entries: HashMap<(u64, u64), C>, provenance: &str) -> Result<Self> {
        match entries.get(&(1, 1)) {
            Some(v) if (v - 1.0).norm() < 1e-12 => {}
            Some(v) => {
                return Err(CoreError::InvalidParameter(format!(
                    "cusp table needs A(1,1) = 1, got {v}"
                )))
            }
            None => {
                return Err(CoreError::MissingData("cusp table lacks A(1,1)".into()));
            }
        }
        Ok(Self {
            kind: TableKind::CuspInput,
            entries,
            provenance: provenance.to_string(),
        })
    }

    pub fn from_parts(kind: TableKind, entries: HashMap<(u64, u64), C>, provenance: &str) -> Self {
        Self {
            kind,
            entries,
            provenance: provenance.to_string(),
        }
    }

    pub fn get(&self, m: u64, n: u64) -> Result<C> {
        self.entries
            .get(&(m, n))
            .copied()
            .ok_or_else(|| CoreError::MissingData(format!("table entry ({m}, {n}) absent")))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiply every entry by a constant (linearity checks).
    pub fn scaled(&self, c: C) -> Self {
        let entries = self.entries.iter().map(|(&k, &v)| (k, v * c)).collect();
        Self {
            kind: self.kind,
            entries,
            provenance: format!("{} (scaled)", self.provenance),
        }
    }
}

/// A_μ(m,1) = Σ_{d₁d₂d₃ = m} d₁^{μ₁} d₂^{μ₂} d₃^{μ₃}.
pub fn eisenstein_min_coeff_m1(mu: &SpectralTriple, m: u64) -> C {
    let mus = mu.mu();
    let mut sum = C::new(0.0, 0.0);
    for d1 in divisors(m) {
        let r = m / d1;
        for d2 in divisors(r) {
            let d3 = r / d2;
            sum += (mus[0] * (d1 as f64).ln() + mus[1] * (d2 as f64).ln()
                + mus[2] * (d3 as f64).ln())
            .exp();
        }
    }
    sum
}

/// A_μ(1,n): same with negated exponents (the dual side).
pub fn eisenstein_min_coeff_1n(mu: &SpectralTriple, n: u64) -> C {
    eisenstein_min_coeff_m1(&mu.neg(), n)
}

/// Möbius-twisted two-index value from one-line values:
/// A(m₁,m₂) = Σ_{d|(m₁,m₂)} μ(d) A(m₁/d, 1) A(1, m₂/d).
pub fn eisenstein_min_coeff(mu: &SpectralTriple, m: u64, n: u64) -> C {
    let g = gcd(m as i64, n as i64) as u64;
    let mut sum = C::new(0.0, 0.0);
    for d in divisors(g) {
        let mo = moebius(d);
        if mo == 0 {
            continue;
        }
        sum += (mo as f64) * eisenstein_min_coeff_m1(mu, m / d) * eisenstein_min_coeff_1n(mu, n / d);
    }
    sum
}

/// B_{μ,g}(m,1) = Σ_{d₁d₂=m} λ_g(d₁) d₁^{μ} d₂^{-2μ}; lambda is 1-indexed.
pub fn eisenstein_max_coeff_m1(mu: C, lambda: &[f64], m: u64) -> Result<C> {
    let mut sum = C::new(0.0, 0.0);
    for d1 in divisors(m) {
        let d2 = m / d1;
        let lam = *lambda
            .get(d1 as usize - 1)
            .ok_or_else(|| CoreError::MissingData(format!("lambda_g({d1}) absent")))?;
        sum += lam * (mu * (d1 as f64).ln() - 2.0 * mu * (d2 as f64).ln()).exp();
    }
    Ok(sum)
}

/// B_{μ,g}(1,n) (dual side: μ → −μ).
pub fn eisenstein_max_coeff_1n(mu: C, lambda: &[f64], n: u64) -> Result<C> {
    eisenstein_max_coeff_m1(-mu, lambda, n)
}

/// Möbius-twisted two-index maximal coefficient.
pub fn eisenstein_max_coeff(mu: C, lambda: &[f64], m: u64, n: u64) -> Result<C> {
    let g = gcd(m as i64, n as i64) as u64;
    let mut sum = C::new(0.0, 0.0);
    for d in divisors(g) {
        let mo = moebius(d);
        if mo == 0 {
            continue;
        }
        sum += (mo as f64)
            * eisenstein_max_coeff_m1(mu, lambda, m / d)?
            * eisenstein_max_coeff_1n(mu, lambda, n / d)?;
    }
    Ok(sum)
}

/// Dense one-line array A_μ(1, n) for n ≤ x via two divisor convolutions.
pub fn eisenstein_min_one_line(mu: &SpectralTriple, x: usize) -> Vec<C> {
    let mus = mu.neg().mu();
    let mut a = vec![C::new(0.0, 0.0); x + 1];
    let mut b = vec![C::new(0.0, 0.0); x + 1];
    for (n, v) in a.iter_mut().enumerate().skip(1) {
        *v = (mus[0] * (n as f64).ln()).exp();
    }
    for d in 1..=x {
        let pw = (mus[1] * (d as f64).ln()).exp();
        let mut m = d;
        let mut k = 1usize;
        while m <= x {
            b[m] += a[k] * pw; // b[d·k] += a[k]·d^{-μ₂}
            m += d;
            k += 1;
        }
    }
    let mut out = vec![C::new(0.0, 0.0); x + 1];
    for d in 1..=x {
        let pw = (mus[2] * (d as f64).ln()).exp();
        let mut m = d;
        let mut k = 1usize;
        while m <= x {
            out[m] += b[k] * pw;
            m += d;
            k += 1;
        }
    }
    out
}

/// Table of eisenstein-min pair coefficients for all mn ≤ cap.
pub fn eisenstein_min_table(mu: &SpectralTriple, cap: u64) -> CoefficientTable {
    let capu = cap as usize;
    let row = {
        // A(m, 1) for m ≤ cap
        let dual = mu.neg();
        eisenstein_min_one_line(&dual, capu)
    };
    let col = eisenstein_min_one_line(mu, capu);
    let mut entries = HashMap::new();
    for m in 1..=cap {
        for n in 1..=cap / m {
            let g = gcd(m as i64, n as i64) as u64;
            let mut v = C::new(0.0, 0.0);
            for d in divisors(g) {
                let mo = moebius(d);
                if mo == 0 {
                    continue;
                }
                v += (mo as f64) * row[(m / d) as usize] * col[(n / d) as usize];
            }
            entries.insert((m, n), v);
        }
    }
    CoefficientTable::from_parts(
        TableKind::EisensteinMin,
        entries,
        &format!("eisenstein_min cap {cap}"),
    )
}

/// Hecke composition: A(m,1)A(1,n) − Σ_{d|(m,n), d>1} A(m/d, n/d) with the
/// inner values reduced recursively to one-line data.
pub fn hecke_compose(table: &CoefficientTable, m: u64, n: u64) -> Result<C> {
    let mut v = table.get(m, 1)? * table.get(1, n)?;
    let g = gcd(m as i64, n as i64) as u64;
    for d in divisors(g) {
        if d > 1 {
            v -= hecke_compose(table, m / d, n / d)?;
        }
    }
    Ok(v)
}

/// Which Eisenstein family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisensteinKind {
    Min,
    Max,
}

/// Compare the truncated Dirichlet series against the ζ/L-product.
/// Returns (series_value, product_value, |difference|).
pub fn eisenstein_l_check(
    kind: EisensteinKind,
    mu: &SpectralTriple,
    mu_scalar: C,
    lambda: Option<&[f64]>,
    s: C,
    x: usize,
) -> Result<(C, C, f64)> {
    if s.re < 1.5 {
        return Err(CoreError::Region(format!(
            "need Re(s) >= 3/2 for the convergence margin, got {s}"
        )));
    }
    match kind {
        EisensteinKind::Min => {
            let line = eisenstein_min_one_line(mu, x);
            let mut series = C::new(0.0, 0.0);
            for (n, &a) in line.iter().enumerate().skip(1) {
                series += a * (-s * (n as f64).ln()).exp();
            }
            let mut product = C::new(1.0, 0.0);
            for k in 0..3 {
                product *= zeta(s + mu.mu()[k])?;
            }
            Ok((series, product, (series - product).norm()))
        }
        EisensteinKind::Max => {
            let lambda = lambda.ok_or_else(|| {
                CoreError::MissingData("maximal Eisenstein check needs lambda_g data".into())
            })?;
            let mut series = C::new(0.0, 0.0);
            for n in 1..=x as u64 {
                let b = eisenstein_max_coeff_1n(mu_scalar, lambda, n)?;
                series += b * (-s * (n as f64).ln()).exp();
            }
            // ζ(s-2μ) · Σ_{n≤X} λ_g(n) n^{-s-μ}, truncated consistently
            let mut lsum = C::new(0.0, 0.0);
            for n in 1..=x.min(lambda.len()) {
                lsum += lambda[n - 1] * (-(s + mu_scalar) * (n as f64).ln()).exp();
            }
            let product = zeta(s - 2.0 * mu_scalar)? * lsum;
            Ok((series, product, (series - product).norm()))
        }
    }
}

// ---------------------------------------------------------------------------
// The cutoff G(u) and the AFE weights.

/// Default cutoff degree A. Large A keeps G ≈ 1 on the short shifts the
/// weight asymptotics rely on while still truncating the coefficient sums.
pub const DEFAULT_CUTOFF_A: u32 = 4096;

/// Safety factor multiplying the log-scale truncation height.
pub const TRUNCATION_SAFETY: f64 = 4.0;

/// log G(u) for G(u) = cos(πu/A)^{-100A}, holomorphic in |Re u| < A/2.
pub fn log_g_cutoff(u: C, a: u32) -> Result<C> {
    let af = a as f64;
    if u.re.abs() >= af / 2.0 {
        return Err(CoreError::Region(format!(
            "G(u) needs |Re u| < A/2 = {}, got {u}",
            af / 2.0
        )));
    }
    Ok(-(100.0 * af) * (PI * u / af).cos().ln())
}

/// G(u) with an underflow flag (true when |G| < 1e-300 was clipped to 0).
pub fn g_cutoff_flagged(u: C, a: u32) -> Result<(C, bool)> {
    let lg = log_g_cutoff(u, a)?;
    if lg.re < -700.0 {
        return Ok((C::new(0.0, 0.0), true));
    }
    Ok((lg.exp(), false))
}

/// G(u) = cos(πu/A)^{-100A}.
pub fn g_cutoff(u: C, a: u32) -> Result<C> {
    Ok(g_cutoff_flagged(u, a)?.0)
}

/// Which AFE weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfeWhich {
    W,
    WTilde,
}

/// Evaluation method for the AFE weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfeMethod {
    Full,
    Truncated,
    Asymptotic,
    Expanded(usize),
}

/// Query bundle for an AFE weight: s = 1/2 + σ + iτ.
#[derive(Debug, Clone, Copy)]
pub struct AfeQuery {
    pub sigma: f64,
    pub tau: f64,
    pub mu: SpectralTriple,
    pub y: f64,
    pub a: u32,
    pub method: AfeMethod,
}

impl AfeQuery {
    pub fn new(sigma: f64, tau: f64, mu: SpectralTriple, y: f64, a: u32, method: AfeMethod) -> Result<Self> {
        if !(sigma > 0.0 && sigma <= 0.5) {
            return Err(CoreError::InvalidParameter(format!(
                "sigma must lie in (0, 1/2], got {sigma}"
            )));
        }
        if !(y > 0.0) {
            return Err(CoreError::InvalidParameter(format!("y must be positive, got {y}")));
        }
        Ok(Self {
            sigma,
            tau,
            mu,
            y,
            a,
            method,
        })
    }

    pub fn s(&self) -> C {
        C::new(0.5 + self.sigma, self.tau)
    }
}

/// Half-height beyond which |G| < 1e-70 on the integration line
/// (ln|G(σ+iy)| ≈ −50π²y²/A for |y| ≪ A).
fn g_support_half_height(a: u32) -> f64 {
    (165.0 * a as f64 / (50.0 * PI * PI)).sqrt() + 0.5
}

/// Node table for the weight integrals at fixed (s, μ): the Gamma-ratio
/// factors are precomputed per node so each y costs one short dot product.
pub struct AfeWeightTable {
    /// u-nodes with the (trapezoid weight / 2π) folded into the factors
    nodes: Vec<C>,
    fw: Vec<C>,
    fwt: Vec<C>,
}

impl AfeWeightTable {
    pub fn build(sigma: f64, tau: f64, mu: &SpectralTriple, a: u32, half_height: f64) -> Result<Self> {
        let eps = 0.5f64;
        let spacing = 0.05f64;
        let n = ((2.0 * half_height / spacing).ceil() as usize) | 1;
        let h = 2.0 * half_height / (n - 1) as f64;
        let s = C::new(0.5 + sigma, tau);
        let sb = C::new(0.5 + sigma, -tau);
        let mus = mu.mu();
        let mut nodes = Vec::with_capacity(n);
        let mut fw = Vec::with_capacity(n);
        let mut fwt = Vec::with_capacity(n);
        for j in 0..n {
            let y = -half_height + j as f64 * h;
            let u = C::new(eps, y);
            let lg = log_g_cutoff(u, a)?;
            let mut lw = lg - u.ln();
            let mut lwt = lg - u.ln();
            for k in 0..3 {
                lw += lgamma((s + u - mus[k]) / 2.0) - lgamma((s - mus[k]) / 2.0)
                    + lgamma((sb + u + mus[k]) / 2.0)
                    - lgamma((sb + mus[k]) / 2.0);
                lwt += lgamma((1.0 - s + u + mus[k]) / 2.0) - lgamma((sb + mus[k]) / 2.0)
                    + lgamma((1.0 - sb + u - mus[k]) / 2.0)
                    - lgamma((s - mus[k]) / 2.0);
            }
            let wt = if j == 0 || j == n - 1 { h / 2.0 } else { h };
            let scale = C::new(wt / (2.0 * PI), 0.0);
            nodes.push(u);
            fw.push(lw.exp() * scale);
            fwt.push(lwt.exp() * scale);
        }
        Ok(Self { nodes, fw, fwt })
    }

    fn dot(&self, coeffs: &[C], y: f64) -> C {
        let lcap = (PI.powi(3) * y).ln();
        let mut acc = C::new(0.0, 0.0);
        for (u, f) in self.nodes.iter().zip(coeffs.iter()) {
            acc += (-u * lcap).exp() * f;
        }
        acc
    }

    pub fn w(&self, y: f64) -> C {
        self.dot(&self.fw, y)
    }

    pub fn w_tilde(&self, y: f64) -> C {
        self.dot(&self.fwt, y)
    }
}

/// Expanded-form node table: Gamma ratios replaced by
/// z^{u/2}(1 + Σ_{n≤N} Pₙ(u/2) z⁻ⁿ) per factor.
fn afe_weight_expanded(which: AfeWhich, q: &AfeQuery, order: usize) -> Result<C> {
    let hh = g_support_half_height(q.a);
    let spacing = 0.05f64;
    let n = ((2.0 * hh / spacing).ceil() as usize) | 1;
    let h = 2.0 * hh / (n - 1) as f64;
    let s = q.s();
    let sb = s.conj();
    let mus = q.mu.mu();
    let lcap = (PI.powi(3) * q.y).ln();
    let mut acc = C::new(0.0, 0.0);
    for j in 0..n {
        let y = -hh + j as f64 * h;
        let u = C::new(0.5, y);
        let lg = log_g_cutoff(u, q.a)?;
        let mut val = (lg - u.ln() - u * lcap).exp();
        for k in 0..3 {
            for z in [(s - mus[k]) / 2.0, (sb + mus[k]) / 2.0] {
                // W uses z^{u/2}; W̃ carries the extra z^{-σ} per factor
                let base_pow = match which {
                    AfeWhich::W => u / 2.0,
                    AfeWhich::WTilde => u / 2.0 - q.sigma,
                };
                let mut corr = C::new(1.0, 0.0);
                let zinv = 1.0 / z;
                let mut zp = C::new(1.0, 0.0);
                for nn in 1..=order {
                    zp *= zinv;
                    corr += ratio_poly_eval(nn, u / 2.0) * zp;
                }
                val *= (base_pow * z.ln()).exp() * corr;
            }
        }
        let wt = if j == 0 || j == n - 1 { h / 2.0 } else { h };
        acc += val * (wt / (2.0 * PI));
    }
    Ok(acc)
}

/// The AFE weight W or W̃ by the requested method.
pub fn afe_weight(which: AfeWhich, q: &AfeQuery) -> Result<C> {
    match q.method {
        AfeMethod::Full => {
            let table = AfeWeightTable::build(q.sigma, q.tau, &q.mu, q.a, g_support_half_height(q.a))?;
            Ok(match which {
                AfeWhich::W => table.w(q.y),
                AfeWhich::WTilde => table.w_tilde(q.y),
            })
        }
        AfeMethod::Truncated => {
            let hh = TRUNCATION_SAFETY * (2.0 + q.mu.norm()).ln();
            let table = AfeWeightTable::build(q.sigma, q.tau, &q.mu, q.a, hh)?;
            Ok(match which {
                AfeWhich::W => table.w(q.y),
                AfeWhich::WTilde => table.w_tilde(q.y),
            })
        }
        AfeMethod::Asymptotic => match which {
            AfeWhich::W => Ok(C::new(1.0, 0.0)),
            AfeWhich::WTilde => {
                let s = q.s();
                let sb = s.conj();
                let mut lsum = C::new(0.0, 0.0);
                for k in 0..3 {
                    let m = q.mu.mu()[k];
                    lsum += lgamma((1.0 - s + m) / 2.0) - lgamma((sb + m) / 2.0)
                        + lgamma((1.0 - sb - m) / 2.0)
                        - lgamma((s - m) / 2.0);
                }
                Ok(lsum.exp())
            }
        },
        AfeMethod::Expanded(order) => afe_weight_expanded(which, q, order),
    }
}

/// The |L|²-surrogate assembled from a coefficient table:
/// Σ_r r^{-1-2σ} Σ_{m,n} A(m,n)(mn)^{-1/2-σ}(m/n)^{iτ} W(s, r²mn)
/// + π^{6σ} Σ_r r^{-1+2σ} Σ_{m,n} A(m,n)(mn)^{-1/2+σ}(m/n)^{iτ} W̃(s, r²mn).
pub fn afe_assemble(
    sigma: f64,
    tau: f64,
    coeffs: &CoefficientTable,
    mu: &SpectralTriple,
    cap: f64,
    cutoff_a: u32,
) -> Result<C> {
    if !(cap >= 1.0) {
        return Err(CoreError::InvalidParameter("cap must be >= 1".into()));
    }
    let table = AfeWeightTable::build(sigma, tau, mu, cutoff_a, g_support_half_height(cutoff_a))?;
    let mut wcache: HashMap<u64, (C, C)> = HashMap::new();
    let capu = cap as u64;
    let mut first = C::new(0.0, 0.0);
    let mut second = C::new(0.0, 0.0);
    let mut r = 1u64;
    while r * r <= capu {
        let inner_cap = capu / (r * r);
        let mut s1 = C::new(0.0, 0.0);
        let mut s2 = C::new(0.0, 0.0);
        for m in 1..=inner_cap {
            for n in 1..=inner_cap / m {
                let a = coeffs.get(m, n)?;
                if a.norm() == 0.0 {
                    continue;
                }
                let key = r * r * m * n;
                let (w, wt) = *wcache
                    .entry(key)
                    .or_insert_with(|| (table.w(key as f64), table.w_tilde(key as f64)));
                let lmn = ((m * n) as f64).ln();
                let phase = C::new(0.0, tau * ((m as f64).ln() - (n as f64).ln())).exp();
                s1 += a * (-(0.5 + sigma) * lmn).exp() * phase * w;
                s2 += a * (-(0.5 - sigma) * lmn).exp() * phase * wt;
            }
        }
        let rf = r as f64;
        first += s1 * rf.powf(-1.0 - 2.0 * sigma);
        second += s2 * rf.powf(-1.0 + 2.0 * sigma);
        r += 1;
    }
    Ok(first + PI.powf(6.0 * sigma) * second)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn test_mu(scale: f64) -> SpectralTriple {
        SpectralTriple::new([c(0.0, 7.0 * scale), c(0.0, 3.0 * scale), c(0.0, -10.0 * scale)])
            .unwrap()
    }

    #[test]
    fn zeta_classical_values() {
        let z2 = zeta(c(2.0, 0.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-10);
        let zm1 = zeta(c(-1.0, 0.0)).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-8);
        let z3 = zeta(c(3.0, 0.0)).unwrap();
        assert!((z3.re - 1.2020569031595943).abs() < 1e-10);
        assert!(zeta(c(1.0, 0.0)).is_err());
    }

    #[test]
    fn zeta_near_first_zero_and_conjugation() {
        let z = zeta(c(0.5, 14.134725)).unwrap();
        assert!(z.norm() < 1e-4, "{z}");
        let s = c(0.7, 31.3);
        let a = zeta(s).unwrap();
        let b = zeta(s.conj()).unwrap();
        assert!((a.conj() - b).norm() < 1e-14 * a.norm());
    }

    #[test]
    fn eisenstein_min_basics() {
        let mu = test_mu(1.0);
        // m = 1: empty factorization
        assert!((eisenstein_min_coeff_m1(&mu, 1) - 1.0).norm() < 1e-15);
        // μ = 0, m = 6: number of ordered triples with product 6 = d₃(6) = 9
        let zero = SpectralTriple::new([c(0.0, 0.0); 3]).unwrap();
        assert!((eisenstein_min_coeff_m1(&zero, 6) - 9.0).norm() < 1e-12);
        // prime: p^{μ₁}+p^{μ₂}+p^{μ₃}
        let p = 7.0f64;
        let expect: C = mu.mu().iter().map(|&m| (m * p.ln()).exp()).sum();
        assert!((eisenstein_min_coeff_m1(&mu, 7) - expect).norm() < 1e-12);
    }

    #[test]
    fn eisenstein_one_line_matches_pointwise() {
        let mu = test_mu(0.7);
        let line = eisenstein_min_one_line(&mu, 60);
        for n in 1..=60u64 {
            let direct = eisenstein_min_coeff_1n(&mu, n);
            assert!(
                (line[n as usize] - direct).norm() < 1e-10 * (1.0 + direct.norm()),
                "n={n}"
            );
        }
    }

    #[test]
    fn eisenstein_symmetry_and_hecke() {
        let mu = test_mu(1.0); // imaginary axis
        for m in 1..=50u64 {
            let a = eisenstein_min_coeff_m1(&mu, m);
            let b = eisenstein_min_coeff_1n(&mu, m);
            assert!((a - b.conj()).norm() < 1e-10 * (1.0 + a.norm()), "m={m}");
        }
        // two-index values satisfy the Hecke composition exactly
        let table = eisenstein_min_table(&mu, 400);
        for (m, n) in [(4u64, 6u64), (12, 18), (9, 9), (2, 3)] {
            let direct = table.get(m, n).unwrap();
            let composed = hecke_compose(&table, m, n).unwrap();
            assert!(
                (direct - composed).norm() < 1e-10 * (1.0 + direct.norm()),
                "({m},{n})"
            );
        }
    }

    #[test]
    fn hecke_compose_trivial_cases() {
        let mu = test_mu(1.0);
        let table = eisenstein_min_table(&mu, 30);
        assert!((hecke_compose(&table, 1, 1).unwrap() - 1.0).norm() < 1e-12);
        let v = hecke_compose(&table, 2, 3).unwrap();
        let expect = table.get(2, 1).unwrap() * table.get(1, 3).unwrap();
        assert!((v - expect).norm() < 1e-12);
    }

    #[test]
    fn eisenstein_l_check_min() {
        let zero = SpectralTriple::new([c(0.0, 0.0); 3]).unwrap();
        let (_, _, d) = eisenstein_l_check(EisensteinKind::Min, &zero, c(0.0, 0.0), None, c(2.0, 0.0), 20_000)
            .unwrap();
        assert!(d < 1e-2, "d = {d}");
        let mu = test_mu(1.0);
        let (_, _, d) = eisenstein_l_check(EisensteinKind::Min, &mu, c(0.0, 0.0), None, c(2.0, 0.0), 20_000)
            .unwrap();
        assert!(d < 1e-2, "d = {d}");
        assert!(eisenstein_l_check(EisensteinKind::Min, &mu, c(0.0, 0.0), None, c(1.2, 0.0), 100).is_err());
    }

    #[test]
    fn eisenstein_l_check_max_synthetic() {
        let ones = vec![1.0f64; 300];
        let zero = SpectralTriple::new([c(0.0, 0.0); 3]).unwrap();
        let (series, product, d) = eisenstein_l_check(
            EisensteinKind::Max,
            &zero,
            c(0.0, 0.0),
            Some(&ones),
            c(3.0, 0.0),
            300,
        )
        .unwrap();
        // with λ ≡ 1 and μ = 0 both sides are ζ(3)²-truncations
        assert!(d < 1e-4, "series {series}, product {product}");
    }

    #[test]
    fn g_cutoff_properties() {
        let a = DEFAULT_CUTOFF_A;
        assert!((g_cutoff(c(0.0, 0.0), a).unwrap() - 1.0).norm() < 1e-14);
        for &u in &[c(0.3, 1.2), c(-1.1, 0.4), c(2.0, -2.0)] {
            let g1 = g_cutoff(u, a).unwrap();
            let g2 = g_cutoff(-u, a).unwrap();
            assert!((g1 - g2).norm() < 1e-12 * (1.0 + g1.norm()));
        }
        // deep in the strip the modulus collapses; the guard clips to zero
        let (v, under) = g_cutoff_flagged(c(0.3, 6.0), 16).unwrap();
        assert!(under && v.norm() == 0.0);
        assert!(g_cutoff(c(8.5, 0.0), 16).is_err());
    }

    #[test]
    fn afe_weight_full_equals_truncated() {
        let mu = test_mu(2.0);
        for &sigma in &[0.1, 0.25, 0.5] {
            for &tau in &[0.0, 0.5, -1.0] {
                for &y in &[1.0, 100.0, 5000.0] {
                    let qf = AfeQuery::new(sigma, tau, mu, y, DEFAULT_CUTOFF_A, AfeMethod::Full).unwrap();
                    let qt = AfeQuery { method: AfeMethod::Truncated, ..qf };
                    for which in [AfeWhich::W, AfeWhich::WTilde] {
                        let a = afe_weight(which, &qf).unwrap();
                        let b = afe_weight(which, &qt).unwrap();
                        assert!(
                            (a - b).norm() < 1e-6,
                            "{which:?} σ={sigma} τ={tau} y={y}: {a} vs {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn afe_weight_asymptotics() {
        let mu = test_mu(2.4); // ‖μ‖ ≈ 30
        let q = AfeQuery::new(0.1, 0.0, mu, 1.0, DEFAULT_CUTOFF_A, AfeMethod::Full).unwrap();
        let w = afe_weight(AfeWhich::W, &q).unwrap();
        assert!((w - 1.0).norm() < 0.01, "W(1) = {w}");
        // decay regime
        let ylarge = 10.0 * mu.norm().powi(3);
        let q2 = AfeQuery { y: ylarge, ..q };
        let wl = afe_weight(AfeWhich::W, &q2).unwrap();
        assert!(wl.norm() < 0.1 * w.norm(), "decay ratio {}", wl.norm() / w.norm());
        // W̃ near its Gamma-ратio limit
        let wt = afe_weight(AfeWhich::WTilde, &q).unwrap();
        let qa = AfeQuery { method: AfeMethod::Asymptotic, ..q };
        let wta = afe_weight(AfeWhich::WTilde, &qa).unwrap();
        assert!((wt - wta).norm() < 0.02 * wta.norm().max(1e-10), "{wt} vs {wta}");
    }

    #[test]
    fn afe_weight_expanded_error_decreases() {
        let mu = test_mu(2.4); // ‖μ‖ ≈ 30
        let q = AfeQuery::new(0.1, 0.3, mu, 400.0, 256, AfeMethod::Full).unwrap();
        let truth = afe_weight(AfeWhich::W, &q).unwrap();
        let mut last = f64::INFINITY;
        for order in 0..=3 {
            let qe = AfeQuery { method: AfeMethod::Expanded(order), ..q };
            let v = afe_weight(AfeWhich::W, &qe).unwrap();
            let err = (v - truth).norm();
            assert!(err < last, "order {order}: {err} !< {last}");
            last = err;
        }
    }

    #[test]
    fn afe_assemble_zero_and_linearity() {
        let mu = test_mu(1.0);
        let mut entries = HashMap::new();
        for m in 1..=16u64 {
            for n in 1..=16 / m {
                entries.insert((m, n), c(0.0, 0.0));
            }
        }
        let table = CoefficientTable::from_parts(TableKind::CuspInput, entries, "zeros");
        let v = afe_assemble(0.1, 0.0, &table, &mu, 16.0, DEFAULT_CUTOFF_A).unwrap();
        assert!(v.norm() < 1e-14);

        let small = eisenstein_min_table(&mu, 16);
        let v1 = afe_assemble(0.1, 0.0, &small, &mu, 16.0, DEFAULT_CUTOFF_A).unwrap();
        let v2 = afe_assemble(0.1, 0.0, &small.scaled(c(2.0, 0.0)), &mu, 16.0, DEFAULT_CUTOFF_A).unwrap();
        assert!((v2 - v1 * 2.0).norm() < 1e-10 * v1.norm());
    }

    #[test]
    fn afe_assemble_cap_exceeding_table_reports() {
        let mu = test_mu(1.0);
        let small = eisenstein_min_table(&mu, 4);
        assert!(afe_assemble(0.1, 0.0, &small, &mu, 100.0, DEFAULT_CUTOFF_A).is_err());
    }
}

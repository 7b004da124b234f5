//! Complex Gamma machinery: principal-branch log-Gamma, the completed factor
//! Γ_R, the vertical-strip Stirling expansion of Γ(σ₁+it), and the ratio
//! expansion Γ(z+u)/Γ(z) = z^u (1 + Σ Pₙ(u) z⁻ⁿ).

use crate::{CoreError, Result};
use num_complex::Complex64;
use num_rational::Ratio;
use std::f64::consts::PI;
use std::sync::OnceLock;

type C = Complex64;
type Q = Ratio<i128>;

/// B_{2j} for j = 1..=12 as (numerator, denominator).
const BERNOULLI2J: [(i128, i128); 12] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
];

const LOG_2PI_HALF: f64 = 0.918938533204672741780329736406; // ln(2π)/2

fn is_nonpositive_integer(z: C) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// Principal-branch log-Gamma, infallible variant.
///
/// Recurrence pushes the argument to Re(z) ≥ 12, then the asymptotic series
/// with 12 Bernoulli terms applies. Returns NaN at non-positive integers.
pub fn lgamma(z: C) -> C {
    if is_nonpositive_integer(z) {
        return C::new(f64::NAN, f64::NAN);
    }
    let mut z = z;
    let mut acc = C::new(0.0, 0.0);
    while z.re < 12.0 {
        acc -= z.ln();
        z += 1.0;
    }
    let zinv = 1.0 / z;
    let zinv2 = zinv * zinv;
    let mut series = C::new(0.0, 0.0);
    let mut zpow = zinv;
    for (j, &(num, den)) in BERNOULLI2J.iter().enumerate() {
        let jj = (j + 1) as f64;
        let coeff = (num as f64) / (den as f64) / (2.0 * jj * (2.0 * jj - 1.0));
        series += zpow * coeff;
        zpow *= zinv2;
    }
    acc + (z - 0.5) * z.ln() - z + LOG_2PI_HALF + series
}

/// Principal-branch log-Gamma with pole detection.
pub fn log_gamma(z: C) -> Result<C> {
    if is_nonpositive_integer(z) {
        return Err(CoreError::Pole(format!("log_gamma at z = {z}")));
    }
    Ok(lgamma(z))
}

/// Γ(z) via exp(log Γ).
pub fn gamma(z: C) -> Result<C> {
    Ok(log_gamma(z)?.exp())
}

/// Γ_R(s) = π^{-s/2} Γ(s/2).
pub fn gamma_r(s: C) -> Result<C> {
    let half = s / 2.0;
    if is_nonpositive_integer(half) {
        return Err(CoreError::Pole(format!("gamma_r at s = {s}")));
    }
    Ok((lgamma(half) - half * PI.ln()).exp())
}

// ---------------------------------------------------------------------------
// Truncated power series over Complex64 (coefficients c[0..=n]).

fn series_mul(a: &[C], b: &[C], order: usize) -> Vec<C> {
    let mut out = vec![C::new(0.0, 0.0); order + 1];
    for (i, &ai) in a.iter().enumerate().take(order + 1) {
        for (j, &bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// exp of a series with zero constant term.
fn series_exp(e: &[C], order: usize) -> Vec<C> {
    debug_assert!(e[0].norm() == 0.0);
    let mut c = vec![C::new(0.0, 0.0); order + 1];
    c[0] = C::new(1.0, 0.0);
    for n in 1..=order {
        let mut s = C::new(0.0, 0.0);
        for k in 1..=n {
            if k < e.len() {
                s += e[k] * (k as f64) * c[n - k];
            }
        }
        c[n] = s / (n as f64);
    }
    c
}

/// Expansion coefficients c_j(σ₁) of the vertical Stirling formula:
/// Γ(σ₁+it) = √(2π) (it)^{σ₁-1/2} e^{-π|t|/2} (|t|/e)^{it} (1 + Σ c_j t^{-j}).
fn stirling_vertical_coeffs(sigma1: f64, order: usize) -> Vec<C> {
    let i = C::new(0.0, 1.0);
    let ord = order.max(1);
    // L(u) = Log(1 - iσ₁u) = Σ ℓ_k u^k, ℓ_k = -(iσ₁)^k / k.
    let mut ell = vec![C::new(0.0, 0.0); ord + 2];
    let mut pw = C::new(1.0, 0.0);
    for (k, e) in ell.iter_mut().enumerate().skip(1) {
        pw *= i * sigma1;
        *e = -pw / (k as f64);
    }
    // z⁻¹ = -iu Σ (iσ₁u)^m as a series in u.
    let mut zinv = vec![C::new(0.0, 0.0); ord + 1];
    let mut pw = -i;
    for m in 1..=ord {
        zinv[m] = pw;
        pw *= i * sigma1;
    }
    // E(u) = iΣ_{k≥2} ℓ_k u^{k-1} + (σ₁-1/2)Σ ℓ_k u^k + Σ_j b_j (z⁻¹)^{2j-1}.
    let mut e = vec![C::new(0.0, 0.0); ord + 1];
    for m in 1..=ord {
        e[m] = i * ell[m + 1] + (sigma1 - 0.5) * ell[m];
    }
    let mut zpow = zinv.clone();
    let mut j = 1usize;
    loop {
        let m = 2 * j - 1;
        if m > ord || j > BERNOULLI2J.len() {
            break;
        }
        let (num, den) = BERNOULLI2J[j - 1];
        let b = (num as f64) / (den as f64) / ((2 * j * (2 * j - 1)) as f64);
        for (idx, &zp) in zpow.iter().enumerate().take(ord + 1) {
            e[idx] += zp * b;
        }
        zpow = series_mul(&zpow, &series_mul(&zinv, &zinv, ord), ord);
        j += 1;
    }
    series_exp(&e, ord)
}

/// The truncated vertical-strip Stirling formula for Γ(σ₁+it), |t| ≥ 2,
/// to order `k2` in 1/t.
pub fn stirling_gamma(sigma1: f64, t: f64, k2: usize) -> Result<C> {
    if t.abs() < 2.0 {
        return Err(CoreError::InvalidParameter(format!(
            "stirling_gamma requires |t| >= 2, got t = {t}"
        )));
    }
    if t < 0.0 {
        return Ok(stirling_gamma(sigma1, -t, k2)?.conj());
    }
    let i = C::new(0.0, 1.0);
    // leading factor √(2π)(it)^{σ₁-1/2} e^{-πt/2} (t/e)^{it}
    let log_lead = C::new((2.0 * PI).ln() / 2.0, 0.0)
        + (sigma1 - 0.5) * C::new(t.ln(), PI / 2.0)
        + C::new(-PI * t / 2.0, 0.0)
        + i * t * (t.ln() - 1.0);
    let mut corr = C::new(1.0, 0.0);
    if k2 > 0 {
        let c = stirling_vertical_coeffs(sigma1, k2);
        let mut tp = 1.0;
        for cj in c.iter().skip(1).take(k2) {
            tp /= t;
            corr += cj * tp;
        }
    }
    Ok(log_lead.exp() * corr)
}

// ---------------------------------------------------------------------------
// Ratio expansion Γ(z+u)/Γ(z) = z^u (1 + Σ_{n=1}^{N} Pₙ(u) z⁻ⁿ + ...).

/// Polynomial in u with rational coefficients (index = degree).
type Poly = Vec<Q>;

fn poly_add(a: &mut Poly, b: &Poly, scale: Q) {
    if a.len() < b.len() {
        a.resize(b.len(), Q::new(0, 1));
    }
    for (i, &bi) in b.iter().enumerate() {
        a[i] += bi * scale;
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::new(0, 1); a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn binom_i128(n: i128, k: i128) -> i128 {
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Maximum order of the precomputed ratio-expansion polynomials.
pub const RATIO_EXPANSION_MAX_ORDER: usize = 6;

/// Generate P₁..P_N (N = RATIO_EXPANSION_MAX_ORDER) by exponentiating the
/// Stirling series of log Γ(z+u) − log Γ(z) − u Log z in powers of 1/z.
fn ratio_polys() -> &'static Vec<Vec<f64>> {
    static POLYS: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    POLYS.get_or_init(|| {
        let ord = RATIO_EXPANSION_MAX_ORDER;
        let zero = Q::new(0, 1);
        // a[n] = coefficient polynomial of z^{-n}, n = 0..=ord
        let mut a: Vec<Poly> = vec![vec![zero]; ord + 1];
        // z·Log(1+u/z) − u  → Σ_{n≥1} (−1)^n u^{n+1}/(n+1) z^{-n}
        for n in 1..=ord {
            let mut p = vec![zero; n + 2];
            let sign = if n % 2 == 0 { 1 } else { -1 };
            p[n + 1] = Q::new(sign, (n + 1) as i128);
            poly_add(&mut a[n], &p, Q::new(1, 1));
        }
        // (u − 1/2)·Log(1+u/z) → Σ_{k≥1} (−1)^{k+1} (u^{k+1} − u^k/2)/k z^{-k}
        for k in 1..=ord {
            let sign = if k % 2 == 1 { 1i128 } else { -1 };
            let mut p = vec![zero; k + 2];
            p[k + 1] = Q::new(sign, k as i128);
            p[k] = Q::new(-sign, 2 * k as i128);
            poly_add(&mut a[k], &p, Q::new(1, 1));
        }
        // Σ_j b_j [(z+u)^{1-2j} − z^{1-2j}], b_j = B_{2j}/(2j(2j−1)):
        // (z+u)^{-m} = Σ_{r≥0} (−1)^r C(m+r−1, r) u^r z^{-m-r}, m = 2j−1.
        for (j, &(num, den)) in BERNOULLI2J.iter().enumerate() {
            let m = (2 * (j + 1) - 1) as i128;
            if m as usize >= ord {
                break;
            }
            let bj = Q::new(num, den * 2 * (j as i128 + 1) * (2 * (j as i128 + 1) - 1));
            for r in 1..=(ord - m as usize) {
                let n = m as usize + r;
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let c = binom_i128(m + r as i128 - 1, r as i128);
                let mut p = vec![zero; r + 1];
                p[r] = Q::new(sign * c, 1);
                poly_add(&mut a[n], &p, bj);
            }
        }
        // exp of the series: c_0 = 1, c_n = (1/n) Σ k a_k c_{n-k}.
        let mut c: Vec<Poly> = vec![vec![zero]; ord + 1];
        c[0] = vec![Q::new(1, 1)];
        for n in 1..=ord {
            let mut acc: Poly = vec![zero];
            for k in 1..=n {
                let term = poly_mul(&a[k], &c[n - k]);
                poly_add(&mut acc, &term, Q::new(k as i128, 1));
            }
            for coef in acc.iter_mut() {
                *coef /= Q::new(n as i128, 1);
            }
            c[n] = acc;
        }
        c.into_iter()
            .map(|p| {
                p.iter()
                    .map(|q| (*q.numer() as f64) / (*q.denom() as f64))
                    .collect()
            })
            .collect()
    })
}

/// Evaluate Pₙ(u) of the ratio expansion.
pub fn ratio_poly_eval(n: usize, u: C) -> C {
    let polys = ratio_polys();
    assert!(n < polys.len(), "ratio expansion order {n} not tabulated");
    let mut acc = C::new(0.0, 0.0);
    for &coef in polys[n].iter().rev() {
        acc = acc * u + coef;
    }
    acc
}

/// Γ(z+u)/Γ(z) ≈ z^u (1 + Σ_{n=1}^{n1} Pₙ(u) z⁻ⁿ).
pub fn gamma_ratio_expansion(z: C, u: C, n1: usize) -> Result<C> {
    if n1 > RATIO_EXPANSION_MAX_ORDER {
        return Err(CoreError::InvalidParameter(format!(
            "ratio expansion order {n1} > {RATIO_EXPANSION_MAX_ORDER}"
        )));
    }
    if u.norm() > z.norm().sqrt() {
        return Err(CoreError::Region(format!(
            "|u| = {} exceeds |z|^(1/2) = {}",
            u.norm(),
            z.norm().sqrt()
        )));
    }
    if is_nonpositive_integer(z) {
        return Err(CoreError::Pole(format!("gamma_ratio_expansion at z = {z}")));
    }
    let mut corr = C::new(1.0, 0.0);
    let zinv = 1.0 / z;
    let mut zp = C::new(1.0, 0.0);
    for n in 1..=n1 {
        zp *= zinv;
        corr += ratio_poly_eval(n, u) * zp;
    }
    Ok((u * z.ln()).exp() * corr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn lgamma_classical_values() {
        assert!(lgamma(c(1.0, 0.0)).norm() < 1e-12);
        let half = lgamma(c(0.5, 0.0));
        assert!((half.re - (PI.sqrt()).ln()).abs() < 1e-14);
        assert!(half.im.abs() < 1e-14);
        // Γ(5) = 24
        assert!((lgamma(c(5.0, 0.0)).exp().re - 24.0).abs() < 24.0 * 1e-13);
    }

    #[test]
    fn lgamma_reflection_modulus() {
        // |Γ(1/2+it)|² = π / cosh(πt)
        let t = 10.0;
        let v = lgamma(c(0.5, t)).exp().norm();
        let expect = (PI / (PI * t).cosh()).sqrt();
        assert!((v - expect).abs() < 1e-10 * expect.max(1e-300));
    }

    #[test]
    fn lgamma_recurrence_and_conjugation() {
        let z = c(-3.7, 2.2);
        let lhs = lgamma(z + 1.0);
        let rhs = lgamma(z) + z.ln();
        // recurrence may differ by 2πi multiples only if branches disagree;
        // for this argument both stay principal
        assert!((lhs - rhs).norm() < 1e-12);
        let w = c(2.3, -7.7);
        assert!((lgamma(w.conj()) - lgamma(w).conj()).norm() == 0.0);
    }

    #[test]
    fn lgamma_pole_detection() {
        assert!(log_gamma(c(0.0, 0.0)).is_err());
        assert!(log_gamma(c(-4.0, 0.0)).is_err());
        assert!(log_gamma(c(-4.5, 0.0)).is_ok());
    }

    #[test]
    fn gamma_r_values() {
        assert!((gamma_r(c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-14);
        assert!((gamma_r(c(2.0, 0.0)).unwrap() - 1.0 / PI).norm() < 1e-14);
        // cross-check against exp(log Γ) path
        let s = c(1.0, 2.0);
        let direct = gamma_r(s).unwrap();
        let via = ((lgamma(s / 2.0)) - (s / 2.0) * PI.ln()).exp();
        assert!((direct - via).norm() < 1e-12 * direct.norm());
    }

    #[test]
    fn stirling_matches_lgamma() {
        let truth = lgamma(c(0.5, 20.0)).exp();
        let s0 = stirling_gamma(0.5, 20.0, 0).unwrap();
        let rel0 = (s0 - truth).norm() / truth.norm();
        assert!(rel0 < 0.1 / 20.0, "rel0 = {rel0}");
        let s3 = stirling_gamma(0.5, 20.0, 3).unwrap();
        let rel3 = (s3 - truth).norm() / truth.norm();
        assert!(rel3 < 10.0 * 20f64.powi(-4), "rel3 = {rel3}");
        // error decreasing in the expansion order
        let mut last = f64::INFINITY;
        for k2 in 0..=4 {
            let s = stirling_gamma(0.5, 20.0, k2).unwrap();
            let rel = (s - truth).norm() / truth.norm();
            assert!(rel < last, "k2 = {k2}: {rel} !< {last}");
            last = rel;
        }
    }

    #[test]
    fn stirling_conjugate_symmetry() {
        let a = stirling_gamma(0.0, 20.0, 2).unwrap();
        let b = stirling_gamma(0.0, -20.0, 2).unwrap();
        assert!((a.conj() - b).norm() == 0.0);
    }

    #[test]
    fn stirling_rejects_small_t() {
        assert!(stirling_gamma(0.5, 1.0, 0).is_err());
    }

    #[test]
    fn ratio_poly_p1_is_u_u_minus_1_half() {
        for &u in &[c(0.3, 0.7), c(-1.2, 0.1), c(2.0, -2.0)] {
            let p1 = ratio_poly_eval(1, u);
            let expect = u * (u - 1.0) / 2.0;
            assert!((p1 - expect).norm() < 1e-14 * (1.0 + expect.norm()));
        }
    }

    #[test]
    fn ratio_expansion_examples() {
        // u = 0 → exactly 1 (Pₙ(0) = 0)
        for n1 in 0..=6 {
            let v = gamma_ratio_expansion(c(50.0, 0.0), c(0.0, 0.0), n1).unwrap();
            assert!((v - 1.0).norm() < 1e-15);
        }
        // Γ(51)/Γ(50) = 50
        let v = gamma_ratio_expansion(c(50.0, 0.0), c(1.0, 0.0), 1).unwrap();
        assert!((v - 50.0).norm() / 50.0 < 1e-3);
        // error decreases with order at z = 30i
        let z = c(0.0, 30.0);
        let u = c(0.5, 0.2);
        let truth = (lgamma(z + u) - lgamma(z)).exp();
        let mut last = f64::INFINITY;
        for n1 in 0..=3 {
            let v = gamma_ratio_expansion(z, u, n1).unwrap();
            let rel = (v - truth).norm() / truth.norm();
            assert!(rel < last, "n1 = {n1}: {rel} !< {last}");
            last = rel;
        }
    }

    #[test]
    fn ratio_expansion_rejects_large_u() {
        assert!(gamma_ratio_expansion(c(9.0, 0.0), c(4.0, 0.0), 2).is_err());
    }
}

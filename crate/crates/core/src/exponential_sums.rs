//! Exact evaluation of the GL(3) Kloosterman sums S̃ and S, Ramanujan sums,
//! brute-force oracles, the a-sum vanishing identity, and Weil-type bound
//! diagnostics.
//!
//! All phases are exact rationals reduced mod 1; a table of the q-th roots of
//! unity is built once per evaluation, so there is one trig call per distinct
//! reduced fraction.

use crate::arith::{divisors, ext_gcd, gcd, gcd3, lcm, mod_inv, moebius};
use crate::{CoreError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

type C = Complex64;

/// Moduli (D₁, D₂) of a Kloosterman sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModulusPair {
    d1: u64,
    d2: u64,
}

impl ModulusPair {
    /// Pair for the S̃ sums; requires d1 | d2.
    pub fn tilde(d1: u64, d2: u64) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(CoreError::InvalidParameter(
                "moduli must be positive".into(),
            ));
        }
        if d2 % d1 != 0 {
            return Err(CoreError::Divisibility(format!("{d1} does not divide {d2}")));
        }
        Ok(Self { d1, d2 })
    }

    /// Pair for the long-element sums S; no divisibility constraint.
    pub fn any(d1: u64, d2: u64) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(CoreError::InvalidParameter(
                "moduli must be positive".into(),
            ));
        }
        Ok(Self { d1, d2 })
    }

    pub fn d1(&self) -> u64 {
        self.d1
    }
    pub fn d2(&self) -> u64 {
        self.d2
    }
}

/// Value of an exponential sum together with its term count.
#[derive(Debug, Clone, Copy)]
pub struct ExpSumValue {
    pub value: C,
    pub term_count: u64,
    /// Set when the value is within 1e-9 of a rational integer.
    pub exact_hint: Option<i64>,
}

impl ExpSumValue {
    fn new(value: C, term_count: u64) -> Self {
        let exact_hint = if value.im.abs() < 1e-9 && (value.re - value.re.round()).abs() < 1e-9 {
            Some(value.re.round() as i64)
        } else {
            None
        };
        debug_assert!(value.norm() <= term_count as f64 + 1e-6 * (1.0 + term_count as f64));
        Self {
            value,
            term_count,
            exact_hint,
        }
    }
}

/// Table of the q-th roots of unity: e(k/q) for k in [0, q).
struct RootTable {
    q: i128,
    roots: Vec<C>,
}

impl RootTable {
    fn new(q: u64) -> Self {
        let roots = (0..q)
            .map(|k| {
                let th = 2.0 * PI * (k as f64) / (q as f64);
                C::new(th.cos(), th.sin())
            })
            .collect();
        Self {
            q: q as i128,
            roots,
        }
    }

    fn e(&self, num: i128) -> C {
        self.roots[num.rem_euclid(self.q) as usize]
    }
}

/// Ramanujan sum c_q(n) = Σ_{(c,q)=1} e(nc/q), exactly, via the Möbius/gcd
/// reduction c_q(n) = Σ_{d | (n,q)} d·μ(q/d).
pub fn ramanujan_sum(n: i64, q: u64) -> i64 {
    assert!(q >= 1);
    let g = gcd(n, q as i64) as u64;
    let g = if n == 0 { q } else { g };
    divisors(g)
        .iter()
        .map(|&d| (d as i64) * moebius(q / d))
        .sum()
}

/// S̃(n₁,n₂,m₁; D₁,D₂) for D₁ | D₂:
/// Σ over C₁ mod D₁ with (C₁,D₁)=1 and C₂ mod D₂ with (C₂, D₂/D₁)=1 of
/// e(n₂ C̄₁C₂/D₁ + m₁ C̄₂/(D₂/D₁) + n₁ C₁/D₁).
pub fn kloosterman_tilde(n1: i64, n2: i64, m1: i64, mods: ModulusPair) -> Result<ExpSumValue> {
    if mods.d2 % mods.d1 != 0 {
        return Err(CoreError::Divisibility(format!(
            "{} does not divide {}",
            mods.d1, mods.d2
        )));
    }
    let d1 = mods.d1 as i128;
    let d2 = mods.d2 as i128;
    let e = d2 / d1;
    let q = lcm(d1 as i64, e as i64) as i128;
    let table = RootTable::new(q as u64);
    // inverse tables
    let inv1: Vec<Option<i64>> = (0..d1 as i64).map(|c| mod_inv(c, d1 as i64)).collect();
    let inve: Vec<Option<i64>> = (0..e as i64).map(|c| mod_inv(c, e as i64)).collect();
    let (n1, n2, m1) = (n1 as i128, n2 as i128, m1 as i128);
    let mut sum = C::new(0.0, 0.0);
    let mut count = 0u64;
    for c1 in 0..d1 {
        let Some(c1bar) = inv1[c1 as usize] else {
            continue;
        };
        let c1bar = c1bar as i128;
        for c2 in 0..d2 {
            let Some(c2bar) = inve[(c2 % e) as usize] else {
                continue;
            };
            let c2bar = c2bar as i128;
            // a1/d1 + a2/e with common denominator q
            let a1 = (n2 * c1bar * c2 + n1 * c1).rem_euclid(d1);
            let a2 = (m1 * c2bar).rem_euclid(e);
            let num = a1 * (q / d1) + a2 * (q / e);
            sum += table.e(num);
            count += 1;
        }
    }
    Ok(ExpSumValue::new(sum, count))
}

/// Solve Y·B + Z·C ≡ 1 (mod D) for gcd(B, C, D) = 1; returns (Y, Z) in [0, D).
fn solve_yz(b: i64, c: i64, d: i64) -> (i64, i64) {
    if d == 1 {
        return (0, 0);
    }
    let (g, u, v) = ext_gcd(b, c);
    if g == 0 {
        // b = c = 0 is only admissible when d = 1
        unreachable!("gcd(B,C,D)=1 with B=C=0 forces D=1");
    }
    let w = mod_inv(g.rem_euclid(d), d).expect("gcd(B,C,D)=1 makes g invertible");
    ((u.rem_euclid(d) * w).rem_euclid(d), (v.rem_euclid(d) * w).rem_euclid(d))
}

/// Precomputed admissible tuples for S(·;D₁,D₂), reusable across arguments.
pub struct BigSumTable {
    d1: i64,
    d2: i64,
    q: i128,
    /// (B₁, C₁, B₂, C₂, Y₁, Z₁, Y₂, Z₂)
    tuples: Vec<(i64, i64, i64, i64, i64, i64, i64, i64)>,
}

impl BigSumTable {
    /// Enumerate the surface D₁C₂ + B₁B₂ + D₂C₁ ≡ 0 (mod D₁D₂),
    /// gcd(B_j, C_j, D_j) = 1, with structured loops; representatives in
    /// [0, D_j) make B₁B₂ < D₁D₂, so the congruence pins B₁B₂ exactly.
    pub fn new(mods: ModulusPair, yz_variant: i64) -> Self {
        let d1 = mods.d1 as i64;
        let d2 = mods.d2 as i64;
        let dd = d1 * d2;
        let mut tuples = Vec::new();
        let mut push = |b1: i64, c1: i64, b2: i64, c2: i64| {
            if gcd3(b1, c1, d1) != 1 || gcd3(b2, c2, d2) != 1 {
                return;
            }
            let (mut y1, mut z1) = solve_yz(b1, c1, d1);
            let (mut y2, mut z2) = solve_yz(b2, c2, d2);
            // alternate valid (Y,Z) selections differ by k·(C, -B)
            y1 = (y1 + yz_variant * c1).rem_euclid(d1.max(1));
            z1 = (z1 - yz_variant * b1).rem_euclid(d1.max(1));
            y2 = (y2 + yz_variant * c2).rem_euclid(d2.max(1));
            z2 = (z2 - yz_variant * b2).rem_euclid(d2.max(1));
            tuples.push((b1, c1, b2, c2, y1, z1, y2, z2));
        };
        for c1 in 0..d1 {
            for c2 in 0..d2 {
                let r = (-(d1 * c2 + d2 * c1)).rem_euclid(dd);
                if r == 0 {
                    // B₁B₂ = 0: one of the B's vanishes
                    for b2 in 0..d2 {
                        push(0, c1, b2, c2);
                    }
                    for b1 in 1..d1 {
                        push(b1, c1, 0, c2);
                    }
                } else {
                    for b1 in divisors(r as u64) {
                        let b1 = b1 as i64;
                        if b1 >= d1 {
                            break;
                        }
                        let b2 = r / b1;
                        if b2 < d2 {
                            push(b1, c1, b2, c2);
                        }
                    }
                }
            }
        }
        Self {
            d1,
            d2,
            q: lcm(d1, d2) as i128,
            tuples,
        }
    }

    /// Evaluate S(n₁,m₂,m₁,n₂;D₁,D₂) over the precomputed surface.
    pub fn eval(&self, n1: i64, m2: i64, m1: i64, n2: i64) -> ExpSumValue {
        let q = self.q;
        let (d1, d2) = (self.d1 as i128, self.d2 as i128);
        let table = RootTable::new(q as u64);
        let (n1, m2, m1, n2) = (n1 as i128, m2 as i128, m1 as i128, n2 as i128);
        let mut sum = C::new(0.0, 0.0);
        for &(b1, c1, b2, c2, y1, z1, y2, z2) in &self.tuples {
            let _ = (c1, c2);
            let (b1, b2) = (b1 as i128, b2 as i128);
            let (y1, z1, y2, z2) = (y1 as i128, z1 as i128, y2 as i128, z2 as i128);
            let p1 = (n1 * b1 + m1 * (y1 * d2 - z1 * b2)).rem_euclid(d1);
            let p2 = (m2 * b2 + n2 * (y2 * d1 - z2 * b1)).rem_euclid(d2);
            let num = p1 * (q / d1) + p2 * (q / d2);
            sum += table.e(num);
        }
        ExpSumValue::new(sum, self.tuples.len() as u64)
    }
}

/// S(n₁,m₂,m₁,n₂;D₁,D₂), the long-Weyl-element sum.
pub fn kloosterman_big(n1: i64, m2: i64, m1: i64, n2: i64, mods: ModulusPair) -> Result<ExpSumValue> {
    Ok(BigSumTable::new(mods, 0).eval(n1, m2, m1, n2))
}

/// As `kloosterman_big` with an alternate valid (Y_j, Z_j) selection; the
/// value must not depend on the choice.
pub fn kloosterman_big_variant(
    n1: i64,
    m2: i64,
    m1: i64,
    n2: i64,
    mods: ModulusPair,
    yz_variant: i64,
) -> Result<ExpSumValue> {
    Ok(BigSumTable::new(mods, yz_variant).eval(n1, m2, m1, n2))
}

/// Which sum an oracle call refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    Tilde,
    Big,
}

/// Argument bundle for `oracle_evaluate`.
#[derive(Debug, Clone, Copy)]
pub enum OracleArgs {
    Tilde { n1: i64, n2: i64, m1: i64 },
    Big { n1: i64, m2: i64, m1: i64, n2: i64 },
}

/// Default guard on D₁·D₂ for the literal oracles.
pub const ORACLE_DEFAULT_GUARD: u64 = 10_000;

/// Literal enumeration oracle: per-term extended-gcd inverses, no shared
/// code with the fast paths. Rejects moduli with D₁·D₂ above `guard`.
pub fn oracle_evaluate(args: OracleArgs, mods: ModulusPair, guard: u64) -> Result<ExpSumValue> {
    let volume = mods.d1 * mods.d2;
    if volume > guard {
        return Err(CoreError::OracleTooLarge(volume, guard));
    }
    let e_of = |num: f64, den: f64| {
        let th = 2.0 * PI * num / den;
        C::new(th.cos(), th.sin())
    };
    match args {
        OracleArgs::Tilde { n1, n2, m1 } => {
            if mods.d2 % mods.d1 != 0 {
                return Err(CoreError::Divisibility(format!(
                    "{} does not divide {}",
                    mods.d1, mods.d2
                )));
            }
            let d1 = mods.d1 as i64;
            let d2 = mods.d2 as i64;
            let e = d2 / d1;
            let mut sum = C::new(0.0, 0.0);
            let mut count = 0u64;
            for c1 in 0..d1 {
                if gcd(c1, d1) != 1 {
                    continue;
                }
                let c1bar = {
                    let (_, x, _) = ext_gcd(c1, d1);
                    x.rem_euclid(d1.max(1))
                };
                for c2 in 0..d2 {
                    if gcd(c2, e) != 1 {
                        continue;
                    }
                    let c2bar = {
                        let (_, x, _) = ext_gcd(c2 % e, e);
                        x.rem_euclid(e.max(1))
                    };
                    let ph = (n2 as f64) * ((c1bar as i128 * c2 as i128).rem_euclid(d1 as i128) as f64)
                        / (d1 as f64)
                        + (m1 as f64) * (c2bar as f64) / (e as f64)
                        + (n1 as f64) * (c1 as f64) / (d1 as f64);
                    sum += e_of(ph.rem_euclid(1.0), 1.0);
                    count += 1;
                }
            }
            Ok(ExpSumValue::new(sum, count))
        }
        OracleArgs::Big { n1, m2, m1, n2 } => {
            let d1 = mods.d1 as i64;
            let d2 = mods.d2 as i64;
            let dd = (d1 as i128) * (d2 as i128);
            let mut sum = C::new(0.0, 0.0);
            let mut count = 0u64;
            for b1 in 0..d1 {
                for c1 in 0..d1 {
                    if gcd3(b1, c1, d1) != 1 {
                        continue;
                    }
                    for b2 in 0..d2 {
                        for c2 in 0..d2 {
                            if gcd3(b2, c2, d2) != 1 {
                                continue;
                            }
                            let cong = (d1 as i128) * (c2 as i128)
                                + (b1 as i128) * (b2 as i128)
                                + (d2 as i128) * (c1 as i128);
                            if cong.rem_euclid(dd) != 0 {
                                continue;
                            }
                            // per-term extended gcd for (Y, Z)
                            let (y1, z1) = oracle_yz(b1, c1, d1);
                            let (y2, z2) = oracle_yz(b2, c2, d2);
                            let p1 = (n1 as i128) * (b1 as i128)
                                + (m1 as i128) * ((y1 as i128) * (d2 as i128) - (z1 as i128) * (b2 as i128));
                            let p2 = (m2 as i128) * (b2 as i128)
                                + (n2 as i128) * ((y2 as i128) * (d1 as i128) - (z2 as i128) * (b1 as i128));
                            let ph = (p1.rem_euclid(d1 as i128) as f64) / (d1 as f64)
                                + (p2.rem_euclid(d2 as i128) as f64) / (d2 as f64);
                            sum += e_of(ph.rem_euclid(1.0), 1.0);
                            count += 1;
                        }
                    }
                }
            }
            Ok(ExpSumValue::new(sum, count))
        }
    }
}

fn oracle_yz(b: i64, c: i64, d: i64) -> (i64, i64) {
    if d == 1 {
        return (0, 0);
    }
    let (g, u, v) = ext_gcd(b, c);
    let (_, w, _) = ext_gcd(g.rem_euclid(d), d);
    let w = w.rem_euclid(d);
    ((u * w).rem_euclid(d), (v * w).rem_euclid(d))
}

/// Σ_{a mod δ} S̃(−ε·ℓ₂, m, a; D, Dδ).  Vanishes for δ > 1.
pub fn asum_vanishing(l2: i64, m: i64, d: u64, delta: u64, eps: i64) -> Result<C> {
    assert!(eps == 1 || eps == -1);
    let mods = ModulusPair::tilde(d, d * delta)?;
    let mut total = C::new(0.0, 0.0);
    for a in 0..delta as i64 {
        total += kloosterman_tilde(-eps * l2, m, a, mods)?.value;
    }
    Ok(total)
}

/// One diagnostic row of the Weil-type bound report.
#[derive(Debug, Clone)]
pub struct WeilRatioRow {
    pub kind: SumKind,
    pub args: Vec<i64>,
    pub d1: u64,
    pub d2: u64,
    pub abs_value: f64,
    pub bound_rhs: f64,
    pub ratio: f64,
}

/// Range of the Weil-ratio scan.
#[derive(Debug, Clone, Copy)]
pub struct WeilScanRange {
    /// S̃: scan over d1 | d2 ≤ d2_max.
    pub d2_max: u64,
    /// S: scan over d1·d2 ≤ big_volume_max.
    pub big_volume_max: u64,
    /// coefficient arguments range over [-coeff_max, coeff_max] \ {0}.
    pub coeff_max: i64,
}

/// Measured |sum| against the Weil-type right-hand sides with the ε-factor
/// set to 1; diagnostic only.
///
/// For S̃ the RHS is max(gcd(m₁, D₂/D₁)·D₁², gcd(n₁,n₂,D₁)·D₂); for S it is
/// √(D₁D₂ · gcd(D₁,D₂) · gcd(m₁n₁,[D₁,D₂]) · gcd(m₂n₂,[D₁,D₂])).
pub fn weil_ratio_report(range: WeilScanRange) -> Result<Vec<WeilRatioRow>> {
    let mut rows = Vec::new();
    let cm = range.coeff_max;
    let coeffs: Vec<i64> = (-cm..=cm).filter(|&x| x != 0).collect();
    for d2 in 1..=range.d2_max {
        for d1 in divisors(d2) {
            let mods = ModulusPair::tilde(d1, d2)?;
            let e = (d2 / d1) as i64;
            for &n1 in &coeffs {
                for &n2 in &coeffs {
                    for &m1 in &coeffs {
                        let v = kloosterman_tilde(n1, n2, m1, mods)?;
                        let rhs = (gcd(m1, e) as f64 * (d1 * d1) as f64)
                            .max(gcd3(n1, n2, d1 as i64) as f64 * d2 as f64);
                        rows.push(WeilRatioRow {
                            kind: SumKind::Tilde,
                            args: vec![n1, n2, m1],
                            d1,
                            d2,
                            abs_value: v.value.norm(),
                            bound_rhs: rhs,
                            ratio: v.value.norm() / rhs,
                        });
                    }
                }
            }
        }
    }
    for d1 in 1..=range.big_volume_max {
        for d2 in 1..=range.big_volume_max / d1 {
            let mods = ModulusPair::any(d1, d2)?;
            let tbl = BigSumTable::new(mods, 0);
            let l = lcm(d1 as i64, d2 as i64);
            for &n1 in &coeffs {
                for &m2 in &coeffs {
                    for &m1 in &coeffs {
                        for &n2 in &coeffs {
                            let v = tbl.eval(n1, m2, m1, n2);
                            let rhs = ((d1 * d2) as f64
                                * gcd(d1 as i64, d2 as i64) as f64
                                * gcd(m1 * n1, l) as f64
                                * gcd(m2 * n2, l) as f64)
                                .sqrt();
                            rows.push(WeilRatioRow {
                                kind: SumKind::Big,
                                args: vec![n1, m2, m1, n2],
                                d1,
                                d2,
                                abs_value: v.value.norm(),
                                bound_rhs: rhs,
                                ratio: v.value.norm() / rhs,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(5, 1), 1);
        assert_eq!(ramanujan_sum(1, 3), -1);
        assert_eq!(ramanujan_sum(2, 4), -2);
        assert_eq!(ramanujan_sum(0, 12), 4); // φ(12)
    }

    #[test]
    fn ramanujan_matches_direct_sum() {
        for q in 1u64..=40 {
            for n in -9i64..=9 {
                let mut s = C::new(0.0, 0.0);
                for c in 0..q as i64 {
                    if gcd(c, q as i64) == 1 {
                        let th = 2.0 * PI * (n * c) as f64 / q as f64;
                        s += C::new(th.cos(), th.sin());
                    }
                }
                let exact = ramanujan_sum(n, q) as f64;
                assert!((s.re - exact).abs() < 1e-9 && s.im.abs() < 1e-9, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn tilde_trivial_and_examples() {
        let one = ModulusPair::tilde(1, 1).unwrap();
        let v = kloosterman_tilde(7, -2, 5, one).unwrap();
        assert_eq!(v.exact_hint, Some(1));

        let v = kloosterman_tilde(3, -11, 1, ModulusPair::tilde(1, 3).unwrap()).unwrap();
        assert_eq!(v.exact_hint, Some(-1));

        let v = kloosterman_tilde(2, 2, 1, ModulusPair::tilde(2, 2).unwrap()).unwrap();
        assert_eq!(v.exact_hint, Some(2));

        let v = kloosterman_tilde(1, 1, 1, ModulusPair::tilde(2, 2).unwrap()).unwrap();
        assert_eq!(v.exact_hint, Some(0));
    }

    #[test]
    fn tilde_rejects_bad_divisibility() {
        assert!(ModulusPair::tilde(2, 3).is_err());
    }

    #[test]
    fn tilde_ramanujan_reduction() {
        for d in 1u64..=100 {
            let mods = ModulusPair::tilde(1, d).unwrap();
            for (n1, n2) in [(0i64, 0i64), (5, -3), (17, 2)] {
                for m1 in [-6i64, 1, 4] {
                    let v = kloosterman_tilde(n1, n2, m1, mods).unwrap();
                    let expect = ramanujan_sum(m1, d) as f64;
                    assert!(
                        (v.value.re - expect).abs() < 1e-9 && v.value.im.abs() < 1e-9,
                        "d={d} m1={m1}"
                    );
                }
            }
        }
    }

    #[test]
    fn tilde_diagonal_closed_form() {
        for d in 1u64..=30 {
            let mods = ModulusPair::tilde(d, d).unwrap();
            for n1 in -4i64..=4 {
                for n2 in -4i64..=4 {
                    let v = kloosterman_tilde(n1, n2, 3, mods).unwrap();
                    let expect = if n2.rem_euclid(d as i64) == 0 {
                        (d as i64 * ramanujan_sum(n1, d)) as f64
                    } else {
                        0.0
                    };
                    assert!(
                        (v.value.re - expect).abs() < 1e-8 && v.value.im.abs() < 1e-8,
                        "d={d} n1={n1} n2={n2}: {} vs {expect}",
                        v.value
                    );
                }
            }
        }
    }

    #[test]
    fn tilde_periodicity() {
        let mods = ModulusPair::tilde(3, 12).unwrap();
        let e = 4i64;
        let base = kloosterman_tilde(2, 5, 7, mods).unwrap().value;
        for (dn1, dn2, dm1) in [(3i64, 0i64, 0i64), (0, 3, 0), (0, 0, e), (3, 3, e)] {
            let v = kloosterman_tilde(2 + dn1, 5 + dn2, 7 + dm1, mods).unwrap().value;
            assert!((v - base).norm() < 1e-10);
        }
    }

    #[test]
    fn big_trivial_and_oracle_spot_checks() {
        let v = kloosterman_big(1, 1, 1, 1, ModulusPair::any(1, 1).unwrap()).unwrap();
        assert_eq!(v.exact_hint, Some(1));

        for (d1, d2) in [(2u64, 1u64), (3, 3), (2, 4), (5, 3), (6, 4)] {
            let mods = ModulusPair::any(d1, d2).unwrap();
            for argset in [(1i64, 1i64, 1i64, 1i64), (2, 3, 1, 1), (-1, 2, 3, -2)] {
                let fast = kloosterman_big(argset.0, argset.1, argset.2, argset.3, mods)
                    .unwrap();
                let oracle = oracle_evaluate(
                    OracleArgs::Big {
                        n1: argset.0,
                        m2: argset.1,
                        m1: argset.2,
                        n2: argset.3,
                    },
                    mods,
                    ORACLE_DEFAULT_GUARD,
                )
                .unwrap();
                assert_eq!(fast.term_count, oracle.term_count, "({d1},{d2}) {argset:?}");
                assert!(
                    (fast.value - oracle.value).norm() < 1e-9,
                    "({d1},{d2}) {argset:?}: {} vs {}",
                    fast.value,
                    oracle.value
                );
            }
        }
    }

    #[test]
    fn big_yz_independence() {
        for (d1, d2) in [(4u64, 6u64), (5, 5), (3, 8)] {
            let mods = ModulusPair::any(d1, d2).unwrap();
            let base = kloosterman_big(2, -1, 3, 1, mods).unwrap().value;
            for k in [1i64, 2, 5] {
                let v = kloosterman_big_variant(2, -1, 3, 1, mods, k).unwrap().value;
                assert!((v - base).norm() < 1e-12, "({d1},{d2}) variant {k}");
            }
        }
    }

    #[test]
    fn tilde_fast_equals_oracle() {
        for d2 in 1u64..=12 {
            for d1 in divisors(d2) {
                let mods = ModulusPair::tilde(d1, d2).unwrap();
                for args in [(1i64, 1i64, 1i64), (2, 2, 1), (-3, 1, 2)] {
                    let fast = kloosterman_tilde(args.0, args.1, args.2, mods).unwrap();
                    let oracle = oracle_evaluate(
                        OracleArgs::Tilde {
                            n1: args.0,
                            n2: args.1,
                            m1: args.2,
                        },
                        mods,
                        ORACLE_DEFAULT_GUARD,
                    )
                    .unwrap();
                    assert!((fast.value - oracle.value).norm() < 1e-9);
                    assert_eq!(fast.term_count, oracle.term_count);
                }
            }
        }
    }

    #[test]
    fn oracle_guard_enforced() {
        let mods = ModulusPair::any(200, 200).unwrap();
        let r = oracle_evaluate(
            OracleArgs::Big {
                n1: 1,
                m2: 1,
                m1: 1,
                n2: 1,
            },
            mods,
            ORACLE_DEFAULT_GUARD,
        );
        assert!(matches!(r, Err(CoreError::OracleTooLarge(_, _))));
    }

    #[test]
    fn asum_examples() {
        let v = asum_vanishing(1, 1, 1, 1, 1).unwrap();
        assert!((v - C::new(1.0, 0.0)).norm() < 1e-12);
        let v = asum_vanishing(1, 1, 2, 3, 1).unwrap();
        assert!(v.norm() < 1e-8, "{v}");
        let v = asum_vanishing(3, 2, 4, 2, -1).unwrap();
        assert!(v.norm() < 1e-8, "{v}");
    }

    #[test]
    fn weil_rows_basic() {
        let rows = weil_ratio_report(WeilScanRange {
            d2_max: 6,
            big_volume_max: 4,
            coeff_max: 2,
        })
        .unwrap();
        for r in rows.iter().filter(|r| r.d1 == 1 && r.d2 == 1) {
            assert!(r.ratio <= 1.0 + 1e-12, "{r:?}");
        }
        // S̃(1,1,1;1,3): |−1| against max(gcd(1,3)·1, gcd(1,1,1)·3) = 3
        let row = rows
            .iter()
            .find(|r| {
                r.kind == SumKind::Tilde && r.d1 == 1 && r.d2 == 3 && r.args == vec![1, 1, 1]
            })
            .unwrap();
        assert!((row.abs_value - 1.0).abs() < 1e-9);
        assert!((row.bound_rhs - 3.0).abs() < 1e-12);
        assert!((row.ratio - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn triangle_inequality_holds() {
        let mods = ModulusPair::tilde(4, 12).unwrap();
        let v = kloosterman_tilde(3, 5, 2, mods).unwrap();
        assert!(v.value.norm() <= v.term_count as f64 + 1e-9);
    }
}

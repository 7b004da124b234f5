use gl3moments::spectral::{spec_density, SpectralTriple, TestFunctionParams, WeylElement, weyl_apply};
use num_complex::Complex64 as C;

fn psi_sum(p: &TestFunctionParams, mu: &SpectralTriple) -> C {
    let mut s = C::new(0.0, 0.0);
    for w in WeylElement::ALL {
        let wm = weyl_apply(w, mu);
        let d = [
            (wm.mu()[0] - p.mu0.mu()[0]) / p.m,
            (wm.mu()[1] - p.mu0.mu()[1]) / p.m,
            (wm.mu()[2] - p.mu0.mu()[2]) / p.m,
        ];
        s += (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).exp();
    }
    s
}

fn main() {
    for theta in [0.35f64, 0.5] {
        let p = TestFunctionParams::new(20.0, theta, 0, 0.29).unwrap();
        let m0 = p.mu0.mu();
        let t0 = [m0[0].im, m0[1].im, m0[2].im];
        println!("theta={theta} M={:.3} t0={:?}", p.m, t0);
        let r = 10.0 * p.m;
        let lo = t0.iter().cloned().fold(f64::INFINITY, f64::min) - r;
        let hi = t0.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + r;
        let n = ((hi - lo) / (p.m / 4.0)).ceil() as usize;
        let h = (hi - lo) / n as f64;
        let (mut i_psi2, mut i_p2, mut i_spec, mut i_full) = (0.0, 0.0, 0.0, 0.0);
        for j1 in 0..n {
            let t1 = lo + (j1 as f64 + 0.5) * h;
            for j2 in 0..n {
                let t2 = lo + (j2 as f64 + 0.5) * h;
                let mu = SpectralTriple::imaginary(t1, t2);
                let ps = psi_sum(&p, &mu).re;
                let ps2 = ps * ps;
                let pp = p.poly_p(&mu).re;
                let sd = -spec_density(&mu).unwrap_or(C::new(0.0, 0.0)).re;
                i_psi2 += ps2;
                i_p2 += ps2 * pp * pp;
                i_spec += ps2 * sd;
                i_full += ps2 * pp * pp * sd;
            }
        }
        let w = h * h;
        println!("  int psi2       = {:.4} (vs 6*0.9069M² = {:.4})", i_psi2 * w, 5.441 * p.m * p.m);
        println!("  avg P..        = {:.4}", i_p2 / i_psi2);
        println!("  avg spec       = {:.1} (center {:.1})", i_spec / i_psi2, {
            let sd = -spec_density(&p.mu0).unwrap().re; sd });
        println!("  hcheck const   = {:.3}", 3.0 / 8000.0 * i_full * w / (p.m * p.m));
    }
}

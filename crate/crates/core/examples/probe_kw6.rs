use gl3moments::kuznetsov::{g_double, s_trig};
use gl3moments::spectral::SpectralTriple;
use num_complex::Complex64 as C;
use std::f64::consts::PI;

fn main() {
    let mu = SpectralTriple::new([C::new(0.0, 7.0), C::new(0.0, 3.0), C::new(0.0, -10.0)]).unwrap();
    for y in [2.0f64, 50.0] {
        let l = (4.0 * PI * PI * y).ln();
        let spp = s_trig((1, 1), C::new(0.5, 0.0), C::new(0.5, 0.0), &mu).unwrap();
        let mut peak: f64 = 0.0;
        let mut sum = C::new(0.0, 0.0);
        let h = 0.1;
        let vmax = 24.0;
        let n = (2.0 * vmax / h) as usize;
        for j1 in 0..n {
            let v1 = -vmax + (j1 as f64 + 0.5) * h;
            for j2 in 0..n {
                let v2 = -vmax + (j2 as f64 + 0.5) * h;
                let s1 = C::new(0.5, v1);
                let s2 = C::new(0.5, v2);
                let g = g_double(s1, s2, &mu).unwrap();
                let term = g * spp * (-(s1 + s2) * l).exp();
                peak = peak.max(term.norm());
                sum += term;
            }
        }
        let val = sum * h * h / (4.0 * PI * PI);
        println!("y={y}: peak |term| = {peak:.3e}, integral = {val:.6e}, |integral| = {:.3e}", val.norm());
    }
}

use gl3moments::kuznetsov::{k_w4, KW4Method};
use gl3moments::spectral::SpectralTriple;
use num_complex::Complex64 as C;
use std::time::Instant;

fn main() {
    let mu1 = SpectralTriple::new([C::new(0.0, 7.0), C::new(0.0, 3.0), C::new(0.0, -10.0)]).unwrap();
    let mu2 = SpectralTriple::new([C::new(0.0, 11.0), C::new(0.0, 5.0), C::new(0.0, -16.0)]).unwrap();
    let t0 = Instant::now();
    for (mu, name) in [(mu1, "mu(7,3,-10)"), (mu2, "mu(11,5,-16)")] {
        for y in [50.0, -50.0, 200.0, -200.0, 1000.0, -1000.0] {
            let t1 = Instant::now();
            let m = k_w4(y, &mu, KW4Method::Mellin).unwrap();
            let tm = t1.elapsed().as_millis();
            let t2 = Instant::now();
            let b = k_w4(y, &mu, KW4Method::Bessel).unwrap();
            let tb = t2.elapsed().as_millis();
            let rel = (m - b).norm() / m.norm();
            println!("{name} y={y:7}: rel={rel:.2e}  |K|={:.3e}  (mellin {tm} ms, bessel {tb} ms)", m.norm());
        }
    }
    println!("total {} s", t0.elapsed().as_secs_f64());
}

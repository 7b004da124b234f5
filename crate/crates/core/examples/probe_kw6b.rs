use gl3moments::kuznetsov::k_w6;
use gl3moments::spectral::SpectralTriple;
use num_complex::Complex64 as C;

fn main() {
    let mu = SpectralTriple::new([C::new(0.0, 7.0), C::new(0.0, 3.0), C::new(0.0, -10.0)]).unwrap();
    let pp = k_w6(2.0, 2.0, &mu).unwrap();
    let pm = k_w6(2.0, -2.0, &mu).unwrap();
    let mp = k_w6(-2.0, 2.0, &mu).unwrap();
    let mm = k_w6(-2.0, -2.0, &mu).unwrap();
    println!("++ {pp}\n+- {pm}\n-+ {mp}\n-- {mm}");
}

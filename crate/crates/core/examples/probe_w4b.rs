use gl3moments::kuznetsov::{phi_transform, PhiKernel, PhiOptions};
use gl3moments::spectral::TestFunctionParams;
use std::time::Instant;

fn main() {
    let params = TestFunctionParams::default_at(20.0).unwrap();
    let opts = PhiOptions { radius_in_m: 2.2, spacing: 0.5, weight: None };
    for y in [0.1, 0.01, 0.001, 2.0, 8.0, 24000.0, 80000.0] {
        let t = Instant::now();
        let v = phi_transform(PhiKernel::W4 { y }, &params, &opts).unwrap();
        println!("Phi_w4({y}): |.| = {:.4e}   ({:.0} s)", v.norm(), t.elapsed().as_secs_f64());
    }
    // w5 sanity
    let v5 = phi_transform(PhiKernel::W5 { y: 800.0 }, &params, &opts).unwrap();
    println!("Phi_w5(800): |.| = {:.4e}", v5.norm());
}

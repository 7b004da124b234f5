use gl3moments::kuznetsov::{phi_transform, PhiKernel, PhiOptions};
use gl3moments::spectral::TestFunctionParams;
use std::time::Instant;

fn main() {
    let params = TestFunctionParams::default_at(20.0).unwrap();
    let opts = PhiOptions { radius_in_m: 2.5, spacing: 0.4, weight: None };
    // w6 first (cheap): small vs large Upsilon
    for (y1, y2) in [(1.0, 1.0), (4.0, 4.0), (900.0, 900.0), (1600.0, 1600.0), (3600.0, 3600.0)] {
        let t = Instant::now();
        let v = phi_transform(PhiKernel::W6 { y1, y2 }, &params, &opts).unwrap();
        println!("Phi_w6({y1},{y2}) = {v:.6e}  |.| = {:.3e}   ({} s)", v.norm(), t.elapsed().as_secs_f64());
    }
    // w4: below vs at/above T^3 = 8000
    for y in [800.0, 2000.0, 8000.0, 24000.0] {
        let t = Instant::now();
        let v = phi_transform(PhiKernel::W4 { y }, &params, &opts).unwrap();
        println!("Phi_w4({y}) = {v:.6e}  |.| = {:.3e}   ({} s)", v.norm(), t.elapsed().as_secs_f64());
    }
}

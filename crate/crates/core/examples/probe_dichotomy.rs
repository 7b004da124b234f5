use gl3moments::kuznetsov::{h_check_transform, phi_transform, PhiKernel, PhiOptions};
use gl3moments::spectral::TestFunctionParams;
use std::time::Instant;

fn main() {
    let params = TestFunctionParams::default_at(20.0).unwrap();
    let opts = PhiOptions { radius_in_m: 2.2, spacing: 0.5, weight: None };
    println!("== w6 dichotomy (T=20)");
    for (y1, y2) in [(1.0, 1.0), (30.0, 1.0), (8.0, 0.5), (1120.0, 151.0), (1846.0, 92.0), (800.0, 50.0), (412.0, 412.0)] {
        let t = Instant::now();
        let v = phi_transform(PhiKernel::W6 { y1, y2 }, &params, &opts).unwrap();
        let ups = (y1.powf(1.0/3.0) * y2.powf(1.0/6.0)).min(y1.powf(1.0/6.0) * y2.powf(1.0/3.0));
        println!("Phi_w6({y1},{y2}) Up={ups:.1}: |.| = {:.4e}   ({:.0} s)", v.norm(), t.elapsed().as_secs_f64());
    }
    println!("== w4 dichotomy (T=20)");
    for y in [0.1, 0.01, 0.001, 2.0, 8.0, 800.0, 8000.0, 24000.0] {
        let t = Instant::now();
        let v = phi_transform(PhiKernel::W4 { y }, &params, &opts).unwrap();
        println!("Phi_w4({y}): |.| = {:.4e}   ({:.0} s)", v.norm(), t.elapsed().as_secs_f64());
    }
    println!("== h-check");
    let p2 = TestFunctionParams::new(80.0, 0.25, 0, 0.24).unwrap();
    let h11 = h_check_transform(1.0, 1.0, &p2, 10.0, p2.m / 3.2).unwrap();
    println!("hcheck(1,1)/M^2 at T=80 th=0.25 = {:.4}", h11.norm() / (p2.m * p2.m));
    let hfar = h_check_transform(200.0, 200.0, &p2, 10.0, p2.m / 3.2).unwrap();
    println!("hcheck(200,200)/hcheck(1,1) = {:.3e}", hfar.norm() / h11.norm());
    let hmid = h_check_transform(1.0 + 20.0 / p2.m, 1.0, &p2, 10.0, p2.m / 3.2).unwrap();
    println!("hcheck(1+20/M,1)/hcheck(1,1) = {:.3e}", hmid.norm() / h11.norm());
}

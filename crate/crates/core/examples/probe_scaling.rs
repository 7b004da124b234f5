use gl3moments::spectral::{fit_loglog_slope, integrate_h_dspec, SpectralGrid, TestFunctionParams};

fn main() {
    for angle in [0.29f64, 0.25, 0.33] {
        for a in [0u32, 1] {
            let ts = [20.0, 40.0, 80.0];
            let mut hs = Vec::new();
            for &t in &ts {
                let p = TestFunctionParams::new(t, 0.5, a, angle).unwrap();
                hs.push(integrate_h_dspec(&p, 3.2).unwrap());
            }
            let raw = fit_loglog_slope(&ts, &hs);
            println!("angle={angle} A={a}: T-slope raw (expect 4.0 = 3 + 2θ) -> T3-slope = {:.4}", raw - 1.0);

            let t = 20.0f64;
            let thetas = [0.25, 0.35, 0.45];
            let ms: Vec<f64> = thetas.iter().map(|&th| t.powf(th)).collect();
            let hm: Vec<f64> = thetas
                .iter()
                .map(|&th| {
                    let p = TestFunctionParams::new(t, th, a, angle).unwrap();
                    integrate_h_dspec(&p, 3.2).unwrap()
                })
                .collect();
            let slope_m = fit_loglog_slope(&ms, &hm);
            println!("            M-slope (expect 2.0) = {slope_m:.4}");

            // h-check trivial-bound constant at T=20, a few M choices
            for th in [0.35f64, 0.5] {
                let p = TestFunctionParams::new(20.0, th, a, angle).unwrap();
                let grid = SpectralGrid::for_h(&p).unwrap();
                let mass = grid.h_mass();
                let c = 3.0 / 20.0f64.powi(3) * mass.re / (p.m * p.m);
                println!("            hcheck(1,1)/M² at θ={th}: {c:.3}");
            }
        }
    }
}

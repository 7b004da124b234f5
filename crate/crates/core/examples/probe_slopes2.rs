use gl3moments::spectral::{fit_loglog_slope, integrate_h_dspec, SpectralGrid, TestFunctionParams};

fn main() {
    let angle = 0.3335f64; // balanced direction
    for a in [0u32] {
        for trange in [[20.0, 40.0, 80.0], [40.0, 80.0, 160.0], [80.0, 160.0, 320.0]] {
            let mut hs = Vec::new();
            for &t in &trange {
                let p = TestFunctionParams::new(t, 0.5, a, angle).unwrap();
                hs.push(integrate_h_dspec(&p, 3.2).unwrap());
            }
            let raw = fit_loglog_slope(&trange, &hs);
            println!("A={a} T={trange:?}: T3-slope = {:.4}", raw - 1.0);
        }
        // M-slope at fixed T=20 with small thetas
        for thetas in [[0.25, 0.35, 0.45], [0.08, 0.12, 0.16]] {
            let t = 20.0f64;
            let ms: Vec<f64> = thetas.iter().map(|&th| t.powf(th)).collect();
            let hm: Vec<f64> = thetas
                .iter()
                .map(|&th| {
                    let p = TestFunctionParams::new(t, th, a, angle).unwrap();
                    integrate_h_dspec(&p, 3.2).unwrap()
                })
                .collect();
            println!("A={a} M-slope over {ms:?} = {:.4}", fit_loglog_slope(&ms, &hm));
        }
        // h-check constants for candidate test points
        for (t, th) in [(20.0, 0.05), (20.0, 0.1), (20.0, 0.15), (40.0, 0.1), (80.0, 0.25)] {
            let p = TestFunctionParams::new(t, th, a, angle).unwrap();
            let grid = SpectralGrid::for_h(&p).unwrap();
            let c = 3.0 / (t as f64).powi(3) * grid.h_mass().re / (p.m * p.m);
            println!("A={a} hcheck/M² at T={t} θ={th}: {c:.3} (M={:.3})", p.m);
        }
    }
}

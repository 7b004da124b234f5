use gl3moments::spectral::{fit_loglog_slope, integrate_h_dspec, SpectralGrid, TestFunctionParams};

fn main() {
    // M-slope at large fixed T
    for t in [160.0f64, 320.0] {
        let thetas = [0.3, 0.4, 0.5];
        let ms: Vec<f64> = thetas.iter().map(|&th| t.powf(th)).collect();
        let hm: Vec<f64> = thetas
            .iter()
            .map(|&th| {
                let p = TestFunctionParams::new(t, th, 0, 0.3335).unwrap();
                integrate_h_dspec(&p, 3.2).unwrap()
            })
            .collect();
        println!("T={t}: M-slope = {:.4} over M = {ms:?}", fit_loglog_slope(&ms, &hm));
    }
    // h-check at candidate corners, lower-product direction
    for (t, th, ang) in [(80.0, 0.25, 0.24), (80.0, 0.2, 0.24), (80.0, 0.25, 0.29), (160.0, 0.3, 0.24)] {
        let p = TestFunctionParams::new(t, th, 0, ang).unwrap();
        let grid = SpectralGrid::for_h(&p).unwrap();
        let c = 3.0 / (t as f64).powi(3) * grid.h_mass().re / (p.m * p.m);
        println!("hcheck/M² at T={t} θ={th} angle={ang}: {c:.3}");
    }
    // T-slope at criterion range for the record (balanced, A=0)
    let ts = [20.0, 40.0, 80.0];
    let hs: Vec<f64> = ts
        .iter()
        .map(|&t| integrate_h_dspec(&TestFunctionParams::new(t, 0.5, 0, 0.3335).unwrap(), 3.2).unwrap())
        .collect();
    println!("T-slope {{20,40,80}} = {:.4}", fit_loglog_slope(&ts, &hs) - 1.0);
}

use gl3moments::lfun::{afe_weight, AfeMethod, AfeQuery, AfeWhich};
use gl3moments::spectral::SpectralTriple;
use num_complex::Complex64 as C;

fn main() {
    for scale in [2.0, 2.4, 4.0] {
        let mu = SpectralTriple::new([
            C::new(0.0, 7.0 * scale),
            C::new(0.0, 3.0 * scale),
            C::new(0.0, -10.0 * scale),
        ])
        .unwrap();
        let nmu = mu.norm();
        println!("== mu scale {scale}, |mu| = {nmu:.1}");
        for a in [16u32, 64, 256, 1024, 2048, 4096, 8192] {
            let mut line = format!("A={a:5}: ");
            for y in [1.0, 1e-4 * nmu.powi(3), 1e-3 * nmu.powi(3)] {
                let q = AfeQuery::new(0.1, 0.0, mu, y, a, AfeMethod::Full).unwrap();
                let w = afe_weight(AfeWhich::W, &q).unwrap();
                line += &format!("|W({y:9.1})-1|={:.2e}  ", (w - C::new(1.0, 0.0)).norm());
            }
            println!("{line}");
        }
        // decay ratio at the largest A of interest
        for a in [1024u32, 4096] {
            let q1 = AfeQuery::new(0.1, 0.0, mu, 1.0, a, AfeMethod::Full).unwrap();
            let q2 = AfeQuery::new(0.1, 0.0, mu, 10.0 * nmu.powi(3), a, AfeMethod::Full).unwrap();
            let w1 = afe_weight(AfeWhich::W, &q1).unwrap();
            let w2 = afe_weight(AfeWhich::W, &q2).unwrap();
            println!("A={a}: decay ratio |W(10|mu|^3)|/|W(1)| = {:.3e}", w2.norm() / w1.norm());
        }
    }
}

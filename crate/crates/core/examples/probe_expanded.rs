use gl3moments::lfun::{afe_weight, AfeMethod, AfeQuery, AfeWhich};
use gl3moments::spectral::SpectralTriple;
use num_complex::Complex64 as C;

fn main() {
    for scale in [2.4, 4.0] {
        let mu = SpectralTriple::new([
            C::new(0.0, 7.0 * scale),
            C::new(0.0, 3.0 * scale),
            C::new(0.0, -10.0 * scale),
        ])
        .unwrap();
        println!("== |mu| = {:.1}", mu.norm());
        for a in [16u32, 64, 256] {
            for y in [1.0, 50.0, 400.0] {
                let q = AfeQuery::new(0.1, 0.3, mu, y, a, AfeMethod::Full).unwrap();
                let truth = afe_weight(AfeWhich::W, &q).unwrap();
                let mut line = format!("A={a:4} y={y:6}: truth={:.4e}  errs:", truth.norm());
                for order in 0..=5 {
                    let qe = AfeQuery { method: AfeMethod::Expanded(order), ..q };
                    let v = afe_weight(AfeWhich::W, &qe).unwrap();
                    line += &format!(" {:.2e}", (v - truth).norm());
                }
                println!("{line}");
            }
        }
    }
}

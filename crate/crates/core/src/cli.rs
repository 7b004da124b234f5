//! Command-line driver: subcommands for exponential sums, kernel decay
//! scans, AFE weights, mollifier sums, zero counting, spectral integrals,
//! and GL(2) eigenvalue ingestion.

use crate::cache::{CacheKey, KloostermanCache};
use crate::config::{parse_gl2_blocks, provenance_header, synthetic_gl2_lambda, write_atomic, RunConfig};
use crate::exponential_sums::{
    kloosterman_big, kloosterman_tilde, oracle_evaluate, ModulusPair, OracleArgs,
    ORACLE_DEFAULT_GUARD,
};
use crate::kuznetsov::{phi_scan, PhiOptions};
use crate::lfun::{afe_weight, AfeMethod, AfeQuery, AfeWhich, DEFAULT_CUTOFF_A};
use crate::mollifier::{delta_eval, s1_eval, s2_eval, x_coeffs, SumMethod};
use crate::spectral::{integrate_h_dspec, SpectralTriple};
use crate::zeros::{density_pipeline, verify_box, AnalyticHandle, ConstOffsetMoments, ZeroBox};
use crate::{CoreError, Result};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use std::path::PathBuf;

type C = Complex64;

#[derive(Parser)]
#[command(
    name = "gl3moments",
    about = "Numerical toolkit for GL(3) spectral sums: Kloosterman sums, Kuznetsov kernels, AFE weights, mollifiers, weighted zero counting",
    version
)]
struct Cli {
    /// Path to a key=value config file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a GL(3) Kloosterman sum (optionally against the oracle)
    Kloosterman(KloostermanArgs),
    /// Scan the Φ_w transforms over kernel arguments, CSV output
    KernelScan(KernelScanArgs),
    /// Evaluate an approximate-functional-equation weight
    Afe(AfeArgs),
    /// Mollifier coefficients and the S1/S2/Δ evaluations
    Mollifier(MollifierArgs),
    /// Weighted argument-principle fixtures and the density pipeline
    ZeroCount(ZeroCountArgs),
    /// The normalized spectral integral of the localized test function
    SpectralIntegral(SpectralIntegralArgs),
    /// Ingest (or synthesize) GL(2) Hecke eigenvalue tables
    IngestGl2(IngestArgs),
}

#[derive(Args)]
struct KloostermanArgs {
    /// "tilde" or "big"
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n1: i64,
    #[arg(long, default_value_t = 0)]
    n2: i64,
    #[arg(long, default_value_t = 0)]
    m1: i64,
    #[arg(long, default_value_t = 0)]
    m2: i64,
    #[arg(long)]
    d1: u64,
    #[arg(long)]
    d2: u64,
    /// Cross-check against the literal enumeration oracle
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct KernelScanArgs {
    /// "w4" or "w6"
    #[arg(long, default_value = "w4")]
    w: String,
    /// y values (for w6 pass pairs as y1:y2)
    #[arg(long, required = true, num_args = 1..)]
    y: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AfeArgs {
    /// "w" or "wtilde"
    #[arg(long, default_value = "w")]
    which: String,
    /// full | truncated | asymptotic | expanded:<order>
    #[arg(long, default_value = "full")]
    method: String,
    #[arg(long, default_value_t = 0.1)]
    sigma: f64,
    #[arg(long, default_value_t = 0.0)]
    tau: f64,
    #[arg(long, default_value_t = 1.0)]
    y: f64,
    /// comma-separated imaginary parts t1,t2 of μ = (it1, it2, −i(t1+t2))
    #[arg(long, default_value = "14,6")]
    mu: String,
}

#[derive(Args)]
struct MollifierArgs {
    /// x | s1 | s2 | delta
    #[arg(long, default_value = "x")]
    what: String,
    #[arg(long)]
    l: Option<f64>,
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ZeroCountArgs {
    /// poly2 | zeta | empty | pipeline
    #[arg(long, default_value = "poly2")]
    fixture: String,
    #[arg(long, default_value_t = 0.5)]
    box_h: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectralIntegralArgs {
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long)]
    a: Option<u32>,
}

#[derive(Args)]
struct IngestArgs {
    /// CSV file of form blocks (header `form t=<x>` then n,lambda rows)
    path: Option<PathBuf>,
    /// Generate a synthetic multiplicative table of this length instead
    #[arg(long)]
    synthetic: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn load_config(path: &Option<PathBuf>) -> Result<RunConfig> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            RunConfig::from_flat_text(&text)
        }
        None => match std::env::var("GL3MOMENTS_CONFIG") {
            Ok(p) if !p.is_empty() => {
                let text = std::fs::read_to_string(&p)?;
                RunConfig::from_flat_text(&text)
            }
            _ => Ok(RunConfig::default()),
        },
    }
}

fn parse_mu(spec: &str) -> Result<SpectralTriple> {
    let parts: Vec<f64> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| CoreError::InvalidParameter(format!("bad mu spec '{spec}': {e}")))?;
    match parts.len() {
        2 => Ok(SpectralTriple::imaginary(parts[0], parts[1])),
        3 => {
            if (parts[0] + parts[1] + parts[2]).abs() > 1e-9 {
                return Err(CoreError::InvalidParameter(
                    "mu imaginary parts must sum to zero".into(),
                ));
            }
            Ok(SpectralTriple::imaginary(parts[0], parts[1]))
        }
        _ => Err(CoreError::InvalidParameter(
            "mu must be 2 or 3 comma-separated numbers".into(),
        )),
    }
}

fn fmt_c(v: C) -> String {
    format!("{:.17e}{:+.17e}i", v.re, v.im)
}

/// Dispatch a parsed command line; returns the process exit status.
pub fn run_command<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own help/usage; use its exit code semantics
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let cfg = load_config(&cli.config)?;
    match cli.cmd {
        Command::Kloosterman(a) => cmd_kloosterman(&cfg, a),
        Command::KernelScan(a) => cmd_kernel_scan(&cfg, a),
        Command::Afe(a) => cmd_afe(&cfg, a),
        Command::Mollifier(a) => cmd_mollifier(&cfg, a),
        Command::ZeroCount(a) => cmd_zero_count(&cfg, a),
        Command::SpectralIntegral(a) => cmd_spectral_integral(&cfg, a),
        Command::IngestGl2(a) => cmd_ingest(&cfg, a),
    }
}

fn cmd_kloosterman(cfg: &RunConfig, a: KloostermanArgs) -> Result<()> {
    let (value, key) = match a.kind.as_str() {
        "tilde" => {
            let mods = ModulusPair::tilde(a.d1, a.d2)?;
            let v = kloosterman_tilde(a.n1, a.n2, a.m1, mods)?;
            if a.oracle {
                let o = oracle_evaluate(
                    OracleArgs::Tilde {
                        n1: a.n1,
                        n2: a.n2,
                        m1: a.m1,
                    },
                    mods,
                    ORACLE_DEFAULT_GUARD,
                )?;
                println!(
                    "oracle agreement: |fast - oracle| = {:.3e}",
                    (v.value - o.value).norm()
                );
            }
            (
                v,
                CacheKey::Tilde {
                    n1: a.n1,
                    n2: a.n2,
                    m1: a.m1,
                    d1: a.d1,
                    d2: a.d2,
                },
            )
        }
        "big" => {
            let mods = ModulusPair::any(a.d1, a.d2)?;
            let v = kloosterman_big(a.n1, a.m2, a.m1, a.n2, mods)?;
            if a.oracle {
                let o = oracle_evaluate(
                    OracleArgs::Big {
                        n1: a.n1,
                        m2: a.m2,
                        m1: a.m1,
                        n2: a.n2,
                    },
                    mods,
                    ORACLE_DEFAULT_GUARD,
                )?;
                println!(
                    "oracle agreement: |fast - oracle| = {:.3e}",
                    (v.value - o.value).norm()
                );
            }
            (
                v,
                CacheKey::Big {
                    n1: a.n1,
                    m2: a.m2,
                    m1: a.m1,
                    n2: a.n2,
                    d1: a.d1,
                    d2: a.d2,
                },
            )
        }
        other => {
            return Err(CoreError::InvalidParameter(format!(
                "unknown kind '{other}' (expected tilde|big)"
            )))
        }
    };
    if let Some(path) = &cfg.cache_path {
        let (mut cache, warns) = KloostermanCache::load(path)?;
        for w in &warns {
            eprintln!("cache warning: {w}");
        }
        cache.insert(key, value.value);
        cache.save(path)?;
    }
    match value.exact_hint {
        Some(n) => println!("{} (exact integer {n}, {} terms)", fmt_c(value.value), value.term_count),
        None => println!("{} ({} terms)", fmt_c(value.value), value.term_count),
    }
    Ok(())
}

fn cmd_kernel_scan(cfg: &RunConfig, a: KernelScanArgs) -> Result<()> {
    let params = cfg.test_function()?;
    let ys: Vec<(f64, Option<f64>)> = a
        .y
        .iter()
        .map(|s| -> Result<(f64, Option<f64>)> {
            match s.split_once(':') {
                Some((y1, y2)) => Ok((
                    y1.parse()
                        .map_err(|_| CoreError::InvalidParameter(format!("bad y '{s}'")))?,
                    Some(
                        y2.parse()
                            .map_err(|_| CoreError::InvalidParameter(format!("bad y '{s}'")))?,
                    ),
                )),
                None => Ok((
                    s.parse()
                        .map_err(|_| CoreError::InvalidParameter(format!("bad y '{s}'")))?,
                    None,
                )),
            }
        })
        .collect::<Result<_>>()?;
    for (y1, y2) in &ys {
        let want_w6 = a.w == "w6";
        if want_w6 != y2.is_some() {
            return Err(CoreError::InvalidParameter(format!(
                "argument {y1}{} does not match kernel {}",
                y2.map(|v| format!(":{v}")).unwrap_or_default(),
                a.w
            )));
        }
    }
    let rows = phi_scan(&params, &ys, &PhiOptions::default())?;
    let mut csv = String::from("w,y1,y2,T,M,re,im,abs,error_estimate\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{:.17e},{},{},{},{:.17e},{:.17e},{:.17e},{:.3e}\n",
            r.kernel,
            r.y1,
            r.y2.map(|v| format!("{v:.17e}")).unwrap_or_default(),
            r.t,
            r.m,
            r.value.re,
            r.value.im,
            r.abs,
            r.error_estimate
        ));
        println!(
            "Phi_{}({}{}) = {} ± {:.2e}",
            r.kernel,
            r.y1,
            r.y2.map(|v| format!(", {v}")).unwrap_or_default(),
            fmt_c(r.value),
            r.error_estimate
        );
    }
    let out = a
        .out
        .unwrap_or_else(|| cfg.output_dir.join("kernel_scan.csv"));
    write_atomic(&out, &format!("{}\n{}", provenance_header(cfg), csv))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_afe(cfg: &RunConfig, a: AfeArgs) -> Result<()> {
    let mu = parse_mu(&a.mu)?;
    let which = match a.which.as_str() {
        "w" => AfeWhich::W,
        "wtilde" => AfeWhich::WTilde,
        other => {
            return Err(CoreError::InvalidParameter(format!(
                "unknown weight '{other}' (expected w|wtilde)"
            )))
        }
    };
    let method = match a.method.as_str() {
        "full" => AfeMethod::Full,
        "truncated" => AfeMethod::Truncated,
        "asymptotic" => AfeMethod::Asymptotic,
        m => match m.strip_prefix("expanded:") {
            Some(ord) => AfeMethod::Expanded(ord.parse().map_err(|_| {
                CoreError::InvalidParameter(format!("bad expansion order in '{m}'"))
            })?),
            None => {
                return Err(CoreError::InvalidParameter(format!(
                    "unknown method '{m}'"
                )))
            }
        },
    };
    let q = AfeQuery::new(a.sigma, a.tau, mu, a.y, DEFAULT_CUTOFF_A, method)?;
    let v = afe_weight(which, &q)?;
    // error scale: difference against the truncated representation
    let qt = AfeQuery {
        method: AfeMethod::Truncated,
        ..q
    };
    let vt = afe_weight(which, &qt)?;
    println!("{} ± {:.2e}", fmt_c(v), (v - vt).norm());
    let _ = cfg;
    Ok(())
}

fn cmd_mollifier(cfg: &RunConfig, a: MollifierArgs) -> Result<()> {
    let l = a.l.unwrap_or(cfg.mollifier_length);
    let sigma = a.sigma.unwrap_or(cfg.sigma);
    match a.what.as_str() {
        "x" => {
            let x = x_coeffs(l)?;
            let mut csv = String::from("ell,x\n");
            for (ell, v) in x.iter().enumerate().skip(1) {
                csv.push_str(&format!("{ell},{v:.17e}\n"));
            }
            let out = a
                .out
                .unwrap_or_else(|| cfg.output_dir.join("mollifier_x.csv"));
            write_atomic(&out, &format!("{}\n{}", provenance_header(cfg), csv))?;
            println!(
                "wrote {} ({} coefficients, exact piecewise values)",
                out.display(),
                x.len() - 1
            );
        }
        "s1" => {
            let f = s1_eval(SumMethod::Finite, l, sigma, cfg.t.max(1000.0))?;
            let c = s1_eval(SumMethod::Contour, l, sigma, cfg.t.max(1000.0))?;
            println!(
                "S1 finite = {} | contour = {} | deviation = {:.3e}",
                fmt_c(f),
                fmt_c(c),
                (f - c).norm()
            );
            write_report(
                cfg,
                a.out,
                "s1.csv",
                &[
                    ("finite", l, sigma, f, f.re, 0.0),
                    ("contour", l, sigma, c, f.re, (f - c).norm()),
                ],
            )?;
        }
        "delta" => {
            let f = delta_eval(SumMethod::Finite, l, sigma)?;
            let c = delta_eval(SumMethod::Closed, l, sigma)?;
            println!(
                "Delta finite = {} | closed = {} | deviation = {:.3e}",
                fmt_c(f),
                fmt_c(c),
                (f - c).norm()
            );
            write_report(
                cfg,
                a.out,
                "delta.csv",
                &[
                    ("finite", l, sigma, f, c.re, (f - c).norm()),
                    ("closed", l, sigma, c, c.re, 0.0),
                ],
            )?;
        }
        "s2" => {
            let params = cfg.test_function()?;
            let v = s2_eval(l, sigma, &params)?;
            println!(
                "S2 = {} (spectral ratio {:.6}, Delta {:.6e})",
                fmt_c(v.value),
                v.spectral_ratio,
                v.delta_finite
            );
            write_report(
                cfg,
                a.out,
                "s2.csv",
                &[("s2", l, sigma, v.value, v.delta_finite, v.spectral_ratio)],
            )?;
        }
        other => {
            return Err(CoreError::InvalidParameter(format!(
                "unknown mollifier target '{other}'"
            )))
        }
    }
    Ok(())
}

fn write_report(
    cfg: &RunConfig,
    out: Option<PathBuf>,
    default_name: &str,
    rows: &[(&str, f64, f64, C, f64, f64)],
) -> Result<()> {
    let mut csv = String::from("method,L,sigma,re,im,reference,deviation\n");
    for (m, l, s, v, rf, dev) in rows {
        csv.push_str(&format!(
            "{m},{l},{s},{:.17e},{:.17e},{rf:.17e},{dev:.3e}\n",
            v.re, v.im
        ));
    }
    let out = out.unwrap_or_else(|| cfg.output_dir.join(default_name));
    write_atomic(&out, &format!("{}\n{}", provenance_header(cfg), csv))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_zero_count(cfg: &RunConfig, a: ZeroCountArgs) -> Result<()> {
    let mut rows: Vec<(String, f64, f64)> = Vec::new();
    match a.fixture.as_str() {
        "poly2" => {
            let bx = ZeroBox::new(0.0, 1.0, a.box_h, 0.9)?;
            let (r1, r2) = (C::new(0.3, 0.1), C::new(0.55, -0.25));
            let f = AnalyticHandle::from_fn(move |s| (s - r1) * (s - r2), vec![r1, r2], 0.9)?;
            let rep = verify_box(&f, &bx)?;
            rows.push(("lhs".into(), rep.lhs, 0.0));
            rows.push(("rhs".into(), rep.rhs, rep.quadrature_error));
            rows.push(("residual".into(), rep.residual, rep.quadrature_error));
            println!(
                "poly2 residual = {:.3e} ± {:.1e}",
                rep.residual, rep.quadrature_error
            );
        }
        "zeta" => {
            let bx = ZeroBox::new(0.4, 2.0, 16.0, 1.1)?;
            let g1 = crate::zeros::zeta_zero_near(14.0, 14.3)?;
            let zeros = vec![C::new(0.5, g1), C::new(0.5, -g1)];
            let f = AnalyticHandle::from_fn(
                |s| crate::lfun::zeta(s).unwrap_or(C::new(f64::NAN, 0.0)),
                zeros,
                1.05,
            )?;
            let rep = verify_box(&f, &bx)?;
            rows.push(("lhs".into(), rep.lhs, 0.0));
            rows.push(("rhs".into(), rep.rhs, rep.quadrature_error));
            rows.push(("residual".into(), rep.residual, rep.quadrature_error));
            println!(
                "zeta box residual = {:.3e} ± {:.1e}",
                rep.residual, rep.quadrature_error
            );
        }
        "empty" => {
            let bx = ZeroBox::new(1.5, 3.0, 1.0, 2.0)?;
            let f = AnalyticHandle::from_fn(
                |s| crate::lfun::zeta(s).unwrap_or(C::new(f64::NAN, 0.0)),
                vec![],
                1.4,
            )?;
            let rep = verify_box(&f, &bx)?;
            rows.push(("rhs".into(), rep.rhs, rep.quadrature_error));
            println!("empty box |RHS| = {:.3e}", rep.rhs.abs());
        }
        "pipeline" => {
            let rep = density_pipeline(&ConstOffsetMoments { c: 0.25 }, a.box_h, cfg.t.ln())?;
            rows.push(("piece_left".into(), rep.piece_left, 0.0));
            rows.push(("piece_horizontal".into(), rep.piece_horizontal, 0.0));
            rows.push(("piece_right".into(), rep.piece_right, 0.0));
            rows.push(("bound".into(), rep.bound, 0.0));
            println!("pipeline bound = {:.6e}", rep.bound);
        }
        other => {
            return Err(CoreError::InvalidParameter(format!(
                "unknown fixture '{other}'"
            )))
        }
    }
    let mut csv = String::from("piece,value,error_estimate\n");
    for (name, v, e) in &rows {
        csv.push_str(&format!("{name},{v:.17e},{e:.3e}\n"));
    }
    let out = a
        .out
        .unwrap_or_else(|| cfg.output_dir.join("zero_count.csv"));
    write_atomic(&out, &format!("{}\n{}", provenance_header(cfg), csv))?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_spectral_integral(cfg: &RunConfig, a: SpectralIntegralArgs) -> Result<()> {
    let t = a.t.unwrap_or(cfg.t);
    let theta = a.theta.unwrap_or(cfg.theta);
    let av = a.a.unwrap_or(cfg.poly_cutoff_a);
    let params = crate::spectral::TestFunctionParams::new(t, theta, av, cfg.mu0_direction)?;
    let v = integrate_h_dspec(&params, 3.2)?;
    let v2 = integrate_h_dspec(&params, 6.4)?;
    println!(
        "H(T={t}, M={:.4}, A={av}) = {:.10e} ± {:.2e}",
        params.m,
        v,
        (v - v2).abs()
    );
    Ok(())
}

fn cmd_ingest(cfg: &RunConfig, a: IngestArgs) -> Result<()> {
    if let Some(n) = a.synthetic {
        let lam = synthetic_gl2_lambda(n, a.seed);
        let l = |k: usize| lam[k - 1];
        // multiplicativity spot check
        if (l(6) - l(2) * l(3)).abs() > 1e-12 {
            return Err(CoreError::InvalidParameter(
                "synthetic table failed the Hecke spot check".into(),
            ));
        }
        let mut csv = String::from("form t=10.0\nn,lambda\n");
        for (i, v) in lam.iter().enumerate() {
            csv.push_str(&format!("{},{v:.17e}\n", i + 1));
        }
        let out = cfg.output_dir.join("gl2_synthetic.csv");
        write_atomic(&out, &csv)?;
        println!(
            "synthetic table of {n} eigenvalues written to {} (lambda(2)lambda(3)=lambda(6) check passed)",
            out.display()
        );
        return Ok(());
    }
    let path = a.path.ok_or_else(|| {
        CoreError::InvalidParameter("provide a CSV path or --synthetic <n>".into())
    })?;
    let text = std::fs::read_to_string(&path)?;
    let (records, warnings) = parse_gl2_blocks(&text)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    if records.is_empty() {
        return Err(CoreError::MissingData(
            "no valid GL(2) form blocks parsed".into(),
        ));
    }
    for r in &records {
        println!(
            "form t={} with {} eigenvalues (lambda(1) = {})",
            r.spectral_t,
            r.lambda.len(),
            r.lambda[0]
        );
    }
    Ok(())
}

/// Entry point used by the binary.
pub fn main_entry() -> i32 {
    run_command(std::env::args_os())
}

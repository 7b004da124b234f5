//! Run configuration (flat key=value text with sections, JSON mirror) and
//! GL(2) Maass-form eigenvalue ingestion.

use crate::special::{PrecisionConfig, PrecisionMode};
use crate::spectral::{TestFunctionParams, DEFAULT_DIRECTION_ANGLE, DEFAULT_POLY_CUTOFF};
use crate::{CoreError, Result};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Flat configuration backing the CLI: precision, test-function, mollifier
/// and output settings.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct RunConfig {
    pub precision_mode: String,
    pub extended_digits: u32,
    pub quad_rel_tol: f64,
    pub t: f64,
    pub theta: f64,
    pub poly_cutoff_a: u32,
    pub mu0_direction: f64,
    pub mollifier_length: f64,
    pub mollifier_delta: f64,
    pub sigma: f64,
    pub output_dir: PathBuf,
    pub cache_path: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision_mode: "double".into(),
            extended_digits: 30,
            quad_rel_tol: 1e-10,
            t: 20.0,
            theta: 0.5,
            poly_cutoff_a: DEFAULT_POLY_CUTOFF,
            mu0_direction: DEFAULT_DIRECTION_ANGLE,
            mollifier_length: 10.0,
            mollifier_delta: 0.2,
            sigma: 0.1,
            output_dir: PathBuf::from("out"),
            cache_path: None,
            seed: 1,
        }
    }
}

impl RunConfig {
    pub fn precision(&self) -> Result<PrecisionConfig> {
        let mode = match self.precision_mode.as_str() {
            "double" => PrecisionMode::Double,
            "extended" => PrecisionMode::Extended,
            other => {
                return Err(CoreError::InvalidParameter(format!(
                    "unknown precision mode '{other}'"
                )))
            }
        };
        PrecisionConfig::new(mode, self.extended_digits, self.quad_rel_tol)
    }

    pub fn test_function(&self) -> Result<TestFunctionParams> {
        TestFunctionParams::new(self.t, self.theta, self.poly_cutoff_a, self.mu0_direction)
    }

    /// Serialize as the flat key=value format with section headers.
    pub fn to_flat_text(&self) -> String {
        let mut out = String::new();
        out.push_str("[precision]\n");
        out.push_str(&format!("mode = {}\n", self.precision_mode));
        out.push_str(&format!("extended_digits = {}\n", self.extended_digits));
        out.push_str(&format!("quad_rel_tol = {:e}\n", self.quad_rel_tol));
        out.push_str("\n[test_function]\n");
        out.push_str(&format!("T = {}\n", self.t));
        out.push_str(&format!("theta = {}\n", self.theta));
        out.push_str(&format!("A = {}\n", self.poly_cutoff_a));
        out.push_str(&format!("mu0_direction = {}\n", self.mu0_direction));
        out.push_str("\n[mollifier]\n");
        out.push_str(&format!("L = {}\n", self.mollifier_length));
        out.push_str(&format!("delta = {}\n", self.mollifier_delta));
        out.push_str(&format!("sigma = {}\n", self.sigma));
        out.push_str("\n[io]\n");
        out.push_str(&format!("output_dir = {}\n", self.output_dir.display()));
        if let Some(c) = &self.cache_path {
            out.push_str(&format!("cache_path = {}\n", c.display()));
        }
        out.push_str(&format!("seed = {}\n", self.seed));
        out
    }

    /// Parse the flat key=value format (section headers are informational).
    pub fn from_flat_text(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('[') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(CoreError::Parse {
                    line: idx + 1,
                    msg: format!("expected key = value, got '{line}'"),
                });
            };
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get_f64 = |kv: &BTreeMap<String, String>, k: &str, d: f64| -> Result<f64> {
            match kv.get(k) {
                Some(v) => v.parse().map_err(|_| CoreError::Parse {
                    line: 0,
                    msg: format!("bad float for {k}: '{v}'"),
                }),
                None => Ok(d),
            }
        };
        if let Some(m) = kv.get("mode") {
            cfg.precision_mode = m.clone();
        }
        if let Some(v) = kv.get("extended_digits") {
            cfg.extended_digits = v.parse().map_err(|_| CoreError::Parse {
                line: 0,
                msg: "bad extended_digits".into(),
            })?;
        }
        cfg.quad_rel_tol = get_f64(&kv, "quad_rel_tol", cfg.quad_rel_tol)?;
        cfg.t = get_f64(&kv, "T", cfg.t)?;
        cfg.theta = get_f64(&kv, "theta", cfg.theta)?;
        if let Some(v) = kv.get("A") {
            cfg.poly_cutoff_a = v.parse().map_err(|_| CoreError::Parse {
                line: 0,
                msg: "bad A".into(),
            })?;
        }
        cfg.mu0_direction = get_f64(&kv, "mu0_direction", cfg.mu0_direction)?;
        cfg.mollifier_length = get_f64(&kv, "L", cfg.mollifier_length)?;
        cfg.mollifier_delta = get_f64(&kv, "delta", cfg.mollifier_delta)?;
        cfg.sigma = get_f64(&kv, "sigma", cfg.sigma)?;
        if let Some(v) = kv.get("output_dir") {
            cfg.output_dir = PathBuf::from(v);
        }
        if let Some(v) = kv.get("cache_path") {
            cfg.cache_path = Some(PathBuf::from(v));
        }
        if let Some(v) = kv.get("seed") {
            cfg.seed = v.parse().map_err(|_| CoreError::Parse {
                line: 0,
                msg: "bad seed".into(),
            })?;
        }
        Ok(cfg)
    }

    /// Hash of the normalized config text (timestamps never enter).
    pub fn config_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.to_flat_text().as_bytes());
        let digest = h.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// One GL(2) Maass form record: Laplace parameter and Hecke eigenvalues.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct Gl2FormRecord {
    pub spectral_t: f64,
    /// λ(n) for n = 1.. (index 0 ↔ n = 1).
    pub lambda: Vec<f64>,
}

impl Gl2FormRecord {
    pub fn validate(&self) -> Result<()> {
        match self.lambda.first() {
            Some(l1) if (l1 - 1.0).abs() < 1e-12 => {}
            Some(l1) => {
                return Err(CoreError::InvalidParameter(format!(
                    "lambda(1) must equal 1, got {l1}"
                )))
            }
            None => return Err(CoreError::MissingData("empty lambda table".into())),
        }
        if self.lambda.iter().any(|l| !l.is_finite()) {
            return Err(CoreError::InvalidParameter("non-finite lambda".into()));
        }
        Ok(())
    }
}

/// Parse GL(2) form blocks: `form t=<spectral_t>` header lines followed by
/// `n,lambda` rows. Malformed rows are reported with their line numbers;
/// blocks failing the λ(1) = 1 validation are rejected.
pub fn parse_gl2_blocks(text: &str) -> Result<(Vec<Gl2FormRecord>, Vec<String>)> {
    let mut records = Vec::new();
    let mut warnings = Vec::new();
    let mut current: Option<(f64, Vec<(u64, f64)>)> = None;
    let flush = |cur: &mut Option<(f64, Vec<(u64, f64)>)>,
                     records: &mut Vec<Gl2FormRecord>,
                     warnings: &mut Vec<String>| {
        if let Some((t, rows)) = cur.take() {
            let nmax = rows.iter().map(|r| r.0).max().unwrap_or(0) as usize;
            let mut lambda = vec![f64::NAN; nmax];
            for (n, l) in rows {
                lambda[n as usize - 1] = l;
            }
            let rec = Gl2FormRecord {
                spectral_t: t,
                lambda,
            };
            match rec.validate() {
                Ok(()) => records.push(rec),
                Err(e) => warnings.push(format!("block t={t} rejected: {e}")),
            }
        }
    };
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.eq_ignore_ascii_case("n,lambda") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("form") {
            flush(&mut current, &mut records, &mut warnings);
            let t = rest
                .trim()
                .strip_prefix("t=")
                .and_then(|v| v.trim().parse().ok())
                .ok_or(CoreError::Parse {
                    line: idx + 1,
                    msg: format!("bad form header '{line}'"),
                })?;
            current = Some((t, Vec::new()));
            continue;
        }
        let Some((n, l)) = line.split_once(',') else {
            warnings.push(format!("line {}: skipped malformed row '{line}'", idx + 1));
            continue;
        };
        let (n, l) = (n.trim().parse::<u64>(), l.trim().parse::<f64>());
        match (n, l, &mut current) {
            (Ok(n), Ok(l), Some((_, rows))) if n >= 1 => rows.push((n, l)),
            (_, _, None) => warnings.push(format!("line {}: row before any form header", idx + 1)),
            _ => warnings.push(format!("line {}: skipped malformed row", idx + 1)),
        }
    }
    flush(&mut current, &mut records, &mut warnings);
    Ok((records, warnings))
}

/// Synthetic Hecke-multiplicative eigenvalue table: λ(p) from a seeded angle,
/// prime powers by the Chebyshev recursion, composites by multiplicativity.
pub fn synthetic_gl2_lambda(nmax: usize, seed: u64) -> Vec<f64> {
    let mut lam = vec![f64::NAN; nmax + 1];
    lam[1] = 1.0;
    let angle = |p: u64| -> f64 {
        let mut z = seed
            .wrapping_add(p.wrapping_mul(0x9E3779B97F4A7C15))
            .wrapping_mul(0xBF58476D1CE4E5B9);
        z ^= z >> 31;
        (z as f64 / u64::MAX as f64) * std::f64::consts::PI
    };
    let primes = crate::arith::primes_up_to(nmax);
    for &p in &primes {
        let lp = 2.0 * angle(p).cos();
        let mut prev = 1.0f64;
        let mut cur = lp;
        let mut q = p;
        while q <= nmax as u64 {
            lam[q as usize] = cur;
            let next = lp * cur - prev;
            prev = cur;
            cur = next;
            q = match q.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
        }
    }
    for n in 2..=nmax {
        if lam[n].is_nan() {
            let mut m = n as u64;
            let mut p = 2u64;
            while p * p <= m {
                if m % p == 0 {
                    break;
                }
                p += 1;
            }
            if p * p > m {
                p = m;
            }
            let mut q = 1u64;
            while m % p == 0 {
                m /= p;
                q *= p;
            }
            lam[n] = lam[q as usize] * lam[m as usize];
        }
    }
    lam.remove(0);
    lam
}

/// Atomic text write: temp file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Provenance header line for CSV artifacts.
pub fn provenance_header(cfg: &RunConfig) -> String {
    format!(
        "# tool=gl3moments version={} config_hash={} generated={}",
        env!("CARGO_PKG_VERSION"),
        cfg.config_hash(),
        timestamp()
    )
}

fn timestamp() -> String {
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("unix:{now}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_roundtrip_and_hash_stability() {
        let cfg = RunConfig::default();
        let text = cfg.to_flat_text();
        let back = RunConfig::from_flat_text(&text).unwrap();
        assert_eq!(cfg.to_flat_text(), back.to_flat_text());
        assert_eq!(cfg.config_hash(), back.config_hash());
        let js = serde_json::to_string(&cfg).unwrap();
        let back2: RunConfig = serde_json::from_str(&js).unwrap();
        assert_eq!(cfg.to_flat_text(), back2.to_flat_text());
    }

    #[test]
    fn gl2_parse_and_validation() {
        let text = "form t=9.5\nn,lambda\n1,1.0\n2,0.5\n3,-0.2\n\nform t=12.2\n1,2.0\n2,0.1\n";
        let (recs, warns) = parse_gl2_blocks(text).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].lambda.len(), 3);
        assert!(warns.iter().any(|w| w.contains("rejected")));
    }

    #[test]
    fn synthetic_lambda_is_multiplicative() {
        let lam = synthetic_gl2_lambda(100, 42);
        assert_eq!(lam[0], 1.0);
        let l = |n: usize| lam[n - 1];
        assert!((l(6) - l(2) * l(3)).abs() < 1e-12);
        assert!((l(15) - l(3) * l(5)).abs() < 1e-12);
        assert!((l(4) - (l(2) * l(2) - 1.0)).abs() < 1e-12);
    }
}

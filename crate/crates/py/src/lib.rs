//! Python bindings exposing the main types and operations: exponential sums,
//! Gamma machinery, the localized test function and spectral integrals, the
//! Kuznetsov kernels, AFE weights, mollifier sums, and the weighted argument
//! principle.

use gl3moments::exponential_sums::{self, ModulusPair, OracleArgs};
use gl3moments::kuznetsov::{self, KW4Method};
use gl3moments::lfun::{self, AfeMethod, AfeQuery, AfeWhich};
use gl3moments::mollifier::{self, SumMethod};
use gl3moments::special::bessel::{bessel_kernel, KernelKind};
use gl3moments::special::gamma;
use gl3moments::spectral::{self, SpectralTriple};
use gl3moments::zeros::{self, AnalyticHandle, ZeroBox};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn triple(mu: Vec<Complex64>) -> PyResult<SpectralTriple> {
    if mu.len() != 3 {
        return Err(PyValueError::new_err("mu must have three components"));
    }
    SpectralTriple::new([mu[0], mu[1], mu[2]]).map_err(err)
}

/// Langlands parameter triple with zero sum.
#[pyclass(name = "SpectralTriple")]
#[derive(Clone)]
struct PySpectralTriple {
    inner: SpectralTriple,
}

#[pymethods]
impl PySpectralTriple {
    #[new]
    fn new(mu: Vec<Complex64>) -> PyResult<Self> {
        Ok(Self { inner: triple(mu)? })
    }

    #[staticmethod]
    fn imaginary(t1: f64, t2: f64) -> Self {
        Self {
            inner: SpectralTriple::imaginary(t1, t2),
        }
    }

    fn mu(&self) -> Vec<Complex64> {
        self.inner.mu().to_vec()
    }

    fn nu(&self) -> Vec<Complex64> {
        self.inner.nu().to_vec()
    }

    fn norm(&self) -> f64 {
        self.inner.norm()
    }

    fn __repr__(&self) -> String {
        format!("SpectralTriple(mu={:?})", self.inner.mu())
    }
}

#[pyfunction]
fn ramanujan_sum(n: i64, q: u64) -> i64 {
    exponential_sums::ramanujan_sum(n, q)
}

#[pyfunction]
fn kloosterman_tilde(n1: i64, n2: i64, m1: i64, d1: u64, d2: u64) -> PyResult<Complex64> {
    let mods = ModulusPair::tilde(d1, d2).map_err(err)?;
    Ok(exponential_sums::kloosterman_tilde(n1, n2, m1, mods)
        .map_err(err)?
        .value)
}

#[pyfunction]
fn kloosterman_big(n1: i64, m2: i64, m1: i64, n2: i64, d1: u64, d2: u64) -> PyResult<Complex64> {
    let mods = ModulusPair::any(d1, d2).map_err(err)?;
    Ok(exponential_sums::kloosterman_big(n1, m2, m1, n2, mods)
        .map_err(err)?
        .value)
}

#[pyfunction]
#[pyo3(signature = (kind, args, d1, d2, guard=10_000))]
fn kloosterman_oracle(
    kind: &str,
    args: Vec<i64>,
    d1: u64,
    d2: u64,
    guard: u64,
) -> PyResult<Complex64> {
    let (oargs, mods) = match kind {
        "tilde" => {
            if args.len() != 3 {
                return Err(PyValueError::new_err("tilde takes [n1, n2, m1]"));
            }
            (
                OracleArgs::Tilde {
                    n1: args[0],
                    n2: args[1],
                    m1: args[2],
                },
                ModulusPair::tilde(d1, d2).map_err(err)?,
            )
        }
        "big" => {
            if args.len() != 4 {
                return Err(PyValueError::new_err("big takes [n1, m2, m1, n2]"));
            }
            (
                OracleArgs::Big {
                    n1: args[0],
                    m2: args[1],
                    m1: args[2],
                    n2: args[3],
                },
                ModulusPair::any(d1, d2).map_err(err)?,
            )
        }
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be tilde|big, got {other}"
            )))
        }
    };
    Ok(exponential_sums::oracle_evaluate(oargs, mods, guard)
        .map_err(err)?
        .value)
}

#[pyfunction]
fn asum_vanishing(l2: i64, m: i64, d: u64, delta: u64, eps: i64) -> PyResult<Complex64> {
    exponential_sums::asum_vanishing(l2, m, d, delta, eps).map_err(err)
}

#[pyfunction]
fn log_gamma(z: Complex64) -> PyResult<Complex64> {
    gamma::log_gamma(z).map_err(err)
}

#[pyfunction]
fn gamma_r(s: Complex64) -> PyResult<Complex64> {
    gamma::gamma_r(s).map_err(err)
}

#[pyfunction]
fn stirling_gamma(sigma1: f64, t: f64, k2: usize) -> PyResult<Complex64> {
    gamma::stirling_gamma(sigma1, t, k2).map_err(err)
}

#[pyfunction]
fn gamma_ratio_expansion(z: Complex64, u: Complex64, n1: usize) -> PyResult<Complex64> {
    gamma::gamma_ratio_expansion(z, u, n1).map_err(err)
}

#[pyfunction]
fn zeta(s: Complex64) -> PyResult<Complex64> {
    lfun::zeta(s).map_err(err)
}

#[pyfunction]
fn bessel_kernel_value(kind: &str, t: f64, x: f64) -> PyResult<Complex64> {
    let k = match kind {
        "ktilde" => KernelKind::KTilde,
        "jminus" => KernelKind::JMinus,
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be ktilde|jminus, got {other}"
            )))
        }
    };
    bessel_kernel(k, t, x).map_err(err)
}

#[pyfunction]
fn spec_density(mu: PySpectralTriple) -> PyResult<Complex64> {
    spectral::spec_density(&mu.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (t, theta=0.5, a=0, direction=spectral::DEFAULT_DIRECTION_ANGLE))]
fn h_tm_at_center(t: f64, theta: f64, a: u32, direction: f64) -> PyResult<Complex64> {
    let params = spectral::TestFunctionParams::new(t, theta, a, direction).map_err(err)?;
    Ok(params.h(&params.mu0))
}

#[pyfunction]
#[pyo3(signature = (t, theta=0.5, a=0, direction=spectral::DEFAULT_DIRECTION_ANGLE))]
fn integrate_h_dspec(t: f64, theta: f64, a: u32, direction: f64) -> PyResult<f64> {
    let params = spectral::TestFunctionParams::new(t, theta, a, direction).map_err(err)?;
    spectral::integrate_h_dspec(&params, 3.2).map_err(err)
}

#[pyfunction]
fn k_w4(y: f64, mu: PySpectralTriple, method: &str) -> PyResult<Complex64> {
    let m = match method {
        "mellin" => KW4Method::Mellin,
        "bessel" => KW4Method::Bessel,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be mellin|bessel, got {other}"
            )))
        }
    };
    kuznetsov::k_w4(y, &mu.inner, m).map_err(err)
}

#[pyfunction]
fn k_w6(y1: f64, y2: f64, mu: PySpectralTriple) -> PyResult<Complex64> {
    kuznetsov::k_w6(y1, y2, &mu.inner).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (which, sigma, tau, mu, y, method="full", cutoff_a=lfun::DEFAULT_CUTOFF_A))]
fn afe_weight(
    which: &str,
    sigma: f64,
    tau: f64,
    mu: PySpectralTriple,
    y: f64,
    method: &str,
    cutoff_a: u32,
) -> PyResult<Complex64> {
    let w = match which {
        "w" => AfeWhich::W,
        "wtilde" => AfeWhich::WTilde,
        other => {
            return Err(PyValueError::new_err(format!(
                "which must be w|wtilde, got {other}"
            )))
        }
    };
    let m = match method {
        "full" => AfeMethod::Full,
        "truncated" => AfeMethod::Truncated,
        "asymptotic" => AfeMethod::Asymptotic,
        other => match other.strip_prefix("expanded:") {
            Some(ord) => AfeMethod::Expanded(
                ord.parse()
                    .map_err(|_| PyValueError::new_err("bad expansion order"))?,
            ),
            None => return Err(PyValueError::new_err(format!("unknown method {other}"))),
        },
    };
    let q = AfeQuery::new(sigma, tau, mu.inner, y, cutoff_a, m).map_err(err)?;
    lfun::afe_weight(w, &q).map_err(err)
}

#[pyfunction]
fn eisenstein_min_coeff(mu: PySpectralTriple, m: u64, n: u64) -> Complex64 {
    lfun::eisenstein_min_coeff(&mu.inner, m, n)
}

#[pyfunction]
fn mollifier_x(l: f64) -> PyResult<Vec<f64>> {
    mollifier::x_coeffs(l).map_err(err)
}

#[pyfunction]
fn s1_eval(method: &str, l: f64, sigma: f64, t_truncation: f64) -> PyResult<Complex64> {
    let m = match method {
        "finite" => SumMethod::Finite,
        "contour" => SumMethod::Contour,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be finite|contour, got {other}"
            )))
        }
    };
    mollifier::s1_eval(m, l, sigma, t_truncation).map_err(err)
}

#[pyfunction]
fn delta_eval(method: &str, l: f64, sigma: f64) -> PyResult<Complex64> {
    let m = match method {
        "finite" => SumMethod::Finite,
        "closed" => SumMethod::Closed,
        other => {
            return Err(PyValueError::new_err(format!(
                "method must be finite|closed, got {other}"
            )))
        }
    };
    mollifier::delta_eval(m, l, sigma).map_err(err)
}

/// Residual of the weighted argument principle on a polynomial with the
/// given zeros inside the box (w0, w1, h).
#[pyfunction]
fn argument_principle_residual(
    zeros: Vec<Complex64>,
    w0: f64,
    w1: f64,
    h: f64,
) -> PyResult<f64> {
    let bx = ZeroBox::new(w0, w1, h, w1 - 0.05).map_err(err)?;
    let zs = zeros.clone();
    let f = AnalyticHandle::from_fn(
        move |s| zs.iter().fold(Complex64::new(1.0, 0.0), |acc, &z| acc * (s - z)),
        zeros,
        w1 - 0.06,
    )
    .map_err(err)?;
    Ok(zeros::verify_box(&f, &bx).map_err(err)?.residual)
}

#[pyfunction]
fn zeta_zero_near(lo: f64, hi: f64) -> PyResult<f64> {
    zeros::zeta_zero_near(lo, hi).map_err(err)
}

#[pymodule]
fn gl3moments_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpectralTriple>()?;
    m.add_function(wrap_pyfunction!(ramanujan_sum, m)?)?;
    m.add_function(wrap_pyfunction!(kloosterman_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(kloosterman_big, m)?)?;
    m.add_function(wrap_pyfunction!(kloosterman_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(asum_vanishing, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_r, m)?)?;
    m.add_function(wrap_pyfunction!(stirling_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_ratio_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_kernel_value, m)?)?;
    m.add_function(wrap_pyfunction!(spec_density, m)?)?;
    m.add_function(wrap_pyfunction!(h_tm_at_center, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_h_dspec, m)?)?;
    m.add_function(wrap_pyfunction!(k_w4, m)?)?;
    m.add_function(wrap_pyfunction!(k_w6, m)?)?;
    m.add_function(wrap_pyfunction!(afe_weight, m)?)?;
    m.add_function(wrap_pyfunction!(eisenstein_min_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(mollifier_x, m)?)?;
    m.add_function(wrap_pyfunction!(s1_eval, m)?)?;
    m.add_function(wrap_pyfunction!(delta_eval, m)?)?;
    m.add_function(wrap_pyfunction!(argument_principle_residual, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_zero_near, m)?)?;
    Ok(())
}

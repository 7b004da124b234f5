//! Numerical toolkit for spectral sums attached to GL(3) Hecke–Maass forms.
//!
//! The crate provides exact GL(3) Kloosterman sums with brute-force oracles,
//! complex Gamma machinery (log-Gamma, Stirling series, ratio expansions),
//! oscillatory Bessel-type kernels and the Kuznetsov integral kernels in both
//! Mellin–Barnes and Bessel form, Eisenstein coefficient tables with their
//! L-function factorizations, approximate-functional-equation weights,
//! mollifier calculus, and a weighted argument-principle zero counter.
//!
//! Everything is pure `f64`/`Complex64` numerics; exact integer arithmetic is
//! used wherever a quantity is exact (exponential-sum phases, Möbius tables).

pub mod arith;
pub mod cache;
pub mod cli;
pub mod config;
pub mod error;
pub mod exponential_sums;
pub mod kuznetsov;
pub mod lfun;
pub mod mollifier;
pub mod special;
pub mod spectral;
pub mod zeros;

pub use error::CoreError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CoreError>;

/// Deterministic pairwise tree reduction of complex partial sums.
///
/// Summation order depends only on the slice length, so parallel producers
/// that fill a `Vec` by index reproduce bit-identical totals.
pub fn tree_sum(values: &[num_complex::Complex64]) -> num_complex::Complex64 {
    use num_complex::Complex64;
    match values.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => values[0],
        n => {
            let (a, b) = values.split_at(n / 2);
            tree_sum(a) + tree_sum(b)
        }
    }
}

/// Deterministic pairwise tree reduction for real values.
pub fn tree_sum_f64(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let (a, b) = values.split_at(n / 2);
            tree_sum_f64(a) + tree_sum_f64(b)
        }
    }
}

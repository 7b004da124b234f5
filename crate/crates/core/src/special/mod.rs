//! Gamma machinery, oscillatory Bessel kernels, and contour quadrature.

pub mod bessel;
pub mod contour;
pub mod gamma;

use crate::{CoreError, Result};

/// Working-precision mode.
///
/// `Extended` does not change the scalar type (still f64); it tightens the
/// internal quadrature tolerances and node budgets where the estimated error
/// of a double-precision pass exceeds `quad_rel_tol`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub enum PrecisionMode {
    Double,
    Extended,
}

/// Precision configuration shared by the quadrature-backed operations.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct PrecisionConfig {
    pub mode: PrecisionMode,
    /// Only meaningful in extended mode; kept ≥ 30 for config compatibility.
    pub extended_digits: u32,
    pub quad_rel_tol: f64,
}

impl PrecisionConfig {
    pub fn new(mode: PrecisionMode, extended_digits: u32, quad_rel_tol: f64) -> Result<Self> {
        if !(quad_rel_tol > 0.0 && quad_rel_tol <= 1e-3) {
            return Err(CoreError::InvalidParameter(format!(
                "quad_rel_tol must lie in (0, 1e-3], got {quad_rel_tol}"
            )));
        }
        if mode == PrecisionMode::Extended && extended_digits < 30 {
            return Err(CoreError::InvalidParameter(format!(
                "extended_digits must be >= 30, got {extended_digits}"
            )));
        }
        Ok(Self {
            mode,
            extended_digits,
            quad_rel_tol,
        })
    }

    /// Node multiplier applied when the first pass misses the tolerance.
    pub fn escalation_factor(&self) -> usize {
        match self.mode {
            PrecisionMode::Double => 2,
            PrecisionMode::Extended => 4,
        }
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            mode: PrecisionMode::Double,
            extended_digits: 30,
            quad_rel_tol: 1e-10,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_config_validation() {
        assert!(PrecisionConfig::new(PrecisionMode::Double, 30, 1e-10).is_ok());
        assert!(PrecisionConfig::new(PrecisionMode::Double, 30, 1e-2).is_err());
        assert!(PrecisionConfig::new(PrecisionMode::Extended, 20, 1e-10).is_err());
    }
}

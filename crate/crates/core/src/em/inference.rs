//! Wald standard errors, intervals and p-values.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct Inference<T> {
    pub covariance: Matrix<T>,
    pub se: Vec<T>,
    pub ci: Vec<(T, T)>,
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("unit normal")
}

/// Upper `(1 - level) / 2` standard-normal quantile; zero at level 0.
pub fn normal_quantile(level: f64) -> f64 {
    if level <= 0.0 {
        return 0.0;
    }
    std_normal().inverse_cdf(0.5 + level / 2.0)
}

/// Covariance `info⁻¹`, standard errors and symmetric Wald intervals.
pub fn se_and_ci<T: Scalar>(info: &Matrix<T>, estimates: &[T], level: f64) -> Result<Inference<T>> {
    if info.rows() != estimates.len() || !info.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} information for {} estimates",
            info.rows(),
            info.cols(),
            estimates.len()
        )));
    }
    if !(0.0..1.0).contains(&level) {
        return Err(Error::InvalidOption(format!(
            "confidence level {level} outside [0, 1)"
        )));
    }
    let covariance = info.spd_inverse()?;
    let z = T::lit(normal_quantile(level));
    let se: Vec<T> = covariance.diag().into_iter().map(|v| v.sqrt()).collect();
    if se.iter().any(|s| !(s.is_finite() && *s >= T::zero())) {
        return Err(Error::Singular);
    }
    let ci = estimates
        .iter()
        .zip(&se)
        .map(|(&e, &s)| (e - z * s, e + z * s))
        .collect();
    Ok(Inference { covariance, se, ci })
}

/// Two-sided p-values `2 Φ(-|est / se|)`; NaN where `se` is not positive.
pub fn wald_p_values<T: Scalar>(estimates: &[T], se: &[T]) -> Vec<f64> {
    let n = std_normal();
    estimates
        .iter()
        .zip(se)
        .map(|(&e, &s)| {
            let (e, s) = (e.as_f64(), s.as_f64());
            if s > 0.0 && s.is_finite() {
                2.0 * n.cdf(-(e / s).abs())
            } else {
                f64::NAN
            }
        })
        .collect()
}

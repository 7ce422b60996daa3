//! Covariate, response and missingness generators for the simulation design.
//!
//! Four covariates are drawn per subject: a treatment indicator `X1`, a
//! binary `X2`, `X3 ~ Gamma(shape 17, rate 0.2)` and
//! `X4 ~ LogNormal(meanlog 3.1, sdlog 0.65)`. The response depends on
//! `(X1, X3, X4)`; missingness depends on all four plus the response.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Bernoulli, Distribution, Gamma, LogNormal};
use serde::{Deserialize, Serialize};

use crate::data::{OrdinalDataset, PoParams};
use crate::error::{Error, Result};
use crate::po::category_probs;
use crate::scalar::expit;

/// How the treatment indicator `X1` is assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Allocation {
    /// First `ceil(n / 3)` subjects are controls, the rest treated.
    #[default]
    Fixed,
    /// Independent `Bernoulli(0.67)` assignment.
    Bernoulli,
}

pub type CovariateRow = [f64; 4];

pub const TREATED_PROBABILITY: f64 = 0.67;
pub const X2_PROBABILITY: f64 = 0.3;
pub const X3_SHAPE: f64 = 17.0;
pub const X3_RATE: f64 = 0.2;
pub const X4_MEANLOG: f64 = 3.1;
pub const X4_SDLOG: f64 = 0.65;

pub fn gen_covariates(n: usize, seed: u64, allocation: Allocation) -> Vec<CovariateRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let treated = Bernoulli::new(TREATED_PROBABILITY).expect("valid probability");
    let x2 = Bernoulli::new(X2_PROBABILITY).expect("valid probability");
    let x3 = Gamma::new(X3_SHAPE, 1.0 / X3_RATE).expect("valid gamma");
    let x4 = LogNormal::new(X4_MEANLOG, X4_SDLOG).expect("valid lognormal");
    let controls = n.div_ceil(3);
    (0..n)
        .map(|i| {
            let x1 = match allocation {
                Allocation::Fixed => (i >= controls) as u8 as f64,
                Allocation::Bernoulli => treated.sample(&mut rng) as u8 as f64,
            };
            [
                x1,
                x2.sample(&mut rng) as u8 as f64,
                x3.sample(&mut rng),
                x4.sample(&mut rng),
            ]
        })
        .collect()
}

/// Outcome covariates `(X1, X3, X4)`.
pub fn outcome_covariates(row: &CovariateRow) -> [f64; 3] {
    [row[0], row[2], row[3]]
}

/// Covariates that enter only the missingness model: `(X2)`.
pub fn auxiliary_covariates(row: &CovariateRow) -> [f64; 1] {
    [row[1]]
}

/// Draws one category per subject from the proportional-odds model.
pub fn gen_response(x: &[CovariateRow], po: &PoParams<f64>, seed: u64) -> Result<Vec<usize>> {
    if po.p() != 3 {
        return Err(Error::Dimension(format!(
            "the simulation outcome model has 3 slopes, got {}",
            po.p()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    x.iter()
        .map(|row| {
            let probs = category_probs(po, &outcome_covariates(row))?;
            Ok(draw_category(&probs, rng.random::<f64>()))
        })
        .collect()
}

/// Inverse-CDF draw: the first category whose cumulative probability exceeds `u`.
pub fn draw_category(probs: &[f64], u: f64) -> usize {
    let mut cum = 0.0;
    for (k, &p) in probs.iter().enumerate() {
        cum += p;
        if u < cum {
            return k + 1;
        }
    }
    probs.len()
}

/// Missingness indicators from `logit P(R = 1) = a0 + a1 X1 + a2 X2 + a3 X3
/// + a4 X4 + a5 Y`; `alpha` is given in that covariate order.
pub fn gen_missingness(
    x: &[CovariateRow],
    y: &[usize],
    alpha: &[f64],
    seed: u64,
) -> Result<Vec<bool>> {
    if alpha.len() != 6 || x.len() != y.len() {
        return Err(Error::Dimension(format!(
            "missingness needs 6 coefficients and matching rows, got {} coefficients, {} vs {} rows",
            alpha.len(),
            x.len(),
            y.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(x.iter()
        .zip(y)
        .map(|(row, &yi)| {
            let eta = alpha[0]
                + alpha[1] * row[0]
                + alpha[2] * row[1]
                + alpha[3] * row[2]
                + alpha[4] * row[3]
                + alpha[5] * yi as f64;
            rng.random::<f64>() < expit(eta)
        })
        .collect())
}

/// Reorders `(a0, X1, X2, X3, X4, Y)` to the fitting order
/// `(intercept, X1, X3, X4, X2, Y)` used with outcome covariates
/// `(X1, X3, X4)` and auxiliary `(X2)`.
pub fn alpha_in_fitting_order(alpha: &[f64]) -> Vec<f64> {
    vec![alpha[0], alpha[1], alpha[3], alpha[4], alpha[2], alpha[5]]
}

/// The full dataset and the one with `R = 1` responses removed.
pub fn build_datasets(
    x: &[CovariateRow],
    y: &[usize],
    missing: &[bool],
    categories: usize,
) -> Result<(OrdinalDataset<f64>, OrdinalDataset<f64>)> {
    let n = x.len();
    let mut xs = Vec::with_capacity(n * 3);
    let mut aux = Vec::with_capacity(n);
    for row in x {
        xs.extend_from_slice(&outcome_covariates(row));
        aux.extend_from_slice(&auxiliary_covariates(row));
    }
    let full: Vec<Option<usize>> = y.iter().map(|&v| Some(v)).collect();
    let observed: Vec<Option<usize>> = y
        .iter()
        .zip(missing)
        .map(|(&v, &m)| (!m).then_some(v))
        .collect();
    let whole = OrdinalDataset::from_parts(categories, 3, 1, full, xs.clone(), aux.clone(), None)?;
    let with_missing = OrdinalDataset::from_parts(categories, 3, 1, observed, xs, aux, None)?;
    Ok((whole, with_missing))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_allocation_has_a_control_third() {
        let x = gen_covariates(10, 1, Allocation::Fixed);
        let controls = x.iter().filter(|r| r[0] == 0.0).count();
        assert_eq!(controls, 4);
        assert!(x[..4].iter().all(|r| r[0] == 0.0));
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(
            gen_covariates(50, 9, Allocation::Bernoulli),
            gen_covariates(50, 9, Allocation::Bernoulli)
        );
        assert_ne!(
            gen_covariates(50, 9, Allocation::Fixed),
            gen_covariates(50, 10, Allocation::Fixed)
        );
    }

    #[test]
    fn inverse_cdf_draw() {
        let p = [0.2, 0.5, 0.3];
        assert_eq!(draw_category(&p, 0.0), 1);
        assert_eq!(draw_category(&p, 0.19), 1);
        assert_eq!(draw_category(&p, 0.2), 2);
        assert_eq!(draw_category(&p, 0.69), 2);
        assert_eq!(draw_category(&p, 0.999), 3);
    }

    #[test]
    fn alpha_reordering() {
        assert_eq!(
            alpha_in_fitting_order(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]),
            vec![0.0, 1.0, 3.0, 4.0, 2.0, 5.0]
        );
    }
}

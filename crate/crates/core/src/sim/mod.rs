//! Monte Carlo study harness: scenario configs, replicate generation, the
//! whole-data / complete-case / EM estimators and their summaries.

pub mod generate;
pub mod metrics;
pub mod presets;
pub mod psoriasis;
pub mod reference;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::data::{augment_dataset, OrdinalDataset, PoParams};
use crate::em::{em_fit, se_and_ci, EmOptions};
use crate::error::{Error, Result};
use crate::po::{fit_po_weighted, FitOptions};

pub use generate::Allocation;
pub use metrics::{summarize, MetricRow, MetricsTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Estimator {
    /// Outcome model on the data before any response is deleted.
    Whole,
    /// Outcome model on subjects with an observed response.
    Cc,
    /// Joint selection model by EM.
    Em,
}

impl Estimator {
    pub const ALL: [Estimator; 3] = [Estimator::Whole, Estimator::Cc, Estimator::Em];

    pub fn name(self) -> &'static str {
        match self {
            Estimator::Whole => "whole",
            Estimator::Cc => "cc",
            Estimator::Em => "em",
        }
    }
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Estimator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "whole" => Ok(Estimator::Whole),
            "cc" => Ok(Estimator::Cc),
            "em" => Ok(Estimator::Em),
            other => Err(Error::InvalidOption(format!(
                "unknown estimator {other:?} (whole, cc, em)"
            ))),
        }
    }
}

fn default_replications() -> usize {
    1000
}

fn default_estimators() -> Vec<Estimator> {
    Estimator::ALL.to_vec()
}

fn default_ci_level() -> f64 {
    0.95
}

/// One simulation scenario. The outcome model uses covariates `(X1, X3, X4)`;
/// `alpha_true` is ordered `(intercept, X1, X2, X3, X4, Y)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub n: usize,
    pub categories: usize,
    /// Descending cut-points, `logit P(Y > j) = theta_j + x'beta`.
    pub theta_true: Vec<f64>,
    pub beta_true: Vec<f64>,
    pub alpha_true: Vec<f64>,
    #[serde(default = "default_replications")]
    pub replications: usize,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_estimators")]
    pub estimators: Vec<Estimator>,
    #[serde(default)]
    pub allocation: Allocation,
    #[serde(default = "default_ci_level")]
    pub ci_level: f64,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidOption(m));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.categories < 2 || self.theta_true.len() != self.categories - 1 {
            return bad(format!(
                "{} categories need {} cut-points, got {}",
                self.categories,
                self.categories.saturating_sub(1),
                self.theta_true.len()
            ));
        }
        if self.beta_true.len() != 3 {
            return bad(format!(
                "beta_true needs 3 slopes (X1, X3, X4), got {}",
                self.beta_true.len()
            ));
        }
        if self.alpha_true.len() != 6 {
            return bad(format!(
                "alpha_true needs 6 entries (intercept, X1, X2, X3, X4, Y), got {}",
                self.alpha_true.len()
            ));
        }
        if self.replications == 0 {
            return bad("replications must be at least 1".into());
        }
        if self.estimators.is_empty() {
            return bad("at least one estimator is required".into());
        }
        if !(0.0..1.0).contains(&self.ci_level) || self.ci_level == 0.0 {
            return bad(format!("ci_level {} outside (0, 1)", self.ci_level));
        }
        if !crate::po::cut_points_ordered(&self.truth_params()) {
            return bad("theta_true must be strictly decreasing".into());
        }
        Ok(())
    }

    pub fn truth_params(&self) -> PoParams<f64> {
        PoParams::new(self.theta_true.clone(), self.beta_true.clone())
    }

    /// `(theta, beta)` concatenated, the order of every estimate vector.
    pub fn truth(&self) -> Vec<f64> {
        self.truth_params().to_vec()
    }

    pub fn parameter_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..self.categories).map(|j| format!("cut{j}")).collect();
        names.extend(["x1", "x3", "x4"].map(String::from));
        names
    }
}

/// SplitMix64 output function.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic 64-bit combination of a seed and a stream index.
pub fn mix_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(seed ^ splitmix64(stream))
}

pub fn replicate_seed(base_seed: u64, replicate: usize) -> u64 {
    mix_seed(base_seed, replicate as u64)
}

const COVARIATE_STREAM: u64 = 1;
const RESPONSE_STREAM: u64 = 2;
const MISSINGNESS_STREAM: u64 = 3;

/// Point estimates and Wald intervals from one estimator on one replicate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimatorOutcome {
    pub estimator: Estimator,
    pub converged: bool,
    /// Empty unless converged.
    pub estimates: Vec<f64>,
    /// NaN entries when the information matrix was not usable.
    pub se: Vec<f64>,
    pub ci: Vec<(f64, f64)>,
    pub iterations: usize,
    pub error: Option<String>,
    /// EM only: largest observed log-likelihood decrease along the trace.
    pub max_loglik_decrease: Option<f64>,
    /// EM only: largest E-step group-sum deviation from one.
    pub max_weight_deviation: Option<f64>,
}

impl EstimatorOutcome {
    fn failed(estimator: Estimator, err: &Error) -> Self {
        Self {
            estimator,
            converged: false,
            estimates: Vec::new(),
            se: Vec::new(),
            ci: Vec::new(),
            iterations: 0,
            error: Some(err.to_string()),
            max_loglik_decrease: None,
            max_weight_deviation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReplicationRecord {
    pub index: usize,
    pub seed: u64,
    pub missing_fraction: f64,
    pub outcomes: Vec<EstimatorOutcome>,
}

impl ReplicationRecord {
    pub fn outcome(&self, estimator: Estimator) -> Option<&EstimatorOutcome> {
        self.outcomes.iter().find(|o| o.estimator == estimator)
    }
}

/// Unit-weight outcome-model fit with SEs from the inverse negative Hessian.
fn fit_outcome_model(
    ds: &OrdinalDataset<f64>,
    estimator: Estimator,
    ci_level: f64,
) -> EstimatorOutcome {
    let opts = FitOptions::default();
    let run = || -> Result<EstimatorOutcome> {
        let fit = fit_po_weighted(&augment_dataset(ds), None, &opts)?;
        let est = fit.params.to_vec();
        let (se, ci) = match se_and_ci(&fit.neg_hessian, &est, ci_level) {
            Ok(inf) => (inf.se, inf.ci),
            Err(_) => (
                vec![f64::NAN; est.len()],
                vec![(f64::NAN, f64::NAN); est.len()],
            ),
        };
        Ok(EstimatorOutcome {
            estimator,
            converged: true,
            estimates: est,
            se,
            ci,
            iterations: fit.iterations,
            error: None,
            max_loglik_decrease: None,
            max_weight_deviation: None,
        })
    };
    run().unwrap_or_else(|e| EstimatorOutcome::failed(estimator, &e))
}

/// Proportional-odds fit on the dataset before deletion.
pub fn fit_whole(complete: &OrdinalDataset<f64>, ci_level: f64) -> EstimatorOutcome {
    fit_outcome_model(complete, Estimator::Whole, ci_level)
}

/// Proportional-odds fit after dropping subjects with a missing response.
pub fn fit_cc(with_missing: &OrdinalDataset<f64>, ci_level: f64) -> EstimatorOutcome {
    match with_missing.complete_cases() {
        Ok(cc) => fit_outcome_model(&cc, Estimator::Cc, ci_level),
        Err(e) => EstimatorOutcome::failed(Estimator::Cc, &e),
    }
}

/// EM fit; only the outcome-model block is reported.
pub fn fit_em(with_missing: &OrdinalDataset<f64>, ci_level: f64) -> EstimatorOutcome {
    let opts = EmOptions {
        ci_level,
        ..EmOptions::default()
    };
    match em_fit(with_missing, &opts) {
        Ok(fit) => {
            let k = fit.gamma.po.dim();
            EstimatorOutcome {
                estimator: Estimator::Em,
                converged: true,
                estimates: fit.gamma.po.to_vec(),
                se: fit.se[..k].to_vec(),
                ci: fit.ci[..k].to_vec(),
                iterations: fit.iterations,
                error: None,
                max_loglik_decrease: Some(fit.max_loglik_decrease),
                max_weight_deviation: Some(fit.max_weight_deviation),
            }
        }
        Err(e) => EstimatorOutcome::failed(Estimator::Em, &e),
    }
}

/// Generated data for one replicate.
pub struct ReplicateData {
    pub seed: u64,
    pub whole: OrdinalDataset<f64>,
    pub with_missing: OrdinalDataset<f64>,
}

pub fn generate_replicate(cfg: &ScenarioConfig, index: usize) -> Result<ReplicateData> {
    let seed = replicate_seed(cfg.base_seed, index);
    let x = generate::gen_covariates(cfg.n, mix_seed(seed, COVARIATE_STREAM), cfg.allocation);
    let y = generate::gen_response(&x, &cfg.truth_params(), mix_seed(seed, RESPONSE_STREAM))?;
    let r = generate::gen_missingness(&x, &y, &cfg.alpha_true, mix_seed(seed, MISSINGNESS_STREAM))?;
    let (whole, with_missing) = generate::build_datasets(&x, &y, &r, cfg.categories)?;
    Ok(ReplicateData {
        seed,
        whole,
        with_missing,
    })
}

pub fn simulate_replicate(cfg: &ScenarioConfig, index: usize) -> Result<ReplicationRecord> {
    let data = generate_replicate(cfg, index)?;
    let outcomes = cfg
        .estimators
        .iter()
        .map(|&e| match e {
            Estimator::Whole => fit_whole(&data.whole, cfg.ci_level),
            Estimator::Cc => fit_cc(&data.with_missing, cfg.ci_level),
            Estimator::Em => fit_em(&data.with_missing, cfg.ci_level),
        })
        .collect();
    Ok(ReplicationRecord {
        index,
        seed: data.seed,
        missing_fraction: data.with_missing.missing_fraction(),
        outcomes,
    })
}

/// Runs every replicate on a pool of `workers` threads. Records come back in
/// replicate order and do not depend on the worker count.
pub fn run_scenario(cfg: &ScenarioConfig, workers: usize) -> Result<Vec<ReplicationRecord>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidOption(format!("thread pool: {e}")))?;
    pool.install(|| {
        (0..cfg.replications)
            .into_par_iter()
            .map(|t| simulate_replicate(cfg, t))
            .collect()
    })
}

/// Realized missing fraction of a single large draw from the scenario.
pub fn realized_missing_fraction(cfg: &ScenarioConfig, n: usize, seed: u64) -> Result<f64> {
    let scaled = ScenarioConfig {
        n,
        base_seed: seed,
        ..cfg.clone()
    };
    Ok(generate_replicate(&scaled, 0)?
        .with_missing
        .missing_fraction())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ScenarioConfig {
        presets::PresetTable::T2.scenario(60, 2, 7)
    }

    #[test]
    fn seeds_differ_by_replicate() {
        assert_ne!(replicate_seed(1, 0), replicate_seed(1, 1));
        assert_ne!(replicate_seed(1, 0), replicate_seed(2, 0));
        assert_eq!(replicate_seed(5, 3), replicate_seed(5, 3));
    }

    #[test]
    fn config_roundtrips_through_json() {
        let cfg = small();
        let text = serde_json::to_string(&cfg).unwrap();
        let back: ScenarioConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn config_defaults_apply() {
        let cfg: ScenarioConfig = serde_json::from_str(
            r#"{"name":"s","n":10,"categories":3,"theta_true":[1,-0.6],"beta_true":[-1,0.005,-0.1],
                "alpha_true":[1,-2,-0.6,0.05,-0.1,-4]}"#,
        )
        .unwrap();
        assert_eq!(cfg.replications, 1000);
        assert_eq!(cfg.estimators, Estimator::ALL.to_vec());
        assert_eq!(cfg.allocation, Allocation::Fixed);
        cfg.validate().unwrap();
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = small();
        cfg.replications = 0;
        assert!(cfg.validate().is_err());
        let mut cfg = small();
        cfg.theta_true = vec![-0.6, 1.0];
        assert!(cfg.validate().is_err());
        let mut cfg = small();
        cfg.alpha_true.pop();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn one_replication_gives_one_record() {
        let mut cfg = small();
        cfg.replications = 1;
        let recs = run_scenario(&cfg, 1).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].outcomes.len(), 3);
    }
}

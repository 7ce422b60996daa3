//! EM estimation of the joint outcome/missingness selection model.
//!
//! Each missing response is expanded into one row per category. The E-step
//! sets the rows' weights to the posterior category probabilities; the M-step
//! refits the proportional-odds model and the logistic missingness model on
//! the weighted rows. Standard errors come from the Louis observed
//! information at the final estimate.

mod inference;
mod louis;

pub use inference::{normal_quantile, se_and_ci, wald_p_values, Inference};
pub use louis::{
    complete_data_score, louis_components, louis_information, observed_data_loglik, LouisParts,
};

use serde::Serialize;

use crate::data::{
    augment_dataset, AugmentedDataset, GammaParams, MissingnessParams, OrdinalDataset, PoParams,
};
use crate::error::{Error, Result, SubModel};
use crate::linalg::Matrix;
use crate::logit::{fit_logistic_weighted, LogisticDesign};
use crate::po::{fit_po_weighted, frequency_init, log_category_prob, FitOptions};
use crate::scalar::{log_expit, Scalar};

#[derive(Debug, Clone, Serialize)]
pub struct EmOptions {
    /// Stop once `Σ |γ_new - γ_old|` falls below this.
    pub outer_tol: f64,
    pub max_outer: usize,
    pub inner: FitOptions,
    pub ci_level: f64,
}

impl EmOptions {
    pub fn for_scalar<T: Scalar>() -> Self {
        Self {
            outer_tol: 1e-6,
            max_outer: 500,
            inner: FitOptions::for_scalar::<T>(),
            ci_level: 0.95,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.outer_tol > 0.0
            && self.inner.score_tol > 0.0
            && self.inner.step_tol > 0.0
            && self.max_outer > 0
            && (0.0..1.0).contains(&self.ci_level);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidOption(
                "tolerances and iteration caps must be positive and ci_level in [0, 1)".into(),
            ))
        }
    }
}

impl Default for EmOptions {
    fn default() -> Self {
        Self::for_scalar::<f64>()
    }
}

/// Whether the missingness model could be estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MissingnessStatus {
    Estimated,
    /// No response is missing, so `R ≡ 0` and alpha is not identified; alpha,
    /// its standard errors and intervals are NaN.
    NoMissingResponses,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmFit<T> {
    pub gamma: GammaParams<T>,
    /// Inverse Louis information ordered `(theta, beta, alpha)`; `None` when
    /// the information is not positive definite.
    pub covariance: Option<Matrix<T>>,
    pub se: Vec<T>,
    pub ci: Vec<(T, T)>,
    pub ci_level: f64,
    /// Observed-data log-likelihood before each E-step, ending at the estimate.
    pub loglik_trace: Vec<T>,
    /// Largest drop between consecutive trace entries (zero when monotone).
    pub max_loglik_decrease: T,
    /// Largest deviation of a missing group's weight sum from one, over all E-steps.
    pub max_weight_deviation: T,
    #[serde(skip)]
    pub weights: AugmentedDataset<T>,
    pub iterations: usize,
    pub converged: bool,
    pub missingness: MissingnessStatus,
}

impl<T: Scalar> EmFit<T> {
    pub fn loglik(&self) -> T {
        *self.loglik_trace.last().expect("trace is never empty")
    }
}

/// Posterior category weights for every missing subject at `gamma`; observed
/// rows are set to weight one.
pub fn e_step_weights<T: Scalar>(
    gamma: &GammaParams<T>,
    aug: &AugmentedDataset<T>,
) -> Result<AugmentedDataset<T>> {
    let mut out = aug.clone();
    e_step_in_place(gamma, &mut out)?;
    Ok(out)
}

/// In-place E-step; returns the largest deviation of a group sum from one.
pub(crate) fn e_step_in_place<T: Scalar>(
    gamma: &GammaParams<T>,
    aug: &mut AugmentedDataset<T>,
) -> Result<T> {
    let j = aug.categories();
    let mut logw = vec![T::zero(); j];
    let mut w = vec![T::zero(); j];
    let mut worst = T::zero();
    for s in 0..aug.n_subjects() {
        if !aug.is_missing(s) {
            aug.set_group_weights(s, &[T::one()]);
            continue;
        }
        let x = aug.x(s);
        let z = aug.aux(s);
        let mut top = T::neg_infinity();
        for y in 1..=j {
            let lp = log_category_prob(&gamma.po, x, y)?;
            let lr = log_expit(gamma.miss.linear_predictor(x, z, y));
            logw[y - 1] = lp + lr;
            top = top.max(lp + lr);
        }
        if !top.is_finite() {
            return Err(Error::Domain(format!(
                "subject {s}: all posterior category weights vanish"
            )));
        }
        let mut total = T::zero();
        for (wi, &l) in w.iter_mut().zip(&logw) {
            *wi = (l - top).exp();
            total += *wi;
        }
        for wi in w.iter_mut() {
            *wi /= total;
        }
        let sum: T = w.iter().copied().sum();
        worst = worst.max((sum - T::one()).abs());
        aug.set_group_weights(s, &w);
    }
    Ok(worst)
}

fn absolute_change<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&u, &v)| (u - v).abs()).sum()
}

/// Starting values: outcome model from complete cases (frequency cut-points
/// if that fit fails), missingness model from a logistic fit of `R` on
/// `(1, x, aux)` with the `y` slope at zero.
pub fn initial_gamma<T: Scalar>(
    ds: &OrdinalDataset<T>,
    opts: &EmOptions,
) -> Result<GammaParams<T>> {
    let po = initial_po(ds, opts)?;
    let p = ds.p();
    let q = ds.q();
    let mut design = LogisticDesign::new(p + q + 1);
    let mut z = Vec::with_capacity(p + q + 1);
    for i in 0..ds.n() {
        z.clear();
        z.push(T::one());
        z.extend_from_slice(ds.x(i));
        z.extend_from_slice(ds.aux(i));
        design.push(&z, ds.is_missing(i), T::one());
    }
    let mut alpha = match fit_logistic_weighted(&design, None, &opts.inner) {
        Ok(f) => f.params.alpha,
        Err(_) => {
            let f = ds.missing_fraction().clamp(1e-3, 1.0 - 1e-3);
            let mut a = vec![T::zero(); p + q + 1];
            a[0] = T::lit((f / (1.0 - f)).ln());
            a
        }
    };
    alpha.push(T::zero());
    GammaParams::new(po, MissingnessParams::new(alpha))
}

fn initial_po<T: Scalar>(ds: &OrdinalDataset<T>, opts: &EmOptions) -> Result<PoParams<T>> {
    let counts = ds.category_counts();
    if let Some(k) = counts.iter().position(|&c| c == 0) {
        return Err(Error::Degenerate(k + 1).in_model(SubModel::Outcome));
    }
    let cc = ds.complete_cases()?;
    let aug = augment_dataset(&cc);
    match fit_po_weighted(&aug, None, &opts.inner) {
        Ok(f) => Ok(f.params),
        Err(_) => {
            let w: Vec<T> = counts.iter().map(|&c| T::lit(c as f64)).collect();
            frequency_init(&w, ds.p(), opts.inner.convention)
        }
    }
}

/// Maximum likelihood for the selection model by EM, with Louis standard
/// errors.
pub fn em_fit<T: Scalar>(ds: &OrdinalDataset<T>, opts: &EmOptions) -> Result<EmFit<T>> {
    opts.validate()?;
    if ds.missing_count() == ds.n() {
        return Err(Error::AllMissing);
    }
    let mut aug = augment_dataset(ds);
    if ds.missing_count() == 0 {
        return complete_data_fit(ds, aug, opts);
    }
    let mut gamma = initial_gamma(ds, opts)?;
    let mut design = LogisticDesign::from_augmented(&aug);
    let mut trace = Vec::new();
    let mut worst_weight = T::zero();
    let tol = T::lit(opts.outer_tol);
    let mut converged = false;
    let mut iterations = 0;
    while iterations < opts.max_outer {
        iterations += 1;
        worst_weight = worst_weight.max(e_step_in_place(&gamma, &mut aug)?);
        trace.push(observed_data_loglik(&gamma, ds)?);

        let po = fit_po_weighted(&aug, Some(&gamma.po), &opts.inner)
            .map_err(|e| e.in_model(SubModel::Outcome))?
            .params;
        design.set_weights(aug.weights());
        let miss = fit_logistic_weighted(&design, Some(&gamma.miss.alpha), &opts.inner)
            .map_err(|e| e.in_model(SubModel::Missingness))?
            .params;
        let next = GammaParams::new(po, miss)?;
        let delta = absolute_change(&next.to_vec(), &gamma.to_vec());
        gamma = next;
        if delta < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { iterations });
    }
    worst_weight = worst_weight.max(e_step_in_place(&gamma, &mut aug)?);
    trace.push(observed_data_loglik(&gamma, ds)?);

    let info = louis_information(&gamma, &aug)?;
    let estimates = gamma.to_vec();
    let (covariance, se, ci) = match se_and_ci(&info, &estimates, opts.ci_level) {
        Ok(inf) => (Some(inf.covariance), inf.se, inf.ci),
        Err(Error::NotPositiveDefinite) | Err(Error::Singular) => {
            let nan = T::nan();
            (
                None,
                vec![nan; estimates.len()],
                vec![(nan, nan); estimates.len()],
            )
        }
        Err(e) => return Err(e),
    };
    Ok(EmFit {
        gamma,
        covariance,
        se,
        ci,
        ci_level: opts.ci_level,
        max_loglik_decrease: max_decrease(&trace),
        loglik_trace: trace,
        max_weight_deviation: worst_weight,
        weights: aug,
        iterations,
        converged,
        missingness: MissingnessStatus::Estimated,
    })
}

/// Without missing responses the E-step is the identity and the outcome
/// model is a single unit-weight fit.
fn complete_data_fit<T: Scalar>(
    ds: &OrdinalDataset<T>,
    aug: AugmentedDataset<T>,
    opts: &EmOptions,
) -> Result<EmFit<T>> {
    let fit =
        fit_po_weighted(&aug, None, &opts.inner).map_err(|e| e.in_model(SubModel::Outcome))?;
    let nan = T::nan();
    let gamma = GammaParams::new(
        fit.params,
        MissingnessParams::new(vec![nan; ds.p() + ds.q() + 2]),
    )?;
    let d_po = gamma.po.dim();
    let d = gamma.dim();
    let po_inf = se_and_ci(&fit.neg_hessian, &gamma.po.to_vec(), opts.ci_level);
    let (covariance, mut se, mut ci) = match po_inf {
        Ok(inf) => {
            let mut cov = Matrix::zeros(d, d);
            for i in 0..d {
                for j in 0..d {
                    cov[(i, j)] = if i < d_po && j < d_po {
                        inf.covariance[(i, j)]
                    } else {
                        nan
                    };
                }
            }
            (Some(cov), inf.se, inf.ci)
        }
        Err(Error::NotPositiveDefinite) | Err(Error::Singular) => {
            (None, vec![nan; d_po], vec![(nan, nan); d_po])
        }
        Err(e) => return Err(e),
    };
    se.resize(d, nan);
    ci.resize(d, (nan, nan));
    Ok(EmFit {
        gamma,
        covariance,
        se,
        ci,
        ci_level: opts.ci_level,
        loglik_trace: vec![fit.loglik],
        max_loglik_decrease: T::zero(),
        max_weight_deviation: T::zero(),
        weights: aug,
        iterations: 1,
        converged: true,
        missingness: MissingnessStatus::NoMissingResponses,
    })
}

fn max_decrease<T: Scalar>(trace: &[T]) -> T {
    trace.windows(2).fold(T::zero(), |m, w| m.max(w[0] - w[1]))
}

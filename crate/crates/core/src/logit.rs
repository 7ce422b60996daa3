//! Weighted logistic regression for the missingness indicator.

use serde::Serialize;

use crate::data::{AugmentedDataset, MissingnessParams};
use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix};
use crate::po::{newton, FitOptions};
use crate::scalar::{expit, softplus, Scalar};

/// Row-major logistic design: covariate rows `z`, binary responses `r` and
/// non-negative weights.
#[derive(Debug, Clone, PartialEq)]
pub struct LogisticDesign<T> {
    dim: usize,
    z: Vec<T>,
    r: Vec<bool>,
    w: Vec<T>,
}

impl<T: Scalar> LogisticDesign<T> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            z: Vec::new(),
            r: Vec::new(),
            w: Vec::new(),
        }
    }

    pub fn push(&mut self, z: &[T], r: bool, weight: T) {
        assert_eq!(z.len(), self.dim, "design row width");
        self.z.extend_from_slice(z);
        self.r.push(r);
        self.w.push(weight);
    }

    /// One row per augmented row: `z = (1, x, aux, y)`, `r` the missing flag.
    pub fn from_augmented(aug: &AugmentedDataset<T>) -> Self {
        let dim = aug.p() + aug.q() + 2;
        let mut d = Self::new(dim);
        d.z.reserve(aug.rows().len() * dim);
        for row in aug.rows() {
            d.z.push(T::one());
            d.z.extend_from_slice(aug.x(row.subject));
            d.z.extend_from_slice(aug.aux(row.subject));
            d.z.push(T::lit(row.y as f64));
            d.r.push(row.missing);
            d.w.push(row.weight);
        }
        d
    }

    /// Copies the current augmented weights, keeping the design rows.
    pub fn set_weights(&mut self, weights: impl Iterator<Item = T>) {
        for (w, v) in self.w.iter_mut().zip(weights) {
            *w = v;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn z(&self, i: usize) -> &[T] {
        &self.z[i * self.dim..(i + 1) * self.dim]
    }

    pub fn r(&self, i: usize) -> bool {
        self.r[i]
    }

    pub fn weight(&self, i: usize) -> T {
        self.w[i]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LogitFitResult<T> {
    pub params: MissingnessParams<T>,
    pub loglik: T,
    pub score_norm: T,
    pub iterations: usize,
    pub converged: bool,
    pub neg_hessian: Matrix<T>,
}

/// `P(R = 1 | z) = expit(alpha'z)`.
pub fn logistic_prob<T: Scalar>(alpha: &[T], z: &[T]) -> T {
    expit(dot(alpha, z))
}

/// Weighted log-likelihood, score and (optionally) negative Hessian.
pub fn logit_evaluate<T: Scalar>(
    alpha: &[T],
    design: &LogisticDesign<T>,
    want_hess: bool,
) -> Result<(T, Vec<T>, Option<Matrix<T>>)> {
    if alpha.len() != design.dim {
        return Err(Error::Dimension(format!(
            "alpha has {} entries, design has {} columns",
            alpha.len(),
            design.dim
        )));
    }
    let mut ll = T::zero();
    let mut score = vec![T::zero(); design.dim];
    let mut hess = want_hess.then(|| Matrix::zeros(design.dim, design.dim));
    for i in 0..design.len() {
        let w = design.w[i];
        if w == T::zero() {
            continue;
        }
        let z = design.z(i);
        let eta = dot(alpha, z);
        let p = expit(eta);
        let (resid, nll) = if design.r[i] {
            (T::one() - p, softplus(-eta))
        } else {
            (-p, softplus(eta))
        };
        ll -= w * nll;
        let wr = w * resid;
        for (s, &v) in score.iter_mut().zip(z) {
            *s += wr * v;
        }
        if let Some(h) = hess.as_mut() {
            h.add_outer(w * p * (T::one() - p), z);
        }
    }
    Ok((ll, score, hess))
}

pub fn logit_log_likelihood<T: Scalar>(alpha: &[T], design: &LogisticDesign<T>) -> Result<T> {
    let mut ll = T::zero();
    for i in 0..design.len() {
        let w = design.w[i];
        if w == T::zero() {
            continue;
        }
        let eta = dot(alpha, design.z(i));
        ll -= w * if design.r[i] {
            softplus(-eta)
        } else {
            softplus(eta)
        };
    }
    Ok(ll)
}

/// `Σ w (r - p) z`.
pub fn logit_score<T: Scalar>(alpha: &[T], design: &LogisticDesign<T>) -> Result<Vec<T>> {
    logit_evaluate(alpha, design, false).map(|r| r.1)
}

/// `Σ w p (1 - p) z z'`.
pub fn logit_neg_hessian<T: Scalar>(alpha: &[T], design: &LogisticDesign<T>) -> Result<Matrix<T>> {
    logit_evaluate(alpha, design, true).map(|r| r.2.expect("hessian requested"))
}

/// Weighted maximum likelihood by Newton-Raphson with step-halving,
/// starting from `init` or zeros.
pub fn fit_logistic_weighted<T: Scalar>(
    design: &LogisticDesign<T>,
    init: Option<&[T]>,
    opts: &FitOptions,
) -> Result<LogitFitResult<T>> {
    let start = match init {
        Some(a) if a.len() == design.dim && a.iter().all(|v| v.is_finite()) => a.to_vec(),
        Some(a) => {
            return Err(Error::Dimension(format!(
                "initial alpha has {} entries, design has {} columns",
                a.len(),
                design.dim
            )))
        }
        None => vec![T::zero(); design.dim],
    };
    let r = newton(
        start,
        opts,
        |a| logit_log_likelihood(a, design).ok(),
        |a| {
            let (ll, s, h) = logit_evaluate(a, design, true)?;
            Ok((ll, s, h.expect("hessian requested")))
        },
    )?;
    Ok(LogitFitResult {
        params: MissingnessParams::new(r.params),
        loglik: r.loglik,
        score_norm: r.score_norm,
        iterations: r.iterations,
        converged: true,
        neg_hessian: r.neg_hessian,
    })
}

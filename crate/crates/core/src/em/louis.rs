//! Observed-data likelihood and the Louis observed information.

use crate::data::{AugmentedDataset, GammaParams, OrdinalDataset};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::logit::{logit_neg_hessian, LogisticDesign};
use crate::po::{accumulate_row, log_category_prob, po_neg_hessian};
use crate::scalar::{expit, log_expit, log_sum_exp, Scalar};

/// `Σ_observed [log pi_y + log(1 - p)] + Σ_missing log Σ_y pi_y p_y`, with
/// `p_y = P(R = 1 | x, aux, y)`.
pub fn observed_data_loglik<T: Scalar>(
    gamma: &GammaParams<T>,
    ds: &OrdinalDataset<T>,
) -> Result<T> {
    let j = ds.categories();
    let mut terms = vec![T::zero(); j];
    let mut ll = T::zero();
    for i in 0..ds.n() {
        let x = ds.x(i);
        let z = ds.aux(i);
        match ds.y(i) {
            Some(y) => {
                let eta = gamma.miss.linear_predictor(x, z, y);
                ll += log_category_prob(&gamma.po, x, y)? + log_expit(-eta);
            }
            None => {
                for y in 1..=j {
                    terms[y - 1] = log_category_prob(&gamma.po, x, y)?
                        + log_expit(gamma.miss.linear_predictor(x, z, y));
                }
                ll += log_sum_exp(&terms);
            }
        }
    }
    Ok(ll)
}

/// Complete-data score of one subject with response `y` and missingness
/// indicator `missing`, ordered `(theta, beta, alpha)`.
pub fn complete_data_score<T: Scalar>(
    gamma: &GammaParams<T>,
    x: &[T],
    aux: &[T],
    y: usize,
    missing: bool,
) -> Result<Vec<T>> {
    let d_po = gamma.po.dim();
    let mut s = vec![T::zero(); gamma.dim()];
    accumulate_row(&gamma.po, x, y, T::one(), &mut s[..d_po], None)?;
    let p = expit(gamma.miss.linear_predictor(x, aux, y));
    let resid = if missing { T::one() - p } else { -p };
    let tail = &mut s[d_po..];
    tail[0] = resid;
    for (t, &v) in tail[1..].iter_mut().zip(x.iter().chain(aux)) {
        *t = resid * v;
    }
    *tail.last_mut().expect("alpha is non-empty") = resid * T::lit(y as f64);
    Ok(s)
}

/// The two pieces of the Louis information and their difference.
#[derive(Debug, Clone)]
pub struct LouisParts<T> {
    /// Expected complete-data information: outcome block ⊕ missingness block.
    pub complete: Matrix<T>,
    /// Missing information `Σ_i Σ_y w (S_y - q_i)(S_y - q_i)'`.
    pub missing: Matrix<T>,
    pub information: Matrix<T>,
}

/// Louis decomposition at `gamma` with weights `aug` computed at the same
/// `gamma`.
pub fn louis_components<T: Scalar>(
    gamma: &GammaParams<T>,
    aug: &AugmentedDataset<T>,
) -> Result<LouisParts<T>> {
    let d_po = gamma.po.dim();
    let d = gamma.dim();
    let mut complete = Matrix::zeros(d, d);
    complete.set_block(0, 0, &po_neg_hessian(&gamma.po, aug)?);
    let design = LogisticDesign::from_augmented(aug);
    complete.set_block(d_po, d_po, &logit_neg_hessian(&gamma.miss.alpha, &design)?);

    let mut missing = Matrix::zeros(d, d);
    let mut scores: Vec<Vec<T>> = Vec::new();
    let mut mean = vec![T::zero(); d];
    let mut centered = vec![T::zero(); d];
    for s in 0..aug.n_subjects() {
        if !aug.is_missing(s) {
            continue;
        }
        let rows = aug.group(s);
        scores.clear();
        mean.iter_mut().for_each(|m| *m = T::zero());
        for r in rows {
            let sc = complete_data_score(gamma, aug.x(s), aug.aux(s), r.y, true)?;
            for (m, &v) in mean.iter_mut().zip(&sc) {
                *m += r.weight * v;
            }
            scores.push(sc);
        }
        for (r, sc) in rows.iter().zip(&scores) {
            for ((c, &v), &m) in centered.iter_mut().zip(sc).zip(&mean) {
                *c = v - m;
            }
            missing.add_outer(r.weight, &centered);
        }
    }
    missing.symmetrize();
    let mut information = complete.sub(&missing);
    information.symmetrize();
    Ok(LouisParts {
        complete,
        missing,
        information,
    })
}

/// Observed information `I(γ) = E[-∂²ℓ_c] - Var[∂ℓ_c]`, both moments taken
/// over the posterior category weights in `aug`.
pub fn louis_information<T: Scalar>(
    gamma: &GammaParams<T>,
    aug: &AugmentedDataset<T>,
) -> Result<Matrix<T>> {
    louis_components(gamma, aug).map(|p| p.information)
}

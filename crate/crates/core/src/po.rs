//! Weighted cumulative-logit proportional-odds model.
//!
//! Every cumulative logit is `t_k = theta_k + x'beta`. Under the descending
//! convention `P(Y > k) = expit(t_k)`, so category `y` has probability
//! `expit(t_{y-1}) - expit(t_y)` with `t_0 = +inf` and `t_J = -inf`; the
//! ascending convention swaps the roles of the two bounds. The derivative of
//! each `t_k` with respect to `(theta, beta)` is row `k` of the
//! [`KappaMatrix`], `[e_k | x']`.

use serde::Serialize;

use crate::data::{AugmentedDataset, LinkConvention, PoParams, PARAM_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{max_abs, solve_spd_damped, Matrix};
use crate::scalar::{expit, log_expit, Scalar};

/// Inner Newton-Raphson controls, shared with the logistic fitter.
#[derive(Debug, Clone, Serialize)]
pub struct FitOptions {
    pub max_iter: usize,
    /// Converged once `max |score|` drops below this.
    pub score_tol: f64,
    /// ...or once the accepted step is smaller than this in every coordinate.
    pub step_tol: f64,
    pub max_halvings: usize,
    /// Coefficients beyond this magnitude with a non-small score signal separation.
    pub param_bound: f64,
    pub convention: LinkConvention,
}

impl FitOptions {
    pub fn for_scalar<T: Scalar>() -> Self {
        Self {
            max_iter: 50,
            score_tol: T::SCORE_TOL,
            step_tol: T::STEP_TOL,
            max_halvings: 20,
            param_bound: PARAM_BOUND,
            convention: LinkConvention::Descending,
        }
    }
}

impl Default for FitOptions {
    fn default() -> Self {
        Self::for_scalar::<f64>()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PoFitResult<T> {
    pub params: PoParams<T>,
    pub loglik: T,
    pub score_norm: T,
    pub iterations: usize,
    pub converged: bool,
    /// Negative Hessian of the weighted log-likelihood at `params`.
    pub neg_hessian: Matrix<T>,
}

/// Derivative of the cumulative logits of one subject with respect to
/// `(theta, beta)`: identity on the cut-points, `x'` repeated on the slopes.
#[derive(Debug, Clone, Copy)]
pub struct KappaMatrix<'a, T> {
    x: &'a [T],
    cuts: usize,
}

impl<'a, T: Scalar> KappaMatrix<'a, T> {
    pub fn new(x: &'a [T], categories: usize) -> Self {
        Self {
            x,
            cuts: categories - 1,
        }
    }

    pub fn rows(&self) -> usize {
        self.cuts
    }

    pub fn cols(&self) -> usize {
        self.cuts + self.x.len()
    }

    pub fn to_matrix(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows(), self.cols());
        for k in 0..self.cuts {
            m[(k, k)] = T::one();
            for (j, &v) in self.x.iter().enumerate() {
                m[(k, self.cuts + j)] = v;
            }
        }
        m
    }

    /// `κᵀ u` for `u` indexed by cut-point.
    pub fn contract(&self, u: &[T]) -> Vec<T> {
        assert_eq!(u.len(), self.cuts);
        let mut out = vec![T::zero(); self.cols()];
        out[..self.cuts].copy_from_slice(u);
        let s: T = u.iter().copied().sum();
        for (o, &v) in out[self.cuts..].iter_mut().zip(self.x) {
            *o = s * v;
        }
        out
    }

    /// `κᵀ V κ` for a `(J-1) × (J-1)` matrix `V`.
    pub fn sandwich(&self, v: &Matrix<T>) -> Matrix<T> {
        let k = self.to_matrix();
        k.transpose().matmul(v).matmul(&k)
    }
}

/// Which cut-points bound category `y` from above and below.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    upper: Option<usize>,
    lower: Option<usize>,
}

#[inline]
fn bounds(y: usize, categories: usize, convention: LinkConvention) -> Bounds {
    let above = (y >= 2).then(|| y - 2);
    let below = (y < categories).then(|| y - 1);
    match convention {
        LinkConvention::Descending => Bounds {
            upper: above,
            lower: below,
        },
        LinkConvention::Ascending => Bounds {
            upper: below,
            lower: above,
        },
    }
}

/// Log-probability and first/second derivatives with respect to the upper
/// and lower logits of one category.
#[derive(Debug, Clone, Copy)]
struct CatTerms<T> {
    log_pi: T,
    pi: T,
    du: T,
    dl: T,
    duu: T,
    dll: T,
    dul: T,
}

#[inline]
fn cat_terms<T: Scalar>(u: Option<T>, l: Option<T>, second: bool) -> CatTerms<T> {
    let one = T::one();
    // pi = expit(u) - expit(l) = expit(u) expit(-l) (1 - exp(l - u))
    let (log_pi, pi) = match (u, l) {
        (Some(u), Some(l)) => {
            let gap = -(l - u).exp_m1();
            let lp = log_expit(u) + log_expit(-l) + gap.ln();
            (lp, expit(u) * expit(-l) * gap)
        }
        (None, Some(l)) => (log_expit(-l), expit(-l)),
        (Some(u), None) => (log_expit(u), expit(u)),
        (None, None) => (T::zero(), one),
    };
    let deriv = |t: Option<T>| -> (T, T) {
        match t {
            Some(t) => {
                let s = expit(t);
                let g = s * (one - s);
                (g, g * (one - s - s))
            }
            None => (T::zero(), T::zero()),
        }
    };
    let (gu, hu) = deriv(u);
    let (gl, hl) = deriv(l);
    let du = gu / pi;
    let dl = -gl / pi;
    let (duu, dll, dul) = if second {
        (hu / pi - du * du, -hl / pi - dl * dl, -du * dl)
    } else {
        (T::zero(), T::zero(), T::zero())
    };
    CatTerms {
        log_pi,
        pi,
        du,
        dl,
        duu,
        dll,
        dul,
    }
}

fn check_dims<T: Scalar>(params: &PoParams<T>, categories: usize, p: usize) -> Result<()> {
    if params.categories() != categories || params.p() != p {
        return Err(Error::Dimension(format!(
            "params describe J={}, p={} but data has J={categories}, p={p}",
            params.categories(),
            params.p()
        )));
    }
    Ok(())
}

/// Cut-points must be strictly ordered for every category probability to be
/// positive.
pub fn cut_points_ordered<T: Scalar>(params: &PoParams<T>) -> bool {
    let ok = |a: T, b: T| match params.convention {
        LinkConvention::Descending => a > b,
        LinkConvention::Ascending => a < b,
    };
    params.theta.iter().all(|t| t.is_finite())
        && params.beta.iter().all(|b| b.is_finite())
        && params.theta.windows(2).all(|w| ok(w[0], w[1]))
}

#[inline]
fn linear_part<T: Scalar>(beta: &[T], x: &[T]) -> T {
    beta.iter().zip(x).map(|(&b, &v)| b * v).sum()
}

/// Category probabilities `(pi_1, ..., pi_J)` at covariates `x`.
pub fn category_probs<T: Scalar>(params: &PoParams<T>, x: &[T]) -> Result<Vec<T>> {
    if x.len() != params.p() {
        return Err(Error::Dimension(format!(
            "x has {} entries, beta has {}",
            x.len(),
            params.p()
        )));
    }
    let j = params.categories();
    let eta = linear_part(&params.beta, x);
    let mut probs = Vec::with_capacity(j);
    for y in 1..=j {
        let b = bounds(y, j, params.convention);
        let t = |k: Option<usize>| k.map(|k| params.theta[k] + eta);
        let pi = cat_terms(t(b.upper), t(b.lower), false).pi;
        if !(pi > T::zero()) {
            return Err(Error::Domain(format!("pi_{y} = {pi} at this x")));
        }
        probs.push(pi);
    }
    Ok(probs)
}

/// `log pi_y(x)` for a single category; errors when the probability is not
/// positive.
pub fn log_category_prob<T: Scalar>(params: &PoParams<T>, x: &[T], y: usize) -> Result<T> {
    let j = params.categories();
    let eta = linear_part(&params.beta, x);
    let b = bounds(y, j, params.convention);
    let t = |k: Option<usize>| k.map(|k| params.theta[k] + eta);
    let c = cat_terms(t(b.upper), t(b.lower), false);
    if !(c.pi > T::zero()) || !c.log_pi.is_finite() {
        return Err(Error::Domain(format!("pi_{y} = {} at this x", c.pi)));
    }
    Ok(c.log_pi)
}

/// Adds `w * ∂log pi_y/∂(theta, beta)` to `score` and, when given,
/// `-w * ∂²log pi_y` to `neg_hess`. Returns `log pi_y`.
pub(crate) fn accumulate_row<T: Scalar>(
    params: &PoParams<T>,
    x: &[T],
    y: usize,
    w: T,
    score: &mut [T],
    neg_hess: Option<&mut Matrix<T>>,
) -> Result<T> {
    let cuts = params.theta.len();
    let eta = linear_part(&params.beta, x);
    let b = bounds(y, cuts + 1, params.convention);
    let t = |k: Option<usize>| k.map(|k| params.theta[k] + eta);
    let c = cat_terms(t(b.upper), t(b.lower), neg_hess.is_some());
    if !(c.pi > T::zero()) || !c.log_pi.is_finite() {
        return Err(Error::Domain(format!("pi_{y} = {} during fitting", c.pi)));
    }
    if let Some(u) = b.upper {
        score[u] += w * c.du;
    }
    if let Some(l) = b.lower {
        score[l] += w * c.dl;
    }
    let ds = w * (c.du + c.dl);
    for (s, &v) in score[cuts..].iter_mut().zip(x) {
        *s += ds * v;
    }
    if let Some(h) = neg_hess {
        let (vuu, vll, vul) = (-w * c.duu, -w * c.dll, -w * c.dul);
        if let Some(u) = b.upper {
            h[(u, u)] += vuu;
        }
        if let Some(l) = b.lower {
            h[(l, l)] += vll;
        }
        if let (Some(u), Some(l)) = (b.upper, b.lower) {
            h[(u, l)] += vul;
            h[(l, u)] += vul;
        }
        let cu = vuu + vul;
        let cl = vul + vll;
        let cb = vuu + vul + vul + vll;
        let p = x.len();
        for (a, &xa) in x.iter().enumerate() {
            let ia = cuts + a;
            if let Some(u) = b.upper {
                h[(u, ia)] += cu * xa;
                h[(ia, u)] += cu * xa;
            }
            if let Some(l) = b.lower {
                h[(l, ia)] += cl * xa;
                h[(ia, l)] += cl * xa;
            }
            let cbx = cb * xa;
            for bb in 0..p {
                h[(ia, cuts + bb)] += cbx * x[bb];
            }
        }
    }
    Ok(c.log_pi)
}

/// Same quantities as [`accumulate_row`] assembled through an explicit
/// [`KappaMatrix`]; kept as an independent route for testing.
pub fn row_derivatives_via_kappa<T: Scalar>(
    params: &PoParams<T>,
    x: &[T],
    y: usize,
) -> Result<(Vec<T>, Matrix<T>)> {
    let cuts = params.theta.len();
    let eta = linear_part(&params.beta, x);
    let b = bounds(y, cuts + 1, params.convention);
    let t = |k: Option<usize>| k.map(|k| params.theta[k] + eta);
    let c = cat_terms(t(b.upper), t(b.lower), true);
    let mut u = vec![T::zero(); cuts];
    let mut v = Matrix::zeros(cuts, cuts);
    if let Some(i) = b.upper {
        u[i] += c.du;
        v[(i, i)] += c.duu;
    }
    if let Some(l) = b.lower {
        u[l] += c.dl;
        v[(l, l)] += c.dll;
    }
    if let (Some(i), Some(l)) = (b.upper, b.lower) {
        v[(i, l)] += c.dul;
        v[(l, i)] += c.dul;
    }
    let kappa = KappaMatrix::new(x, cuts + 1);
    Ok((kappa.contract(&u), kappa.sandwich(&v).scale(-T::one())))
}

fn evaluate<T: Scalar>(
    params: &PoParams<T>,
    aug: &AugmentedDataset<T>,
    want_score: bool,
    want_hess: bool,
) -> Result<(T, Vec<T>, Option<Matrix<T>>)> {
    check_dims(params, aug.categories(), aug.p())?;
    let d = params.dim();
    let mut ll = T::zero();
    let mut score = vec![T::zero(); if want_score { d } else { 0 }];
    let mut hess = want_hess.then(|| Matrix::zeros(d, d));
    for row in aug.rows() {
        if row.weight == T::zero() {
            continue;
        }
        let x = aug.x(row.subject);
        if want_score {
            ll += row.weight
                * accumulate_row(params, x, row.y, row.weight, &mut score, hess.as_mut())?;
        } else {
            ll += row.weight * log_category_prob(params, x, row.y)?;
        }
    }
    if let Some(h) = hess.as_mut() {
        h.symmetrize();
    }
    Ok((ll, score, hess))
}

/// Weighted log-likelihood `Σ w log pi_{i,y_i}`.
pub fn po_log_likelihood<T: Scalar>(params: &PoParams<T>, aug: &AugmentedDataset<T>) -> Result<T> {
    evaluate(params, aug, false, false).map(|r| r.0)
}

/// Gradient of [`po_log_likelihood`] with respect to `(theta, beta)`.
pub fn po_score<T: Scalar>(params: &PoParams<T>, aug: &AugmentedDataset<T>) -> Result<Vec<T>> {
    evaluate(params, aug, true, false).map(|r| r.1)
}

/// Negative Hessian of [`po_log_likelihood`].
pub fn po_neg_hessian<T: Scalar>(
    params: &PoParams<T>,
    aug: &AugmentedDataset<T>,
) -> Result<Matrix<T>> {
    evaluate(params, aug, true, true).map(|r| r.2.expect("hessian requested"))
}

/// Cut-points from weighted cumulative category proportions, slopes zero.
pub fn frequency_init<T: Scalar>(
    category_weights: &[T],
    p: usize,
    convention: LinkConvention,
) -> Result<PoParams<T>> {
    let total: T = category_weights.iter().copied().sum();
    if let Some(j) = category_weights.iter().position(|&w| !(w > T::zero())) {
        return Err(Error::Degenerate(j + 1));
    }
    let mut cum = T::zero();
    let mut theta = Vec::with_capacity(category_weights.len() - 1);
    for &w in &category_weights[..category_weights.len() - 1] {
        cum += w;
        let below = cum / total;
        let logit = (below / (T::one() - below)).ln();
        theta.push(match convention {
            LinkConvention::Descending => -logit,
            LinkConvention::Ascending => logit,
        });
    }
    Ok(PoParams {
        theta,
        beta: vec![T::zero(); p],
        convention,
    })
}

/// Weighted maximum likelihood by Newton-Raphson with step-halving.
pub fn fit_po_weighted<T: Scalar>(
    aug: &AugmentedDataset<T>,
    init: Option<&PoParams<T>>,
    opts: &FitOptions,
) -> Result<PoFitResult<T>> {
    let cat_w = aug.category_weights();
    let mut params = match init {
        Some(p) => {
            check_dims(p, aug.categories(), aug.p())?;
            if let Some(j) = cat_w.iter().position(|&w| !(w > T::zero())) {
                return Err(Error::Degenerate(j + 1));
            }
            p.to_convention(opts.convention)
        }
        None => frequency_init(&cat_w, aug.p(), opts.convention)?,
    };
    if !cut_points_ordered(&params) {
        params = frequency_init(&cat_w, aug.p(), opts.convention)?;
    }
    newton(
        params.to_vec(),
        opts,
        |v| {
            let cand = PoParams::from_vec(v, aug.categories(), opts.convention);
            if !cut_points_ordered(&cand) {
                return None;
            }
            po_log_likelihood(&cand, aug).ok()
        },
        |v| {
            let cand = PoParams::from_vec(v, aug.categories(), opts.convention);
            let (ll, s, h) = evaluate(&cand, aug, true, true)?;
            Ok((ll, s, h.expect("hessian requested")))
        },
    )
    .map(|r| PoFitResult {
        params: PoParams::from_vec(&r.params, aug.categories(), opts.convention),
        loglik: r.loglik,
        score_norm: r.score_norm,
        iterations: r.iterations,
        converged: true,
        neg_hessian: r.neg_hessian,
    })
}

/// Largest Newton step still counted as converged once the score is small.
const NEWTON_STEP_CAP: f64 = 1e-3;

pub(crate) struct NewtonResult<T> {
    pub params: Vec<T>,
    pub loglik: T,
    pub score_norm: T,
    pub iterations: usize,
    pub neg_hessian: Matrix<T>,
}

/// Damped Newton ascent shared by both fitters. `value` returns `None` for
/// infeasible points; `full` returns `(loglik, score, neg_hessian)`.
pub(crate) fn newton<T, V, F>(
    mut x: Vec<T>,
    opts: &FitOptions,
    value: V,
    full: F,
) -> Result<NewtonResult<T>>
where
    T: Scalar,
    V: Fn(&[T]) -> Option<T>,
    F: Fn(&[T]) -> Result<(T, Vec<T>, Matrix<T>)>,
{
    let score_tol = T::lit(opts.score_tol);
    let step_tol = T::lit(opts.step_tol);
    let bound = T::lit(opts.param_bound);
    let slack = T::lit(T::ASCENT_SLACK);
    let mut step_was_tiny = false;
    for iter in 0..=opts.max_iter {
        let (ll, score, neg_h) = full(&x)?;
        let score_norm = max_abs(&score);
        let (step, _) = solve_spd_damped(&neg_h, &score)?;
        let floor = ll - slack * (T::one() + ll.abs());
        // A small score with a large Newton step means the likelihood may
        // still be rising along a flat direction, as under separation. The
        // fit is settled only if that step buys nothing beyond rounding
        // relative to the log-likelihood itself.
        let settled = score_norm < score_tol
            && (max_abs(&step) < T::lit(NEWTON_STEP_CAP) || {
                let cand: Vec<T> = x.iter().zip(&step).map(|(&a, &s)| a + s).collect();
                value(&cand).is_none_or(|v| !(v - ll > slack * ll.abs()))
            });
        if settled || step_was_tiny {
            return Ok(NewtonResult {
                params: x,
                loglik: ll,
                score_norm,
                iterations: iter,
                neg_hessian: neg_h,
            });
        }
        let norm = max_abs(&x);
        if norm > bound {
            return Err(Error::Separation {
                norm: norm.as_f64(),
            });
        }
        if iter == opts.max_iter {
            break;
        }
        let mut scale = T::one();
        let mut accepted = None;
        for _ in 0..=opts.max_halvings {
            let cand: Vec<T> = x.iter().zip(&step).map(|(&a, &s)| a + scale * s).collect();
            if let Some(v) = value(&cand) {
                if v.is_finite() && v >= floor {
                    accepted = Some(cand);
                    break;
                }
            }
            scale = scale * T::lit(0.5);
        }
        let Some(next) = accepted else {
            return Err(Error::NonConvergence {
                iterations: iter + 1,
            });
        };
        let moved = x
            .iter()
            .zip(&next)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()));
        step_was_tiny = moved < step_tol;
        x = next;
    }
    let norm = max_abs(&x);
    if norm > bound {
        return Err(Error::Separation {
            norm: norm.as_f64(),
        });
    }
    Err(Error::NonConvergence {
        iterations: opts.max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::WeightedObservation;

    fn obs(y: usize, x: f64, w: f64) -> WeightedObservation<f64> {
        WeightedObservation {
            y,
            x: vec![x],
            weight: w,
        }
    }

    #[test]
    fn symmetric_binary_probabilities() {
        let p = PoParams::new(vec![0.0], vec![0.0]);
        assert_eq!(category_probs(&p, &[3.0]).unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn three_category_descending_probabilities() {
        let p = PoParams::new(vec![1.0f64, -0.6], vec![0.0]);
        let pi = category_probs(&p, &[2.5]).unwrap();
        // 1 - expit(1), expit(1) - expit(-0.6), expit(-0.6)
        let expected = [
            0.268_941_421_369_995_1,
            0.376_714_884_855_800_4,
            0.354_343_693_774_204_5,
        ];
        for (a, b) in pi.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
        assert!((pi.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn misordered_cut_points_are_a_domain_error() {
        let p = PoParams::new(vec![-1.0, 1.0], vec![0.0]);
        assert!(matches!(category_probs(&p, &[0.0]), Err(Error::Domain(_))));
        assert!(!cut_points_ordered(&p));
        assert!(!cut_points_ordered(
            &p.to_convention(LinkConvention::Ascending)
        ));
    }

    #[test]
    fn ascending_convention_matches_descending_map() {
        let p = PoParams::new(vec![1.0f64, -0.6], vec![0.4]);
        let q = p.to_convention(LinkConvention::Ascending);
        let a = category_probs(&p, &[1.5]).unwrap();
        let b = category_probs(&q, &[1.5]).unwrap();
        for (u, v) in a.iter().zip(&b) {
            assert!((u - v).abs() < 1e-15);
        }
    }

    #[test]
    fn weighted_log_likelihood_values() {
        // pi_1 = 0.5 for the first row
        let p = PoParams::new(vec![0.0], vec![0.0]);
        let aug = AugmentedDataset::from_weighted(2, &[obs(1, 0.0, 1.0)]).unwrap();
        assert!((po_log_likelihood(&p, &aug).unwrap() + std::f64::consts::LN_2).abs() < 1e-15);

        let zero =
            AugmentedDataset::from_weighted(2, &[obs(1, 0.0, 0.0), obs(2, 1.0, 0.0)]).unwrap();
        assert_eq!(po_log_likelihood(&p, &zero).unwrap(), 0.0);

        // probabilities 0.5 and 0.25: J=3, theta chosen so pi_1 = 0.5, pi_3 = 0.25
        let p3 = PoParams::new(vec![0.0, -(3.0f64).ln()], vec![0.0]);
        let pi = category_probs(&p3, &[0.0]).unwrap();
        assert!((pi[0] - 0.5).abs() < 1e-15 && (pi[2] - 0.25).abs() < 1e-15);
        let aug =
            AugmentedDataset::from_weighted(3, &[obs(1, 0.0, 0.6), obs(3, 0.0, 0.4)]).unwrap();
        let ll = po_log_likelihood(&p3, &aug).unwrap();
        assert!((ll - (0.6 * 0.5f64.ln() + 0.4 * 0.25f64.ln())).abs() < 1e-14);
        assert!((ll + 0.970_406_052_783_923).abs() < 1e-12);
    }

    #[test]
    fn kappa_route_matches_fast_route() {
        for conv in [LinkConvention::Descending, LinkConvention::Ascending] {
            let p = PoParams::new(vec![1.2f64, 0.1, -0.9], vec![0.3, -0.7]).with_convention(conv);
            let p = if conv == LinkConvention::Ascending {
                PoParams::new(vec![-1.2, -0.1, 0.9], vec![0.3, -0.7]).with_convention(conv)
            } else {
                p
            };
            let x = [0.4, -1.3];
            for y in 1..=4 {
                let mut s = vec![0.0; 5];
                let mut h = Matrix::zeros(5, 5);
                accumulate_row(&p, &x, y, 1.0, &mut s, Some(&mut h)).unwrap();
                let (s2, h2) = row_derivatives_via_kappa(&p, &x, y).unwrap();
                for (a, b) in s.iter().zip(&s2) {
                    assert!((a - b).abs() < 1e-12);
                }
                assert!(h.sub(&h2).max_abs() < 1e-12);
            }
        }
    }

    #[test]
    fn kappa_has_identity_block() {
        let x = [2.0, -1.0];
        let k = KappaMatrix::new(&x, 4).to_matrix();
        assert_eq!((k.rows(), k.cols()), (3, 5));
        assert_eq!(k.block(0, 0, 3, 3), Matrix::identity(3));
        assert_eq!(k.row(2), &[0.0, 0.0, 1.0, 2.0, -1.0]);
    }

    #[test]
    fn empty_category_is_degenerate() {
        let aug = AugmentedDataset::from_weighted(
            3,
            &[obs(1, 0.0, 1.0), obs(3, 1.0, 1.0), obs(2, 2.0, 0.0)],
        )
        .unwrap();
        assert!(matches!(
            fit_po_weighted(&aug, None, &FitOptions::default()),
            Err(Error::Degenerate(2))
        ));
    }

    #[test]
    fn separated_binary_data() {
        let aug = AugmentedDataset::from_weighted(
            2,
            &[
                obs(1, -2.0, 1.0),
                obs(1, -1.0, 1.0),
                obs(2, 1.0, 1.0),
                obs(2, 2.0, 1.0),
            ],
        )
        .unwrap();
        let err = fit_po_weighted(&aug, None, &FitOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Separation { .. }), "{err:?}");
    }

    #[test]
    fn intercept_only_fit_recovers_frequencies() {
        let mut rows = Vec::new();
        for (y, k) in [(1, 5), (2, 3), (3, 2)] {
            for _ in 0..k {
                rows.push(WeightedObservation {
                    y,
                    x: vec![],
                    weight: 1.0,
                });
            }
        }
        let aug = AugmentedDataset::from_weighted(3, &rows).unwrap();
        let fit = fit_po_weighted(&aug, None, &FitOptions::default()).unwrap();
        let pi: Vec<f64> = category_probs(&fit.params, &[]).unwrap();
        for (a, b) in pi.iter().zip([0.5, 0.3, 0.2]) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn single_precision_fit_runs() {
        let rows: Vec<WeightedObservation<f32>> = (0..30)
            .map(|i| WeightedObservation {
                y: 1 + (i * 7 % 3),
                x: vec![(i as f32) / 10.0 - 1.5],
                weight: 1.0,
            })
            .collect();
        let aug = AugmentedDataset::from_weighted(3, &rows).unwrap();
        let fit = fit_po_weighted(&aug, None, &FitOptions::for_scalar::<f32>()).unwrap();
        assert!(fit.params.theta[0] > fit.params.theta[1]);
    }
}

//! Direct likelihoods and an IRLS logistic fitter, written straight from the
//! model definitions.

use ordmiss::OrdinalDataset;

pub fn expit(t: f64) -> f64 {
    1.0 / (1.0 + (-t).exp())
}

/// One subject in plain form.
#[derive(Debug, Clone)]
pub struct Subject {
    pub y: Option<usize>,
    pub x: Vec<f64>,
    pub aux: Vec<f64>,
}

pub fn subjects(ds: &OrdinalDataset<f64>) -> Vec<Subject> {
    (0..ds.n())
        .map(|i| Subject {
            y: ds.y(i),
            x: ds.x(i).to_vec(),
            aux: ds.aux(i).to_vec(),
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Category probabilities from `P(Y > j) = expit(theta_j + x'beta)`, by
/// plain differences of the survival function. `None` if any is not positive.
pub fn category_probs(theta: &[f64], beta: &[f64], x: &[f64]) -> Option<Vec<f64>> {
    let eta = dot(beta, x);
    let mut surv = vec![1.0];
    surv.extend(theta.iter().map(|t| expit(t + eta)));
    surv.push(0.0);
    let probs: Vec<f64> = surv.windows(2).map(|w| w[0] - w[1]).collect();
    probs.iter().all(|&p| p > 0.0).then_some(probs)
}

/// `P(R = 1)` from `alpha' (1, x, aux, y)`.
pub fn missing_prob(alpha: &[f64], x: &[f64], aux: &[f64], y: usize) -> f64 {
    let mut z = vec![1.0];
    z.extend_from_slice(x);
    z.extend_from_slice(aux);
    z.push(y as f64);
    expit(dot(alpha, &z))
}

/// Observed-data log-likelihood of the selection model; `-inf` when the
/// cut-points do not give valid probabilities.
pub fn observed_loglik(theta: &[f64], beta: &[f64], alpha: &[f64], data: &[Subject]) -> f64 {
    let mut ll = 0.0;
    for s in data {
        let Some(pi) = category_probs(theta, beta, &s.x) else {
            return f64::NEG_INFINITY;
        };
        ll += match s.y {
            Some(y) => (pi[y - 1] * (1.0 - missing_prob(alpha, &s.x, &s.aux, y))).ln(),
            None => pi
                .iter()
                .enumerate()
                .map(|(k, p)| p * missing_prob(alpha, &s.x, &s.aux, k + 1))
                .sum::<f64>()
                .ln(),
        };
    }
    ll
}

/// Splits a flat `(theta, beta, alpha)` vector.
pub fn split(v: &[f64], categories: usize, p: usize) -> (&[f64], &[f64], &[f64]) {
    let (theta, rest) = v.split_at(categories - 1);
    let (beta, alpha) = rest.split_at(p);
    (theta, beta, alpha)
}

/// Weighted ordinal log-likelihood `Σ w log pi_y`.
pub fn weighted_po_loglik(theta: &[f64], beta: &[f64], rows: &[(usize, Vec<f64>, f64)]) -> f64 {
    let mut ll = 0.0;
    for (y, x, w) in rows {
        let Some(pi) = category_probs(theta, beta, x) else {
            return f64::NEG_INFINITY;
        };
        ll += w * pi[y - 1].ln();
    }
    ll
}

/// Weighted Bernoulli log-likelihood.
pub fn logistic_loglik(alpha: &[f64], rows: &[(Vec<f64>, bool, f64)]) -> f64 {
    rows.iter()
        .map(|(z, r, w)| {
            let p = expit(dot(alpha, z));
            w * if *r { p.ln() } else { (1.0 - p).ln() }
        })
        .sum()
}

/// Gaussian elimination with partial pivoting.
pub fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for c in 0..n {
        let piv = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[piv][c].abs() < 1e-300 {
            return None;
        }
        a.swap(c, piv);
        b.swap(c, piv);
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| a[r][k] * x[k]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Weighted logistic regression by iteratively reweighted least squares.
pub fn irls(rows: &[(Vec<f64>, bool, f64)]) -> Option<Vec<f64>> {
    let d = rows.first()?.0.len();
    let mut beta = vec![0.0; d];
    for _ in 0..100 {
        let mut xtwx = vec![vec![0.0; d]; d];
        let mut xtwz = vec![0.0; d];
        for (x, r, w) in rows {
            let eta = dot(&beta, x);
            let p = expit(eta);
            let v = (p * (1.0 - p)).max(1e-12);
            let work = eta + ((*r as u8 as f64) - p) / v;
            for i in 0..d {
                xtwz[i] += w * v * x[i] * work;
                for j in 0..d {
                    xtwx[i][j] += w * v * x[i] * x[j];
                }
            }
        }
        let next = solve(xtwx, xtwz)?;
        let moved = next
            .iter()
            .zip(&beta)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        beta = next;
        if moved < 1e-12 {
            return Some(beta);
        }
    }
    None
}

/// Maps unconstrained coordinates to `(theta, beta, alpha)`: the first
/// cut-point is free and later ones step down by `exp` of a free gap.
pub fn from_unconstrained(u: &[f64], categories: usize) -> Vec<f64> {
    let mut v = u.to_vec();
    for k in 1..categories - 1 {
        v[k] = v[k - 1] - u[k].exp();
    }
    v
}

pub fn to_unconstrained(v: &[f64], categories: usize) -> Vec<f64> {
    let mut u = v.to_vec();
    for k in 1..categories - 1 {
        u[k] = (v[k - 1] - v[k]).ln();
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irls_matches_closed_form_two_groups() {
        // group 0: 1 of 4 events, group 1: 3 of 4 -> logit(1/4), log 9
        let mut rows = Vec::new();
        for (g, events) in [(0.0, 1), (1.0, 3)] {
            for k in 0..4 {
                rows.push((vec![1.0, g], k < events, 1.0));
            }
        }
        let b = irls(&rows).unwrap();
        assert!((b[0] - (1.0f64 / 3.0).ln()).abs() < 1e-10);
        assert!((b[1] - 9.0f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let p = category_probs(&[1.0, -0.6], &[0.3], &[2.0]).unwrap();
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(category_probs(&[-1.0, 1.0], &[], &[]).is_none());
    }
}

//! Multi-start derivative-free maximization of the observed-data likelihood.

use ordmiss::OrdinalDataset;
use rand::Rng;

use crate::instances::{descending_theta, normal, rng};
use crate::nelder_mead::{multi_start, Options};
use crate::oracle::{from_unconstrained, observed_loglik, split, subjects, to_unconstrained};

/// Best `(theta, beta, alpha)` and log-likelihood found from `starts` random
/// starting points plus one near the origin.
pub fn maximize_observed_loglik(
    ds: &OrdinalDataset<f64>,
    starts: usize,
    seed: u64,
) -> (Vec<f64>, f64) {
    let j = ds.categories();
    let p = ds.p();
    let d_alpha = p + ds.q() + 2;
    let data = subjects(ds);
    let f = |u: &[f64]| {
        let v = from_unconstrained(u, j);
        let (theta, beta, alpha) = split(&v, j, p);
        observed_loglik(theta, beta, alpha, &data)
    };
    let mut r = rng(seed);
    let mut points = Vec::with_capacity(starts + 1);
    let base: Vec<f64> = (0..j - 1)
        .map(|k| 1.0 - 2.0 * (k as f64 + 1.0) / j as f64)
        .chain(std::iter::repeat_n(0.0, p + d_alpha))
        .collect();
    points.push(to_unconstrained(&base, j));
    for _ in 0..starts {
        let mut v = descending_theta(&mut r, j);
        v.extend((0..p).map(|_| normal(&mut r)));
        v.extend((0..d_alpha).map(|_| r.random_range(-1.5..1.5)));
        points.push(to_unconstrained(&v, j));
    }
    let (u, best) = multi_start(&f, &points, Options::default());
    (from_unconstrained(&u, j), best)
}

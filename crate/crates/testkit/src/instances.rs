//! Seeded random problem instances.

use ordmiss::{OrdinalDataset, PoParams, WeightedObservation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::oracle::{category_probs, missing_prob};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

/// Strictly decreasing cut-points centred near zero.
pub fn descending_theta(rng: &mut ChaCha8Rng, categories: usize) -> Vec<f64> {
    let mut t = rng.random_range(0.3..1.5);
    let mut out = Vec::with_capacity(categories - 1);
    for _ in 0..categories - 1 {
        out.push(t);
        t -= rng.random_range(0.4..1.6);
    }
    let shift = out.iter().sum::<f64>() / out.len() as f64;
    out.iter().map(|v| v - shift).collect()
}

pub fn po_params(rng: &mut ChaCha8Rng, categories: usize, p: usize) -> PoParams<f64> {
    let theta = descending_theta(rng, categories);
    let beta = (0..p).map(|_| 0.7 * normal(rng)).collect();
    PoParams::new(theta, beta)
}

pub fn draw(probs: &[f64], u: f64) -> usize {
    let mut cum = 0.0;
    for (k, p) in probs.iter().enumerate() {
        cum += p;
        if u < cum {
            return k + 1;
        }
    }
    probs.len()
}

/// `n` weighted rows with every category present. Weights are uniform on
/// `(0.2, 2)`.
pub fn weighted_rows(
    rng: &mut ChaCha8Rng,
    params: &PoParams<f64>,
    n: usize,
) -> Vec<WeightedObservation<f64>> {
    let j = params.categories();
    loop {
        let rows: Vec<_> = (0..n)
            .map(|_| {
                let x: Vec<f64> = (0..params.p()).map(|_| normal(rng)).collect();
                let pi = category_probs(&params.theta, &params.beta, &x).expect("valid truth");
                WeightedObservation {
                    y: draw(&pi, rng.random()),
                    x,
                    weight: rng.random_range(0.2..2.0),
                }
            })
            .collect();
        if (1..=j).all(|c| rows.iter().any(|r| r.y == c)) {
            return rows;
        }
    }
}

/// Generating truth for a selection-model instance.
#[derive(Debug, Clone)]
pub struct MnarTruth {
    pub po: PoParams<f64>,
    /// `(intercept, x.., aux.., y)`.
    pub alpha: Vec<f64>,
    pub q: usize,
}

impl MnarTruth {
    /// Moderate random truth: the `y` slope is `±(0.5..1.2)` and the intercept
    /// puts the missing share roughly between 15% and 45%.
    pub fn random(rng: &mut ChaCha8Rng, categories: usize, p: usize, q: usize) -> Self {
        let po = po_params(rng, categories, p);
        let slope = rng.random_range(0.5..1.2) * if rng.random::<bool>() { 1.0 } else { -1.0 };
        let mid = (categories as f64 + 1.0) / 2.0;
        let mut alpha = vec![rng.random_range(-1.6..-0.4) - slope * mid];
        alpha.extend((0..p + q).map(|_| 0.4 * normal(rng)));
        alpha.push(slope);
        Self { po, alpha, q }
    }
}

/// Draws a dataset from `truth`, retrying until every category is observed
/// and at least one response (but not all) is missing.
pub fn mnar_dataset(rng: &mut ChaCha8Rng, truth: &MnarTruth, n: usize) -> OrdinalDataset<f64> {
    let j = truth.po.categories();
    let p = truth.po.p();
    loop {
        let mut ys = Vec::with_capacity(n);
        let mut xs = Vec::with_capacity(n * p);
        let mut auxs = Vec::with_capacity(n * truth.q);
        for _ in 0..n {
            let x: Vec<f64> = (0..p).map(|_| normal(rng)).collect();
            let aux: Vec<f64> = (0..truth.q).map(|_| normal(rng)).collect();
            let pi = category_probs(&truth.po.theta, &truth.po.beta, &x).expect("valid truth");
            let y = draw(&pi, rng.random());
            let missing = rng.random::<f64>() < missing_prob(&truth.alpha, &x, &aux, y);
            ys.push((!missing).then_some(y));
            xs.extend(x);
            auxs.extend(aux);
        }
        let observed: Vec<usize> = ys.iter().flatten().copied().collect();
        let missing = n - observed.len();
        if missing == 0 || missing == n || !(1..=j).all(|c| observed.contains(&c)) {
            continue;
        }
        return OrdinalDataset::from_parts(j, p, truth.q, ys, xs, auxs, None)
            .expect("consistent shapes");
    }
}

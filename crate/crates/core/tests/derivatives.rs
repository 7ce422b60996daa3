//! Analytic scores, Hessians and the Louis information against finite
//! differences of independently coded likelihoods.

use ordmiss::{
    em_fit, fit_po_weighted, logit_neg_hessian, logit_score, louis_information, po_neg_hessian,
    po_score, AugmentedDataset, EmOptions, FitOptions, LogisticDesign,
};
use ordmiss_testkit::diff::{gradient, hessian, max_rel_diff};
use ordmiss_testkit::instances::{mnar_dataset, normal, po_params, rng, weighted_rows, MnarTruth};
use ordmiss_testkit::oracle::{
    logistic_loglik, observed_loglik, split, subjects, weighted_po_loglik,
};
use rand::Rng;

fn flat(m: &ordmiss::Matrix<f64>) -> Vec<f64> {
    m.data().to_vec()
}

#[test]
fn po_score_and_hessian_match_finite_differences() {
    let mut worst_score = 0.0f64;
    let mut worst_hess = 0.0f64;
    for seed in 0..100 {
        let mut r = rng(seed);
        let j = r.random_range(2..=5);
        let p = r.random_range(0..=3);
        let truth = po_params(&mut r, j, p);
        let n = r.random_range(5..40);
        let obs = weighted_rows(&mut r, &truth, n);
        let aug = AugmentedDataset::from_weighted(j, &obs).unwrap();
        let rows: Vec<_> = obs.iter().map(|o| (o.y, o.x.clone(), o.weight)).collect();
        // evaluate away from the truth so the score is not near zero
        let mut at = po_params(&mut r, j, p);
        at.beta.iter_mut().for_each(|b| *b += 0.3);
        let f = |v: &[f64]| {
            let (theta, beta) = v.split_at(j - 1);
            weighted_po_loglik(theta, beta, &rows)
        };
        let v = at.to_vec();
        let analytic = po_score(&at, &aug).unwrap();
        worst_score = worst_score.max(max_rel_diff(&analytic, &gradient(f, &v)));
        let numeric: Vec<f64> = hessian(f, &v).into_iter().flatten().map(|h| -h).collect();
        worst_hess = worst_hess.max(max_rel_diff(
            &flat(&po_neg_hessian(&at, &aug).unwrap()),
            &numeric,
        ));
    }
    assert!(worst_score < 1e-5, "score discrepancy {worst_score:e}");
    assert!(worst_hess < 1e-4, "hessian discrepancy {worst_hess:e}");
}

#[test]
fn logistic_score_and_hessian_match_finite_differences() {
    let mut worst_score = 0.0f64;
    let mut worst_hess = 0.0f64;
    for seed in 0..100 {
        let mut r = rng(1000 + seed);
        let d = r.random_range(1..=5);
        let n = r.random_range(3..50);
        let mut design = LogisticDesign::new(d);
        let mut rows = Vec::new();
        for _ in 0..n {
            let mut z = vec![1.0];
            z.extend((1..d).map(|_| normal(&mut r)));
            let ev = r.random::<bool>();
            let w = r.random_range(0.0..2.0);
            design.push(&z, ev, w);
            rows.push((z, ev, w));
        }
        let alpha: Vec<f64> = (0..d).map(|_| normal(&mut r)).collect();
        let f = |a: &[f64]| logistic_loglik(a, &rows);
        worst_score = worst_score.max(max_rel_diff(
            &logit_score(&alpha, &design).unwrap(),
            &gradient(f, &alpha),
        ));
        let numeric: Vec<f64> = hessian(f, &alpha)
            .into_iter()
            .flatten()
            .map(|h| -h)
            .collect();
        worst_hess = worst_hess.max(max_rel_diff(
            &flat(&logit_neg_hessian(&alpha, &design).unwrap()),
            &numeric,
        ));
    }
    assert!(worst_score < 1e-5, "score discrepancy {worst_score:e}");
    assert!(worst_hess < 1e-4, "hessian discrepancy {worst_hess:e}");
}

#[test]
fn score_vanishes_at_the_weighted_mle() {
    for seed in 0..20 {
        let mut r = rng(2000 + seed);
        let truth = po_params(&mut r, 4, 2);
        let obs = weighted_rows(&mut r, &truth, 120);
        let aug = AugmentedDataset::from_weighted(4, &obs).unwrap();
        let fit = fit_po_weighted(&aug, None, &FitOptions::default()).unwrap();
        let s = po_score(&fit.params, &aug).unwrap();
        assert!(s.iter().all(|v| v.abs() < 1e-8), "{s:?}");
    }
}

#[test]
fn louis_information_matches_numeric_observed_hessian() {
    let mut checked = 0;
    let mut seed = 3000;
    while checked < 20 {
        seed += 1;
        let mut r = rng(seed);
        let q = (seed % 2) as usize;
        let truth = MnarTruth::random(&mut r, 3, 1, q);
        let ds = mnar_dataset(&mut r, &truth, 60);
        let Ok(fit) = em_fit(&ds, &EmOptions::default()) else {
            continue;
        };
        if !fit.gamma.miss.is_within_bound() {
            continue;
        }
        let data = subjects(&ds);
        let f = |v: &[f64]| {
            let (theta, beta, alpha) = split(v, 3, 1);
            observed_loglik(theta, beta, alpha, &data)
        };
        let numeric: Vec<f64> = hessian(f, &fit.gamma.to_vec())
            .into_iter()
            .flatten()
            .map(|h| -h)
            .collect();
        let info = louis_information(&fit.gamma, &fit.weights).unwrap();
        assert!(info.asymmetry() < 1e-10);
        let err = max_rel_diff(&flat(&info), &numeric);
        assert!(err < 1e-3, "seed {seed}: relative discrepancy {err:e}");
        checked += 1;
    }
}

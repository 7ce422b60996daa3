//! Simulation lab: generator moments, determinism and summary arithmetic.

use ordmiss::sim::generate::{
    gen_covariates, gen_missingness, gen_response, Allocation, X3_RATE, X3_SHAPE, X4_MEANLOG,
    X4_SDLOG,
};
use ordmiss::sim::presets::PresetTable;
use ordmiss::sim::{
    realized_missing_fraction, run_scenario, simulate_replicate, summarize, Estimator,
};
use ordmiss::PoParams;

fn mean(v: impl Iterator<Item = f64>) -> f64 {
    let (s, n) = v.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    s / n as f64
}

#[test]
fn covariate_means_match_their_distributions() {
    let x = gen_covariates(1_000_000, 11, Allocation::Bernoulli);
    let x1 = mean(x.iter().map(|r| r[0]));
    let x2 = mean(x.iter().map(|r| r[1]));
    let x3 = mean(x.iter().map(|r| r[2]));
    let x4 = mean(x.iter().map(|r| r[3]));
    assert!((x1 - 0.67).abs() < 0.003, "{x1}");
    assert!((x2 - 0.3).abs() < 0.003, "{x2}");
    assert!((x3 - X3_SHAPE / X3_RATE).abs() < 0.5, "{x3}");
    let lognormal_mean = (X4_MEANLOG + X4_SDLOG * X4_SDLOG / 2.0).exp();
    assert!(
        (x4 - lognormal_mean).abs() < 0.3,
        "{x4} vs {lognormal_mean}"
    );
}

#[test]
fn equal_probability_truth_gives_uniform_responses() {
    let n = 90_000;
    let logit = |p: f64| (p / (1.0 - p)).ln();
    let po = PoParams::new(vec![logit(2.0 / 3.0), logit(1.0 / 3.0)], vec![0.0; 3]);
    let x = gen_covariates(n, 5, Allocation::Fixed);
    let y = gen_response(&x, &po, 6).unwrap();
    let sd = (n as f64 * (1.0 / 3.0) * (2.0 / 3.0)).sqrt();
    for k in 1..=3 {
        let c = y.iter().filter(|&&v| v == k).count() as f64;
        assert!((c - n as f64 / 3.0).abs() < 3.0 * sd, "category {k}: {c}");
    }
}

#[test]
fn zero_missingness_coefficients_delete_half() {
    let n = 100_000;
    let x = gen_covariates(n, 8, Allocation::Fixed);
    let y = vec![2; n];
    let r = gen_missingness(&x, &y, &[0.0; 6], 9).unwrap();
    let frac = r.iter().filter(|&&m| m).count() as f64 / n as f64;
    assert!((frac - 0.5).abs() < 0.01, "{frac}");
}

#[test]
fn records_do_not_depend_on_worker_count() {
    let cfg = PresetTable::T3.scenario(60, 6, 42);
    let one = run_scenario(&cfg, 1).unwrap();
    let three = run_scenario(&cfg, 3).unwrap();
    assert_eq!(one.len(), 6);
    assert_eq!(format!("{one:?}"), format!("{three:?}"));
}

#[test]
fn mse_is_squared_bias_plus_variance() {
    let cfg = PresetTable::T2.scenario(150, 8, 3);
    let records = run_scenario(&cfg, 1).unwrap();
    let table = summarize(
        &cfg.name,
        cfg.n,
        &records,
        &cfg.truth(),
        &cfg.parameter_names(),
        &cfg.estimators,
    );
    assert_eq!(table.rows.len(), cfg.truth().len() * cfg.estimators.len());
    for row in table.rows.iter().filter(|r| r.converged > 0) {
        let (b, s, m) = (row.abs_bias.unwrap(), row.sd.unwrap(), row.mse.unwrap());
        assert!((m - (b * b + s * s)).abs() < 1e-12, "{row:?}");
    }
}

#[test]
fn one_large_replicate_recovers_the_treatment_effect() {
    // Monte Carlo SD of the X1 slope at n = 1000 is about 0.13
    let cfg = PresetTable::T2.scenario(1000, 1, 2024);
    let rec = simulate_replicate(&cfg, 0).unwrap();
    let em = rec.outcome(Estimator::Em).unwrap();
    assert!(em.converged, "{:?}", em.error);
    let x1 = em.estimates[2];
    assert!((x1 + 1.0).abs() < 3.0 * 0.13, "{x1}");
    assert!(em.se[2] > 0.05 && em.se[2] < 0.3, "{}", em.se[2]);
}

#[test]
fn low_and_mid_missingness_families_hit_their_targets() {
    for preset in [PresetTable::T2, PresetTable::T3] {
        let cfg = preset.scenario(1000, 1, 0);
        let frac = realized_missing_fraction(&cfg, 100_000, 77).unwrap();
        assert!(
            (frac - preset.target_missing_fraction()).abs() < 0.03,
            "{preset}: {frac}"
        );
    }
}

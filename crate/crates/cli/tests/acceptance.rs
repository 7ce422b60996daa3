//! Acceptance suite. Runs every criterion at its stated tolerance, prints one
//! PASS/FAIL line each and exits non-zero if any fails.
//!
//! `cargo test --test acceptance -- 3 8` runs only the listed criteria.

use std::collections::BTreeSet;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use ordmiss::em::louis_components;
use ordmiss::sim::presets::PresetTable;
use ordmiss::sim::{
    realized_missing_fraction, run_scenario, summarize, Estimator, MetricsTable, ReplicationRecord,
};
use ordmiss::{
    augment_dataset, em_fit, fit_po_weighted, logit_score, louis_information, po_score,
    validate_dataset, AugmentedDataset, EmFit, EmOptions, FitOptions, GammaParams, LogisticDesign,
    MissingnessParams, RawRow,
};
use ordmiss_cli::default_workers;
use ordmiss_cli::replicate::DEFAULT_SEED;
use ordmiss_cli::simulate::{cmd_simulate, SimulateArgs, METRICS_FILE};
use ordmiss_testkit::diff::{gradient, hessian, max_rel_diff};
use ordmiss_testkit::instances::{mnar_dataset, normal, po_params, rng, weighted_rows, MnarTruth};
use ordmiss_testkit::oracle::{
    irls, logistic_loglik, observed_loglik, split, subjects, weighted_po_loglik,
};
use ordmiss_testkit::search::maximize_observed_loglik;
use rand::Rng;

/// Every EM fit made by the suite, for the ascent and normalization checks.
#[derive(Default)]
struct Audit {
    fits: usize,
    worst_decrease: f64,
    worst_weight: f64,
    observed_not_one: usize,
}

impl Audit {
    fn fit(&mut self, f: &EmFit<f64>) {
        let (worst, observed_ok) = f.weights.weight_check();
        self.fits += 1;
        self.worst_decrease = self.worst_decrease.max(f.max_loglik_decrease);
        self.worst_weight = self.worst_weight.max(f.max_weight_deviation).max(worst);
        self.observed_not_one += usize::from(!observed_ok);
    }

    fn records(&mut self, recs: &[ReplicationRecord]) {
        for o in recs
            .iter()
            .filter_map(|r| r.outcome(Estimator::Em))
            .filter(|o| o.converged)
        {
            self.fits += 1;
            self.worst_decrease = self
                .worst_decrease
                .max(o.max_loglik_decrease.unwrap_or(f64::INFINITY));
            self.worst_weight = self
                .worst_weight
                .max(o.max_weight_deviation.unwrap_or(f64::INFINITY));
        }
    }
}

type Verdict = (bool, String);

fn x1(table: &MetricsTable, est: Estimator) -> &ordmiss::sim::MetricRow {
    table.row("x1", est).expect("x1 row")
}

fn opt(v: Option<f64>) -> f64 {
    v.unwrap_or(f64::NAN)
}

fn run_preset(preset: PresetTable, n: usize, audit: &mut Audit) -> MetricsTable {
    let cfg = preset.scenario(n, 1000, DEFAULT_SEED);
    let records = run_scenario(&cfg, default_workers()).expect("scenario runs");
    audit.records(&records);
    summarize(
        &cfg.name,
        n,
        &records,
        &cfg.truth(),
        &cfg.parameter_names(),
        &cfg.estimators,
    )
}

fn conv(t: &MetricsTable) -> String {
    let (c, f) = t.convergence(Estimator::Em);
    format!("EM converged {c}/{}", c + f)
}

fn low_missingness(audit: &mut Audit) -> Verdict {
    let t = run_preset(PresetTable::T2, 1000, audit);
    let (em, cc) = (x1(&t, Estimator::Em), x1(&t, Estimator::Cc));
    let (m, b, cp, ccm) = (opt(em.mean), opt(em.abs_bias), opt(em.cp), opt(cc.mean));
    let pass = (m + 1.005).abs() <= 0.04
        && b <= 0.03
        && (0.93..=0.97).contains(&cp)
        && (ccm + 1.342).abs() <= 0.05;
    (
        pass,
        format!(
            "EM x1 mean {m:.4} abs bias {b:.4} CP {cp:.3}; CC mean {ccm:.4}; {}",
            conv(&t)
        ),
    )
}

fn high_missingness(audit: &mut Audit) -> Verdict {
    let t = run_preset(PresetTable::T4, 1000, audit);
    let (em, cc) = (x1(&t, Estimator::Em), x1(&t, Estimator::Cc));
    let (eb, cb, em_mse, cc_mse) = (opt(em.abs_bias), opt(cc.abs_bias), opt(em.mse), opt(cc.mse));
    let pass = eb <= 0.05 && eb < cb && em_mse <= 0.06 && cc_mse >= 0.5;
    (
        pass,
        format!(
            "x1 abs bias EM {eb:.4} CC {cb:.4}; MSE EM {em_mse:.4} CC {cc_mse:.4}; {}",
            conv(&t)
        ),
    )
}

fn calibration() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (k, preset) in [PresetTable::T2, PresetTable::T3, PresetTable::T4]
        .into_iter()
        .enumerate()
    {
        let cfg = preset.scenario(1000, 1, DEFAULT_SEED);
        let frac = realized_missing_fraction(&cfg, 100_000, DEFAULT_SEED + k as u64).expect("draw");
        let target = preset.target_missing_fraction();
        pass &= (frac - target).abs() <= 0.03;
        parts.push(format!("{preset} {frac:.3} (target {target:.2})"));
    }
    (pass, parts.join(", "))
}

/// Instances are drawn at random and kept when the oracle's maximizer is
/// interior (`‖γ‖∞ ≤ 10`); when the likelihood only approaches its supremum
/// as a coefficient diverges there is no best value to compare with. EM
/// errors on kept instances count as failures.
fn oracle_equivalence(audit: &mut Audit) -> Verdict {
    let start = Instant::now();
    let (mut kept, mut unbounded, mut worst) = (0, 0, 0.0f64);
    let mut failures = Vec::new();
    let mut seed = 10_000u64;
    while kept < 50 {
        seed += 1;
        let mut r = rng(seed);
        let truth = MnarTruth::random(&mut r, 3, 1, 0);
        let n = r.random_range(10..=15);
        let ds = mnar_dataset(&mut r, &truth, n);
        let (arg, best) = maximize_observed_loglik(&ds, 8, seed);
        if arg.iter().any(|v| v.abs() > 10.0) {
            unbounded += 1;
            continue;
        }
        kept += 1;
        match em_fit(&ds, &EmOptions::default()) {
            Ok(fit) => {
                audit.fit(&fit);
                let gap = (best - fit.loglik()).abs();
                worst = worst.max(gap);
                if gap > 1e-4 {
                    failures.push(format!("seed {seed}: gap {gap:.2e}"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let mut detail = format!(
        "50 instances with an interior maximum ({unbounded} unbounded draws excluded), {} within 1e-4, \
         max gap among fits {worst:.2e}, {secs:.1}s",
        50 - failures.len()
    );
    if !failures.is_empty() {
        detail.push_str(&format!("; failed: {}", failures.join("; ")));
    }
    (failures.is_empty() && secs < 60.0, detail)
}

fn derivative_checks(audit: &mut Audit) -> Verdict {
    let (mut po, mut lg) = (0.0f64, 0.0f64);
    for seed in 0..100 {
        let mut r = rng(20_000 + seed);
        let j = r.random_range(2..=5);
        let p = r.random_range(0..=3);
        let truth = po_params(&mut r, j, p);
        let n = r.random_range(5..40);
        let obs = weighted_rows(&mut r, &truth, n);
        let aug = AugmentedDataset::from_weighted(j, &obs).unwrap();
        let rows: Vec<_> = obs.iter().map(|o| (o.y, o.x.clone(), o.weight)).collect();
        let at = po_params(&mut r, j, p);
        let f = |v: &[f64]| weighted_po_loglik(&v[..j - 1], &v[j - 1..], &rows);
        po = po.max(max_rel_diff(
            &po_score(&at, &aug).unwrap(),
            &gradient(f, &at.to_vec()),
        ));

        let d = r.random_range(1..=5);
        let mut design = LogisticDesign::new(d);
        let mut lrows = Vec::new();
        for _ in 0..r.random_range(3..50) {
            let mut z = vec![1.0];
            z.extend((1..d).map(|_| normal(&mut r)));
            let (ev, w) = (r.random::<bool>(), r.random_range(0.0..2.0));
            design.push(&z, ev, w);
            lrows.push((z, ev, w));
        }
        let alpha: Vec<f64> = (0..d).map(|_| normal(&mut r)).collect();
        let g = |a: &[f64]| logistic_loglik(a, &lrows);
        lg = lg.max(max_rel_diff(
            &logit_score(&alpha, &design).unwrap(),
            &gradient(g, &alpha),
        ));
    }

    let (mut louis, mut checked, mut seed) = (0.0f64, 0, 30_000u64);
    while checked < 20 {
        seed += 1;
        let mut r = rng(seed);
        let truth = MnarTruth::random(&mut r, 3, 1, (seed % 2) as usize);
        let ds = mnar_dataset(&mut r, &truth, 60);
        // boundary fits have no interior Hessian to compare with
        let Ok(fit) = em_fit(&ds, &EmOptions::default()) else {
            continue;
        };
        audit.fit(&fit);
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
        louis = louis.max(max_rel_diff(info.data(), &numeric));
        checked += 1;
    }
    (
        po < 1e-5 && lg < 1e-5 && louis < 1e-3,
        format!("po_score {po:.1e}, logit_score {lg:.1e} (100 each); Louis {louis:.1e} (20)"),
    )
}

fn ascent(audit: &Audit) -> Verdict {
    (
        audit.worst_decrease <= 1e-8,
        format!(
            "{} EM fits, largest log-likelihood decrease {:.2e}",
            audit.fits, audit.worst_decrease
        ),
    )
}

fn normalization(audit: &Audit) -> Verdict {
    (
        audit.worst_weight <= 1e-12 && audit.observed_not_one == 0,
        format!(
            "{} EM fits, largest group-sum deviation {:.2e}, observed rows not 1: {}",
            audit.fits, audit.worst_weight, audit.observed_not_one
        ),
    )
}

fn reductions(audit: &mut Audit) -> Verdict {
    let (mut em_gap, mut louis_gap, mut j2_gap) = (0.0f64, 0.0f64, 0.0f64);
    for seed in 0..20 {
        let mut r = rng(40_000 + seed);
        let j = 2 + seed as usize % 3;
        let truth = po_params(&mut r, j, 2);
        let obs = weighted_rows(&mut r, &truth, 100);
        let raw = obs
            .iter()
            .map(|o| RawRow::new(Some(o.y), o.x.clone()))
            .collect();
        let ds = validate_dataset(raw, j).unwrap();
        let aug = augment_dataset(&ds);
        let po = fit_po_weighted(&aug, None, &FitOptions::default()).unwrap();
        let em = em_fit(&ds, &EmOptions::default()).unwrap();
        audit.fit(&em);
        em_gap = em_gap.max(max_abs_diff(&em.gamma.po.to_vec(), &po.params.to_vec()));
        let alpha = (0..4).map(|_| normal(&mut r)).collect();
        let gamma = GammaParams::new(po.params.clone(), MissingnessParams::new(alpha)).unwrap();
        louis_gap = louis_gap.max(louis_components(&gamma, &aug).unwrap().missing.max_abs());

        let bin = po_params(&mut r, 2, 2);
        let obs = weighted_rows(&mut r, &bin, 120);
        let fit = fit_po_weighted(
            &AugmentedDataset::from_weighted(2, &obs).unwrap(),
            None,
            &FitOptions::default(),
        )
        .unwrap();
        let rows: Vec<_> = obs
            .iter()
            .map(|o| {
                let mut z = vec![1.0];
                z.extend(&o.x);
                (z, o.y == 2, o.weight)
            })
            .collect();
        j2_gap = j2_gap.max(max_abs_diff(&fit.params.to_vec(), &irls(&rows).unwrap()));
    }
    (
        em_gap <= 1e-6 && louis_gap <= 1e-10 && j2_gap <= 1e-6,
        format!(
            "EM vs PO {em_gap:.1e}, Louis correction {louis_gap:.1e}, J=2 vs logistic {j2_gap:.1e}"
        ),
    )
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

fn five_categories(audit: &mut Audit) -> Verdict {
    let t = run_preset(PresetTable::Supp5, 500, audit);
    let (eb, cb) = (
        opt(x1(&t, Estimator::Em).abs_bias),
        opt(x1(&t, Estimator::Cc).abs_bias),
    );
    (
        eb <= 0.12 && eb < cb,
        format!("x1 abs bias EM {eb:.4} CC {cb:.4}; {}", conv(&t)),
    )
}

fn determinism() -> Verdict {
    let dir = tempfile::TempDir::new().unwrap();
    let cfg = PresetTable::T3.scenario(150, 20, DEFAULT_SEED);
    let path = dir.path().join("config.json");
    fs::write(&path, serde_json::to_string(&cfg).unwrap()).unwrap();
    let run = |workers: usize, name: &str| {
        let out = dir.path().join(name);
        cmd_simulate(&SimulateArgs {
            config: path.clone(),
            out: out.clone(),
            workers,
            seed: None,
        })
        .unwrap();
        fs::read(out.join(METRICS_FILE)).unwrap()
    };
    let a = run(1, "a");
    let b = run(1, "b");
    let c = run(4, "c");
    (
        a == b && a == c,
        format!(
            "{} bytes; workers 1, 1, 4 identical: {}",
            a.len(),
            a == b && a == c
        ),
    )
}

fn main() -> ExitCode {
    let selected: BTreeSet<u8> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let want = |k: u8| selected.is_empty() || selected.contains(&k);
    let mut audit = Audit::default();
    let mut results: Vec<(u8, Verdict)> = Vec::new();
    let mut record = |k: u8, v: Verdict| {
        println!(
            "criterion {k:>2}: {} {}",
            if v.0 { "PASS" } else { "FAIL" },
            v.1
        );
        results.push((k, v));
    };
    for k in [3u8, 4, 5, 8, 10, 1, 2, 9] {
        if !want(k) {
            continue;
        }
        let v = match k {
            1 => low_missingness(&mut audit),
            2 => high_missingness(&mut audit),
            3 => calibration(),
            4 => oracle_equivalence(&mut audit),
            5 => derivative_checks(&mut audit),
            8 => reductions(&mut audit),
            9 => five_categories(&mut audit),
            _ => determinism(),
        };
        record(k, v);
    }
    if want(6) {
        record(6, ascent(&audit));
    }
    if want(7) {
        record(7, normalization(&audit));
    }

    results.sort_by_key(|r| r.0);
    println!("\nsummary");
    for (k, (pass, detail)) in &results {
        println!(
            "criterion {k:>2}: {} {detail}",
            if *pass { "PASS" } else { "FAIL" }
        );
    }
    if results.iter().all(|r| r.1 .0) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use ordmiss::sim::presets::PresetTable;
use ordmiss::sim::psoriasis;
use ordmiss_cli::fit::{cmd_fit, FitArgs, Method, OrDirection};
use ordmiss_cli::input::ColumnSpec;
use ordmiss_cli::simulate::{
    cmd_simulate, Manifest, SimulateArgs, MANIFEST_FILE, METRICS_FILE, REL_BIAS_FILE,
};
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_ordmiss");

fn bundled() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/psoriasis_like.csv")
}

fn fit_args(input: &Path, response: &str, method: Method) -> FitArgs {
    FitArgs {
        input: input.to_path_buf(),
        columns: ColumnSpec {
            response: response.into(),
            id: Some("id".into()),
            ..ColumnSpec::default()
        },
        method,
        ci_level: 0.95,
        or_direction: OrDirection::Lower,
    }
}

fn write_small_config(dir: &Path) -> PathBuf {
    let cfg = PresetTable::T2.scenario(60, 2, 5);
    let path = dir.join("config.json");
    fs::write(&path, serde_json::to_string_pretty(&cfg).unwrap()).unwrap();
    path
}

#[test]
fn bundled_example_is_the_generator_output() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("ex.csv");
    ordmiss_cli::cmd_example(&out, psoriasis::DEFAULT_N, psoriasis::DEFAULT_SEED).unwrap();
    assert_eq!(fs::read(out).unwrap(), fs::read(bundled()).unwrap());
}

#[test]
fn complete_data_em_and_cc_agree() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("full.csv");
    let subjects: Vec<_> = psoriasis::generate(300, 9)
        .unwrap()
        .into_iter()
        .map(|mut s| {
            s.missing = false;
            s
        })
        .collect();
    psoriasis::write_csv(&subjects, fs::File::create(&path).unwrap()).unwrap();
    let em = cmd_fit(&fit_args(&path, "pga", Method::Em)).unwrap();
    let cc = cmd_fit(&fit_args(&path, "pga", Method::Cc)).unwrap();
    for (a, b) in em.outcome.iter().zip(&cc.outcome) {
        assert_eq!(a.name, b.name);
        assert!((a.estimate - b.estimate).abs() < 1e-6, "{a:?} vs {b:?}");
        assert!((a.se - b.se).abs() < 1e-6);
    }
}

#[test]
fn em_beats_complete_cases_on_dose_slopes() {
    let em = cmd_fit(&fit_args(&bundled(), "pga", Method::Em)).unwrap();
    let cc = cmd_fit(&fit_args(&bundled(), "pga", Method::Cc)).unwrap();
    assert!(cc.missingness.is_none());
    for (k, name) in ["dose_5mg", "dose_10mg"].iter().enumerate() {
        let truth = psoriasis::BETA[k];
        let pick = |r: &ordmiss_cli::fit::FitReport| {
            r.outcome.iter().find(|c| c.name == *name).unwrap().estimate
        };
        let (e, c) = (pick(&em), pick(&cc));
        assert!(
            (e - truth).abs() < (c - truth).abs(),
            "{name}: em {e}, cc {c}, truth {truth}"
        );
    }
    // efficacious doses have odds ratios above one in the default direction
    let or = em
        .outcome
        .iter()
        .find(|c| c.name == "dose_10mg")
        .unwrap()
        .odds_ratio
        .unwrap();
    assert!(or > 1.0);
}

#[test]
fn report_invariants_and_or_direction() {
    let lower = cmd_fit(&fit_args(&bundled(), "pga", Method::Em)).unwrap();
    let mut args = fit_args(&bundled(), "pga", Method::Em);
    args.or_direction = OrDirection::Higher;
    let higher = cmd_fit(&args).unwrap();
    let all = lower
        .outcome
        .iter()
        .chain(lower.missingness.iter().flatten());
    for c in all {
        assert!(c.ci_lower <= c.ci_upper);
        if let (Some(or), Some((a, b))) = (c.odds_ratio, c.or_ci) {
            assert!(or > 0.0 && a <= or && or <= b, "{c:?}");
        }
    }
    for (a, b) in lower.outcome.iter().zip(&higher.outcome) {
        if let (Some(x), Some(y)) = (a.odds_ratio, b.odds_ratio) {
            assert!((x * y - 1.0).abs() < 1e-12);
        }
    }
    let last = lower.missingness.as_ref().unwrap().last().unwrap();
    assert_eq!(last.name, "R:y");
    assert!(last.p_value.is_finite());
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("fit.json");
    let out = Command::new(BIN)
        .args(["fit", "--input"])
        .arg(bundled())
        .args(["--response", "pga", "--id", "id", "--out"])
        .arg(&json)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let report: serde_json::Value = serde_json::from_slice(&fs::read(json).unwrap()).unwrap();
    let rows = report["outcome"]
        .as_array()
        .unwrap()
        .iter()
        .chain(report["missingness"].as_array().unwrap());
    for row in rows {
        let name = row["name"].as_str().unwrap();
        let est = format!("{:.4}", row["estimate"].as_f64().unwrap());
        let se = format!("{:.4}", row["se"].as_f64().unwrap());
        let line = text
            .lines()
            .find(|l| l.trim_start().starts_with(name))
            .unwrap();
        assert!(
            line.contains(&est) && line.contains(&se),
            "{line} vs {est} {se}"
        );
    }
}

#[test]
fn missing_response_column_is_named() {
    let out = Command::new(BIN)
        .args(["fit", "--input"])
        .arg(bundled())
        .args(["--response", "outcome_score"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("outcome_score"));
}

#[test]
fn unknown_level_is_rejected() {
    let mut args = fit_args(&bundled(), "pga", Method::Cc);
    args.columns.levels = Some(["0", "1", "2", "3"].map(String::from).to_vec());
    let err = cmd_fit(&args).unwrap_err().to_string();
    assert!(err.contains("\"4\""), "{err}");
}

#[test]
fn estimation_failures_name_the_sub_model() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("sep.csv");
    let mut text = String::from("y,x\n");
    for i in 0..12 {
        text.push_str(&format!("{},{i}\n", if i < 6 { "a" } else { "b" }));
    }
    fs::write(&path, text).unwrap();
    let out = Command::new(BIN)
        .args(["fit", "--input"])
        .arg(&path)
        .args(["--response", "y"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("outcome") && err.contains("separation"),
        "{err}"
    );
}

#[test]
fn simulate_writes_expected_shapes() {
    let dir = TempDir::new().unwrap();
    let cfg = write_small_config(dir.path());
    let out = dir.path().join("run");
    let res = cmd_simulate(&SimulateArgs {
        config: cfg,
        out: out.clone(),
        workers: 2,
        seed: None,
    })
    .unwrap();
    let metrics = fs::read_to_string(out.join(METRICS_FILE)).unwrap();
    // header + (J - 1 + p) parameters × 3 estimators
    assert_eq!(metrics.lines().count(), 1 + 5 * 3);
    assert!(out.join(REL_BIAS_FILE).exists());
    let manifest: Manifest =
        serde_json::from_slice(&fs::read(out.join(MANIFEST_FILE)).unwrap()).unwrap();
    assert_eq!(manifest.schema_version, 1);
    assert_eq!(manifest.config_sha256.len(), 64);
    assert_eq!(manifest.replicate_seeds.len(), 2);
    assert_eq!(manifest.config_sha256, res.manifest.config_sha256);
    let total: usize = manifest
        .convergence
        .iter()
        .map(|c| c.converged + c.failed)
        .sum();
    assert_eq!(total, 2 * 3);
}

#[test]
fn simulate_reruns_from_its_manifest() {
    let dir = TempDir::new().unwrap();
    let cfg = write_small_config(dir.path());
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let run = |config: &Path, out: &Path, workers: &str| {
        let o = Command::new(BIN)
            .arg("simulate")
            .arg("--config")
            .arg(config)
            .arg("--out")
            .arg(out)
            .env("ORDMISS_WORKERS", workers)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    };
    run(&cfg, &a, "1");
    run(&a.join(MANIFEST_FILE), &b, "3");
    assert_eq!(
        fs::read(a.join(METRICS_FILE)).unwrap(),
        fs::read(b.join(METRICS_FILE)).unwrap()
    );
    assert_eq!(
        fs::read(a.join(MANIFEST_FILE)).unwrap(),
        fs::read(b.join(MANIFEST_FILE)).unwrap()
    );
}

#[test]
fn seed_flag_changes_the_run() {
    let dir = TempDir::new().unwrap();
    let cfg = write_small_config(dir.path());
    let run = |seed: u64, name: &str| {
        let out = dir.path().join(name);
        cmd_simulate(&SimulateArgs {
            config: cfg.clone(),
            out: out.clone(),
            workers: 1,
            seed: Some(seed),
        })
        .unwrap();
        fs::read(out.join(METRICS_FILE)).unwrap()
    };
    assert_ne!(run(1, "s1"), run(2, "s2"));
}

#[test]
fn bad_config_is_rejected() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"name": "x", "n": 10, "categories": 3}"#).unwrap();
    let err = cmd_simulate(&SimulateArgs {
        config: path,
        out: dir.path().join("o"),
        workers: 1,
        seed: None,
    });
    assert!(err.is_err());
}

#[test]
fn unknown_preset_is_a_usage_error() {
    let out = Command::new(BIN)
        .args(["replicate", "--table", "t7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    for p in PresetTable::ALL {
        assert!(err.contains(p.name()), "{err}");
    }
}

#[test]
fn replicate_renders_and_writes_outputs() {
    let dir = TempDir::new().unwrap();
    let out = Command::new(BIN)
        .args([
            "replicate",
            "--table",
            "t3",
            "--sizes",
            "60",
            "--reps",
            "3",
            "--workers",
            "1",
            "--out",
        ])
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n = 60") && text.contains("x1"), "{text}");
    for f in [
        "metrics_t3_n60.csv",
        "comparison.csv",
        "rel_bias.csv",
        "manifest.json",
    ] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
}

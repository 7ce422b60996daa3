//! The `simulate` command: one scenario from a JSON config, written as a
//! metrics CSV, a long-format relative-bias CSV and a manifest.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ordmiss::sim::metrics::{write_metrics_csv, write_rel_bias_csv};
use ordmiss::sim::{
    replicate_seed, run_scenario, summarize, Estimator, MetricsTable, ScenarioConfig,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;
pub const METRICS_FILE: &str = "metrics.csv";
pub const REL_BIAS_FILE: &str = "rel_bias.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Convergence {
    pub estimator: Estimator,
    pub converged: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: u32,
    pub tool_version: String,
    /// SHA-256 of the config's canonical JSON.
    pub config_sha256: String,
    pub config: ScenarioConfig,
    pub replicate_seeds: Vec<u64>,
    pub convergence: Vec<Convergence>,
    pub mean_missing_fraction: f64,
    pub files: Vec<String>,
}

/// A config file holds either a bare scenario or a previous manifest.
#[derive(Deserialize)]
#[serde(untagged)]
enum ConfigFile {
    Scenario(ScenarioConfig),
    Manifest { config: ScenarioConfig },
}

pub fn read_config(path: &Path) -> Result<ScenarioConfig> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let cfg = match serde_json::from_str::<ConfigFile>(&text) {
        Ok(ConfigFile::Scenario(c)) | Ok(ConfigFile::Manifest { config: c }) => c,
        // report the scenario schema error, which is the useful one
        Err(_) => serde_json::from_str::<ScenarioConfig>(&text)
            .with_context(|| format!("{} is not a valid scenario config", path.display()))?,
    };
    cfg.validate()?;
    Ok(cfg)
}

pub fn config_hash(cfg: &ScenarioConfig) -> Result<String> {
    let canonical = serde_json::to_vec(cfg)?;
    Ok(format!("{:x}", Sha256::digest(&canonical)))
}

#[derive(Debug, Clone)]
pub struct SimulateArgs {
    pub config: PathBuf,
    pub out: PathBuf,
    pub workers: usize,
    /// Replaces the config's base seed.
    pub seed: Option<u64>,
}

pub struct SimulationOutput {
    pub table: MetricsTable,
    pub manifest: Manifest,
}

pub fn run_config(cfg: &ScenarioConfig, workers: usize) -> Result<MetricsTable> {
    let records = run_scenario(cfg, workers)?;
    Ok(summarize(
        &cfg.name,
        cfg.n,
        &records,
        &cfg.truth(),
        &cfg.parameter_names(),
        &cfg.estimators,
    ))
}

pub fn manifest_for(
    cfg: &ScenarioConfig,
    table: &MetricsTable,
    files: Vec<String>,
) -> Result<Manifest> {
    Ok(Manifest {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config_sha256: config_hash(cfg)?,
        config: cfg.clone(),
        replicate_seeds: (0..cfg.replications)
            .map(|t| replicate_seed(cfg.base_seed, t))
            .collect(),
        convergence: cfg
            .estimators
            .iter()
            .map(|&e| {
                let (converged, failed) = table.convergence(e);
                Convergence {
                    estimator: e,
                    converged,
                    failed,
                }
            })
            .collect(),
        mean_missing_fraction: table.mean_missing_fraction,
        files,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<SimulationOutput> {
    let mut cfg = read_config(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.base_seed = seed;
    }
    let table = run_config(&cfg, args.workers)?;
    fs::create_dir_all(&args.out)
        .with_context(|| format!("cannot create {}", args.out.display()))?;
    let metrics = fs::File::create(args.out.join(METRICS_FILE))?;
    write_metrics_csv(&table, metrics)?;
    let rel = fs::File::create(args.out.join(REL_BIAS_FILE))?;
    write_rel_bias_csv(std::slice::from_ref(&table), rel)?;
    let manifest = manifest_for(
        &cfg,
        &table,
        vec![METRICS_FILE.into(), REL_BIAS_FILE.into()],
    )?;
    write_json(&args.out.join(MANIFEST_FILE), &manifest)?;
    Ok(SimulationOutput { table, manifest })
}

/// Short per-estimator summary for the terminal.
pub fn render_summary(table: &MetricsTable) -> String {
    let mut out = format!(
        "{}: n = {}, {} replicates, mean missing fraction {:.3}\n",
        table.scenario, table.n, table.replications, table.mean_missing_fraction
    );
    out.push_str(&format!(
        "  {:<8} {:<6} {:>9} {:>9} {:>9} {:>9} {:>7}\n",
        "param", "est", "mean", "abs_bias", "mse", "cp", "conv"
    ));
    let f = |v: Option<f64>| v.map_or("NA".to_string(), |x| format!("{x:.4}"));
    for r in &table.rows {
        out.push_str(&format!(
            "  {:<8} {:<6} {:>9} {:>9} {:>9} {:>9} {:>7}\n",
            r.parameter,
            r.estimator,
            f(r.mean),
            f(r.abs_bias),
            f(r.mse),
            f(r.cp),
            r.converged
        ));
    }
    out
}

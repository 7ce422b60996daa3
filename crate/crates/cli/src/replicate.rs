//! The `replicate` command: run a preset family and set the Monte Carlo
//! summaries beside the published ones.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use ordmiss::sim::metrics::{write_metrics_csv, write_rel_bias_csv};
use ordmiss::sim::presets::PresetTable;
use ordmiss::sim::reference::{compare, ComparisonCell, Metric};
use ordmiss::sim::{Estimator, MetricsTable};
use serde::Serialize;

use crate::simulate::{config_hash, run_config, write_json, SCHEMA_VERSION};

pub const DEFAULT_SEED: u64 = 20_150_601;

#[derive(Debug, Clone)]
pub struct ReplicateArgs {
    pub table: PresetTable,
    /// Empty means every size of the family.
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub workers: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

pub struct SizeResult {
    pub table: MetricsTable,
    pub cells: Vec<ComparisonCell>,
}

#[derive(Serialize)]
struct RunEntry {
    n: usize,
    config_sha256: String,
    base_seed: u64,
    converged: Vec<(Estimator, usize, usize)>,
    flagged_cells: usize,
}

#[derive(Serialize)]
struct ReplicateManifest {
    schema_version: u32,
    tool_version: String,
    preset: PresetTable,
    seed: u64,
    replications: usize,
    runs: Vec<RunEntry>,
}

pub fn cmd_replicate(args: &ReplicateArgs) -> Result<Vec<SizeResult>> {
    let sizes = if args.sizes.is_empty() {
        args.table.sizes().to_vec()
    } else {
        args.sizes.clone()
    };
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    let mut results = Vec::with_capacity(sizes.len());
    let mut runs = Vec::with_capacity(sizes.len());
    for &n in &sizes {
        let cfg = args.table.scenario(n, args.reps, args.seed);
        let table = run_config(&cfg, args.workers)?;
        let cells = compare(args.table, &table, &cfg.parameter_names());
        runs.push(RunEntry {
            n,
            config_sha256: config_hash(&cfg)?,
            base_seed: cfg.base_seed,
            converged: cfg
                .estimators
                .iter()
                .map(|&e| {
                    let (c, f) = table.convergence(e);
                    (e, c, f)
                })
                .collect(),
            flagged_cells: cells.iter().filter(|c| c.flagged).count(),
        });
        results.push(SizeResult { table, cells });
    }
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for r in &results {
            let name = format!("metrics_{}_n{}.csv", args.table, r.table.n);
            write_metrics_csv(&r.table, fs::File::create(dir.join(name))?)?;
        }
        let tables: Vec<_> = results.iter().map(|r| r.table.clone()).collect();
        write_rel_bias_csv(&tables, fs::File::create(dir.join("rel_bias.csv"))?)?;
        let mut w = csv::Writer::from_path(dir.join("comparison.csv"))?;
        w.write_record([
            "n",
            "parameter",
            "estimator",
            "metric",
            "ours",
            "published",
            "tolerance",
            "flagged",
        ])?;
        let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        for c in results.iter().flat_map(|r| &r.cells) {
            w.write_record([
                c.n.to_string(),
                c.parameter.clone(),
                c.estimator.to_string(),
                c.metric.label().to_string(),
                cell(c.ours),
                cell(c.published),
                cell(c.tolerance),
                c.flagged.to_string(),
            ])?;
        }
        w.flush()?;
        let manifest = ReplicateManifest {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            preset: args.table,
            seed: args.seed,
            replications: args.reps,
            runs,
        };
        write_json(&dir.join("manifest.json"), &manifest)?;
    }
    Ok(results)
}

fn pair(c: Option<&ComparisonCell>) -> String {
    let Some(c) = c else { return String::new() };
    let f = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
    format!(
        "{}/{}{}",
        f(c.ours),
        f(c.published),
        if c.flagged { "*" } else { "" }
    )
}

/// One block per sample size; each cell is `ours/published`, starred when
/// the difference exceeds its Monte Carlo tolerance.
pub fn render(preset: PresetTable, results: &[SizeResult]) -> String {
    let mut out = format!("{preset}: {}\n", preset.description());
    for r in results {
        let t = &r.table;
        let _ = writeln!(
            out,
            "\nn = {}, {} replicates, mean missing fraction {:.3}",
            t.n, t.replications, t.mean_missing_fraction
        );
        let _ = write!(out, "  {:<8} {:<6}", "param", "est");
        for m in Metric::ALL {
            let _ = write!(out, " {:>17}", m.label());
        }
        out.push('\n');
        for row in &t.rows {
            let _ = write!(out, "  {:<8} {:<6}", row.parameter, row.estimator);
            for m in Metric::ALL {
                let cell = r.cells.iter().find(|c| {
                    c.parameter == row.parameter && c.estimator == row.estimator && c.metric == m
                });
                let _ = write!(out, " {:>17}", pair(cell));
            }
            out.push('\n');
        }
        for e in Estimator::ALL {
            let (c, f) = t.convergence(e);
            if f > 0 {
                let _ = writeln!(out, "  {e}: {f} of {} replicates did not converge", c + f);
            }
        }
    }
    let flagged = results
        .iter()
        .flat_map(|r| &r.cells)
        .filter(|c| c.flagged)
        .count();
    let _ = writeln!(out, "\ncells outside Monte Carlo tolerance (*): {flagged}");
    out
}

//! Monte Carlo summaries of replicate estimates and their CSV forms.

use std::io::Write;

use serde::Serialize;

use super::{Estimator, ReplicationRecord};
use crate::error::Result;

/// Operating characteristics of one parameter under one estimator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricRow {
    pub parameter: String,
    pub estimator: Estimator,
    pub truth: f64,
    pub converged: usize,
    pub failed: usize,
    pub mean: Option<f64>,
    pub abs_bias: Option<f64>,
    /// Standard deviation with divisor equal to the number of converged replicates.
    pub sd: Option<f64>,
    /// `abs_bias² + sd²`.
    pub mse: Option<f64>,
    pub mean_se: Option<f64>,
    /// Share of intervals covering the truth; `None` when no replicate has a
    /// positive standard error.
    pub cp: Option<f64>,
    /// `(mean - truth) / truth`; `None` when the truth is zero.
    pub rel_bias: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricsTable {
    pub scenario: String,
    pub n: usize,
    pub replications: usize,
    pub mean_missing_fraction: f64,
    pub rows: Vec<MetricRow>,
}

impl MetricsTable {
    pub fn row(&self, parameter: &str, estimator: Estimator) -> Option<&MetricRow> {
        self.rows
            .iter()
            .find(|r| r.parameter == parameter && r.estimator == estimator)
    }

    /// `(converged, failed)` for an estimator.
    pub fn convergence(&self, estimator: Estimator) -> (usize, usize) {
        self.rows
            .iter()
            .find(|r| r.estimator == estimator)
            .map_or((0, 0), |r| (r.converged, r.failed))
    }
}

/// Per-parameter summaries in `(parameter, estimator)` order, using only
/// converged replicates.
pub fn summarize(
    scenario: &str,
    n: usize,
    records: &[ReplicationRecord],
    truth: &[f64],
    names: &[String],
    estimators: &[Estimator],
) -> MetricsTable {
    let mut rows = Vec::with_capacity(truth.len() * estimators.len());
    for (k, (&beta, name)) in truth.iter().zip(names).enumerate() {
        for &est in estimators {
            let outcomes: Vec<_> = records.iter().filter_map(|r| r.outcome(est)).collect();
            let ok: Vec<_> = outcomes.iter().filter(|o| o.converged).collect();
            let values: Vec<f64> = ok.iter().map(|o| o.estimates[k]).collect();
            let m = values.len();
            let (mean, abs_bias, sd, mse, rel_bias) = if m == 0 {
                (None, None, None, None, None)
            } else {
                let mean = values.iter().sum::<f64>() / m as f64;
                let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / m as f64;
                let bias = (mean - beta).abs();
                let sd = var.sqrt();
                let rel = (beta != 0.0).then(|| (mean - beta) / beta);
                (
                    Some(mean),
                    Some(bias),
                    Some(sd),
                    Some(bias * bias + sd * sd),
                    rel,
                )
            };
            let with_se: Vec<_> = ok
                .iter()
                .filter(|o| o.se[k].is_finite() && o.se[k] > 0.0)
                .collect();
            let (mean_se, cp) = if with_se.is_empty() {
                (None, None)
            } else {
                let c = with_se.len() as f64;
                let se = with_se.iter().map(|o| o.se[k]).sum::<f64>() / c;
                let hits = with_se
                    .iter()
                    .filter(|o| o.ci[k].0 <= beta && beta <= o.ci[k].1)
                    .count();
                (Some(se), Some(hits as f64 / c))
            };
            rows.push(MetricRow {
                parameter: name.clone(),
                estimator: est,
                truth: beta,
                converged: m,
                failed: outcomes.len() - m,
                mean,
                abs_bias,
                sd,
                mse,
                mean_se,
                cp,
                rel_bias,
            });
        }
    }
    let mean_missing_fraction = if records.is_empty() {
        f64::NAN
    } else {
        records.iter().map(|r| r.missing_fraction).sum::<f64>() / records.len() as f64
    };
    MetricsTable {
        scenario: scenario.to_string(),
        n,
        replications: records.len(),
        mean_missing_fraction,
        rows,
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub const METRICS_HEADER: [&str; 13] = [
    "parameter",
    "estimator",
    "truth",
    "converged",
    "failed",
    "mean",
    "abs_bias",
    "sd",
    "mse",
    "mean_se",
    "cp",
    "rel_bias",
    "n",
];

/// One row per parameter × estimator.
pub fn write_metrics_csv<W: Write>(table: &MetricsTable, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(METRICS_HEADER)?;
    for r in &table.rows {
        w.write_record([
            r.parameter.clone(),
            r.estimator.to_string(),
            r.truth.to_string(),
            r.converged.to_string(),
            r.failed.to_string(),
            cell(r.mean),
            cell(r.abs_bias),
            cell(r.sd),
            cell(r.mse),
            cell(r.mean_se),
            cell(r.cp),
            cell(r.rel_bias),
            table.n.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Long format for relative-bias plots: one row per scenario × parameter ×
/// estimator.
pub fn write_rel_bias_csv<W: Write>(tables: &[MetricsTable], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "scenario",
        "n",
        "parameter",
        "estimator",
        "truth",
        "rel_bias",
    ])?;
    for t in tables {
        for r in &t.rows {
            w.write_record([
                t.scenario.clone(),
                t.n.to_string(),
                r.parameter.clone(),
                r.estimator.to_string(),
                r.truth.to_string(),
                cell(r.rel_bias),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

//! The `fit` command: estimate the outcome model (and, under EM, the
//! missingness model) on a CSV dataset and report both as text and JSON.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::ValueEnum;
use ordmiss::{
    augment_dataset, em_fit, fit_po_weighted, se_and_ci, wald_p_values, EmOptions, FitOptions,
};
use serde::Serialize;

use crate::input::{load_csv, ColumnSpec, LoadedData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Joint outcome and missingness models by EM.
    Em,
    /// Outcome model on complete cases.
    Cc,
}

/// Which odds an outcome-model odds ratio describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrDirection {
    /// Odds of a lower category, `exp(-beta)`.
    #[default]
    Lower,
    /// Odds of a higher category, `exp(beta)`.
    Higher,
}

#[derive(Debug, Clone)]
pub struct FitArgs {
    pub input: PathBuf,
    pub columns: ColumnSpec,
    pub method: Method,
    pub ci_level: f64,
    pub or_direction: OrDirection,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Coefficient {
    pub name: String,
    pub estimate: f64,
    pub se: f64,
    pub ci_lower: f64,
    pub ci_upper: f64,
    pub p_value: f64,
    /// Absent for cut-points and intercepts.
    pub odds_ratio: Option<f64>,
    pub or_ci: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModelSummary {
    pub categories: usize,
    pub levels: Vec<String>,
    pub n: usize,
    /// Subjects used in the outcome fit.
    pub n_used: usize,
    pub p: usize,
    pub missing: usize,
    pub missing_fraction: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub converged: bool,
    pub iterations: usize,
    pub loglik: f64,
    pub max_loglik_decrease: f64,
    pub max_weight_deviation: f64,
    pub loglik_trace: Vec<f64>,
    /// False when the information matrix was not positive definite and
    /// standard errors are unavailable.
    pub covariance_available: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FitReport {
    pub method: Method,
    pub ci_level: f64,
    pub or_direction: OrDirection,
    pub summary: ModelSummary,
    pub outcome: Vec<Coefficient>,
    /// EM only; the last row is the response slope.
    pub missingness: Option<Vec<Coefficient>>,
    pub diagnostics: Diagnostics,
}

struct Columns<'a> {
    names: &'a [String],
    estimates: &'a [f64],
    se: &'a [f64],
    ci: &'a [(f64, f64)],
}

/// `odds` maps a slope to its odds ratio; rows in `no_or` get none.
fn coefficients(c: Columns<'_>, no_or: usize, odds: impl Fn(f64) -> f64) -> Vec<Coefficient> {
    let p = wald_p_values(c.estimates, c.se);
    (0..c.estimates.len())
        .map(|k| {
            let (lo, hi) = c.ci[k];
            let (odds_ratio, or_ci) = if k < no_or {
                (None, None)
            } else {
                let (a, b) = (odds(lo), odds(hi));
                (Some(odds(c.estimates[k])), Some((a.min(b), a.max(b))))
            };
            Coefficient {
                name: c.names[k].clone(),
                estimate: c.estimates[k],
                se: c.se[k],
                ci_lower: lo,
                ci_upper: hi,
                p_value: p[k],
                odds_ratio,
                or_ci,
            }
        })
        .collect()
}

fn outcome_names(data: &LoadedData) -> Vec<String> {
    let mut names: Vec<String> = data.levels[..data.levels.len() - 1]
        .iter()
        .map(|l| format!("cut[>{l}]"))
        .collect();
    names.extend(data.covariates.iter().cloned());
    names
}

pub fn cmd_fit(args: &FitArgs) -> Result<FitReport> {
    let data = load_csv(&args.input, &args.columns)?;
    fit_loaded(&data, args)
}

pub fn fit_loaded(data: &LoadedData, args: &FitArgs) -> Result<FitReport> {
    let ds = &data.dataset;
    let cuts = ds.categories() - 1;
    let or_sign = match args.or_direction {
        OrDirection::Lower => -1.0,
        OrDirection::Higher => 1.0,
    };
    let outcome_or = |b: f64| (or_sign * b).exp();
    let names = outcome_names(data);
    let mut summary = ModelSummary {
        categories: ds.categories(),
        levels: data.levels.clone(),
        n: ds.n(),
        n_used: ds.n(),
        p: ds.p(),
        missing: ds.missing_count(),
        missing_fraction: ds.missing_fraction(),
    };
    match args.method {
        Method::Cc => {
            let cc = ds.complete_cases().context("complete-case subset")?;
            summary.n_used = cc.n();
            let fit = fit_po_weighted(&augment_dataset(&cc), None, &FitOptions::default())
                .context("outcome (proportional odds) model fit failed")?;
            let est = fit.params.to_vec();
            let (se, ci, ok) = match se_and_ci(&fit.neg_hessian, &est, args.ci_level) {
                Ok(inf) => (inf.se, inf.ci, true),
                Err(_) => (
                    vec![f64::NAN; est.len()],
                    vec![(f64::NAN, f64::NAN); est.len()],
                    false,
                ),
            };
            let cols = Columns {
                names: &names,
                estimates: &est,
                se: &se,
                ci: &ci,
            };
            Ok(FitReport {
                method: args.method,
                ci_level: args.ci_level,
                or_direction: args.or_direction,
                summary,
                outcome: coefficients(cols, cuts, outcome_or),
                missingness: None,
                diagnostics: Diagnostics {
                    converged: true,
                    iterations: fit.iterations,
                    loglik: fit.loglik,
                    max_loglik_decrease: 0.0,
                    max_weight_deviation: 0.0,
                    loglik_trace: vec![fit.loglik],
                    covariance_available: ok,
                },
            })
        }
        Method::Em => {
            let opts = EmOptions {
                ci_level: args.ci_level,
                ..EmOptions::default()
            };
            let fit = em_fit(ds, &opts).context("EM fit failed")?;
            let est = fit.gamma.to_vec();
            let all_names = fit.gamma.parameter_names(&data.covariates, &data.aux);
            let d = fit.gamma.po.dim();
            let outcome = coefficients(
                Columns {
                    names: &names,
                    estimates: &est[..d],
                    se: &fit.se[..d],
                    ci: &fit.ci[..d],
                },
                cuts,
                outcome_or,
            );
            let missingness = coefficients(
                Columns {
                    names: &all_names[d..],
                    estimates: &est[d..],
                    se: &fit.se[d..],
                    ci: &fit.ci[d..],
                },
                1,
                f64::exp,
            );
            Ok(FitReport {
                method: args.method,
                ci_level: args.ci_level,
                or_direction: args.or_direction,
                summary,
                outcome,
                missingness: Some(missingness),
                diagnostics: Diagnostics {
                    converged: fit.converged,
                    iterations: fit.iterations,
                    loglik: fit.loglik(),
                    max_loglik_decrease: fit.max_loglik_decrease,
                    max_weight_deviation: fit.max_weight_deviation,
                    covariance_available: fit.covariance.is_some(),
                    loglik_trace: fit.loglik_trace,
                },
            })
        }
    }
}

fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.4}")
    } else {
        "NA".into()
    }
}

fn p_value(v: f64) -> String {
    if !v.is_finite() {
        "NA".into()
    } else if v < 1e-4 {
        "<0.0001".into()
    } else {
        format!("{v:.4}")
    }
}

fn table(out: &mut String, title: &str, rows: &[Coefficient], level: f64) {
    let pct = level * 100.0;
    let _ = writeln!(out, "{title}");
    let _ = writeln!(
        out,
        "  {:<18} {:>10} {:>9} {:>21} {:>9} {:>9} {:>21}",
        "parameter",
        "estimate",
        "se",
        format!("{pct:.0}% CI"),
        "p",
        "OR",
        format!("OR {pct:.0}% CI")
    );
    for r in rows {
        let ci = format!("({}, {})", num(r.ci_lower), num(r.ci_upper));
        let or = r.odds_ratio.map_or(String::new(), num);
        let or_ci = r
            .or_ci
            .map_or(String::new(), |(a, b)| format!("({}, {})", num(a), num(b)));
        let _ = writeln!(
            out,
            "  {:<18} {:>10} {:>9} {:>21} {:>9} {:>9} {:>21}",
            r.name,
            num(r.estimate),
            num(r.se),
            ci,
            p_value(r.p_value),
            or,
            or_ci
        );
    }
}

impl FitReport {
    pub fn render_text(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let method = match self.method {
            Method::Em => "EM (outcome + missingness model)",
            Method::Cc => "complete cases",
        };
        let _ = writeln!(out, "method: {method}");
        let _ = writeln!(
            out,
            "n = {} ({} used), categories = {} [{}], covariates = {}",
            s.n,
            s.n_used,
            s.categories,
            s.levels.join(" < "),
            s.p
        );
        let _ = writeln!(
            out,
            "missing responses: {} ({:.1}%)",
            s.missing,
            100.0 * s.missing_fraction
        );
        let dir = match self.or_direction {
            OrDirection::Lower => "odds ratios exp(-beta): odds of a lower category",
            OrDirection::Higher => "odds ratios exp(beta): odds of a higher category",
        };
        let _ = writeln!(out, "{dir}\n");
        table(&mut out, "Outcome model", &self.outcome, self.ci_level);
        if let Some(m) = &self.missingness {
            out.push('\n');
            table(
                &mut out,
                "Missingness model, logit P(missing)",
                m,
                self.ci_level,
            );
        }
        let d = &self.diagnostics;
        let _ = writeln!(
            out,
            "\nconverged: {}, iterations: {}, log-likelihood: {:.6}",
            d.converged, d.iterations, d.loglik
        );
        if self.method == Method::Em {
            let _ = writeln!(
                out,
                "max log-likelihood decrease: {:.3e}, max weight deviation: {:.3e}",
                d.max_loglik_decrease, d.max_weight_deviation
            );
        }
        if !d.covariance_available {
            let _ = writeln!(
                out,
                "warning: information matrix not positive definite; standard errors unavailable"
            );
        }
        out
    }
}

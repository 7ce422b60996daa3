//! CSV ingestion: one ordinal response column, numeric covariates, an
//! optional id column. Empty or `NA` responses are missing.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use ordmiss::{OrdinalDataset, RawRow};

#[derive(Debug, Clone, Default)]
pub struct ColumnSpec {
    pub response: String,
    /// Outcome-model covariates. Empty means every remaining column.
    pub covariates: Vec<String>,
    /// Covariates used only by the missingness model.
    pub aux: Vec<String>,
    pub id: Option<String>,
    /// Response labels from lowest to highest. When absent, observed labels
    /// are sorted numerically if they all parse as numbers, otherwise
    /// lexicographically.
    pub levels: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct LoadedData {
    pub dataset: OrdinalDataset<f64>,
    /// `levels[k]` is category `k + 1`.
    pub levels: Vec<String>,
    pub covariates: Vec<String>,
    pub aux: Vec<String>,
}

pub fn is_missing_label(s: &str) -> bool {
    let t = s.trim();
    t.is_empty() || t == "NA"
}

/// Orders distinct labels: numerically when every label is a number.
pub fn sort_levels(labels: BTreeSet<String>) -> Vec<String> {
    let numeric: Option<Vec<(f64, String)>> = labels
        .iter()
        .map(|l| l.parse::<f64>().ok().map(|v| (v, l.clone())))
        .collect();
    match numeric {
        Some(mut v) => {
            v.sort_by(|a, b| a.0.total_cmp(&b.0));
            v.into_iter().map(|(_, l)| l).collect()
        }
        None => labels.into_iter().collect(),
    }
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h.trim() == name)
        .ok_or_else(|| anyhow!("column {name:?} not found in header"))
}

pub fn load_csv(path: &Path, spec: &ColumnSpec) -> Result<LoadedData> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;
    let headers = reader.headers().context("reading CSV header")?.clone();
    let y_col = column(&headers, &spec.response).context("response column")?;
    let id_col = spec
        .id
        .as_deref()
        .map(|c| column(&headers, c))
        .transpose()?;
    let aux_cols = spec
        .aux
        .iter()
        .map(|c| column(&headers, c))
        .collect::<Result<Vec<_>>>()?;
    let covariates: Vec<String> = if spec.covariates.is_empty() {
        headers
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != y_col && Some(*i) != id_col && !aux_cols.contains(i))
            .map(|(_, h)| h.trim().to_string())
            .collect()
    } else {
        spec.covariates.clone()
    };
    let x_cols = covariates
        .iter()
        .map(|c| column(&headers, c))
        .collect::<Result<Vec<_>>>()?;

    let mut labels = Vec::new();
    let mut x = Vec::new();
    let mut aux = Vec::new();
    let mut ids = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let line = i + 2;
        let rec = rec.with_context(|| format!("line {line}"))?;
        let numbers = |cols: &[usize], names: &[String]| -> Result<Vec<f64>> {
            cols.iter()
                .zip(names)
                .map(|(&c, name)| {
                    let raw = rec.get(c).unwrap_or("");
                    raw.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| {
                            anyhow!("line {line}: column {name:?} has non-numeric value {raw:?}")
                        })
                })
                .collect()
        };
        x.push(numbers(&x_cols, &covariates)?);
        aux.push(numbers(&aux_cols, &spec.aux)?);
        let label = rec.get(y_col).unwrap_or("");
        labels.push((!is_missing_label(label)).then(|| label.to_string()));
        ids.push(id_col.map(|c| rec.get(c).unwrap_or("").to_string()));
    }
    if labels.is_empty() {
        bail!("{} has no data rows", path.display());
    }

    let levels = match &spec.levels {
        Some(l) => {
            let distinct: BTreeSet<_> = l.iter().collect();
            if distinct.len() != l.len() {
                bail!("--levels contains duplicates");
            }
            l.clone()
        }
        None => sort_levels(labels.iter().flatten().cloned().collect()),
    };
    if levels.len() < 2 {
        bail!(
            "response {:?} needs at least 2 levels, found {:?}",
            spec.response,
            levels
        );
    }
    let rows = labels
        .into_iter()
        .zip(x)
        .zip(aux)
        .zip(ids)
        .enumerate()
        .map(|(i, (((label, x), aux), id))| {
            let y = label
                .map(|l| {
                    levels
                        .iter()
                        .position(|v| *v == l)
                        .map(|k| k + 1)
                        .ok_or_else(|| {
                            anyhow!(
                                "line {}: response {l:?} is not one of the levels {levels:?}",
                                i + 2
                            )
                        })
                })
                .transpose()?;
            let row = RawRow::new(y, x).with_aux(aux);
            Ok(match id {
                Some(id) => row.with_id(id),
                None => row,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let dataset = ordmiss::validate_dataset(rows, levels.len())?;
    Ok(LoadedData {
        dataset,
        levels,
        covariates,
        aux: spec.aux.clone(),
    })
}

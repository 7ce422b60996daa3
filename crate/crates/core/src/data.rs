//! Datasets, parameter containers and the row augmentation used by the E-step.
//!
//! Categories are 1-based (`1..=J`). Each subject has `p` outcome covariates
//! and, optionally, `q` auxiliary covariates that enter only the missingness
//! model.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One unvalidated input row.
#[derive(Debug, Clone, PartialEq)]
pub struct RawRow<T> {
    pub id: Option<String>,
    pub y: Option<usize>,
    pub x: Vec<T>,
    pub aux: Vec<T>,
}

impl<T> RawRow<T> {
    pub fn new(y: Option<usize>, x: Vec<T>) -> Self {
        Self {
            id: None,
            y,
            x,
            aux: Vec::new(),
        }
    }

    pub fn with_aux(mut self, aux: Vec<T>) -> Self {
        self.aux = aux;
        self
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }
}

/// Validated ordinal data with possibly missing responses.
#[derive(Debug, Clone, PartialEq)]
pub struct OrdinalDataset<T> {
    categories: usize,
    p: usize,
    q: usize,
    ids: Option<Vec<String>>,
    y: Vec<Option<usize>>,
    x: Vec<T>,
    aux: Vec<T>,
    category_counts: Vec<usize>,
}

/// Checks shapes and ranges and builds an [`OrdinalDataset`].
pub fn validate_dataset<T: Scalar>(
    rows: Vec<RawRow<T>>,
    categories: usize,
) -> Result<OrdinalDataset<T>> {
    if categories < 2 {
        return Err(Error::TooFewCategories(categories));
    }
    let first = rows.first().ok_or(Error::EmptyDataset)?;
    let p = first.x.len();
    let q = first.aux.len();
    let has_ids = rows.iter().any(|r| r.id.is_some());
    let n = rows.len();
    let mut y = Vec::with_capacity(n);
    let mut x = Vec::with_capacity(n * p);
    let mut aux = Vec::with_capacity(n * q);
    let mut ids = has_ids.then(|| Vec::with_capacity(n));
    for (i, row) in rows.into_iter().enumerate() {
        if row.x.len() != p {
            return Err(Error::RaggedCovariates {
                row: i,
                expected: p,
                found: row.x.len(),
            });
        }
        if row.aux.len() != q {
            return Err(Error::RaggedCovariates {
                row: i,
                expected: q,
                found: row.aux.len(),
            });
        }
        if let Some(c) = row.y {
            if c == 0 || c > categories {
                return Err(Error::CategoryOutOfRange {
                    row: i,
                    category: c,
                    categories,
                });
            }
        }
        if row.x.iter().chain(&row.aux).any(|v| !v.is_finite()) {
            return Err(Error::Dimension(format!("row {i}: non-finite covariate")));
        }
        if let Some(ids) = ids.as_mut() {
            ids.push(row.id.unwrap_or_else(|| i.to_string()));
        }
        y.push(row.y);
        x.extend(row.x);
        aux.extend(row.aux);
    }
    OrdinalDataset::from_parts(categories, p, q, y, x, aux, ids)
}

impl<T: Scalar> OrdinalDataset<T> {
    /// Builds from flat storage: `x` is `n × p` and `aux` is `n × q`, row-major.
    pub fn from_parts(
        categories: usize,
        p: usize,
        q: usize,
        y: Vec<Option<usize>>,
        x: Vec<T>,
        aux: Vec<T>,
        ids: Option<Vec<String>>,
    ) -> Result<Self> {
        if categories < 2 {
            return Err(Error::TooFewCategories(categories));
        }
        let n = y.len();
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        if x.len() != n * p || aux.len() != n * q {
            return Err(Error::Dimension(format!(
                "covariate storage {}/{} does not match n={n}, p={p}, q={q}",
                x.len(),
                aux.len()
            )));
        }
        if ids.as_ref().is_some_and(|ids| ids.len() != n) {
            return Err(Error::Dimension("id column length".into()));
        }
        let mut category_counts = vec![0; categories];
        for (row, c) in y.iter().enumerate() {
            if let Some(c) = *c {
                if c == 0 || c > categories {
                    return Err(Error::CategoryOutOfRange {
                        row,
                        category: c,
                        categories,
                    });
                }
                category_counts[c - 1] += 1;
            }
        }
        if category_counts.iter().all(|&k| k == 0) {
            return Err(Error::AllMissing);
        }
        Ok(Self {
            categories,
            p,
            q,
            ids,
            y,
            x,
            aux,
            category_counts,
        })
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn categories(&self) -> usize {
        self.categories
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn y(&self, i: usize) -> Option<usize> {
        self.y[i]
    }

    pub fn responses(&self) -> &[Option<usize>] {
        &self.y
    }

    pub fn x(&self, i: usize) -> &[T] {
        &self.x[i * self.p..(i + 1) * self.p]
    }

    pub fn aux(&self, i: usize) -> &[T] {
        &self.aux[i * self.q..(i + 1) * self.q]
    }

    pub fn id(&self, i: usize) -> String {
        match &self.ids {
            Some(ids) => ids[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn is_missing(&self, i: usize) -> bool {
        self.y[i].is_none()
    }

    pub fn missing_count(&self) -> usize {
        self.y.iter().filter(|y| y.is_none()).count()
    }

    pub fn missing_fraction(&self) -> f64 {
        self.missing_count() as f64 / self.n() as f64
    }

    /// Observed count per category (index 0 is category 1).
    pub fn category_counts(&self) -> &[usize] {
        &self.category_counts
    }

    /// Categories never observed, 1-based.
    pub fn unobserved_categories(&self) -> Vec<usize> {
        self.category_counts
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == 0)
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// Subset of subjects with an observed response.
    pub fn complete_cases(&self) -> Result<Self> {
        let keep: Vec<usize> = (0..self.n()).filter(|&i| !self.is_missing(i)).collect();
        self.subset(&keep)
    }

    pub fn subset(&self, keep: &[usize]) -> Result<Self> {
        let y = keep.iter().map(|&i| self.y[i]).collect();
        let x = keep
            .iter()
            .flat_map(|&i| self.x(i).iter().copied())
            .collect();
        let aux = keep
            .iter()
            .flat_map(|&i| self.aux(i).iter().copied())
            .collect();
        let ids = self
            .ids
            .as_ref()
            .map(|ids| keep.iter().map(|&i| ids[i].clone()).collect());
        Self::from_parts(self.categories, self.p, self.q, y, x, aux, ids)
    }
}

/// Direction of the cumulative logits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkConvention {
    /// `logit P(Y > j) = theta_j + x'beta`; cut-points decrease in `j`.
    #[default]
    Descending,
    /// `logit P(Y <= j) = theta_j + x'beta`; cut-points increase in `j`.
    Ascending,
}

/// Proportional-odds parameters: `J - 1` cut-points and `p` slopes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoParams<T> {
    pub theta: Vec<T>,
    pub beta: Vec<T>,
    #[serde(default)]
    pub convention: LinkConvention,
}

impl<T: Scalar> PoParams<T> {
    pub fn new(theta: Vec<T>, beta: Vec<T>) -> Self {
        Self {
            theta,
            beta,
            convention: LinkConvention::Descending,
        }
    }

    pub fn with_convention(mut self, convention: LinkConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn categories(&self) -> usize {
        self.theta.len() + 1
    }

    pub fn p(&self) -> usize {
        self.beta.len()
    }

    pub fn dim(&self) -> usize {
        self.theta.len() + self.beta.len()
    }

    /// `(theta, beta)` concatenated.
    pub fn to_vec(&self) -> Vec<T> {
        self.theta.iter().chain(&self.beta).copied().collect()
    }

    pub fn from_vec(v: &[T], categories: usize, convention: LinkConvention) -> Self {
        let k = categories - 1;
        Self {
            theta: v[..k].to_vec(),
            beta: v[k..].to_vec(),
            convention,
        }
    }

    /// The same model expressed under another convention on the same labels:
    /// `logit P(Y <= j) = -(theta_j + x'beta)`.
    pub fn to_convention(&self, convention: LinkConvention) -> Self {
        if convention == self.convention {
            return self.clone();
        }
        Self {
            theta: self.theta.iter().map(|&t| -t).collect(),
            beta: self.beta.iter().map(|&b| -b).collect(),
            convention,
        }
    }

    /// Parameters describing `J + 1 - Y` under the same convention.
    pub fn reversed_categories(&self) -> Self {
        Self {
            theta: self.theta.iter().rev().map(|&t| -t).collect(),
            beta: self.beta.iter().map(|&b| -b).collect(),
            convention: self.convention,
        }
    }
}

/// Logistic missingness parameters ordered `(intercept, x.., aux.., y)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MissingnessParams<T> {
    pub alpha: Vec<T>,
}

/// Divergence guard on fitted coefficients.
pub const PARAM_BOUND: f64 = 30.0;

impl<T: Scalar> MissingnessParams<T> {
    pub fn new(alpha: Vec<T>) -> Self {
        Self { alpha }
    }

    pub fn zeros(p: usize, q: usize) -> Self {
        Self {
            alpha: vec![T::zero(); p + q + 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn intercept(&self) -> T {
        self.alpha[0]
    }

    pub fn y_slope(&self) -> T {
        *self.alpha.last().expect("non-empty alpha")
    }

    /// `alpha' (1, x, aux, y)`.
    pub fn linear_predictor(&self, x: &[T], aux: &[T], y: usize) -> T {
        debug_assert_eq!(self.alpha.len(), x.len() + aux.len() + 2);
        let mut eta = self.alpha[0];
        for (a, v) in self.alpha[1..].iter().zip(x.iter().chain(aux)) {
            eta += *a * *v;
        }
        eta + self.y_slope() * T::lit(y as f64)
    }

    pub fn is_within_bound(&self) -> bool {
        self.alpha
            .iter()
            .all(|a| a.is_finite() && a.abs() < T::lit(PARAM_BOUND))
    }
}

/// Full parameter vector `(theta, beta, alpha)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GammaParams<T> {
    pub po: PoParams<T>,
    pub miss: MissingnessParams<T>,
}

impl<T: Scalar> GammaParams<T> {
    pub fn new(po: PoParams<T>, miss: MissingnessParams<T>) -> Result<Self> {
        if miss.dim() < po.p() + 2 {
            return Err(Error::Dimension(format!(
                "alpha has {} entries but the outcome model has p={}",
                miss.dim(),
                po.p()
            )));
        }
        Ok(Self { po, miss })
    }

    pub fn dim(&self) -> usize {
        self.po.dim() + self.miss.dim()
    }

    pub fn to_vec(&self) -> Vec<T> {
        let mut v = self.po.to_vec();
        v.extend_from_slice(&self.miss.alpha);
        v
    }

    /// Inverse of [`Self::to_vec`] using `self` for dimensions and convention.
    pub fn with_vec(&self, v: &[T]) -> Self {
        let k = self.po.dim();
        Self {
            po: PoParams::from_vec(&v[..k], self.po.categories(), self.po.convention),
            miss: MissingnessParams::new(v[k..].to_vec()),
        }
    }

    /// Human-readable names in `to_vec` order.
    pub fn parameter_names(&self, covariates: &[String], aux: &[String]) -> Vec<String> {
        let mut names = Vec::with_capacity(self.dim());
        let rel = match self.po.convention {
            LinkConvention::Descending => ">",
            LinkConvention::Ascending => "<=",
        };
        for j in 1..=self.po.theta.len() {
            names.push(format!("cut[y{rel}{j}]"));
        }
        names.extend(covariates.iter().cloned());
        names.push("R:intercept".into());
        names.extend(covariates.iter().chain(aux).map(|c| format!("R:{c}")));
        names.push("R:y".into());
        names
    }
}

/// One row of the augmented dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AugRow<T> {
    /// Index of the subject in the source dataset.
    pub subject: usize,
    pub y: usize,
    /// The `R` indicator (`true` when the response was missing).
    pub missing: bool,
    pub weight: T,
}

/// Dataset with each missing response expanded into one row per category.
#[derive(Debug, Clone, PartialEq)]
pub struct AugmentedDataset<T> {
    categories: usize,
    p: usize,
    q: usize,
    x: Vec<T>,
    aux: Vec<T>,
    rows: Vec<AugRow<T>>,
    groups: Vec<Range<usize>>,
}

/// Expands missing responses into `J` rows each (initial weight 1); observed
/// rows are copied with weight 1.
pub fn augment_dataset<T: Scalar>(ds: &OrdinalDataset<T>) -> AugmentedDataset<T> {
    let j = ds.categories();
    let mut rows = Vec::with_capacity(ds.n() + ds.missing_count() * (j - 1));
    let mut groups = Vec::with_capacity(ds.n());
    for i in 0..ds.n() {
        let start = rows.len();
        match ds.y(i) {
            Some(y) => rows.push(AugRow {
                subject: i,
                y,
                missing: false,
                weight: T::one(),
            }),
            None => rows.extend((1..=j).map(|y| AugRow {
                subject: i,
                y,
                missing: true,
                weight: T::one(),
            })),
        }
        groups.push(start..rows.len());
    }
    AugmentedDataset {
        categories: j,
        p: ds.p(),
        q: ds.q(),
        x: ds.x.clone(),
        aux: ds.aux.clone(),
        rows,
        groups,
    }
}

/// A single weighted observation for direct weighted fitting.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedObservation<T> {
    pub y: usize,
    pub x: Vec<T>,
    pub weight: T,
}

impl<T: Scalar> AugmentedDataset<T> {
    /// Builds a design of fully observed rows with arbitrary non-negative
    /// weights. Useful for fitting the outcome model outside the EM loop.
    pub fn from_weighted(categories: usize, obs: &[WeightedObservation<T>]) -> Result<Self> {
        if categories < 2 {
            return Err(Error::TooFewCategories(categories));
        }
        let first = obs.first().ok_or(Error::EmptyDataset)?;
        let p = first.x.len();
        let mut x = Vec::with_capacity(obs.len() * p);
        let mut rows = Vec::with_capacity(obs.len());
        let mut groups = Vec::with_capacity(obs.len());
        for (i, o) in obs.iter().enumerate() {
            if o.x.len() != p {
                return Err(Error::RaggedCovariates {
                    row: i,
                    expected: p,
                    found: o.x.len(),
                });
            }
            if o.y == 0 || o.y > categories {
                return Err(Error::CategoryOutOfRange {
                    row: i,
                    category: o.y,
                    categories,
                });
            }
            if !(o.weight >= T::zero()) {
                return Err(Error::Dimension(format!("row {i}: negative weight")));
            }
            x.extend_from_slice(&o.x);
            groups.push(i..i + 1);
            rows.push(AugRow {
                subject: i,
                y: o.y,
                missing: false,
                weight: o.weight,
            });
        }
        Ok(Self {
            categories,
            p,
            q: 0,
            x,
            aux: Vec::new(),
            rows,
            groups,
        })
    }

    pub fn categories(&self) -> usize {
        self.categories
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n_subjects(&self) -> usize {
        self.groups.len()
    }

    pub fn rows(&self) -> &[AugRow<T>] {
        &self.rows
    }

    pub fn groups(&self) -> &[Range<usize>] {
        &self.groups
    }

    pub fn group(&self, subject: usize) -> &[AugRow<T>] {
        &self.rows[self.groups[subject].clone()]
    }

    pub fn x(&self, subject: usize) -> &[T] {
        &self.x[subject * self.p..(subject + 1) * self.p]
    }

    pub fn aux(&self, subject: usize) -> &[T] {
        &self.aux[subject * self.q..(subject + 1) * self.q]
    }

    pub fn is_missing(&self, subject: usize) -> bool {
        self.rows[self.groups[subject].start].missing
    }

    pub fn weights(&self) -> impl Iterator<Item = T> + '_ {
        self.rows.iter().map(|r| r.weight)
    }

    pub(crate) fn set_group_weights(&mut self, subject: usize, w: &[T]) {
        let range = self.groups[subject].clone();
        debug_assert_eq!(range.len(), w.len());
        for (row, &wi) in self.rows[range].iter_mut().zip(w) {
            row.weight = wi;
        }
    }

    /// Total weight per category (index 0 is category 1).
    pub fn category_weights(&self) -> Vec<T> {
        let mut tot = vec![T::zero(); self.categories];
        for r in &self.rows {
            tot[r.y - 1] += r.weight;
        }
        tot
    }

    /// Collapses groups back to subjects: the missing flag per subject.
    pub fn missing_pattern(&self) -> Vec<bool> {
        (0..self.n_subjects()).map(|s| self.is_missing(s)).collect()
    }

    /// Largest deviation from 1 of a missing group's weight sum, and whether
    /// every observed row has weight exactly 1.
    pub fn weight_check(&self) -> (T, bool) {
        let mut worst = T::zero();
        let mut observed_ok = true;
        for g in &self.groups {
            let rows = &self.rows[g.clone()];
            if rows[0].missing {
                let s: T = rows.iter().map(|r| r.weight).sum();
                worst = worst.max((s - T::one()).abs());
            } else {
                observed_ok &= rows.len() == 1 && rows[0].weight == T::one();
            }
        }
        (worst, observed_ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rows3() -> Vec<RawRow<f64>> {
        vec![
            RawRow::new(Some(1), vec![0.1, 1.0]),
            RawRow::new(None, vec![0.2, 0.0]),
            RawRow::new(Some(3), vec![-0.3, 1.0]),
        ]
    }

    #[test]
    fn valid_dataset_with_one_missing() {
        let ds = validate_dataset(rows3(), 3).unwrap();
        assert_eq!(ds.n(), 3);
        assert_eq!(ds.missing_count(), 1);
        assert!(ds.is_missing(1));
        assert_eq!(ds.category_counts(), &[1, 0, 1]);
        assert_eq!(ds.unobserved_categories(), vec![2]);
    }

    #[test]
    fn category_out_of_range() {
        let mut rows = rows3();
        rows[0].y = Some(4);
        let err = validate_dataset(rows, 3).unwrap_err();
        assert!(matches!(err, Error::CategoryOutOfRange { category: 4, .. }));
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn ragged_covariates() {
        let rows = vec![
            RawRow::new(Some(1), vec![0.0; 4]),
            RawRow::new(Some(2), vec![0.0; 5]),
        ];
        let err = validate_dataset(rows, 3).unwrap_err();
        assert!(err.to_string().contains("ragged covariates"));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            validate_dataset(rows3(), 1),
            Err(Error::TooFewCategories(1))
        ));
        assert!(matches!(
            validate_dataset::<f64>(vec![], 3),
            Err(Error::EmptyDataset)
        ));
        let all_missing = vec![RawRow::new(None, vec![1.0f64])];
        assert!(matches!(
            validate_dataset(all_missing, 2),
            Err(Error::AllMissing)
        ));
    }

    #[test]
    fn augment_counts() {
        let ds = validate_dataset(rows3(), 3).unwrap();
        let aug = augment_dataset(&ds);
        assert_eq!(aug.rows().len(), 5);
        let g = aug.group(1);
        assert_eq!(g.iter().map(|r| r.y).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(g.iter().all(|r| r.missing && r.weight == 1.0));
        assert_eq!(aug.x(1), &[0.2, 0.0]);
    }

    #[test]
    fn augment_without_missing_is_identity() {
        let rows = vec![
            RawRow::new(Some(1), vec![1.0f64]),
            RawRow::new(Some(2), vec![2.0]),
        ];
        let aug = augment_dataset(&validate_dataset(rows, 2).unwrap());
        assert_eq!(aug.rows().len(), 2);
        assert!(aug.weights().all(|w| w == 1.0));
        assert_eq!(aug.weight_check(), (0.0, true));
    }

    #[test]
    fn single_missing_five_categories() {
        let ds = OrdinalDataset::from_parts(
            5,
            2,
            0,
            vec![None, Some(2)],
            vec![1.0, 2.0, 3.0, 4.0],
            vec![],
            None,
        )
        .unwrap();
        let aug = augment_dataset(&ds);
        let g = aug.group(0);
        assert_eq!(g.len(), 5);
        assert_eq!(
            g.iter().map(|r| r.y).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5]
        );
        assert!(g.iter().all(|r| aug.x(r.subject) == [1.0, 2.0]));
    }

    #[test]
    fn convention_maps_are_involutions() {
        let p = PoParams::new(vec![1.0, -0.6], vec![-1.0, 0.5]);
        let asc = p.to_convention(LinkConvention::Ascending);
        assert_eq!(asc.theta, vec![-1.0, 0.6]);
        assert_eq!(asc.to_convention(LinkConvention::Descending), p);
        assert_eq!(p.reversed_categories().reversed_categories(), p);
    }

    #[test]
    fn parameter_names_follow_vector_order() {
        let g = GammaParams::new(
            PoParams::new(vec![0.0f64, 0.0], vec![0.0]),
            MissingnessParams::zeros(1, 1),
        )
        .unwrap();
        let names = g.parameter_names(&["trt".into()], &["site".into()]);
        assert_eq!(names.len(), g.dim());
        assert_eq!(names[2], "trt");
        assert_eq!(names.last().unwrap(), "R:y");
    }

    fn arb_rows() -> impl Strategy<Value = (usize, Vec<(Option<usize>, f64)>)> {
        (2usize..6).prop_flat_map(|j| {
            let row = (prop::option::weighted(0.7, 1..=j), -5.0f64..5.0);
            (Just(j), prop::collection::vec(row, 1..40))
        })
    }

    proptest! {
        #[test]
        fn row_count_law_and_roundtrip((j, rows) in arb_rows()) {
            prop_assume!(rows.iter().any(|r| r.0.is_some()));
            let raw = rows.iter().map(|&(y, x)| RawRow::new(y, vec![x])).collect();
            let ds = validate_dataset(raw, j).unwrap();
            let aug = augment_dataset(&ds);
            let missing = ds.missing_count();
            prop_assert_eq!(aug.rows().len(), (ds.n() - missing) + j * missing);
            prop_assert_eq!(aug.n_subjects(), ds.n());
            let pattern: Vec<bool> = (0..ds.n()).map(|i| ds.is_missing(i)).collect();
            prop_assert_eq!(aug.missing_pattern(), pattern);
            // groups tile the rows contiguously
            let mut next = 0;
            for g in aug.groups() {
                prop_assert_eq!(g.start, next);
                next = g.end;
            }
            prop_assert_eq!(next, aug.rows().len());
        }
    }
}

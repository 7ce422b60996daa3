use thiserror::Error;

/// Which sub-model an estimation failure came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubModel {
    Outcome,
    Missingness,
}

impl std::fmt::Display for SubModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubModel::Outcome => f.write_str("outcome (proportional odds) model"),
            SubModel::Missingness => f.write_str("missingness (logistic) model"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dataset has no rows")]
    EmptyDataset,
    #[error("need at least 2 response categories, got {0}")]
    TooFewCategories(usize),
    #[error("row {row}: category {category} out of range 1..={categories}")]
    CategoryOutOfRange {
        row: usize,
        category: usize,
        categories: usize,
    },
    #[error("ragged covariates: row {row} has {found} values, expected {expected}")]
    RaggedCovariates {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("all responses are missing")]
    AllMissing,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid category probabilities: {0}")]
    Domain(String),
    #[error("category {0} has zero total weight")]
    Degenerate(usize),
    #[error("{0}")]
    DegenerateModel(String),
    #[error("no convergence after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("separation detected: parameter magnitude {norm:.3} exceeds bound")]
    Separation { norm: f64 },
    #[error("information matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is singular")]
    Singular,
    #[error("{model}: {source}")]
    InSubModel {
        model: SubModel,
        #[source]
        source: Box<Error>,
    },
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error("csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn in_model(self, model: SubModel) -> Self {
        Error::InSubModel {
            model,
            source: Box::new(self),
        }
    }

    /// Strips any sub-model tag.
    pub fn root(&self) -> &Error {
        match self {
            Error::InSubModel { source, .. } => source.root(),
            other => other,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! Maximum likelihood for cumulative-logit proportional-odds regression when
//! the ordinal response is missing not at random.
//!
//! The response model is `logit P(Y > j | x) = theta_j + x'beta` and the
//! missingness model is `logit P(R = 1 | x, aux, y) = alpha'(1, x, aux, y)`.
//! [`em_fit`] maximizes the joint observed-data likelihood by EM over a
//! category-augmented dataset and reports Louis standard errors. The
//! [`sim`] module hosts the Monte Carlo study harness.
//!
//! The numerical core is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the precision.

pub mod data;
pub mod em;
pub mod error;
pub mod linalg;
pub mod logit;
pub mod po;
pub mod scalar;
pub mod sim;

pub use data::{
    augment_dataset, validate_dataset, AugRow, AugmentedDataset, GammaParams, LinkConvention,
    MissingnessParams, OrdinalDataset, PoParams, RawRow, WeightedObservation,
};
pub use em::{
    e_step_weights, em_fit, louis_information, observed_data_loglik, se_and_ci, wald_p_values,
    EmFit, EmOptions, MissingnessStatus,
};
pub use error::{Error, Result, SubModel};
pub use linalg::Matrix;
pub use logit::{
    fit_logistic_weighted, logistic_prob, logit_neg_hessian, logit_score, LogisticDesign,
};
pub use po::{
    category_probs, fit_po_weighted, po_log_likelihood, po_neg_hessian, po_score, FitOptions,
    KappaMatrix, PoFitResult,
};
pub use scalar::Scalar;

pub type Dataset = OrdinalDataset<f64>;
pub type Dataset32 = OrdinalDataset<f32>;
pub type Augmented = AugmentedDataset<f64>;
pub type Params = GammaParams<f64>;
pub type Params32 = GammaParams<f32>;
pub type Fit = EmFit<f64>;
pub type Fit32 = EmFit<f32>;

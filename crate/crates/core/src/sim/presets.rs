//! Named scenario families: three missingness levels with three response
//! categories, a five-category family and an alternative truth.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{mix_seed, Allocation, Estimator, ScenarioConfig};
use crate::error::{Error, Result};

/// Three-category outcome truth `(theta1, theta2, X1, X3, X4)`.
pub const BETA_TRUE: [f64; 5] = [1.0, -0.6, -1.0, 0.005, -0.1];
/// Missingness truth `(intercept, X1, X2, X3, X4, Y)` for about 10% missing.
pub const ALPHA_10: [f64; 6] = [1.0, -2.0, -0.6, 0.05, -0.1, -4.0];
/// Same slopes with intercept 2.8 (about 25% missing).
pub const ALPHA_25: [f64; 6] = [2.8, -2.0, -0.6, 0.05, -0.1, -4.0];
/// Same slopes with intercept 4.8 (about 45% missing).
pub const ALPHA_45: [f64; 6] = [4.8, -2.0, -0.6, 0.05, -0.1, -4.0];
/// Five-category outcome truth `(theta1..theta4, X1, X3, X4)`.
pub const BETA_TRUE_5: [f64; 7] = [0.6, 0.5, -0.2, -0.7, -1.3, 0.008, -0.02];
/// Missingness for the five-category family, intercept calibrated to about
/// 25% missing with the three-category slopes.
pub const ALPHA_5: [f64; 6] = [4.15, -2.0, -0.6, 0.05, -0.1, -4.0];
pub const BETA_ALT: [f64; 5] = [1.0, -0.6, 0.5, -0.05, 0.1];
pub const ALPHA_ALT: [f64; 6] = [4.8, 1.0, -0.6, 0.05, -0.1, -3.0];

pub const STANDARD_SIZES: [usize; 5] = [60, 150, 250, 500, 1000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresetTable {
    /// About 10% missing.
    T2,
    /// About 25% missing.
    T3,
    /// About 45% missing.
    T4,
    /// Five categories, about 25% missing.
    Supp5,
    /// Alternative truth at n = 250.
    Alt,
}

impl PresetTable {
    pub const ALL: [PresetTable; 5] = [
        PresetTable::T2,
        PresetTable::T3,
        PresetTable::T4,
        PresetTable::Supp5,
        PresetTable::Alt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresetTable::T2 => "t2",
            PresetTable::T3 => "t3",
            PresetTable::T4 => "t4",
            PresetTable::Supp5 => "supp5",
            PresetTable::Alt => "alt",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            PresetTable::T2 => "3 categories, about 10% missing",
            PresetTable::T3 => "3 categories, about 25% missing",
            PresetTable::T4 => "3 categories, about 45% missing",
            PresetTable::Supp5 => "5 categories, about 25% missing",
            PresetTable::Alt => "alternative truth, about 45% missing",
        }
    }

    /// Nominal missing fraction the family is calibrated to.
    pub fn target_missing_fraction(self) -> f64 {
        match self {
            PresetTable::T2 => 0.10,
            PresetTable::T3 | PresetTable::Supp5 => 0.25,
            PresetTable::T4 | PresetTable::Alt => 0.45,
        }
    }

    pub fn sizes(self) -> &'static [usize] {
        match self {
            PresetTable::Alt => &[250],
            _ => &STANDARD_SIZES,
        }
    }

    fn truth(self) -> (&'static [f64], &'static [f64; 6]) {
        match self {
            PresetTable::T2 => (&BETA_TRUE, &ALPHA_10),
            PresetTable::T3 => (&BETA_TRUE, &ALPHA_25),
            PresetTable::T4 => (&BETA_TRUE, &ALPHA_45),
            PresetTable::Supp5 => (&BETA_TRUE_5, &ALPHA_5),
            PresetTable::Alt => (&BETA_ALT, &ALPHA_ALT),
        }
    }

    fn index(self) -> u64 {
        self as u64
    }

    /// Scenario at sample size `n`. The base seed is derived from `seed`,
    /// the family and `n`, so sizes and families use unrelated streams.
    pub fn scenario(self, n: usize, replications: usize, seed: u64) -> ScenarioConfig {
        let (beta, alpha) = self.truth();
        let cuts = beta.len() - 3;
        ScenarioConfig {
            name: format!("{}_n{n}", self.name()),
            n,
            categories: cuts + 1,
            theta_true: beta[..cuts].to_vec(),
            beta_true: beta[cuts..].to_vec(),
            alpha_true: alpha.to_vec(),
            replications,
            base_seed: mix_seed(mix_seed(seed, self.index()), n as u64),
            estimators: Estimator::ALL.to_vec(),
            allocation: Allocation::Fixed,
            ci_level: 0.95,
        }
    }
}

impl fmt::Display for PresetTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresetTable {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PresetTable::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = PresetTable::ALL.iter().map(|p| p.name()).collect();
                Error::InvalidOption(format!(
                    "unknown preset {s:?}; available: {}",
                    names.join(", ")
                ))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid() {
        for p in PresetTable::ALL {
            for &n in p.sizes() {
                p.scenario(n, 10, 1).validate().unwrap();
            }
        }
    }

    #[test]
    fn five_category_dimensions() {
        let s = PresetTable::Supp5.scenario(500, 1, 0);
        assert_eq!(s.categories, 5);
        assert_eq!(s.truth().len(), 7);
    }

    #[test]
    fn unknown_preset_lists_names() {
        let err = "t9".parse::<PresetTable>().unwrap_err().to_string();
        assert!(err.contains("t2") && err.contains("supp5"));
    }
}

//! Reference computations for the ordmiss test suites.
//!
//! Everything here is written from the model definitions alone and never
//! calls the likelihood, score or fitting code of `ordmiss`, so agreement
//! between the two is evidence rather than tautology.

pub mod diff;
pub mod instances;
pub mod nelder_mead;
pub mod oracle;
pub mod search;

//! Exact computer algebra for Lie algebroids and their double structures:
//! double vector bundle duality, LA-vector bundles, double Lie algebroids,
//! Lie bialgebroids, matched pairs and Drinfel'd doubles.

pub mod algebroid;
pub mod catalog;
pub mod cli;
pub mod doublela;
pub mod dvb;
pub mod error;
pub mod exact;
pub mod lavb;
pub mod liealg;
pub mod matched;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{CheckReport, CheckResult, Verdict, Witness};

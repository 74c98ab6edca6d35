//! Lie algebroids over polynomial charts and their calculus.

pub mod bialgebroid;
pub mod calculus;
pub mod derivation;
pub mod lie;
pub mod multivector;
pub mod poisson;
pub mod vector_field;

pub use bialgebroid::{bialgebroid_defect, check_bialgebroid, check_bialgebroid_with};
pub use calculus::{differential, schouten};
pub use derivation::Derivation;
pub use lie::{bracket_sections, check_algebroid, LieAlgebroid};
pub use multivector::{Form, Multisection, Multivector, Section};
pub use poisson::{
    algebroid_from_linear_poisson, cotangent_algebroid, dual_poisson, dual_poisson_named,
    PoissonChart,
};

//! Model files, command dispatch and verification reports.

pub mod model;
pub mod print;
pub mod report;
pub mod run;

pub use model::{parse_model, ModelFile, Object};
pub use report::{emit_report, Format, Report};
pub use run::{run, Command};

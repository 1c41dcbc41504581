//! Command-line front end for the `edgering` library: graph files, reports,
//! random and exhaustive graph families, and invariant sweeps.

pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph_file;
pub mod report;
pub mod suite;

pub use error::CliError;

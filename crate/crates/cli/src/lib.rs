//! Configuration, caching, output and command implementations behind the
//! `qdgate` binary.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use commands::{
    BudgetReport, Context, DynamicsReport, FullReport, GateReport, ScanSummary, BASIS_INPUTS,
};
pub use config::{load, LoadOptions, RunConfig};
pub use error::{CliError, CliResult};

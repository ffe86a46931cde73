//! Front end for `gvblocks-core`: JSON configs, subcommands and reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use commands::{run, Command};
pub use config::{parse_config, parse_config_str, Category, Config};
pub use error::{CliError, CliResult, EXIT_UNSUPPORTED, EXIT_VALIDATION};

// SPDX-License-Identifier: Apache-2.0

//! Defaults read from a `key = value` file.
//!
//! One setting per line, `#` starts a comment, strings are quoted. Recognized
//! keys:
//!
//! ```text
//! max_nodes = 20000000          # search nodes per solver call
//! max_time = 60.0               # seconds per solver call
//! jobs = 1                      # worker threads for the k scan
//! dominator_pruning = true
//! oracle_max_vertices = 16      # check/table skip the solver above this
//! ```
//!
//! Command-line flags take precedence over the file.

use std::path::Path;
use std::time::Duration;

use edcolor::solver::SolverOptions;
use edcolor::SolverBudget;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_nodes: Option<u64>,
    pub max_time: Option<f64>,
    pub jobs: Option<usize>,
    pub dominator_pruning: Option<bool>,
    pub oracle_max_vertices: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {}", e.message())))
    }
}

/// Budget and solver flags shared by the commands that run the search.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct BudgetArgs {
    /// Search nodes per solver call
    #[arg(long)]
    pub max_nodes: Option<u64>,
    /// Wall-clock seconds per solver call
    #[arg(long)]
    pub max_time: Option<f64>,
    /// Worker threads for the color-count scan
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Turn off the partial dominator pruning rule
    #[arg(long)]
    pub no_dominator_pruning: bool,
}

/// Effective settings after layering flags over the file over `fallback`.
pub fn resolve(
    args: &BudgetArgs,
    config: &Config,
    fallback: SolverBudget,
) -> Result<(SolverBudget, SolverOptions), CliError> {
    let max_time = match args.max_time.or(config.max_time) {
        Some(s) if !(s.is_finite() && s > 0.0) => {
            return Err(CliError::Usage(format!(
                "max_time must be positive, got {s}"
            )))
        }
        Some(s) => Duration::from_secs_f64(s),
        None => fallback.max_time,
    };
    let budget = SolverBudget {
        max_nodes: args
            .max_nodes
            .or(config.max_nodes)
            .unwrap_or(fallback.max_nodes),
        max_time,
    };
    let jobs = args.jobs.or(config.jobs).unwrap_or(1);
    if jobs == 0 {
        return Err(CliError::Usage("jobs must be at least 1".into()));
    }
    let dominator_pruning = !args.no_dominator_pruning && config.dominator_pruning.unwrap_or(true);
    Ok((
        budget,
        SolverOptions {
            dominator_pruning,
            jobs,
        },
    ))
}

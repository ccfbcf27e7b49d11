//! Settings shared by the verification suites and the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::functor::DEFAULT_MAX_MAPS;
use crate::suitable::DEFAULT_MAX_ROUNDS;
use crate::tnorm::TNorm;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Parse(format!("unknown output format {other:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkspaceConfig {
    /// Restricts suites to one t-norm; `None` runs every built-in.
    pub tnorm: Option<TNorm>,
    /// Overrides each suite's own grid denominator.
    pub grid_denominator: Option<u64>,
    pub max_maps: u64,
    pub max_rounds: usize,
    pub format: OutputFormat,
    /// Seed for the randomised suites.
    pub seed: u64,
}

impl Default for WorkspaceConfig {
    fn default() -> Self {
        WorkspaceConfig {
            tnorm: None,
            grid_denominator: None,
            max_maps: DEFAULT_MAX_MAPS,
            max_rounds: DEFAULT_MAX_ROUNDS,
            format: OutputFormat::Json,
            seed: 0x5eed,
        }
    }
}

impl WorkspaceConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_maps == 0 || self.max_rounds == 0 {
            return Err(Error::Precondition("caps must be positive".into()));
        }
        if self.grid_denominator == Some(0) {
            return Err(Error::Precondition("grid denominator must be at least 1".into()));
        }
        Ok(())
    }

    /// The configured norm, or every built-in one.
    pub fn norms(&self) -> Vec<TNorm> {
        match &self.tnorm {
            Some(t) => vec![t.clone()],
            None => vec![TNorm::godel(), TNorm::lukasiewicz(), TNorm::product(), TNorm::remark4()],
        }
    }

    pub fn denominator_or(&self, default: u64) -> u64 {
        self.grid_denominator.unwrap_or(default)
    }
}

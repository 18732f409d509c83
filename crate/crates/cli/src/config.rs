use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use superq::homogeneous::ParabolicSpec;
use superq::uqrep::SuperIndex;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

/// Settings shared by every command.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RunConfig {
    #[arg(short, long, default_value_t = 1, global = true)]
    pub m: usize,
    #[arg(short, long, default_value_t = 1, global = true)]
    pub n: usize,
    /// Simple roots in Θ: a comma list such as `1,2`, `none` or `all`.
    #[arg(long, default_value = "none", global = true)]
    pub theta: String,
    #[arg(long, default_value_t = 2, global = true)]
    pub kmax: usize,
    #[arg(long, default_value_t = 1, global = true)]
    pub lmax: usize,
    /// Degree bound for induced modules and Borel–Weil spaces.
    #[arg(long, default_value_t = 2, global = true)]
    pub degree: usize,
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    /// Random samples for the randomized checks.
    #[arg(long, default_value_t = 20, global = true)]
    pub samples: usize,
    /// Word length for evaluation-rank checks.
    #[arg(long, default_value_t = 4, global = true)]
    pub word_length: usize,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m: 1,
            n: 1,
            theta: "none".into(),
            kmax: 2,
            lmax: 1,
            degree: 2,
            seed: 1,
            samples: 20,
            word_length: 4,
            format: Format::Json,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn index(&self) -> Result<SuperIndex, CliError> {
        SuperIndex::new(self.m, self.n).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn parabolic(&self) -> Result<ParabolicSpec, CliError> {
        let idx = self.index()?;
        let t = self.theta.trim();
        match t {
            "" | "none" => Ok(ParabolicSpec::new(idx, []).expect("empty set is valid")),
            "all" => Ok(ParabolicSpec::full(idx)),
            _ => {
                let roots: Result<Vec<usize>, _> = t.split(',').map(|c| c.trim().parse::<usize>()).collect();
                let roots = roots.map_err(|_| CliError::Usage(format!("malformed theta `{t}`")))?;
                ParabolicSpec::new(idx, roots).map_err(|e| CliError::Usage(e.to_string()))
            }
        }
    }
}

use std::path::PathBuf;

use clap::ValueEnum;
use sympspin_core::analysis::{JobParams, Suite};
use sympspin_core::graded::Parity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Both,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
            ParityArg::Both => Parity::Both,
        }
    }
}

/// A validated `verify` job.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub n: usize,
    pub h_max: u32,
    pub q_bound: u32,
    pub parity: Parity,
    pub suites: Vec<Suite>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl JobConfig {
    pub fn params(&self) -> JobParams {
        JobParams { n: self.n, h_max: self.h_max, q_bound: self.q_bound, parity: self.parity }
    }
}

pub fn parse_suites(text: &str) -> Result<Vec<Suite>, String> {
    Suite::parse_list(text).map_err(|e| e.to_string())
}

pub fn parse_rank(text: &str) -> Result<usize, String> {
    match text.parse::<usize>() {
        Ok(0) => Err("rank must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

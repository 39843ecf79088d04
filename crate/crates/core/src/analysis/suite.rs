use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::identities::{verify_clifford, verify_intertwining, verify_sl2, verify_twistor_factorization};
use super::report::{sort_reports, VerificationReport};
use super::verify::{
    verify_composition_series, verify_constant_lemma, verify_example, verify_prolongation, verify_theorem,
    verify_tower_lemma, verify_triangle,
};
use crate::error::{Error, Result};
use crate::graded::{Parity, SectorSpec};

/// Seed for the random spinors of the Clifford suite.
pub const CLIFFORD_SEED: u64 = 0x5eed_c11f;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sl2,
    Intertwine,
    Clifford,
    Prolong,
    Constant,
    Tower,
    Series,
    Triangle,
    Theorem,
    Example,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Sl2,
        Suite::Intertwine,
        Suite::Clifford,
        Suite::Prolong,
        Suite::Constant,
        Suite::Tower,
        Suite::Series,
        Suite::Triangle,
        Suite::Theorem,
        Suite::Example,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sl2 => "sl2",
            Suite::Intertwine => "intertwine",
            Suite::Clifford => "clifford",
            Suite::Prolong => "prolong",
            Suite::Constant => "constant",
            Suite::Tower => "tower",
            Suite::Series => "series",
            Suite::Triangle => "triangle",
            Suite::Theorem => "theorem",
            Suite::Example => "example",
        }
    }

    /// Parses `all` or a comma-separated list; duplicates collapse.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        if text.trim() == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let mut out: Vec<Suite> = text.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Syntax { pos: 0, message: format!("unknown suite {s:?}") })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sector range of a verification job: every `h ≤ h_max` at bound `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobParams {
    pub n: usize,
    pub h_max: u32,
    pub q_bound: u32,
    pub parity: Parity,
}

impl JobParams {
    fn sectors(&self) -> Vec<SectorSpec> {
        (0..=self.h_max).map(|h| SectorSpec::new(self.n, h, self.q_bound, self.parity)).collect()
    }
}

fn per_sector(p: &JobParams, f: fn(SectorSpec) -> Result<VerificationReport>) -> Result<Vec<VerificationReport>> {
    p.sectors().into_par_iter().map(f).collect()
}

/// Runs one suite; the reports come back sorted.
pub fn run_suite(suite: Suite, p: &JobParams) -> Result<Vec<VerificationReport>> {
    if p.n == 0 {
        return Err(Error::IndexOutOfRange { what: "rank", index: 0, rank: 0 });
    }
    let mut reports = match suite {
        Suite::Sl2 => per_sector(p, verify_sl2)?,
        Suite::Intertwine => per_sector(p, verify_intertwining)?,
        Suite::Clifford => {
            vec![verify_clifford(p.n, CLIFFORD_SEED)?, verify_twistor_factorization(p.n, CLIFFORD_SEED)?]
        }
        Suite::Prolong => per_sector(p, verify_prolongation)?,
        Suite::Constant => per_sector(p, verify_constant_lemma)?,
        Suite::Tower => per_sector(p, verify_tower_lemma)?,
        Suite::Series => per_sector(p, verify_composition_series)?,
        Suite::Triangle => per_sector(p, verify_triangle)?,
        Suite::Theorem => per_sector(p, verify_theorem)?,
        Suite::Example => verify_example()?,
    };
    sort_reports(&mut reports);
    Ok(reports)
}

/// Runs several suites, keyed by suite in the given order.
pub fn run_suites(suites: &[Suite], p: &JobParams) -> Result<Vec<(Suite, Vec<VerificationReport>)>> {
    suites.iter().map(|s| Ok((*s, run_suite(*s, p)?))).collect()
}

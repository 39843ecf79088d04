use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graded::SectorSpec;

/// Outcome of one finite check. `pass` holds exactly when the expected and
/// observed dimensions agree and no witness was recorded.
///
/// Every report is evidence on a finite truncation, not a proof for the
/// infinite-dimensional space; `evidence` says so in the serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub claim: String,
    pub params: SectorSpec,
    pub expected_dim: usize,
    pub observed_dim: usize,
    pub equal_as_subspaces: bool,
    pub witnesses: Vec<String>,
    pub pass: bool,
    pub evidence: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, usize>,
}

/// Witnesses kept per report; the rest are counted in `details`.
pub const MAX_WITNESSES: usize = 5;

impl VerificationReport {
    pub fn new(claim: impl Into<String>, params: SectorSpec) -> Self {
        Self {
            claim: claim.into(),
            params,
            expected_dim: 0,
            observed_dim: 0,
            equal_as_subspaces: true,
            witnesses: Vec::new(),
            pass: true,
            evidence: "finite truncation".into(),
            details: BTreeMap::new(),
        }
    }

    pub fn dims(mut self, expected: usize, observed: usize) -> Self {
        self.expected_dim = expected;
        self.observed_dim = observed;
        self
    }

    pub fn detail(mut self, key: &str, value: usize) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    /// Records a witness; also marks the subspaces unequal.
    pub fn witness(&mut self, text: impl Into<String>) {
        self.equal_as_subspaces = false;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(text.into());
        } else {
            *self.details.entry("witnessesOmitted".into()).or_insert(0) += 1;
        }
    }

    pub fn finish(mut self) -> Self {
        self.pass = self.expected_dim == self.observed_dim && self.witnesses.is_empty();
        self
    }
}

/// Sorts reports by claim, then parameters; the emitted order is independent
/// of the order in which they were computed.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (&a.claim, a.params).cmp(&(&b.claim, b.params)));
}

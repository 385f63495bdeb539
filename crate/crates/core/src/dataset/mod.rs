//! Template-generated syllogism datasets, coverage audits and per-
//! configuration error breakdowns.
//!
//! Datasets are stored one JSON record per line, preceded by a header
//! line; see `docs/formats.md` for the exact schema.

mod breakdown;
mod coverage;
mod generate;
mod io;

use serde::{Deserialize, Serialize};

use crate::error::DatasetError;
use crate::parser::PhraseologyCategory;
use crate::syllogism::{Configuration, Figure, Mood};
use crate::validity::{Interpretation, ValidityStatus};

pub use breakdown::{error_breakdown, Cell, ErrorBreakdown, Marginal};
pub use coverage::{assess_coverage, cross_check, Annotation, CategoryShare, CoverageReport, CrossCheck};
pub use generate::{generate, GenerateOptions, TermTriple};
pub use io::{
    read_annotations, read_dataset, read_predictions, read_triples, write_dataset, DATASET_FORMAT, DATASET_VERSION,
};

/// Validity label as found in gold annotations and prediction files.
///
/// Labels from entailment-style datasets are accepted through a fixed
/// adapter: `entail`/`entailment` read as valid, `contradiction` and
/// `neutral` as invalid (the conclusion does not follow as stated).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidityLabel {
    Valid,
    ConditionallyValid,
    Invalid,
}

impl ValidityLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ValidityLabel::Valid => "valid",
            ValidityLabel::ConditionallyValid => "conditionally-valid",
            ValidityLabel::Invalid => "invalid",
        }
    }

    /// Binary reading used for scoring: only `valid` counts as valid.
    pub fn is_valid(self) -> bool {
        self == ValidityLabel::Valid
    }

    pub fn parse(label: &str) -> Result<Self, DatasetError> {
        match label.trim().to_ascii_lowercase().as_str() {
            "valid" | "entail" | "entails" | "entailment" => Ok(ValidityLabel::Valid),
            "conditionally-valid" | "conditionally valid" | "conditionally_valid" => {
                Ok(ValidityLabel::ConditionallyValid)
            }
            "invalid" | "contradiction" | "contradict" | "neutral" => Ok(ValidityLabel::Invalid),
            _ => Err(DatasetError::UnknownLabel(label.to_string())),
        }
    }
}

impl<'de> Deserialize<'de> for ValidityLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        ValidityLabel::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl From<ValidityStatus> for ValidityLabel {
    fn from(status: ValidityStatus) -> Self {
        match status {
            ValidityStatus::Valid => ValidityLabel::Valid,
            ValidityStatus::ConditionallyValid => ValidityLabel::ConditionallyValid,
            ValidityStatus::Invalid => ValidityLabel::Invalid,
        }
    }
}

impl std::fmt::Display for ValidityLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gold {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mood: Option<Mood>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figure: Option<Figure>,
    pub label: ValidityLabel,
    #[serde(default)]
    pub interpretation: Interpretation,
    /// One category per statement, premises first, then the conclusion.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phraseology: Vec<PhraseologyCategory>,
}

impl Gold {
    pub fn configuration(&self) -> Option<Configuration> {
        Some(Configuration::new(self.mood?, self.figure?))
    }
}

/// One of the alternative conclusions offered with a record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateConclusion {
    pub text: String,
    pub label: ValidityLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub id: String,
    pub premises: Vec<String>,
    pub conclusion: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gold: Option<Gold>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateConclusion>>,
    #[serde(default)]
    pub source: String,
}

impl DatasetRecord {
    /// Premises followed by the conclusion.
    pub fn statements(&self) -> impl Iterator<Item = &str> {
        self.premises
            .iter()
            .map(String::as_str)
            .chain([self.conclusion.as_str()])
    }
}

/// First line of a dataset file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetHeader {
    pub format: String,
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interpretation: Option<Interpretation>,
    #[serde(default)]
    pub shuffle_premises: bool,
    #[serde(default)]
    pub candidate_conclusions: bool,
    pub records: usize,
}

impl DatasetHeader {
    pub fn new(records: usize) -> Self {
        DatasetHeader {
            format: DATASET_FORMAT.to_string(),
            version: DATASET_VERSION,
            seed: None,
            interpretation: None,
            shuffle_premises: false,
            candidate_conclusions: false,
            records,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dataset {
    pub header: DatasetHeader,
    pub records: Vec<DatasetRecord>,
}

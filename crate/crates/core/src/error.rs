use thiserror::Error;

use crate::proposition::PropositionType;

/// Errors from building propositions, syllogisms and configurations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("term label is empty")]
    EmptyTerm,
    #[error("subject and predicate are the same term `{0}`")]
    IdenticalTerms(String),
    #[error("expected exactly 3 distinct terms, found {found}")]
    TooManyTerms { found: usize },
    #[error("malformed syllogism: {0}")]
    MalformedStructure(String),
    #[error("conversion is not truth-preserving for {0} propositions")]
    IllegitimateConversion(PropositionType),
    #[error("contraposition is not truth-preserving for {0} propositions")]
    IllegitimateContraposition(PropositionType),
    #[error("cannot parse `{0}` as a configuration (expected e.g. AAA-1)")]
    BadConfiguration(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("not a standard-form proposition: unexpected {found} at token {position}")]
    NotStandardForm { position: usize, found: String },
    #[error("cannot translate statement ({category}): {reason}")]
    Untranslatable { category: String, reason: String },
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("no equivalence-preserving reduction to {target} terms (found {found})")]
    IrreducibleTerms { target: usize, found: usize },
    #[error("synonym mapping is cyclic at `{0}`")]
    SynonymCycle(String),
    #[error("given propositions share {shared} terms, expected exactly 1")]
    StructureMismatch { shared: usize },
    #[error("sorites needs {expected} distinct terms for its premises, found {found}")]
    TermCountMismatch { expected: usize, found: usize },
    #[error("sorites of {0} premises is outside the supported range 2..=6")]
    SoritesSize(usize),
    #[error("no chain of valid syllogisms reaches the conclusion")]
    NoValidChain,
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("invalid term triple: {0}")]
    InvalidTriple(String),
    #[error("schema error at line {line}: {message}")]
    Schema { line: usize, message: String },
    #[error("record `{0}` lacks the annotation needed for this check")]
    MissingAnnotation(String),
    #[error("prediction refers to unknown record id `{0}`")]
    UnknownId(String),
    #[error("record `{0}` has no gold validity label")]
    MissingGold(String),
    #[error("unknown validity label `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<LogicError> for DatasetError {
    fn from(err: LogicError) -> Self {
        DatasetError::InvalidTriple(err.to_string())
    }
}

//! Translation of ordinary-language statements into standard form.
//!
//! Translation runs in two steps: the statement is first classified into a
//! phraseology category by cue words, then the category's rule is applied.
//! Every proposition produced is rendered back to text and re-parsed with
//! the standard-form grammar before it is returned.
//!
//! Rule table (ids appear in [`TranslationResult::trace`]):
//!
//! | id        | input                                  | output                                   |
//! |-----------|----------------------------------------|------------------------------------------|
//! | `T-STD`   | `All/No/Some S are [not] P`            | unchanged                                |
//! | `T-SING`  | `Socrates is [not] a human`            | `A`/`E`(persons-identical-to-socrates, humans) |
//! | `T-COND`  | `If something is an A, then it is a B` | `A`(As, Bs); negated consequent gives `E` |
//! | `T-EXCL`  | `Only/None but/None except A are B`    | `A`(B, A)                                |
//! | `T-EXCEPT`| `All except/but S are P`               | `E`(S, P) and `A`(non-S, P)              |
//! | `T-NSQ`   | `few S are P`                          | `I`(S, P) and `O`(S, P)                  |
//! |           | `a few`, `many`, `most`, `several`     | `I`                                      |
//! |           | `not every`, `not all`                 | `O`                                      |
//! |           | `every`, `each`, `any`                 | `A`                                      |
//! |           | `anyone`, `whoever`, `everyone`        | `A` over persons (or the relative clause) |
//! |           | `no one`, `nobody`, `nothing`          | `E` over persons/things                   |
//! | `T-UNEXP` | `Dogs are mammals` (no quantifier)     | `I`, flagged `LOW-CONFIDENCE`             |
//! | `T-PRED`  | adjective, verb or `was/were` predicate | predicate class `<adj>-things`, `things-that-<verb>` (`people` for person nouns) |
//!
//! Cue priority, first match wins: exceptive, exclusive, conditional,
//! non-standard quantifier, singular, standard, non-standard predicate,
//! unexpressed quantifier, other.

mod grammar;
mod lexicon;
mod rules;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::proposition::CategoricalProposition;

pub use grammar::{parse_standard, render, tokenize};
pub use lexicon::is_adjective;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PhraseologyCategory {
    Standard,
    Singular,
    Conditional,
    Exclusive,
    Exceptive,
    NonstandardQuantifier,
    UnexpressedQuantifier,
    NonstandardPredicate,
    Other,
}

impl PhraseologyCategory {
    pub const ALL: [PhraseologyCategory; 9] = [
        PhraseologyCategory::Standard,
        PhraseologyCategory::Singular,
        PhraseologyCategory::Conditional,
        PhraseologyCategory::Exclusive,
        PhraseologyCategory::Exceptive,
        PhraseologyCategory::NonstandardQuantifier,
        PhraseologyCategory::UnexpressedQuantifier,
        PhraseologyCategory::NonstandardPredicate,
        PhraseologyCategory::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PhraseologyCategory::Standard => "standard",
            PhraseologyCategory::Singular => "singular",
            PhraseologyCategory::Conditional => "conditional",
            PhraseologyCategory::Exclusive => "exclusive",
            PhraseologyCategory::Exceptive => "exceptive",
            PhraseologyCategory::NonstandardQuantifier => "nonstandard-quantifier",
            PhraseologyCategory::UnexpressedQuantifier => "unexpressed-quantifier",
            PhraseologyCategory::NonstandardPredicate => "nonstandard-predicate",
            PhraseologyCategory::Other => "other",
        }
    }
}

impl fmt::Display for PhraseologyCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PhraseologyCategory {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        PhraseologyCategory::ALL
            .into_iter()
            .find(|c| c.as_str() == wanted)
            .ok_or_else(|| format!("unknown phraseology category `{s}`"))
    }
}

/// One step recorded while translating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TraceStep {
    #[serde(rename = "T-STD")]
    Standard,
    #[serde(rename = "T-SING")]
    Singular,
    #[serde(rename = "T-COND")]
    Conditional,
    #[serde(rename = "T-EXCL")]
    Exclusive,
    #[serde(rename = "T-EXCEPT")]
    Exceptive,
    #[serde(rename = "T-NSQ")]
    NonstandardQuantifier,
    #[serde(rename = "T-UNEXP")]
    UnexpressedQuantifier,
    #[serde(rename = "T-PRED")]
    NonstandardPredicate,
    /// The quantity was guessed without world knowledge.
    #[serde(rename = "LOW-CONFIDENCE")]
    LowConfidence,
}

impl TraceStep {
    pub fn id(self) -> &'static str {
        match self {
            TraceStep::Standard => "T-STD",
            TraceStep::Singular => "T-SING",
            TraceStep::Conditional => "T-COND",
            TraceStep::Exclusive => "T-EXCL",
            TraceStep::Exceptive => "T-EXCEPT",
            TraceStep::NonstandardQuantifier => "T-NSQ",
            TraceStep::UnexpressedQuantifier => "T-UNEXP",
            TraceStep::NonstandardPredicate => "T-PRED",
            TraceStep::LowConfidence => "LOW-CONFIDENCE",
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationResult {
    pub category: PhraseologyCategory,
    /// More than one for compound translations (exceptives, "few").
    pub propositions: Vec<CategoricalProposition>,
    pub trace: Vec<TraceStep>,
    /// Every proposition re-parsed from its rendering to itself.
    pub verified: bool,
}

impl TranslationResult {
    pub fn trace_ids(&self) -> Vec<&'static str> {
        self.trace.iter().map(|s| s.id()).collect()
    }
}

pub fn classify_phraseology(text: &str) -> Result<PhraseologyCategory, ParseError> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    Ok(rules::classify(&tokens))
}

/// Classifies `text` and applies the rule for its category.
pub fn translate(text: &str) -> Result<TranslationResult, ParseError> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let category = rules::classify(&tokens);
    let untranslatable = |reason: String| ParseError::Untranslatable {
        category: category.to_string(),
        reason,
    };
    let output = match category {
        PhraseologyCategory::Standard => rules::standard(&tokens),
        PhraseologyCategory::Singular => rules::singular(&tokens),
        PhraseologyCategory::Conditional => rules::conditional(&tokens),
        PhraseologyCategory::Exclusive => rules::exclusive(&tokens),
        PhraseologyCategory::Exceptive => rules::exceptive(&tokens),
        PhraseologyCategory::NonstandardQuantifier => rules::nonstandard_quantifier(&tokens),
        PhraseologyCategory::UnexpressedQuantifier => rules::unexpressed(&tokens),
        PhraseologyCategory::NonstandardPredicate => rules::nonstandard_predicate(&tokens),
        PhraseologyCategory::Other => Err("no phraseology cue matched".to_string()),
    };
    let (propositions, trace) = output.map_err(untranslatable)?;

    let verified = propositions
        .iter()
        .all(|p| parse_standard(&render(p)).as_ref() == Ok(p));
    if !verified {
        return Err(untranslatable("output did not re-parse as standard form".into()));
    }
    Ok(TranslationResult {
        category,
        propositions,
        trace,
        verified,
    })
}

//! Whole-argument analysis: translation, term reduction, standard order,
//! mood and figure, and validity by every method.
//!
//! Arguments with a single premise are treated as enthymemes and arguments
//! with more than two premises as sorites.

mod enthymeme;
mod reduce;
mod sorites;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::AnalyzeError;
use crate::parser::{self, TranslationResult};
use crate::proposition::CategoricalProposition;
use crate::syllogism::{distinct_terms, standard_order, Configuration, Syllogism};
use crate::validity::{
    validity_by_rules, validity_by_semantics, validity_by_table, Interpretation, ValidityStatus, ValidityVerdict,
};

pub use enthymeme::{complete_enthymeme, Enthymeme, Missing};
pub use reduce::{reduce_terms, reduce_terms_to, Inference, Reduction, ReductionStep, MAX_INFERENCE_DEPTH};
pub use sorites::{decompose_sorites, MAX_SORITES_PREMISES};

/// Words that mark a statement as the conclusion when they open it.
pub const CONCLUSION_CUES: &[&str] = &["therefore", "so", "hence", "thus"];

/// Upper bound on the compound-translation branches tried.
const MAX_BRANCHES: usize = 64;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Argument {
    /// Premises in any order, possibly with the conclusion among them.
    pub statements: Vec<String>,
    /// Index of the conclusion, overriding cue detection.
    pub conclusion_index: Option<usize>,
    /// Label replacements applied before term reduction.
    pub synonyms: BTreeMap<String, String>,
}

impl Argument {
    pub fn new<S: Into<String>>(statements: impl IntoIterator<Item = S>) -> Self {
        Argument {
            statements: statements.into_iter().map(Into::into).collect(),
            ..Argument::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConclusionSource {
    /// Given explicitly by the caller.
    Index,
    /// The statement opens with a conclusion cue.
    Cue,
    /// No cue found; the last statement is taken.
    Last,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatementReport {
    pub text: String,
    pub is_conclusion: bool,
    pub translation: Option<TranslationResult>,
}

/// The verdict of each method under one interpretation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodVerdicts {
    pub table: ValidityVerdict,
    pub rules: ValidityVerdict,
    pub semantics: ValidityVerdict,
}

impl MethodVerdicts {
    fn compute(s: &Syllogism, i: Interpretation) -> Self {
        MethodVerdicts {
            table: validity_by_table(s.configuration(), i),
            rules: validity_by_rules(s, i),
            semantics: validity_by_semantics(s, i),
        }
    }

    pub fn agree(&self) -> bool {
        self.table.status == self.rules.status && self.rules.status == self.semantics.status
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub syllogism: Syllogism,
    pub configuration: Configuration,
    pub modern: MethodVerdicts,
    pub aristotelian: MethodVerdicts,
}

impl StepReport {
    fn new(syllogism: Syllogism) -> Self {
        StepReport {
            configuration: syllogism.configuration(),
            modern: MethodVerdicts::compute(&syllogism, Interpretation::Modern),
            aristotelian: MethodVerdicts::compute(&syllogism, Interpretation::Aristotelian),
            syllogism,
        }
    }

    pub fn verdicts(&self, i: Interpretation) -> &MethodVerdicts {
        match i {
            Interpretation::Modern => &self.modern,
            Interpretation::Aristotelian => &self.aristotelian,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "flag", rename_all = "kebab-case")]
pub enum Flag {
    /// A statement could not be translated into standard form.
    Untranslatable { statement: usize, reason: String },
    /// The propositions cannot be brought down to the needed term count.
    TooManyTerms { found: usize },
    /// Three terms, but the propositions do not form a syllogism.
    MalformedStructure { reason: String },
    /// Only one premise was stated; the candidates complete it validly.
    EnthymemeSuspected {
        missing: Missing,
        candidates: Vec<CategoricalProposition>,
    },
    /// No chain of valid syllogisms reaches the conclusion.
    NoValidChain { reason: String },
    /// The validity methods disagreed; this indicates an internal error.
    CrossCheckFailed {
        step: usize,
        interpretation: Interpretation,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub interpretation: Interpretation,
    pub statements: Vec<StatementReport>,
    pub conclusion_index: usize,
    pub conclusion_source: ConclusionSource,
    /// Chosen alternative per statement for compound translations.
    pub branch: Vec<usize>,
    pub reduction: Vec<ReductionStep>,
    /// One step for a syllogism, several for a sorites; empty when the
    /// argument could not be standardized.
    pub standardized: Vec<StepReport>,
    /// The configuration when the argument is a single syllogism.
    pub configuration: Option<Configuration>,
    /// Overall status under `interpretation`: valid only if every step is.
    pub status: Option<ValidityStatus>,
    pub flags: Vec<Flag>,
}

/// Runs the full pipeline on `argument`. Never fails: problems are
/// reported as flags alongside whatever partial result was reached.
pub fn analyze(argument: &Argument, interpretation: Interpretation) -> AnalysisReport {
    let (conclusion_index, conclusion_source, texts) = locate_conclusion(argument);
    let mut report = AnalysisReport {
        interpretation,
        statements: Vec::new(),
        conclusion_index,
        conclusion_source,
        branch: Vec::new(),
        reduction: Vec::new(),
        standardized: Vec::new(),
        configuration: None,
        status: None,
        flags: Vec::new(),
    };

    for (index, text) in texts.iter().enumerate() {
        let translation = match parser::translate(text) {
            Ok(t) => Some(t),
            Err(err) => {
                report.flags.push(Flag::Untranslatable {
                    statement: index,
                    reason: err.to_string(),
                });
                None
            }
        };
        report.statements.push(StatementReport {
            text: argument.statements.get(index).cloned().unwrap_or_default(),
            is_conclusion: index == conclusion_index,
            translation,
        });
    }
    if texts.len() < 2 {
        report.flags.push(Flag::MalformedStructure {
            reason: "an argument needs at least two statements".into(),
        });
        return report;
    }
    if !report.flags.is_empty() {
        return report;
    }

    let alternatives: Vec<&[CategoricalProposition]> = report
        .statements
        .iter()
        .map(|s| s.translation.as_ref().map_or(&[][..], |t| &t.propositions[..]))
        .collect();
    let mut first: Option<Outcome> = None;
    for branch in branches(&alternatives).take(MAX_BRANCHES) {
        let chosen: Vec<CategoricalProposition> = branch
            .iter()
            .zip(&alternatives)
            .map(|(&k, alts)| alts[k].clone())
            .collect();
        let outcome = standardize(&chosen, conclusion_index, &argument.synonyms, interpretation);
        let success = outcome.success;
        let outcome = Outcome { branch, ..outcome };
        if success {
            first = Some(outcome);
            break;
        }
        first.get_or_insert(outcome);
    }
    if let Some(outcome) = first {
        report.branch = outcome.branch;
        report.reduction = outcome.reduction;
        report.standardized = outcome.steps;
        report.flags.extend(outcome.flags);
    }

    if report.standardized.len() == 1 {
        report.configuration = Some(report.standardized[0].configuration);
    }
    if !report.standardized.is_empty() {
        report.status = Some(overall_status(&report.standardized, interpretation));
    }
    for (step, s) in report.standardized.iter().enumerate() {
        for i in Interpretation::ALL {
            if !s.verdicts(i).agree() {
                report.flags.push(Flag::CrossCheckFailed {
                    step,
                    interpretation: i,
                });
            }
        }
    }
    report
}

fn overall_status(steps: &[StepReport], i: Interpretation) -> ValidityStatus {
    steps
        .iter()
        .map(|s| s.verdicts(i).table.status)
        .max_by_key(|status| match status {
            ValidityStatus::Valid => 0,
            ValidityStatus::ConditionallyValid => 1,
            ValidityStatus::Invalid => 2,
        })
        .unwrap_or(ValidityStatus::Invalid)
}

/// Picks the conclusion and returns every statement's text with any
/// conclusion cue removed.
fn locate_conclusion(argument: &Argument) -> (usize, ConclusionSource, Vec<String>) {
    let mut cue_index = None;
    let texts: Vec<String> = argument
        .statements
        .iter()
        .enumerate()
        .map(|(index, text)| match strip_cue(text) {
            Some(rest) => {
                cue_index.get_or_insert(index);
                rest
            }
            None => text.trim().to_string(),
        })
        .collect();
    let last = texts.len().saturating_sub(1);
    match (argument.conclusion_index, cue_index) {
        (Some(i), _) if i < texts.len() => (i, ConclusionSource::Index, texts),
        (_, Some(i)) => (i, ConclusionSource::Cue, texts),
        _ => (last, ConclusionSource::Last, texts),
    }
}

fn strip_cue(text: &str) -> Option<String> {
    let trimmed = text.trim_start();
    let word_end = trimmed.find(|c: char| !c.is_alphabetic()).unwrap_or(trimmed.len());
    let word = trimmed[..word_end].to_ascii_lowercase();
    if !CONCLUSION_CUES.contains(&word.as_str()) {
        return None;
    }
    let rest = trimmed[word_end..].trim_start_matches([',', ':', ' ']);
    Some(rest.trim().to_string())
}

/// Every combination of alternatives, the last statement varying fastest.
fn branches(alternatives: &[&[CategoricalProposition]]) -> impl Iterator<Item = Vec<usize>> {
    let sizes: Vec<usize> = alternatives.iter().map(|a| a.len()).collect();
    let mut next = (!sizes.contains(&0)).then(|| vec![0; sizes.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut following = current.clone();
        for pos in (0..sizes.len()).rev() {
            following[pos] += 1;
            if following[pos] < sizes[pos] {
                next = Some(following);
                break;
            }
            following[pos] = 0;
        }
        Some(current)
    })
}

struct Outcome {
    success: bool,
    branch: Vec<usize>,
    reduction: Vec<ReductionStep>,
    steps: Vec<StepReport>,
    flags: Vec<Flag>,
}

fn standardize(
    props: &[CategoricalProposition],
    conclusion_index: usize,
    synonyms: &BTreeMap<String, String>,
    interpretation: Interpretation,
) -> Outcome {
    let mut outcome = Outcome {
        success: false,
        branch: Vec::new(),
        reduction: Vec::new(),
        steps: Vec::new(),
        flags: Vec::new(),
    };
    let premise_count = props.len() - 1;
    let target = if premise_count == 1 { 3 } else { props.len() };
    let reduced = match reduce_terms_to(props, synonyms, target) {
        Ok(r) => r,
        Err(AnalyzeError::IrreducibleTerms { found, .. }) => {
            outcome.flags.push(Flag::TooManyTerms { found });
            return outcome;
        }
        Err(err) => {
            outcome.flags.push(Flag::MalformedStructure {
                reason: err.to_string(),
            });
            return outcome;
        }
    };
    outcome.reduction = reduced.trace;
    let mut premises = reduced.propositions;
    let conclusion = premises.remove(conclusion_index);

    match premises.len() {
        1 => match enthymeme_candidates(&premises[0], &conclusion, interpretation) {
            Ok((missing, candidates)) => {
                outcome.success = true;
                outcome.flags.push(Flag::EnthymemeSuspected { missing, candidates });
            }
            Err(err) => outcome.flags.push(Flag::MalformedStructure {
                reason: err.to_string(),
            }),
        },
        2 => match standard_order(premises[0].clone(), premises[1].clone(), conclusion) {
            Ok(s) => {
                outcome.success = true;
                outcome.steps.push(StepReport::new(s));
            }
            Err(err) => outcome.flags.push(Flag::MalformedStructure {
                reason: err.to_string(),
            }),
        },
        _ => match decompose_sorites(&premises, &conclusion, interpretation) {
            Ok(chain) => {
                outcome.success = true;
                outcome.steps = chain.into_iter().map(StepReport::new).collect();
            }
            Err(AnalyzeError::TermCountMismatch { found, .. }) => outcome.flags.push(Flag::TooManyTerms { found }),
            Err(err) => outcome.flags.push(Flag::NoValidChain {
                reason: err.to_string(),
            }),
        },
    }
    outcome
}

/// Completes a one-premise argument; the premise is the major if it holds
/// the conclusion's predicate and the minor otherwise.
fn enthymeme_candidates(
    premise: &CategoricalProposition,
    conclusion: &CategoricalProposition,
    interpretation: Interpretation,
) -> Result<(Missing, Vec<CategoricalProposition>), AnalyzeError> {
    let found = distinct_terms([premise, conclusion]).len();
    if found != 3 {
        return Err(AnalyzeError::StructureMismatch { shared: 4 - found });
    }
    let missing = if premise.mentions(conclusion.predicate()) {
        Missing::Minor
    } else {
        Missing::Major
    };
    let enthymeme = Enthymeme::new(missing, premise.clone(), conclusion.clone());
    Ok((missing, complete_enthymeme(&enthymeme, interpretation)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proposition::PropositionType::{self, *};

    fn prop(kind: PropositionType, s: &str, p: &str) -> CategoricalProposition {
        CategoricalProposition::parse_terms(kind, s, p).unwrap()
    }

    const ATHENIANS: [&str; 3] = [
        "All Greeks are humans.",
        "All Athenians are Greeks.",
        "Therefore, all Athenians are humans.",
    ];

    #[test]
    fn worked_example_is_barbara() {
        for i in Interpretation::ALL {
            let r = analyze(&Argument::new(ATHENIANS), i);
            assert!(r.flags.is_empty(), "{:?}", r.flags);
            assert_eq!(r.configuration.unwrap().to_string(), "AAA-1");
            assert_eq!(r.status, Some(ValidityStatus::Valid));
            assert_eq!(r.conclusion_source, ConclusionSource::Cue);
            assert_eq!(
                r.standardized[0].syllogism.conclusion(),
                &prop(A, "athenians", "humans")
            );
        }
    }

    #[test]
    fn conclusion_cue_can_come_first() {
        let r = analyze(
            &Argument::new([
                "So all Athenians are humans.",
                "All Athenians are Greeks.",
                "All Greeks are humans.",
            ]),
            Interpretation::Modern,
        );
        assert_eq!(r.conclusion_index, 0);
        assert_eq!(r.configuration.unwrap().to_string(), "AAA-1");
    }

    #[test]
    fn four_terms_flagged() {
        let r = analyze(
            &Argument::new(["All dogs are mammals.", "All cats are pets.", "All dogs are pets."]),
            Interpretation::Modern,
        );
        assert_eq!(r.flags, [Flag::TooManyTerms { found: 4 }]);
        assert!(r.standardized.is_empty() && r.status.is_none());
    }

    #[test]
    fn single_premise_is_an_enthymeme() {
        let r = analyze(
            &Argument::new(["All Greeks are humans.", "All Athenians are humans."]),
            Interpretation::Modern,
        );
        let [Flag::EnthymemeSuspected { missing, candidates }] = &r.flags[..] else {
            panic!("{:?}", r.flags)
        };
        assert_eq!(*missing, Missing::Minor);
        assert!(candidates.contains(&prop(A, "athenians", "greeks")));
    }

    #[test]
    fn untranslatable_statement() {
        let r = analyze(&Argument::new(["Hello there.", "All s are p."]), Interpretation::Modern);
        assert!(matches!(r.flags[..], [Flag::Untranslatable { statement: 0, .. }]));
    }

    #[test]
    fn compound_translation_branches() {
        // "few" gives I and O; only the I reading yields a valid syllogism
        // but any well-formed reading is kept, so the first is chosen.
        let r = analyze(
            &Argument::new(["All dogs are mammals.", "Few pets are dogs.", "Some pets are mammals."]),
            Interpretation::Modern,
        );
        assert_eq!(r.branch, [0, 0, 0]);
        assert_eq!(r.configuration.unwrap().to_string(), "AII-1");
    }

    #[test]
    fn sorites_argument() {
        let r = analyze(
            &Argument::new([
                "All dogs are mammals.",
                "All mammals are animals.",
                "All animals are organisms.",
                "Therefore all dogs are organisms.",
            ]),
            Interpretation::Modern,
        );
        assert!(r.flags.is_empty(), "{:?}", r.flags);
        assert_eq!(r.standardized.len(), 2);
        assert_eq!(r.status, Some(ValidityStatus::Valid));
    }

    #[test]
    fn deterministic_serialization() {
        let a = serde_json::to_string(&analyze(&Argument::new(ATHENIANS), Interpretation::Modern)).unwrap();
        let b = serde_json::to_string(&analyze(&Argument::new(ATHENIANS), Interpretation::Modern)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn branch_enumeration_order() {
        let two = [prop(I, "s", "p"), prop(O, "s", "p")];
        let one = [prop(A, "m", "p")];
        let all: Vec<Vec<usize>> = branches(&[&two, &one, &two]).collect();
        assert_eq!(all, [vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 0, 1]]);
    }
}

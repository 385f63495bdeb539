use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{DatasetRecord, ValidityLabel};
use crate::analyzer::{analyze, Argument};
use crate::error::DatasetError;
use crate::parser::{classify_phraseology, parse_standard, PhraseologyCategory};
use crate::syllogism::{standard_order, Configuration};
use crate::validity::{valid_forms, Interpretation};

/// Externally supplied labels for one record (for instance from human or
/// model annotators). Every field present overrides what would otherwise
/// be derived from the record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub id: String,
    /// Categories for the statements, premises first; statements beyond
    /// the list are classified by the parser.
    #[serde(default)]
    pub phraseology: Vec<PhraseologyCategory>,
    #[serde(default)]
    pub configuration: Option<Configuration>,
    #[serde(default)]
    pub label: Option<ValidityLabel>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossCheck {
    Pass,
    Flagged,
}

/// A record labelled valid whose configuration is not a valid form under
/// `interpretation` is flagged. Records labelled otherwise always pass:
/// an invalid label on a valid form is not detectable by this check.
pub fn cross_check(
    id: &str,
    configuration: Option<Configuration>,
    label: Option<ValidityLabel>,
    interpretation: Interpretation,
) -> Result<CrossCheck, DatasetError> {
    let (Some(configuration), Some(label)) = (configuration, label) else {
        return Err(DatasetError::MissingAnnotation(id.to_string()));
    };
    if label.is_valid() && !valid_forms(interpretation).contains(&configuration) {
        Ok(CrossCheck::Flagged)
    } else {
        Ok(CrossCheck::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryShare {
    pub category: PhraseologyCategory,
    pub count: usize,
    pub percent: f64,
}

/// Where each determined configuration came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConfigurationSources {
    pub annotation: usize,
    pub analyzer: usize,
    pub gold: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub total_records: usize,
    pub total_statements: usize,
    /// Every category, in declaration order.
    pub phraseology: Vec<CategoryShare>,
    /// Configurations of assessable records, in configuration order.
    pub configurations: Vec<Configuration>,
    pub configurations_covered: usize,
    /// Records whose configuration could be determined.
    pub determined: usize,
    pub sources: ConfigurationSources,
    /// Records with a determined configuration that passed the cross-check.
    pub assessable: usize,
    pub assessable_percent: f64,
    /// Ids of records that failed the cross-check.
    pub flagged: Vec<String>,
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        part as f64 * 100.0 / whole as f64
    }
}

/// Audits phraseology and configuration coverage.
///
/// A record's configuration is taken from its annotation if one is given,
/// otherwise from analyzing its statements (the conclusion last), and
/// otherwise from its gold mood and figure. The cross-check uses the
/// annotated label, else the gold label, under the gold interpretation
/// when recorded and `interpretation` otherwise.
pub fn assess_coverage(
    records: &[DatasetRecord],
    annotations: Option<&BTreeMap<String, Annotation>>,
    interpretation: Interpretation,
) -> CoverageReport {
    let mut histogram: BTreeMap<PhraseologyCategory, usize> = BTreeMap::new();
    let mut total_statements = 0;
    let mut covered = BTreeSet::new();
    let mut sources = ConfigurationSources::default();
    let mut determined = 0;
    let mut assessable = 0;
    let mut flagged = Vec::new();

    for record in records {
        let annotation = annotations.and_then(|a| a.get(&record.id));
        let statements: Vec<&str> = record.statements().collect();
        total_statements += statements.len();
        let annotated = annotation.map_or(&[][..], |a| &a.phraseology[..]);
        for (k, s) in statements.iter().enumerate() {
            let c = match annotated.get(k) {
                Some(&c) => c,
                None => classify_phraseology(s).unwrap_or(PhraseologyCategory::Other),
            };
            *histogram.entry(c).or_default() += 1;
        }

        let configuration = if let Some(c) = annotation.and_then(|a| a.configuration) {
            sources.annotation += 1;
            Some(c)
        } else if let Some(c) = analyzed_configuration(record) {
            sources.analyzer += 1;
            Some(c)
        } else if let Some(c) = record.gold.as_ref().and_then(|g| g.configuration()) {
            sources.gold += 1;
            Some(c)
        } else {
            None
        };
        let Some(configuration) = configuration else {
            continue;
        };
        determined += 1;

        let label = annotation
            .and_then(|a| a.label)
            .or(record.gold.as_ref().map(|g| g.label));
        let check_under = record.gold.as_ref().map_or(interpretation, |g| g.interpretation);
        if label.is_some()
            && matches!(
                cross_check(&record.id, Some(configuration), label, check_under),
                Ok(CrossCheck::Flagged)
            )
        {
            flagged.push(record.id.clone());
            continue;
        }
        assessable += 1;
        covered.insert(configuration);
    }

    let phraseology = PhraseologyCategory::ALL
        .into_iter()
        .map(|category| {
            let count = histogram.get(&category).copied().unwrap_or(0);
            CategoryShare {
                category,
                count,
                percent: percent(count, total_statements),
            }
        })
        .collect();
    CoverageReport {
        total_records: records.len(),
        total_statements,
        phraseology,
        configurations_covered: covered.len(),
        configurations: covered.into_iter().collect(),
        determined,
        sources,
        assessable,
        assessable_percent: percent(assessable, records.len()),
        flagged,
    }
}

/// Configuration found by the analyzer when the record's statements form
/// a single syllogism.
pub(crate) fn analyzed_configuration(record: &DatasetRecord) -> Option<Configuration> {
    // Three standard-form statements over three terms need no reduction,
    // so the full analysis would only confirm what ordering them gives.
    if let [a, b, c] = record.statements().collect::<Vec<_>>()[..] {
        if let (Ok(a), Ok(b), Ok(c)) = (parse_standard(a), parse_standard(b), parse_standard(c)) {
            if let Ok(s) = standard_order(a, b, c) {
                return Some(s.configuration());
            }
        }
    }
    let statements: Vec<String> = record.statements().map(str::to_string).collect();
    let argument = Argument {
        conclusion_index: Some(statements.len() - 1),
        statements,
        ..Argument::default()
    };
    analyze(&argument, Interpretation::Modern).configuration
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{generate, GenerateOptions, TermTriple};

    fn generated() -> Vec<DatasetRecord> {
        let t = TermTriple::new("athenians", "greeks", "humans").unwrap();
        generate(&[t], Interpretation::Modern, GenerateOptions::default())
            .unwrap()
            .records
    }

    #[test]
    fn cross_check_examples() {
        let c = |s: &str| Some(s.parse::<Configuration>().unwrap());
        let i = Interpretation::Modern;
        assert_eq!(
            cross_check("x", c("AAE-1"), Some(ValidityLabel::Valid), i).unwrap(),
            CrossCheck::Flagged
        );
        assert_eq!(
            cross_check("x", c("AAA-1"), Some(ValidityLabel::Valid), i).unwrap(),
            CrossCheck::Pass
        );
        assert_eq!(
            cross_check("x", c("AAA-1"), Some(ValidityLabel::Invalid), i).unwrap(),
            CrossCheck::Pass
        );
        assert!(matches!(
            cross_check("x", None, Some(ValidityLabel::Valid), i),
            Err(DatasetError::MissingAnnotation(_))
        ));
        assert!(matches!(
            cross_check("x", c("AAA-1"), None, i),
            Err(DatasetError::MissingAnnotation(_))
        ));
    }

    #[test]
    fn generated_data_is_fully_covered() {
        let r = assess_coverage(&generated(), None, Interpretation::Modern);
        assert_eq!(r.total_records, 256);
        assert_eq!(r.configurations_covered, 256);
        assert_eq!(r.phraseology[0].category, PhraseologyCategory::Standard);
        assert_eq!(r.phraseology[0].percent, 100.0);
        assert_eq!(r.assessable_percent, 100.0);
        assert_eq!(r.sources.analyzer, 256);
        assert!(r.flagged.is_empty());
    }

    #[test]
    fn empty_dataset() {
        let r = assess_coverage(&[], None, Interpretation::Modern);
        assert_eq!((r.total_records, r.configurations_covered, r.assessable), (0, 0, 0));
        assert!(r.phraseology.iter().all(|s| s.count == 0 && s.percent == 0.0));
    }

    #[test]
    fn copies_of_one_item() {
        let first = generated().remove(0);
        let copies: Vec<DatasetRecord> = (0..50)
            .map(|k| DatasetRecord {
                id: format!("copy-{k}"),
                ..first.clone()
            })
            .collect();
        let r = assess_coverage(&copies, None, Interpretation::Modern);
        assert_eq!(r.configurations_covered, 1);
        assert_eq!(r.configurations[0].to_string(), "AAA-1");
    }

    #[test]
    fn annotations_override() {
        let records = generated();
        let annotations = BTreeMap::from([(
            "t000-AAA-1".to_string(),
            Annotation {
                id: "t000-AAA-1".into(),
                phraseology: vec![PhraseologyCategory::Singular; 3],
                configuration: Some("AAE-1".parse().unwrap()),
                label: None,
            },
        )]);
        let r = assess_coverage(&records, Some(&annotations), Interpretation::Modern);
        assert_eq!(r.sources.annotation, 1);
        assert_eq!(r.flagged, ["t000-AAA-1"]);
        let singular = r
            .phraseology
            .iter()
            .find(|s| s.category == PhraseologyCategory::Singular)
            .unwrap();
        assert_eq!(singular.count, 3);
    }
}

mod common;

use std::collections::BTreeMap;

use common::translation_cases::CASES;
use syllogism::parser::{classify_phraseology, translate, PhraseologyCategory};
use syllogism::{ParseError, PropositionType};

#[test]
fn regression_table_covers_every_category() {
    let mut per_category: BTreeMap<PhraseologyCategory, usize> = BTreeMap::new();
    for case in CASES {
        *per_category.entry(case.category).or_default() += 1;
    }
    assert!(CASES.len() >= 40);
    for category in PhraseologyCategory::ALL {
        assert!(per_category.get(&category).copied().unwrap_or(0) >= 4, "{category}");
    }
}

#[test]
fn regression_table_translations() {
    let mut failures = Vec::new();
    for case in CASES {
        let category = classify_phraseology(case.text).unwrap();
        if category != case.category {
            failures.push(format!(
                "{:?}: classified as {category}, expected {}",
                case.text, case.category
            ));
            continue;
        }
        match translate(case.text) {
            Ok(result) => {
                let got: Vec<(char, String, String)> = result
                    .propositions
                    .iter()
                    .map(|p| (p.kind().letter(), p.subject().to_string(), p.predicate().to_string()))
                    .collect();
                let want: Vec<(char, String, String)> = case
                    .expected
                    .iter()
                    .map(|(k, s, p)| (*k, s.to_string(), p.to_string()))
                    .collect();
                if got != want || result.trace_ids() != case.trace || !result.verified {
                    failures.push(format!(
                        "{:?}: got {got:?} {:?}, expected {want:?} {:?}",
                        case.text,
                        result.trace_ids(),
                        case.trace
                    ));
                }
            }
            Err(ParseError::Untranslatable { .. }) if case.expected.is_empty() => {}
            Err(err) => failures.push(format!("{:?}: {err}", case.text)),
        }
    }
    assert!(
        failures.is_empty(),
        "{} failures:\n{}",
        failures.len(),
        failures.join("\n")
    );
}

#[test]
fn translations_are_deterministic() {
    for case in CASES {
        assert_eq!(translate(case.text), translate(case.text), "{}", case.text);
    }
}

#[test]
fn translated_letters_are_known() {
    for case in CASES {
        for (letter, _, _) in case.expected {
            assert!(PropositionType::from_letter(*letter).is_some(), "{letter}");
        }
    }
}

use std::collections::BTreeSet;

use syllogism::dataset::{
    assess_coverage, generate, read_dataset, read_predictions, read_triples, write_dataset, Dataset, GenerateOptions,
    ValidityLabel,
};
use syllogism::parser::parse_standard;
use syllogism::{standard_order, validity_by_semantics, Interpretation};

const TRIPLES: &str = include_str!("fixtures/triples.csv");

fn dataset(i: Interpretation, opts: GenerateOptions) -> Dataset {
    generate(&read_triples(TRIPLES).unwrap(), i, opts).unwrap()
}

/// Gold labels agree with model enumeration on the rendered text.
#[test]
fn gold_labels_match_the_text() {
    for i in Interpretation::ALL {
        for record in dataset(i, GenerateOptions::default()).records {
            let [a, b] = [&record.premises[0], &record.premises[1]].map(|t| parse_standard(t).unwrap());
            let s = standard_order(a, b, parse_standard(&record.conclusion).unwrap()).unwrap();
            let gold = record.gold.as_ref().unwrap();
            assert_eq!(gold.configuration(), Some(s.configuration()), "{}", record.id);
            assert_eq!(
                gold.label,
                ValidityLabel::from(validity_by_semantics(&s, i).status),
                "{}",
                record.id
            );
        }
    }
}

#[test]
fn label_counts() {
    let count = |d: &Dataset, label| {
        d.records
            .iter()
            .filter(|r| r.gold.as_ref().unwrap().label == label)
            .count()
    };
    let modern = dataset(Interpretation::Modern, GenerateOptions::default());
    assert_eq!(count(&modern, ValidityLabel::Valid), 150);
    assert_eq!(count(&modern, ValidityLabel::ConditionallyValid), 90);
    let classical = dataset(Interpretation::Aristotelian, GenerateOptions::default());
    assert_eq!(count(&classical, ValidityLabel::Valid), 240);
    assert_eq!(count(&classical, ValidityLabel::ConditionallyValid), 0);
}

/// Swapping premises moves text around but leaves labels, configurations
/// and coverage untouched.
#[test]
fn shuffling_is_label_preserving() {
    let plain = dataset(Interpretation::Modern, GenerateOptions::default());
    let shuffled = dataset(
        Interpretation::Modern,
        GenerateOptions {
            shuffle_premises: true,
            seed: 99,
            ..GenerateOptions::default()
        },
    );
    let mut swapped = 0;
    for (a, b) in plain.records.iter().zip(&shuffled.records) {
        assert_eq!((&a.id, &a.gold, &a.conclusion), (&b.id, &b.gold, &b.conclusion));
        let sa: BTreeSet<&String> = a.premises.iter().collect();
        let sb: BTreeSet<&String> = b.premises.iter().collect();
        assert_eq!(sa, sb);
        swapped += usize::from(a.premises != b.premises);
    }
    assert!(swapped > 1000 && swapped < 1560, "{swapped}");
    let before = assess_coverage(&plain.records, None, Interpretation::Modern);
    let after = assess_coverage(&shuffled.records, None, Interpretation::Modern);
    assert_eq!(before, after);
}

#[test]
fn jsonl_round_trip() {
    let opts = GenerateOptions {
        shuffle_premises: true,
        candidate_conclusions: true,
        seed: 3,
    };
    let original = dataset(Interpretation::Aristotelian, opts);
    let mut bytes = Vec::new();
    write_dataset(&mut bytes, &original).unwrap();
    let text = String::from_utf8(bytes.clone()).unwrap();
    assert_eq!(text.lines().count(), original.records.len() + 1);
    assert!(
        text.starts_with(r#"{"format":"syllogism-dataset","version":1,"#),
        "{}",
        &text[..80]
    );
    assert_eq!(read_dataset(&bytes[..]).unwrap(), original);
}

#[test]
fn external_labels_are_adapted() {
    let text = "id,label\n# comment\na,entailment\nb,neutral\nc,contradiction\nd,conditionally-valid\ne,VALID\n";
    let p = read_predictions(text).unwrap();
    let labels: Vec<ValidityLabel> = p.values().copied().collect();
    assert_eq!(
        labels,
        [
            ValidityLabel::Valid,
            ValidityLabel::Invalid,
            ValidityLabel::Invalid,
            ValidityLabel::ConditionallyValid,
            ValidityLabel::Valid
        ]
    );
    let tabbed = read_predictions("a\tentails\nb\tcontradict\n").unwrap();
    assert_eq!(
        tabbed.values().copied().collect::<Vec<_>>(),
        [ValidityLabel::Valid, ValidityLabel::Invalid]
    );
    assert!(read_predictions("a,maybe\n").is_err());
}

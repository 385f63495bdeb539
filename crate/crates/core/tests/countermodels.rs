use std::collections::BTreeSet;

use syllogism::semantics::Frame;
use syllogism::{
    enumerate_configurations, validity_by_rules, validity_by_semantics, Interpretation, RegionModel, Role, Term,
    ValidityStatus,
};

fn instantiate(c: syllogism::Configuration) -> syllogism::Syllogism {
    let t = |l: &str| Term::new(l).unwrap();
    c.instantiate(&t("athenians"), &t("greeks"), &t("humans")).unwrap()
}

/// Every countermodel really is one: premises true, conclusion false, and
/// under Aristotelian every term occupied.
#[test]
fn countermodels_refute_their_syllogism() {
    let mut seen = 0;
    for c in enumerate_configurations() {
        let s = instantiate(c);
        let frame = Frame::for_syllogism(&s);
        for i in Interpretation::ALL {
            let verdict = validity_by_semantics(&s, i);
            let Some(model) = verdict.countermodel else {
                assert_eq!(verdict.status, ValidityStatus::Valid, "{c} {i}");
                continue;
            };
            assert_ne!(verdict.status, ValidityStatus::Valid, "{c} {i}");
            let [major, minor, conclusion] = s.propositions();
            assert_eq!(model.satisfies(&frame, major), Some(true), "{c} {i}");
            assert_eq!(model.satisfies(&frame, minor), Some(true), "{c} {i}");
            assert_eq!(model.satisfies(&frame, conclusion), Some(false), "{c} {i}");
            if i == Interpretation::Aristotelian {
                for role in Role::ALL {
                    assert!(
                        model.any_occupied(RegionModel::class_regions(role, false)),
                        "{c}: {role:?} empty"
                    );
                }
            }
            seen += 1;
        }
    }
    assert_eq!(seen, 512 - 15 - 24);
}

/// A conditionally valid syllogism fails outright, but holds in every
/// model where the reported terms are occupied.
#[test]
fn conditional_verdicts_name_sufficient_terms() {
    let mut conditional = 0;
    for c in enumerate_configurations() {
        let s = instantiate(c);
        let verdict = validity_by_semantics(&s, Interpretation::Modern);
        if verdict.status != ValidityStatus::ConditionallyValid {
            continue;
        }
        conditional += 1;
        let frame = Frame::for_syllogism(&s);
        let required: BTreeSet<Role> = verdict.required_nonempty_terms.clone();
        assert_eq!(
            validity_by_rules(&s, Interpretation::Modern).required_nonempty_terms,
            required,
            "{c}"
        );
        let [major, minor, conclusion] = s.propositions();
        for model in RegionModel::all() {
            let admissible = required
                .iter()
                .all(|&r| model.any_occupied(RegionModel::class_regions(r, false)));
            let premises = model.satisfies(&frame, major) == Some(true) && model.satisfies(&frame, minor) == Some(true);
            if admissible && premises {
                assert_eq!(model.satisfies(&frame, conclusion), Some(true), "{c} in {model}");
            }
        }
    }
    assert_eq!(conditional, 9);
}

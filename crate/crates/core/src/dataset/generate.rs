use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CandidateConclusion, Dataset, DatasetHeader, DatasetRecord, Gold, ValidityLabel};
use crate::error::DatasetError;
use crate::parser::{self, PhraseologyCategory};
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::syllogism::{enumerate_configurations, standard_order};
use crate::term::{normalize_label, Term, COMPLEMENT_PREFIX};
use crate::validity::{validity_by_table, Interpretation};

/// Source tag of generated records.
pub const TEMPLATE_SOURCE: &str = "template";

/// Labels filled into the minor, middle and major term positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermTriple {
    pub s: String,
    pub m: String,
    pub p: String,
}

impl TermTriple {
    /// Canonicalizes the labels and checks that every filled-in template
    /// reads back as the intended standard-form proposition.
    pub fn new(s: &str, m: &str, p: &str) -> Result<Self, DatasetError> {
        let triple = TermTriple {
            s: normalize_label(s),
            m: normalize_label(m),
            p: normalize_label(p),
        };
        triple.validate()?;
        Ok(triple)
    }

    fn labels(&self) -> [&str; 3] {
        [&self.s, &self.m, &self.p]
    }

    fn validate(&self) -> Result<(), DatasetError> {
        let invalid = |msg: String| Err(DatasetError::InvalidTriple(msg));
        let labels = self.labels();
        for label in labels {
            if label.is_empty() {
                return invalid("empty term".into());
            }
            if label.starts_with(COMPLEMENT_PREFIX) {
                return invalid(format!("`{label}` is a complement; use the plain class"));
            }
        }
        if labels[0] == labels[1] || labels[1] == labels[2] || labels[0] == labels[2] {
            return invalid(format!(
                "terms must be pairwise distinct: {}, {}, {}",
                labels[0], labels[1], labels[2]
            ));
        }
        for (a, b) in [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)] {
            for kind in PropositionType::ALL {
                let p = CategoricalProposition::new(kind, Term::new(labels[a])?, Term::new(labels[b])?)?;
                let text = parser::render(&p);
                let reads_back = parser::translate(&text)
                    .is_ok_and(|t| t.category == PhraseologyCategory::Standard && t.propositions == [p.clone()]);
                if !reads_back {
                    return invalid(format!("`{text}` does not read back as standard form"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerateOptions {
    /// Swap the two premises of a record at random (seeded).
    pub shuffle_premises: bool,
    /// Attach all eight conclusions over the minor and major terms.
    pub candidate_conclusions: bool,
    pub seed: u64,
}

/// Fills every configuration with every triple, in triple order and then
/// configuration order. Record ids are `t<triple index>-<configuration>`.
pub fn generate(
    triples: &[TermTriple],
    interpretation: Interpretation,
    opts: GenerateOptions,
) -> Result<Dataset, DatasetError> {
    for t in triples {
        t.validate()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let configurations = enumerate_configurations();
    let mut records = Vec::with_capacity(triples.len() * configurations.len());
    for (ti, triple) in triples.iter().enumerate() {
        let [s, m, p] = triple.labels().map(|l| Term::new(l).expect("validated"));
        for config in &configurations {
            let syllogism = config.instantiate(&s, &m, &p)?;
            let mut premises = vec![
                parser::render(syllogism.major_premise()),
                parser::render(syllogism.minor_premise()),
            ];
            if opts.shuffle_premises && rng.random::<bool>() {
                premises.swap(0, 1);
            }
            let verdict = validity_by_table(*config, interpretation);
            let candidates = opts.candidate_conclusions.then(|| {
                candidate_conclusions(
                    syllogism.major_premise(),
                    syllogism.minor_premise(),
                    &s,
                    &p,
                    interpretation,
                )
            });
            records.push(DatasetRecord {
                id: format!("t{ti:03}-{config}"),
                premises,
                conclusion: parser::render(syllogism.conclusion()),
                gold: Some(Gold {
                    mood: Some(config.mood),
                    figure: Some(config.figure),
                    label: verdict.status.into(),
                    interpretation,
                    phraseology: vec![PhraseologyCategory::Standard; 3],
                }),
                candidates,
                source: TEMPLATE_SOURCE.to_string(),
            });
        }
    }
    let header = DatasetHeader {
        seed: Some(opts.seed),
        interpretation: Some(interpretation),
        shuffle_premises: opts.shuffle_premises,
        candidate_conclusions: opts.candidate_conclusions,
        ..DatasetHeader::new(records.len())
    };
    Ok(Dataset { header, records })
}

/// The eight conclusions relating the minor and major terms, with the
/// validity of the syllogism each would complete.
fn candidate_conclusions(
    major: &CategoricalProposition,
    minor: &CategoricalProposition,
    s: &Term,
    p: &Term,
    interpretation: Interpretation,
) -> Vec<CandidateConclusion> {
    let mut out = Vec::with_capacity(8);
    for kind in PropositionType::ALL {
        for (subject, predicate) in [(s, p), (p, s)] {
            let conclusion =
                CategoricalProposition::new(kind, subject.clone(), predicate.clone()).expect("distinct terms");
            let label = standard_order(major.clone(), minor.clone(), conclusion.clone())
                .map_or(ValidityLabel::Invalid, |syl| {
                    validity_by_table(syl.configuration(), interpretation).status.into()
                });
            out.push(CandidateConclusion {
                text: parser::render(&conclusion),
                label,
            });
        }
    }
    out
}

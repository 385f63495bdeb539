//! Supplying the unstated proposition of an enthymeme.

use serde::{Deserialize, Serialize};

use crate::error::AnalyzeError;
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::syllogism::Syllogism;
use crate::term::Term;
use crate::validity::{validity_by_table, Interpretation, ValidityStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Missing {
    Major,
    Minor,
    Conclusion,
}

impl Missing {
    pub const ALL: [Missing; 3] = [Missing::Major, Missing::Minor, Missing::Conclusion];

    pub fn as_str(self) -> &'static str {
        match self {
            Missing::Major => "major",
            Missing::Minor => "minor",
            Missing::Conclusion => "conclusion",
        }
    }
}

impl std::str::FromStr for Missing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase();
        Missing::ALL
            .into_iter()
            .find(|m| m.as_str() == wanted || wanted.strip_suffix(" premise") == Some(m.as_str()))
            .ok_or_else(|| format!("unknown role `{s}` (expected major, minor or conclusion)"))
    }
}

/// Two stated propositions of a syllogism and the role of the third.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enthymeme {
    pub missing: Missing,
    /// The stated propositions in the order major premise, minor premise,
    /// conclusion, skipping the missing one.
    pub given: [CategoricalProposition; 2],
}

impl Enthymeme {
    pub fn new(missing: Missing, first: CategoricalProposition, second: CategoricalProposition) -> Self {
        Enthymeme {
            missing,
            given: [first, second],
        }
    }

    fn assemble(&self, candidate: CategoricalProposition) -> Option<Syllogism> {
        let [a, b] = self.given.clone();
        let (major, minor, conclusion) = match self.missing {
            Missing::Major => (candidate, a, b),
            Missing::Minor => (a, candidate, b),
            Missing::Conclusion => (a, b, candidate),
        };
        Syllogism::new(major, minor, conclusion).ok()
    }
}

/// Every proposition that completes the enthymeme into a syllogism valid
/// under `interpretation`, each stated proposition keeping its role.
///
/// Candidates range over the two terms not shared by the stated
/// propositions: the four types in order A, E, I, O, each first in the
/// orientation of the first figure and then reversed.
pub fn complete_enthymeme(
    enthymeme: &Enthymeme,
    interpretation: Interpretation,
) -> Result<Vec<CategoricalProposition>, AnalyzeError> {
    let (first, second) = unshared_terms(enthymeme)?;
    let mut out = Vec::new();
    for kind in PropositionType::ALL {
        for (subject, predicate) in [(&first, &second), (&second, &first)] {
            let candidate = CategoricalProposition::new(kind, subject.clone(), predicate.clone())?;
            let Some(syllogism) = enthymeme.assemble(candidate.clone()) else {
                continue;
            };
            if validity_by_table(syllogism.configuration(), interpretation).status == ValidityStatus::Valid {
                out.push(candidate);
            }
        }
    }
    Ok(out)
}

/// The two terms the missing proposition must relate, in first-figure
/// orientation (subject first).
fn unshared_terms(enthymeme: &Enthymeme) -> Result<(Term, Term), AnalyzeError> {
    let [a, b] = &enthymeme.given;
    let shared: Vec<&Term> = a.terms().into_iter().filter(|t| b.mentions(t)).collect();
    if shared.len() != 1 {
        return Err(AnalyzeError::StructureMismatch { shared: shared.len() });
    }
    let shared = shared[0];
    let other = |p: &CategoricalProposition| {
        if p.subject() == shared {
            p.predicate().clone()
        } else {
            p.subject().clone()
        }
    };
    let mismatch = || AnalyzeError::StructureMismatch { shared: 1 };
    match enthymeme.missing {
        // minor premise and conclusion share the minor term
        Missing::Major => {
            if b.subject() != shared {
                return Err(mismatch());
            }
            Ok((other(a), b.predicate().clone()))
        }
        // major premise and conclusion share the major term
        Missing::Minor => {
            if b.predicate() != shared {
                return Err(mismatch());
            }
            Ok((b.subject().clone(), other(a)))
        }
        // the premises share the middle term
        Missing::Conclusion => Ok((other(b), other(a))),
    }
}

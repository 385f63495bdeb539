//! Decomposing a sorites into a chain of syllogisms.

use crate::error::AnalyzeError;
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::syllogism::{distinct_terms, Syllogism};
use crate::term::Term;
use crate::validity::{validity_by_table, Interpretation, ValidityStatus};

/// Largest number of premises searched.
pub const MAX_SORITES_PREMISES: usize = 6;

/// Finds an ordering of `premises` and intermediate conclusions such that
/// each step is a syllogism valid under `interpretation`, the first step
/// combines two premises, every later step combines the previous
/// conclusion with the next premise, and the last step concludes
/// `conclusion`.
///
/// Orderings are tried lexicographically by premise index and
/// intermediate conclusions in the order A, E, I, O, each first with the
/// term carried over from the previous step as subject; the first chain
/// found is returned.
pub fn decompose_sorites(
    premises: &[CategoricalProposition],
    conclusion: &CategoricalProposition,
    interpretation: Interpretation,
) -> Result<Vec<Syllogism>, AnalyzeError> {
    let n = premises.len();
    if !(2..=MAX_SORITES_PREMISES).contains(&n) {
        return Err(AnalyzeError::SoritesSize(n));
    }
    let found = distinct_terms(premises.iter().chain([conclusion])).len();
    if found != n + 1 {
        return Err(AnalyzeError::TermCountMismatch { expected: n + 1, found });
    }
    let search = Search {
        premises,
        conclusion,
        interpretation,
    };
    let mut used = vec![false; n];
    for first in 0..n {
        used[first] = true;
        let mut chain = Vec::with_capacity(n - 1);
        if search.extend(&premises[first], &mut used, &mut chain) {
            return Ok(chain);
        }
        used[first] = false;
    }
    Err(AnalyzeError::NoValidChain)
}

struct Search<'a> {
    premises: &'a [CategoricalProposition],
    conclusion: &'a CategoricalProposition,
    interpretation: Interpretation,
}

impl Search<'_> {
    fn extend(&self, current: &CategoricalProposition, used: &mut [bool], chain: &mut Vec<Syllogism>) -> bool {
        let remaining = used.iter().filter(|u| !**u).count();
        if remaining == 0 {
            return current == self.conclusion;
        }
        for next in 0..self.premises.len() {
            if used[next] {
                continue;
            }
            let premise = &self.premises[next];
            used[next] = true;
            for step in self.steps(current, premise, remaining == 1) {
                let intermediate = step.conclusion().clone();
                chain.push(step);
                if self.extend(&intermediate, used, chain) {
                    return true;
                }
                chain.pop();
            }
            used[next] = false;
        }
        false
    }

    /// Valid syllogisms with premises `a` and `b` in either role.
    fn steps(&self, a: &CategoricalProposition, b: &CategoricalProposition, last: bool) -> Vec<Syllogism> {
        let shared: Vec<&Term> = a.terms().into_iter().filter(|t| b.mentions(t)).collect();
        let [middle] = shared[..] else {
            return Vec::new();
        };
        let other = |p: &CategoricalProposition| {
            if p.subject() == middle {
                p.predicate().clone()
            } else {
                p.subject().clone()
            }
        };
        let (x, y) = (other(a), other(b));
        let candidates: Vec<CategoricalProposition> = if last {
            vec![self.conclusion.clone()]
        } else {
            PropositionType::ALL
                .into_iter()
                .flat_map(|kind| [(kind, &x, &y), (kind, &y, &x)])
                .filter_map(|(kind, s, p)| CategoricalProposition::new(kind, s.clone(), p.clone()).ok())
                .collect()
        };
        let mut out = Vec::new();
        for c in candidates {
            // the premise holding the conclusion's predicate is the major
            let syllogism = if a.mentions(c.predicate()) {
                Syllogism::new(a.clone(), b.clone(), c)
            } else {
                Syllogism::new(b.clone(), a.clone(), c)
            };
            let Ok(s) = syllogism else { continue };
            if validity_by_table(s.configuration(), self.interpretation).status == ValidityStatus::Valid {
                out.push(s);
            }
        }
        out
    }
}

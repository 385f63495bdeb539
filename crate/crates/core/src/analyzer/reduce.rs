//! Reducing the number of terms in a set of propositions.
//!
//! Two devices are available: replacing synonyms by a single label, and
//! rewriting a proposition into an equivalent one through conversion,
//! obversion and contraposition so that a class and its complement collapse
//! into one term.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::AnalyzeError;
use crate::proposition::CategoricalProposition;
use crate::semantics;
use crate::term::{normalize_label, Term};

/// Maximum number of chained immediate inferences tried per proposition.
pub const MAX_INFERENCE_DEPTH: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Inference {
    Conversion,
    Obversion,
    Contraposition,
}

impl Inference {
    pub const ALL: [Inference; 3] = [Inference::Conversion, Inference::Obversion, Inference::Contraposition];

    fn apply(self, p: &CategoricalProposition) -> Option<CategoricalProposition> {
        match self {
            Inference::Conversion => p.convert().ok(),
            Inference::Obversion => Some(p.obvert()),
            Inference::Contraposition => p.contrapose().ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum ReductionStep {
    Synonym {
        from: String,
        to: String,
    },
    Rewrite {
        index: usize,
        from: CategoricalProposition,
        to: CategoricalProposition,
        via: Vec<Inference>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub propositions: Vec<CategoricalProposition>,
    pub trace: Vec<ReductionStep>,
}

/// Rewrites `props` so that they mention exactly three terms.
pub fn reduce_terms(
    props: &[CategoricalProposition],
    synonyms: &BTreeMap<String, String>,
) -> Result<Reduction, AnalyzeError> {
    reduce_terms_to(props, synonyms, 3)
}

/// Rewrites `props` so that they mention exactly `target` terms, no label
/// occurring both plain and complemented.
///
/// Every rewritten proposition is checked to have the same models as the
/// one it replaces. When several variant sets qualify, the one with the
/// fewest complemented terms wins, then the one rewriting the fewest
/// propositions, then the first in enumeration order (earlier
/// propositions vary slowest, variants are ordered by inference depth).
pub fn reduce_terms_to(
    props: &[CategoricalProposition],
    synonyms: &BTreeMap<String, String>,
    target: usize,
) -> Result<Reduction, AnalyzeError> {
    let resolved = resolve_synonyms(synonyms)?;
    let mut trace = Vec::new();
    let mut used: BTreeSet<(String, String)> = BTreeSet::new();
    let mut substituted = Vec::with_capacity(props.len());
    for p in props {
        let q = p.map_terms(|t| match resolved.get(t.label()) {
            Some(to) => {
                used.insert((t.label().to_string(), to.clone()));
                t.with_label(to)
            }
            None => t.clone(),
        })?;
        substituted.push(q);
    }
    trace.extend(used.into_iter().map(|(from, to)| ReductionStep::Synonym { from, to }));

    let variants: Vec<Vec<(CategoricalProposition, Vec<Inference>)>> = substituted.iter().map(variants).collect();
    let mut search = Search {
        variants: &variants,
        target,
        choice: Vec::with_capacity(props.len()),
        best: None,
    };
    search.run();
    let Some((_, choice)) = search.best else {
        return Err(AnalyzeError::IrreducibleTerms {
            target,
            found: crate::syllogism::distinct_terms(&substituted).len(),
        });
    };
    let mut out = Vec::with_capacity(props.len());
    for (index, (&k, original)) in choice.iter().zip(&substituted).enumerate() {
        let (variant, via) = &variants[index][k];
        if !via.is_empty() {
            trace.push(ReductionStep::Rewrite {
                index,
                from: original.clone(),
                to: variant.clone(),
                via: via.clone(),
            });
        }
        out.push(variant.clone());
    }
    Ok(Reduction {
        propositions: out,
        trace,
    })
}

/// Follows each synonym chain to its end.
fn resolve_synonyms(synonyms: &BTreeMap<String, String>) -> Result<BTreeMap<String, String>, AnalyzeError> {
    let map: BTreeMap<String, String> = synonyms
        .iter()
        .map(|(k, v)| (normalize_label(k), normalize_label(v)))
        .filter(|(k, v)| k != v)
        .collect();
    let mut resolved = BTreeMap::new();
    for start in map.keys() {
        let mut seen = BTreeSet::from([start.clone()]);
        let mut current = start;
        while let Some(next) = map.get(current) {
            if !seen.insert(next.clone()) {
                return Err(AnalyzeError::SynonymCycle(start.clone()));
            }
            current = next;
        }
        resolved.insert(start.clone(), current.clone());
    }
    Ok(resolved)
}

/// Equivalent rewrites of `p` reachable in at most [`MAX_INFERENCE_DEPTH`]
/// steps, breadth first, starting with `p` itself.
fn variants(p: &CategoricalProposition) -> Vec<(CategoricalProposition, Vec<Inference>)> {
    let mut out = vec![(p.clone(), Vec::new())];
    let mut frontier = 0;
    for _ in 0..MAX_INFERENCE_DEPTH {
        let end = out.len();
        for i in frontier..end {
            for inference in Inference::ALL {
                let Some(next) = inference.apply(&out[i].0) else {
                    continue;
                };
                if out.iter().any(|(q, _)| *q == next) || semantics::equivalent(p, &next) != Some(true) {
                    continue;
                }
                let mut via = out[i].1.clone();
                via.push(inference);
                out.push((next, via));
            }
        }
        frontier = end;
    }
    out
}

type Variants = [Vec<(CategoricalProposition, Vec<Inference>)>];

/// Cost of a complete choice: complemented terms, then rewritten
/// propositions. Lower is preferred; ties keep the earlier choice.
type Cost = (usize, usize);

struct Search<'a> {
    variants: &'a Variants,
    target: usize,
    choice: Vec<usize>,
    best: Option<(Cost, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self) {
        let chosen: Vec<&CategoricalProposition> = self
            .choice
            .iter()
            .enumerate()
            .map(|(i, &k)| &self.variants[i][k].0)
            .collect();
        let terms = crate::syllogism::distinct_terms(chosen.iter().copied());
        if terms.len() > self.target {
            return;
        }
        let complemented = terms.iter().filter(|t| t.is_complemented()).count();
        let rewrites = self.choice.iter().filter(|&&k| k != 0).count();
        if self
            .best
            .as_ref()
            .is_some_and(|(best, _)| (complemented, rewrites) >= *best)
        {
            // complemented terms never disappear once chosen
            return;
        }
        if self.choice.len() == self.variants.len() {
            let labels: BTreeSet<&str> = terms.iter().map(Term::label).collect();
            if terms.len() == self.target && labels.len() == self.target {
                self.best = Some(((complemented, rewrites), self.choice.clone()));
            }
            return;
        }
        for k in 0..self.variants[self.choice.len()].len() {
            self.choice.push(k);
            self.run();
            self.choice.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proposition::PropositionType::{self, *};

    fn prop(kind: PropositionType, s: &str, p: &str) -> CategoricalProposition {
        CategoricalProposition::parse_terms(kind, s, p).unwrap()
    }

    #[test]
    fn synonym_substitution() {
        let props = [
            prop(A, "mammals", "animals"),
            prop(A, "dogs", "mammals"),
            prop(A, "dogs", "creatures"),
        ];
        let synonyms = BTreeMap::from([("creatures".to_string(), "animals".to_string())]);
        let r = reduce_terms(&props, &synonyms).unwrap();
        assert_eq!(r.propositions[2], prop(A, "dogs", "animals"));
        assert_eq!(
            r.trace,
            [ReductionStep::Synonym {
                from: "creatures".into(),
                to: "animals".into()
            }]
        );
    }

    #[test]
    fn synonym_chains_and_cycles() {
        let chain = BTreeMap::from([("a".to_string(), "b".to_string()), ("b".to_string(), "c".to_string())]);
        assert_eq!(resolve_synonyms(&chain).unwrap()["a"], "c");
        let cycle = BTreeMap::from([("a".to_string(), "b".to_string()), ("b".to_string(), "a".to_string())]);
        assert!(matches!(resolve_synonyms(&cycle), Err(AnalyzeError::SynonymCycle(_))));
    }

    #[test]
    fn complement_collapses_by_obversion() {
        let props = [prop(E, "s", "non-p"), prop(A, "m", "p"), prop(A, "s", "m")];
        let r = reduce_terms(&props, &BTreeMap::new()).unwrap();
        assert_eq!(r.propositions[0], prop(A, "s", "p"));
        assert!(matches!(&r.trace[0], ReductionStep::Rewrite { via, .. } if via == &[Inference::Obversion]));
        for (a, b) in props.iter().zip(&r.propositions) {
            assert_eq!(semantics::equivalent(a, b), Some(true));
        }
    }

    #[test]
    fn already_reduced_is_untouched() {
        let props = [prop(A, "m", "p"), prop(A, "s", "m"), prop(A, "s", "p")];
        let r = reduce_terms(&props, &BTreeMap::new()).unwrap();
        assert_eq!(r.propositions, props);
        assert!(r.trace.is_empty());
    }

    #[test]
    fn unrelated_terms_are_irreducible() {
        let props = [prop(A, "a", "b"), prop(A, "c", "d"), prop(A, "a", "d")];
        assert_eq!(
            reduce_terms(&props, &BTreeMap::new()).unwrap_err(),
            AnalyzeError::IrreducibleTerms { target: 3, found: 4 }
        );
    }

    #[test]
    fn variants_are_equivalent_and_bounded() {
        for kind in PropositionType::ALL {
            let p = prop(kind, "s", "p");
            let vs = variants(&p);
            assert!(vs.len() > 1);
            assert!(vs
                .iter()
                .all(|(q, via)| semantics::equivalent(&p, q) == Some(true) && via.len() <= 3));
        }
    }
}

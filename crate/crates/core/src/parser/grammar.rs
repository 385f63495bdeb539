//! The standard-form grammar.
//!
//! ```text
//! proposition = quantifier subject copula [ "not" ] predicate [ "." ]
//! quantifier  = "all" | "no" | "some"
//! copula      = "are" | "is"
//! subject     = term
//! predicate   = term
//! term        = [ article ] word { word }      (no copula word inside)
//! ```
//!
//! Only four quantifier/negation combinations are legal: `all … are` (A),
//! `no … are` (E), `some … are` (I) and `some … are not` (O). Matching is
//! case-insensitive. A leading indefinite article (`a`, `an`) marks a
//! singular noun, which is folded to its plural; `the` is dropped.

use crate::error::ParseError;
use crate::parser::lexicon::{self, INDEFINITE_ARTICLES, STANDARD_COPULAS};
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::term::Term;

/// Lowercased words; sentence punctuation is dropped and commas become
/// their own `,` tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for raw in text.split_whitespace() {
        let word = raw.trim_start_matches(['"', '\'', '(']);
        let mut trailing_comma = false;
        let mut word = word;
        while let Some(last) = word.chars().last() {
            if ".!?;:\"')".contains(last) {
                word = &word[..word.len() - last.len_utf8()];
            } else if last == ',' {
                trailing_comma = true;
                word = &word[..word.len() - 1];
            } else {
                break;
            }
        }
        if !word.is_empty() {
            out.push(word.to_lowercase());
        }
        if trailing_comma {
            out.push(",".to_string());
        }
    }
    out
}

/// Parses a statement in the controlled standard-form grammar.
pub fn parse_standard(text: &str) -> Result<CategoricalProposition, ParseError> {
    parse_standard_tokens(&tokenize(text))
}

pub(crate) fn parse_standard_tokens(tokens: &[String]) -> Result<CategoricalProposition, ParseError> {
    let unexpected = |position: usize| ParseError::NotStandardForm {
        position,
        found: tokens
            .get(position)
            .map_or_else(|| "end of input".to_string(), |t| format!("`{t}`")),
    };
    let quantifier = tokens.first().ok_or_else(|| unexpected(0))?;
    if !matches!(quantifier.as_str(), "all" | "no" | "some") {
        return Err(unexpected(0));
    }
    if let Some(comma) = tokens.iter().position(|t| t == ",") {
        return Err(unexpected(comma));
    }
    let copula = tokens
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, t)| STANDARD_COPULAS.contains(&t.as_str()))
        .map(|(i, _)| i)
        .ok_or_else(|| unexpected(tokens.len()))?;
    if copula == 1 {
        return Err(unexpected(1));
    }
    let negated = tokens.get(copula + 1).is_some_and(|t| t == "not");
    let predicate_start = copula + 1 + usize::from(negated);
    if predicate_start >= tokens.len() {
        return Err(unexpected(tokens.len()));
    }
    let kind = match (quantifier.as_str(), negated) {
        ("all", false) => PropositionType::A,
        ("no", false) => PropositionType::E,
        ("some", false) => PropositionType::I,
        ("some", true) => PropositionType::O,
        _ => return Err(unexpected(copula + 1)),
    };
    let subject = noun_term(&tokens[1..copula]).ok_or_else(|| unexpected(1))?;
    let predicate = noun_term(&tokens[predicate_start..]).ok_or_else(|| unexpected(predicate_start))?;
    Ok(CategoricalProposition::new(kind, subject, predicate)?)
}

/// Canonical term for a noun phrase: leading article stripped, and the last
/// word pluralized when the article was indefinite.
pub(crate) fn noun_term(words: &[String]) -> Option<Term> {
    let label = noun_label(words)?;
    Term::new(&label).ok()
}

pub(crate) fn noun_label(words: &[String]) -> Option<String> {
    let (first, rest) = words.split_first()?;
    if lexicon::is_article(first) {
        let (last, init) = rest.split_last()?;
        let mut out: Vec<String> = init.to_vec();
        if INDEFINITE_ARTICLES.contains(&first.as_str()) {
            out.push(lexicon::pluralize(last));
        } else {
            out.push(last.clone());
        }
        Some(out.join(" "))
    } else {
        Some(words.join(" "))
    }
}

/// The standard-form sentence for a proposition.
pub fn render(p: &CategoricalProposition) -> String {
    let (quantifier, negation) = match p.kind() {
        PropositionType::A => ("All", ""),
        PropositionType::E => ("No", ""),
        PropositionType::I => ("Some", ""),
        PropositionType::O => ("Some", "not "),
    };
    format!("{quantifier} {} are {negation}{}.", p.subject(), p.predicate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use PropositionType::*;

    fn prop(kind: PropositionType, s: &str, p: &str) -> CategoricalProposition {
        CategoricalProposition::parse_terms(kind, s, p).unwrap()
    }

    #[test]
    fn tokenizer() {
        assert_eq!(
            tokenize("If it rains, then  it's WET."),
            ["if", "it", "rains", ",", "then", "it's", "wet"]
        );
        assert!(tokenize("  ").is_empty());
    }

    #[test]
    fn four_forms() {
        assert_eq!(
            parse_standard("All Greeks are humans.").unwrap(),
            prop(A, "greeks", "humans")
        );
        assert_eq!(parse_standard("No S is P.").unwrap(), prop(E, "s", "p"));
        assert_eq!(parse_standard("Some S is P").unwrap(), prop(I, "s", "p"));
        assert_eq!(parse_standard("Some S is not P.").unwrap(), prop(O, "s", "p"));
    }

    #[test]
    fn articles_and_plurals() {
        assert_eq!(
            parse_standard("Some dog is a mammal.").unwrap(),
            prop(I, "dog", "mammals")
        );
        assert_eq!(
            parse_standard("All the voters are citizens").unwrap(),
            prop(A, "voters", "citizens")
        );
        assert_eq!(parse_standard("No s are non-p.").unwrap(), prop(E, "s", "non-p"));
    }

    #[test]
    fn rejects_outside_grammar() {
        let err = parse_standard("Few dogs bite.").unwrap_err();
        assert_eq!(
            err,
            ParseError::NotStandardForm {
                position: 0,
                found: "`few`".into()
            }
        );
        let err = parse_standard("All dogs are not cats").unwrap_err();
        assert_eq!(
            err,
            ParseError::NotStandardForm {
                position: 3,
                found: "`not`".into()
            }
        );
        assert!(matches!(
            parse_standard("No dogs are not cats"),
            Err(ParseError::NotStandardForm { position: 3, .. })
        ));
        assert!(matches!(
            parse_standard("All dogs bark"),
            Err(ParseError::NotStandardForm { position: 3, .. })
        ));
        assert!(matches!(
            parse_standard("All are dogs"),
            Err(ParseError::NotStandardForm { position: 1, .. })
        ));
        assert!(matches!(
            parse_standard("Some dogs are"),
            Err(ParseError::NotStandardForm { position: 3, .. })
        ));
        assert!(matches!(
            parse_standard(""),
            Err(ParseError::NotStandardForm { position: 0, .. })
        ));
        assert!(matches!(parse_standard("All dogs are dogs"), Err(ParseError::Logic(_))));
    }

    #[test]
    fn render_templates() {
        assert_eq!(render(&prop(A, "s", "p")), "All s are p.");
        assert_eq!(render(&prop(O, "s", "p")), "Some s are not p.");
        assert_eq!(render(&prop(E, "s", "non-p")), "No s are non-p.");
    }
}

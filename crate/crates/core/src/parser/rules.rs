//! Cue detection and the translation rule table.

use crate::parser::grammar::{noun_label, parse_standard_tokens};
use crate::parser::lexicon::{self, OTHER_COPULAS, SINGULAR_COPULAS};
use crate::parser::{PhraseologyCategory, TraceStep};
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::term::Term;

pub(crate) type RuleOutput = Result<(Vec<CategoricalProposition>, Vec<TraceStep>), String>;

/// Quantifier-like leading words that rule out the singular and
/// unexpressed-quantifier readings.
const RESERVED_LEADS: &[&str] = &[
    "all",
    "no",
    "some",
    "only",
    "none",
    "if",
    "not",
    "few",
    "a",
    "an",
    "every",
    "each",
    "any",
    "many",
    "most",
    "several",
    "anyone",
    "anybody",
    "whoever",
    "whatever",
    "everyone",
    "everybody",
    "everything",
    "anything",
    "nobody",
    "nothing",
    "someone",
    "somebody",
    "something",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NsqCue {
    NotEvery,
    NotAll,
    AFew,
    Few,
    Every,
    Many,
    AnyPerson,
    AnyThing,
    NoPerson,
    NoThing,
    SomePerson,
    SomeThing,
}

impl NsqCue {
    fn detect(tokens: &[String]) -> Option<(NsqCue, usize)> {
        let t0 = tokens.first()?.as_str();
        let t1 = tokens.get(1).map(String::as_str);
        let cue = match (t0, t1) {
            ("not", Some("every")) => (NsqCue::NotEvery, 2),
            ("not", Some("all")) => (NsqCue::NotAll, 2),
            ("a", Some("few")) => (NsqCue::AFew, 2),
            ("no", Some("one")) => (NsqCue::NoPerson, 2),
            ("few", _) => (NsqCue::Few, 1),
            ("every" | "each" | "any", _) => (NsqCue::Every, 1),
            ("many" | "most" | "several", _) => (NsqCue::Many, 1),
            ("anyone" | "anybody" | "whoever" | "everyone" | "everybody", _) => (NsqCue::AnyPerson, 1),
            ("everything" | "anything" | "whatever", _) => (NsqCue::AnyThing, 1),
            ("nobody", _) => (NsqCue::NoPerson, 1),
            ("nothing", _) => (NsqCue::NoThing, 1),
            ("someone" | "somebody", _) => (NsqCue::SomePerson, 1),
            ("something", _) => (NsqCue::SomeThing, 1),
            _ => return None,
        };
        Some(cue)
    }

    /// Proposition types for the affirmative and negated main clause.
    fn kinds(self, negated: bool) -> Result<Vec<PropositionType>, String> {
        use PropositionType::*;
        let kinds = match (self, negated) {
            (NsqCue::NotEvery | NsqCue::NotAll, false) => vec![O],
            (NsqCue::AFew | NsqCue::Many | NsqCue::SomePerson | NsqCue::SomeThing, false) => {
                vec![I]
            }
            (NsqCue::AFew | NsqCue::Many | NsqCue::SomePerson | NsqCue::SomeThing, true) => vec![O],
            (NsqCue::Few, false) => vec![I, O],
            (NsqCue::Few, true) => vec![O, I],
            (NsqCue::Every | NsqCue::AnyPerson | NsqCue::AnyThing, false) => vec![A],
            (NsqCue::AnyPerson | NsqCue::AnyThing, true) => vec![E],
            (NsqCue::NoPerson | NsqCue::NoThing, false) => vec![E],
            _ => return Err("negation makes the quantifier ambiguous".into()),
        };
        Ok(kinds)
    }

    /// Class quantified over when no explicit noun follows the cue.
    fn default_class(self) -> Option<&'static str> {
        match self {
            NsqCue::AnyPerson | NsqCue::NoPerson | NsqCue::SomePerson => Some("persons"),
            NsqCue::AnyThing | NsqCue::NoThing | NsqCue::SomeThing => Some("things"),
            _ => None,
        }
    }

    fn singular_subject(self) -> bool {
        matches!(self, NsqCue::NotEvery | NsqCue::Every)
    }
}

/// A clause split at its main verb.
#[derive(Debug, Clone)]
pub(crate) struct Clause<'a> {
    pub subject: &'a [String],
    /// `None` for a clause whose predicate is a non-copular verb phrase.
    pub copula: Option<&'a str>,
    pub negated: bool,
    pub predicate: &'a [String],
}

/// Splits at the first form of "to be"; failing that, after the first
/// plural-looking word (or the first word), treating the rest as a verb
/// phrase with optional do-support negation.
pub(crate) fn split_clause(tokens: &[String]) -> Option<Clause<'_>> {
    if tokens.iter().any(|t| t == ",") {
        return None;
    }
    if let Some(i) = tokens.iter().skip(1).position(|t| lexicon::is_copula(t)).map(|i| i + 1) {
        let negated = tokens.get(i + 1).is_some_and(|t| t == "not");
        let predicate = &tokens[i + 1 + usize::from(negated)..];
        if predicate.is_empty() {
            return None;
        }
        return Some(Clause {
            subject: &tokens[..i],
            copula: Some(tokens[i].as_str()),
            negated,
            predicate,
        });
    }
    let end = tokens.iter().position(|t| lexicon::looks_plural(t)).unwrap_or(0);
    let (subject, rest) = tokens.split_at(end + 1);
    let (negated, predicate) = strip_do_not(rest);
    if predicate.is_empty() || subject.is_empty() {
        return None;
    }
    Some(Clause {
        subject,
        copula: None,
        negated,
        predicate,
    })
}

fn strip_do_not(rest: &[String]) -> (bool, &[String]) {
    let words: Vec<&str> = rest.iter().take(2).map(String::as_str).collect();
    match words.as_slice() {
        ["do" | "does" | "did", "not", ..] => (true, &rest[2..]),
        ["don't" | "doesn't" | "didn't" | "cannot" | "can't", ..] => (true, &rest[1..]),
        _ => (false, rest),
    }
}

/// Parameter noun for adjective and verb predicates about `subject`.
fn parameter_for(subject: &str) -> &'static str {
    if lexicon::is_person_noun(subject) {
        "people"
    } else {
        "things"
    }
}

/// Canonical predicate class and whether the predicate rule was needed.
fn predicate_term(clause: &Clause<'_>, parameter: &str) -> Result<(Term, bool), String> {
    let words = clause.predicate;
    let term = |label: &str| Term::new(label).map_err(|e| e.to_string());
    match clause.copula {
        Some(copula) => {
            let other_form = OTHER_COPULAS.contains(&copula);
            if words.len() == 1 && lexicon::is_adjective(&words[0]) {
                Ok((term(&format!("{}-{parameter}", words[0]))?, true))
            } else {
                let label = noun_label(words).ok_or("empty predicate")?;
                Ok((term(&label)?, other_form))
            }
        }
        None => {
            let relative = if parameter == "people" { "who" } else { "that" };
            Ok((term(&format!("{parameter}-{relative}-{}", words.join("-")))?, true))
        }
    }
}

fn subject_term(words: &[String], singular: bool) -> Result<Term, String> {
    let mut label = noun_label(words).ok_or("missing subject")?;
    if singular && !lexicon::is_article(&words[0]) {
        if let Some(last) = words.last().filter(|w| !lexicon::looks_plural(w)) {
            let head = &label[..label.len() - last.len()];
            label = format!("{head}{}", lexicon::pluralize(last));
        }
    }
    Term::new(&label).map_err(|e| e.to_string())
}

fn prop(kind: PropositionType, subject: Term, predicate: Term) -> Result<CategoricalProposition, String> {
    CategoricalProposition::new(kind, subject, predicate).map_err(|e| e.to_string())
}

fn word(tokens: &[String], i: usize) -> &str {
    tokens.get(i).map_or("", String::as_str)
}

// Classification.

pub(crate) fn classify(tokens: &[String]) -> PhraseologyCategory {
    use PhraseologyCategory::*;
    let (t0, t1) = (word(tokens, 0), word(tokens, 1));
    if matches!(t0, "all" | "everyone" | "everybody" | "everything") && matches!(t1, "except" | "but") {
        Exceptive
    } else if t0 == "only" || (t0 == "none" && matches!(t1, "but" | "except")) {
        Exclusive
    } else if t0 == "if" {
        Conditional
    } else if NsqCue::detect(tokens).is_some() {
        NonstandardQuantifier
    } else if is_singular(tokens) {
        Singular
    } else if is_standard(tokens) {
        Standard
    } else if is_nonstandard_predicate(tokens) {
        NonstandardPredicate
    } else if is_unexpressed(tokens) {
        UnexpressedQuantifier
    } else {
        Other
    }
}

fn unquantified(tokens: &[String]) -> bool {
    !RESERVED_LEADS.contains(&word(tokens, 0))
}

fn is_singular(tokens: &[String]) -> bool {
    unquantified(tokens)
        && split_clause(tokens)
            .is_some_and(|c| c.copula.is_some_and(|k| SINGULAR_COPULAS.contains(&k)) && c.subject.len() <= 4)
}

fn is_standard(tokens: &[String]) -> bool {
    parse_standard_tokens(tokens).is_ok() && !adjective_predicate(tokens)
}

fn adjective_predicate(tokens: &[String]) -> bool {
    split_clause(tokens).is_some_and(|c| c.predicate.len() == 1 && lexicon::is_adjective(&c.predicate[0]))
}

fn is_nonstandard_predicate(tokens: &[String]) -> bool {
    let t0 = word(tokens, 0);
    if !matches!(t0, "all" | "no" | "some") {
        return false;
    }
    let Some(clause) = split_clause(&tokens[1..]) else {
        return false;
    };
    if clause.negated && t0 != "some" {
        return false;
    }
    let other_copula = clause.copula.is_some_and(|k| OTHER_COPULAS.contains(&k));
    clause.copula.is_none() || other_copula || adjective_predicate(tokens)
}

fn is_unexpressed(tokens: &[String]) -> bool {
    unquantified(tokens)
        && split_clause(tokens).is_some_and(|c| match c.copula {
            Some(k) => matches!(k, "are" | "were"),
            None => c.subject.last().is_some_and(|w| lexicon::looks_plural(w)),
        })
}

// Translation rules. Each returns the propositions plus the trace steps.

pub(crate) fn standard(tokens: &[String]) -> RuleOutput {
    let p = parse_standard_tokens(tokens).map_err(|e| e.to_string())?;
    Ok((vec![p], vec![TraceStep::Standard]))
}

pub(crate) fn nonstandard_predicate(tokens: &[String]) -> RuleOutput {
    let clause = split_clause(&tokens[1..]).ok_or("no main verb")?;
    let kind = match (word(tokens, 0), clause.negated) {
        ("all", false) => PropositionType::A,
        ("no", false) => PropositionType::E,
        ("some", false) => PropositionType::I,
        ("some", true) => PropositionType::O,
        _ => return Err("negated universal is ambiguous".into()),
    };
    let subject = subject_term(clause.subject, false)?;
    let (predicate, _) = predicate_term(&clause, parameter_for(subject.label()))?;
    Ok((
        vec![prop(kind, subject, predicate)?],
        vec![TraceStep::NonstandardPredicate],
    ))
}

pub(crate) fn singular(tokens: &[String]) -> RuleOutput {
    let clause = split_clause(tokens).ok_or("no copula")?;
    let (class, name) = match clause.subject.split_first() {
        Some((first, rest)) if lexicon::DEMONSTRATIVES.contains(&first.as_str()) && !rest.is_empty() => {
            ("things", rest)
        }
        _ => ("persons", clause.subject),
    };
    let subject = Term::new(&format!("{class}-identical-to-{}", name.join("-"))).map_err(|e| e.to_string())?;
    let parameter = if class == "persons" { "people" } else { "things" };
    let (predicate, used_pred) = predicate_term(&clause, parameter)?;
    let kind = if clause.negated {
        PropositionType::E
    } else {
        PropositionType::A
    };
    let mut trace = vec![TraceStep::Singular];
    if used_pred {
        trace.push(TraceStep::NonstandardPredicate);
    }
    Ok((vec![prop(kind, subject, predicate)?], trace))
}

pub(crate) fn conditional(tokens: &[String]) -> RuleOutput {
    let rest = &tokens[1..];
    let (antecedent, consequent) = match rest.iter().position(|t| t == "then") {
        Some(j) => {
            let ante = &rest[..j];
            (ante.strip_suffix(&[",".to_string()]).unwrap_or(ante), &rest[j + 1..])
        }
        None => {
            let j = rest
                .iter()
                .position(|t| t == ",")
                .ok_or("no `then` or comma separating the clauses")?;
            (&rest[..j], &rest[j + 1..])
        }
    };
    let ante = split_clause(antecedent).ok_or("antecedent has no main verb")?;
    let cons = split_clause(consequent).ok_or("consequent has no main verb")?;
    let person = |c: &Clause<'_>| {
        let subject = c.subject.join(" ");
        matches!(
            subject.as_str(),
            "someone" | "somebody" | "anyone" | "anybody" | "a person" | "one" | "you" | "he" | "she" | "they"
        )
    };
    let parameter = if person(&ante) { "people" } else { "things" };
    let (mut antecedent_class, _) = predicate_term(&ante, parameter)?;
    if ante.negated {
        antecedent_class = antecedent_class.complement();
    }
    let (consequent_class, _) = predicate_term(&cons, parameter)?;
    let kind = if cons.negated {
        PropositionType::E
    } else {
        PropositionType::A
    };
    Ok((
        vec![prop(kind, antecedent_class, consequent_class)?],
        vec![TraceStep::Conditional],
    ))
}

pub(crate) fn exclusive(tokens: &[String]) -> RuleOutput {
    let cue_len = if word(tokens, 0) == "only" { 1 } else { 2 };
    let clause = split_clause(&tokens[cue_len..]).ok_or("no main verb")?;
    if clause.negated {
        return Err("negated exclusive statements are not in the rule table".into());
    }
    let restricted = subject_term(clause.subject, false)?;
    let (class, used_pred) = predicate_term(&clause, parameter_for(restricted.label()))?;
    let mut trace = vec![TraceStep::Exclusive];
    if used_pred {
        trace.push(TraceStep::NonstandardPredicate);
    }
    Ok((vec![prop(PropositionType::A, class, restricted)?], trace))
}

pub(crate) fn exceptive(tokens: &[String]) -> RuleOutput {
    let clause = split_clause(&tokens[2..]).ok_or("no main verb")?;
    let excepted = subject_term(clause.subject, false)?;
    let parameter = match word(tokens, 0) {
        "everyone" | "everybody" => "people",
        "everything" => "things",
        _ => parameter_for(excepted.label()),
    };
    let (predicate, used_pred) = predicate_term(&clause, parameter)?;
    let (kind_excepted, kind_rest) = if clause.negated {
        (PropositionType::A, PropositionType::E)
    } else {
        (PropositionType::E, PropositionType::A)
    };
    let props = vec![
        prop(kind_excepted, excepted.clone(), predicate.clone())?,
        prop(kind_rest, excepted.complement(), predicate)?,
    ];
    let mut trace = vec![TraceStep::Exceptive];
    if used_pred {
        trace.push(TraceStep::NonstandardPredicate);
    }
    Ok((props, trace))
}

pub(crate) fn nonstandard_quantifier(tokens: &[String]) -> RuleOutput {
    let (cue, cue_len) = NsqCue::detect(tokens).ok_or("no quantifier cue")?;
    let rest = &tokens[cue_len..];
    let (subject, clause) = match cue.default_class() {
        Some(default) => person_or_thing_clause(rest, default)?,
        None => {
            let clause = split_clause(rest).ok_or("no main verb")?;
            (subject_term(clause.subject, cue.singular_subject())?, clause)
        }
    };
    let kinds = cue.kinds(clause.negated)?;
    let (predicate, used_pred) = predicate_term(&clause, parameter_for(subject.label()))?;
    let props = kinds
        .into_iter()
        .map(|k| prop(k, subject.clone(), predicate.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut trace = vec![TraceStep::NonstandardQuantifier];
    if used_pred {
        trace.push(TraceStep::NonstandardPredicate);
    }
    Ok((props, trace))
}

/// "anyone who is a citizen is a voter", "nothing is perfect": an optional
/// relative clause restricts the default class, and the last copula starts
/// the main clause.
fn person_or_thing_clause<'a>(rest: &'a [String], default: &str) -> Result<(Term, Clause<'a>), String> {
    let parameter = if default == "persons" { "people" } else { "things" };
    let has_relative = matches!(word(rest, 0), "who" | "that" | "which");
    let body = if has_relative { &rest[1..] } else { rest };
    let last_copula = body.iter().rposition(|t| lexicon::is_copula(t));
    let relative_end = match last_copula {
        Some(k) if k > 0 => Some(k),
        _ => None,
    };
    let implicit_relative = relative_end.is_some() && lexicon::is_copula(word(body, 0));
    if !(has_relative || implicit_relative) {
        let clause = main_clause(body).ok_or("no main verb")?;
        let subject = Term::new(default).map_err(|e| e.to_string())?;
        return Ok((subject, clause));
    }
    let k = relative_end.ok_or("relative clause without a main copula")?;
    let relative = main_clause(&body[..k]).ok_or("malformed relative clause")?;
    let (subject, _) = predicate_term(&relative, parameter)?;
    if relative.negated {
        return Err("negated relative clauses are not in the rule table".into());
    }
    let clause = main_clause(&body[k..]).ok_or("no main clause")?;
    Ok((subject, clause))
}

/// A clause with no subject: `is not perfect`, `likes taxes`.
fn main_clause(words: &[String]) -> Option<Clause<'_>> {
    let first = words.first()?;
    if lexicon::is_copula(first) {
        let negated = word(words, 1) == "not";
        let predicate = &words[1 + usize::from(negated)..];
        (!predicate.is_empty()).then_some(Clause {
            subject: &[],
            copula: Some(first.as_str()),
            negated,
            predicate,
        })
    } else {
        let (negated, predicate) = strip_do_not(words);
        (!predicate.is_empty()).then_some(Clause {
            subject: &[],
            copula: None,
            negated,
            predicate,
        })
    }
}

pub(crate) fn unexpressed(tokens: &[String]) -> RuleOutput {
    let clause = split_clause(tokens).ok_or("no main verb")?;
    let subject = Term::new(&noun_label(clause.subject).ok_or("missing subject")?).map_err(|e| e.to_string())?;
    let (predicate, used_pred) = predicate_term(&clause, parameter_for(subject.label()))?;
    let kind = if clause.negated {
        PropositionType::O
    } else {
        PropositionType::I
    };
    let mut trace = vec![TraceStep::UnexpressedQuantifier, TraceStep::LowConfidence];
    if used_pred {
        trace.push(TraceStep::NonstandardPredicate);
    }
    Ok((vec![prop(kind, subject, predicate)?], trace))
}

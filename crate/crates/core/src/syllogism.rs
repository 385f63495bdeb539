use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LogicError;
use crate::proposition::{CategoricalProposition, PropositionType};
use crate::term::Term;

/// Role of a term within a syllogism: minor (conclusion subject), middle,
/// or major (conclusion predicate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    S,
    M,
    P,
}

impl Role {
    pub const ALL: [Role; 3] = [Role::S, Role::M, Role::P];
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::S => "S",
            Role::M => "M",
            Role::P => "P",
        })
    }
}

/// Placement of the middle term in the two premises.
///
/// | figure | major | minor |
/// |--------|-------|-------|
/// | 1      | M–P   | S–M   |
/// | 2      | P–M   | S–M   |
/// | 3      | M–P   | M–S   |
/// | 4      | P–M   | M–S   |
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Figure {
    First,
    Second,
    Third,
    Fourth,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::First, Figure::Second, Figure::Third, Figure::Fourth];

    pub fn number(self) -> u8 {
        match self {
            Figure::First => 1,
            Figure::Second => 2,
            Figure::Third => 3,
            Figure::Fourth => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(Figure::First),
            2 => Some(Figure::Second),
            3 => Some(Figure::Third),
            4 => Some(Figure::Fourth),
            _ => None,
        }
    }

    /// Figure from where the middle term sits: subject of the major premise,
    /// subject of the minor premise.
    pub fn from_middle_placement(middle_subject_of_major: bool, middle_subject_of_minor: bool) -> Self {
        match (middle_subject_of_major, middle_subject_of_minor) {
            (true, false) => Figure::First,
            (false, false) => Figure::Second,
            (true, true) => Figure::Third,
            (false, true) => Figure::Fourth,
        }
    }

    pub fn middle_subject_of_major(self) -> bool {
        matches!(self, Figure::First | Figure::Third)
    }

    pub fn middle_subject_of_minor(self) -> bool {
        matches!(self, Figure::Third | Figure::Fourth)
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Figure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

impl<'de> Deserialize<'de> for Figure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = u8::deserialize(deserializer)?;
        Figure::from_number(n).ok_or_else(|| serde::de::Error::custom(format!("figure must be 1-4, got {n}")))
    }
}

/// Letter types of major premise, minor premise and conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mood {
    pub major: PropositionType,
    pub minor: PropositionType,
    pub conclusion: PropositionType,
}

impl Mood {
    pub fn new(major: PropositionType, minor: PropositionType, conclusion: PropositionType) -> Self {
        Mood {
            major,
            minor,
            conclusion,
        }
    }

    /// All 64 moods, AAA first, OOO last.
    pub fn all() -> impl Iterator<Item = Mood> {
        PropositionType::ALL.into_iter().flat_map(|major| {
            PropositionType::ALL.into_iter().flat_map(move |minor| {
                PropositionType::ALL
                    .into_iter()
                    .map(move |conclusion| Mood::new(major, minor, conclusion))
            })
        })
    }
}

impl fmt::Display for Mood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.major, self.minor, self.conclusion)
    }
}

impl FromStr for Mood {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters: Vec<PropositionType> = s.trim().chars().filter_map(PropositionType::from_letter).collect();
        if letters.len() != 3 || s.trim().chars().count() != 3 {
            return Err(LogicError::BadConfiguration(s.to_string()));
        }
        Ok(Mood::new(letters[0], letters[1], letters[2]))
    }
}

impl Serialize for Mood {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Mood {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Mood plus figure; renders as `AAA-1`. Ordered by mood (A<E<I<O,
/// lexicographic) and then figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    pub mood: Mood,
    pub figure: Figure,
}

impl Configuration {
    pub const COUNT: usize = 256;

    pub fn new(mood: Mood, figure: Figure) -> Self {
        Configuration { mood, figure }
    }

    /// Position in [`enumerate_configurations`].
    pub fn index(&self) -> usize {
        let letter = |t: PropositionType| t as usize;
        ((letter(self.mood.major) * 16 + letter(self.mood.minor) * 4 + letter(self.mood.conclusion)) * 4)
            + (self.figure.number() as usize - 1)
    }

    /// Builds the standard-form syllogism of this configuration over the
    /// given minor, middle and major terms.
    pub fn instantiate(&self, minor: &Term, middle: &Term, major: &Term) -> Result<Syllogism, LogicError> {
        let major_premise = if self.figure.middle_subject_of_major() {
            CategoricalProposition::new(self.mood.major, middle.clone(), major.clone())?
        } else {
            CategoricalProposition::new(self.mood.major, major.clone(), middle.clone())?
        };
        let minor_premise = if self.figure.middle_subject_of_minor() {
            CategoricalProposition::new(self.mood.minor, middle.clone(), minor.clone())?
        } else {
            CategoricalProposition::new(self.mood.minor, minor.clone(), middle.clone())?
        };
        let conclusion = CategoricalProposition::new(self.mood.conclusion, minor.clone(), major.clone())?;
        Syllogism::new(major_premise, minor_premise, conclusion)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.mood, self.figure)
    }
}

impl FromStr for Configuration {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LogicError::BadConfiguration(s.to_string());
        let (mood, figure) = s.trim().split_once('-').ok_or_else(bad)?;
        let mood: Mood = mood.parse().map_err(|_| bad())?;
        let figure = figure
            .parse::<u8>()
            .ok()
            .and_then(Figure::from_number)
            .ok_or_else(bad)?;
        Ok(Configuration::new(mood, figure))
    }
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All 256 configurations: AAA-1, AAA-2, …, OOO-4.
pub fn enumerate_configurations() -> Vec<Configuration> {
    Mood::all()
        .flat_map(|mood| {
            Figure::ALL
                .into_iter()
                .map(move |figure| Configuration::new(mood, figure))
        })
        .collect()
}

/// A standard-form categorical syllogism in standard order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Syllogism {
    major_premise: CategoricalProposition,
    minor_premise: CategoricalProposition,
    conclusion: CategoricalProposition,
}

impl Syllogism {
    /// Checks the premises are already in their named roles: the major
    /// premise holds the conclusion's predicate, the minor premise its
    /// subject, and both share a middle term absent from the conclusion.
    pub fn new(
        major_premise: CategoricalProposition,
        minor_premise: CategoricalProposition,
        conclusion: CategoricalProposition,
    ) -> Result<Self, LogicError> {
        let props = [&major_premise, &minor_premise, &conclusion];
        check_three_terms(&props)?;

        let minor = conclusion.subject();
        let major = conclusion.predicate();
        let middle = other_term(&major_premise, major).ok_or_else(|| {
            LogicError::MalformedStructure(format!(
                "major premise {major_premise} does not contain the major term `{major}`"
            ))
        })?;
        if middle == minor {
            return Err(LogicError::MalformedStructure(format!(
                "major premise {major_premise} relates the major and minor terms directly"
            )));
        }
        if !minor_premise.mentions(minor) || !minor_premise.mentions(middle) {
            return Err(LogicError::MalformedStructure(format!(
                "minor premise {minor_premise} must relate the minor term `{minor}` and the middle term `{middle}`"
            )));
        }
        Ok(Syllogism {
            major_premise,
            minor_premise,
            conclusion,
        })
    }

    pub fn major_premise(&self) -> &CategoricalProposition {
        &self.major_premise
    }

    pub fn minor_premise(&self) -> &CategoricalProposition {
        &self.minor_premise
    }

    pub fn conclusion(&self) -> &CategoricalProposition {
        &self.conclusion
    }

    pub fn propositions(&self) -> [&CategoricalProposition; 3] {
        [&self.major_premise, &self.minor_premise, &self.conclusion]
    }

    pub fn minor_term(&self) -> &Term {
        self.conclusion.subject()
    }

    pub fn major_term(&self) -> &Term {
        self.conclusion.predicate()
    }

    pub fn middle_term(&self) -> &Term {
        other_term(&self.major_premise, self.major_term()).expect("checked at construction")
    }

    pub fn term(&self, role: Role) -> &Term {
        match role {
            Role::S => self.minor_term(),
            Role::M => self.middle_term(),
            Role::P => self.major_term(),
        }
    }

    pub fn role_of(&self, term: &Term) -> Option<Role> {
        Role::ALL.into_iter().find(|&r| self.term(r) == term)
    }

    pub fn mood(&self) -> Mood {
        Mood::new(
            self.major_premise.kind(),
            self.minor_premise.kind(),
            self.conclusion.kind(),
        )
    }

    pub fn figure(&self) -> Figure {
        let middle = self.middle_term();
        Figure::from_middle_placement(
            self.major_premise.subject() == middle,
            self.minor_premise.subject() == middle,
        )
    }

    pub fn configuration(&self) -> Configuration {
        Configuration::new(self.mood(), self.figure())
    }
}

/// Arranges two premises given in either order plus a conclusion into a
/// standard-form syllogism. The premise holding the conclusion's predicate
/// becomes the major premise.
pub fn standard_order(
    first: CategoricalProposition,
    second: CategoricalProposition,
    conclusion: CategoricalProposition,
) -> Result<Syllogism, LogicError> {
    check_three_terms(&[&first, &second, &conclusion])?;
    let major = conclusion.predicate();
    let minor = conclusion.subject();
    let looks_major = |p: &CategoricalProposition| p.mentions(major) && !p.mentions(minor);
    if looks_major(&first) {
        Syllogism::new(first, second, conclusion)
    } else if looks_major(&second) {
        Syllogism::new(second, first, conclusion)
    } else {
        Err(LogicError::MalformedStructure(format!(
            "no premise contains the major term `{major}` together with a middle term"
        )))
    }
}

/// Distinct terms across propositions, in first-occurrence order.
pub fn distinct_terms<'a>(props: impl IntoIterator<Item = &'a CategoricalProposition>) -> Vec<Term> {
    let mut seen = Vec::new();
    for p in props {
        for t in p.terms() {
            if !seen.contains(t) {
                seen.push(t.clone());
            }
        }
    }
    seen
}

fn check_three_terms(props: &[&CategoricalProposition]) -> Result<(), LogicError> {
    let terms = distinct_terms(props.iter().copied());
    if terms.len() != 3 {
        return Err(LogicError::TooManyTerms { found: terms.len() });
    }
    let labels: BTreeSet<&str> = terms.iter().map(Term::label).collect();
    if labels.len() != 3 {
        return Err(LogicError::MalformedStructure(
            "a term and its complement both occur; reduce the terms first".into(),
        ));
    }
    Ok(())
}

fn other_term<'a>(p: &'a CategoricalProposition, t: &Term) -> Option<&'a Term> {
    if p.subject() == t {
        Some(p.predicate())
    } else if p.predicate() == t {
        Some(p.subject())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PropositionType::*;

    fn prop(kind: PropositionType, s: &str, p: &str) -> CategoricalProposition {
        CategoricalProposition::parse_terms(kind, s, p).unwrap()
    }

    fn greeks() -> (CategoricalProposition, CategoricalProposition, CategoricalProposition) {
        (
            prop(A, "greeks", "humans"),
            prop(A, "athenians", "greeks"),
            prop(A, "athenians", "humans"),
        )
    }

    #[test]
    fn standard_order_picks_major_by_conclusion_predicate() {
        let (major, minor, concl) = greeks();
        let s = standard_order(minor.clone(), major.clone(), concl.clone()).unwrap();
        assert_eq!(s.major_premise(), &major);
        assert_eq!(s.minor_premise(), &minor);
        assert_eq!(s, standard_order(major, minor, concl).unwrap());
        assert_eq!(s.configuration().to_string(), "AAA-1");
        assert_eq!(s.middle_term().label(), "greeks");
    }

    #[test]
    fn four_terms_rejected() {
        let err = standard_order(prop(A, "a", "b"), prop(A, "c", "d"), prop(A, "a", "d")).unwrap_err();
        assert_eq!(err, LogicError::TooManyTerms { found: 4 });
    }

    #[test]
    fn middle_missing_from_premise_rejected() {
        // conclusion terms both in one premise
        let err = standard_order(prop(A, "s", "p"), prop(A, "m", "p"), prop(A, "s", "p")).unwrap_err();
        assert!(matches!(err, LogicError::MalformedStructure(_)), "{err:?}");
    }

    #[test]
    fn complementary_terms_rejected() {
        let err = standard_order(prop(A, "m", "p"), prop(A, "s", "m"), prop(A, "s", "non-m")).unwrap_err();
        assert_eq!(err, LogicError::TooManyTerms { found: 4 });
        let err = Syllogism::new(prop(A, "m", "non-m"), prop(A, "s", "m"), prop(A, "s", "non-m")).unwrap_err();
        assert!(matches!(err, LogicError::MalformedStructure(_)));
    }

    #[test]
    fn figures_follow_middle_placement() {
        let cases = [
            (prop(E, "m", "p"), prop(A, "s", "m"), "EAE-1"),
            (prop(A, "p", "m"), prop(E, "s", "m"), "AEE-2"),
            (prop(A, "m", "p"), prop(I, "m", "s"), "AII-3"),
            (prop(A, "p", "m"), prop(E, "m", "s"), "AEE-4"),
        ];
        for (major, minor, expected) in cases {
            let kind = expected.as_bytes()[2] as char;
            let concl = prop(PropositionType::from_letter(kind).unwrap(), "s", "p");
            let s = Syllogism::new(major, minor, concl).unwrap();
            assert_eq!(s.configuration().to_string(), expected);
        }
    }

    #[test]
    fn enumeration_order_and_size() {
        let all = enumerate_configurations();
        assert_eq!(all.len(), 256);
        assert_eq!(all[0].to_string(), "AAA-1");
        assert_eq!(all[255].to_string(), "OOO-4");
        let moods: BTreeSet<Mood> = all.iter().map(|c| c.mood).collect();
        assert_eq!(moods.len(), 64);
        for (i, c) in all.iter().enumerate() {
            assert_eq!(c.index(), i);
        }
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn configuration_text_round_trip() {
        for c in enumerate_configurations() {
            assert_eq!(c.to_string().parse::<Configuration>().unwrap(), c);
        }
        for bad in ["AAA", "AAA-5", "AAX-1", "AAAA-1", "-1"] {
            assert!(bad.parse::<Configuration>().is_err(), "{bad}");
        }
    }

    #[test]
    fn instantiate_yields_configuration() {
        let (s, m, p) = (
            Term::new("s").unwrap(),
            Term::new("m").unwrap(),
            Term::new("p").unwrap(),
        );
        for c in enumerate_configurations() {
            assert_eq!(c.instantiate(&s, &m, &p).unwrap().configuration(), c);
        }
    }
}

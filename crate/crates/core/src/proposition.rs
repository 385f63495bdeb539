use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LogicError;
use crate::term::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    Universal,
    Particular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quality {
    Affirmative,
    Negative,
}

/// The four standard-form proposition types. Ordered A < E < I < O.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropositionType {
    A,
    E,
    I,
    O,
}

impl PropositionType {
    pub const ALL: [PropositionType; 4] = [
        PropositionType::A,
        PropositionType::E,
        PropositionType::I,
        PropositionType::O,
    ];

    pub fn from_parts(quantity: Quantity, quality: Quality) -> Self {
        match (quantity, quality) {
            (Quantity::Universal, Quality::Affirmative) => PropositionType::A,
            (Quantity::Universal, Quality::Negative) => PropositionType::E,
            (Quantity::Particular, Quality::Affirmative) => PropositionType::I,
            (Quantity::Particular, Quality::Negative) => PropositionType::O,
        }
    }

    pub fn quantity(self) -> Quantity {
        match self {
            PropositionType::A | PropositionType::E => Quantity::Universal,
            PropositionType::I | PropositionType::O => Quantity::Particular,
        }
    }

    pub fn quality(self) -> Quality {
        match self {
            PropositionType::A | PropositionType::I => Quality::Affirmative,
            PropositionType::E | PropositionType::O => Quality::Negative,
        }
    }

    pub fn is_universal(self) -> bool {
        self.quantity() == Quantity::Universal
    }

    pub fn is_negative(self) -> bool {
        self.quality() == Quality::Negative
    }

    pub fn letter(self) -> char {
        match self {
            PropositionType::A => 'A',
            PropositionType::E => 'E',
            PropositionType::I => 'I',
            PropositionType::O => 'O',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(PropositionType::A),
            'E' => Some(PropositionType::E),
            'I' => Some(PropositionType::I),
            'O' => Some(PropositionType::O),
            _ => None,
        }
    }

    /// Same quantity, opposite quality.
    pub fn flip_quality(self) -> Self {
        match self {
            PropositionType::A => PropositionType::E,
            PropositionType::E => PropositionType::A,
            PropositionType::I => PropositionType::O,
            PropositionType::O => PropositionType::I,
        }
    }
}

impl fmt::Display for PropositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A standard-form categorical proposition: `<quantifier> S <copula> P`.
///
/// Truth conditions, read as set relations between the subject class S and
/// predicate class P:
///
/// | type | reading      |
/// |------|--------------|
/// | A    | S ⊆ P        |
/// | E    | S ∩ P = ∅    |
/// | I    | S ∩ P ≠ ∅    |
/// | O    | S − P ≠ ∅    |
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CategoricalProposition {
    kind: PropositionType,
    subject: Term,
    predicate: Term,
}

impl CategoricalProposition {
    pub fn new(kind: PropositionType, subject: Term, predicate: Term) -> Result<Self, LogicError> {
        if subject == predicate {
            return Err(LogicError::IdenticalTerms(subject.to_string()));
        }
        Ok(CategoricalProposition {
            kind,
            subject,
            predicate,
        })
    }

    /// Convenience constructor from raw labels (`"non-p"` allowed).
    pub fn parse_terms(kind: PropositionType, subject: &str, predicate: &str) -> Result<Self, LogicError> {
        Self::new(kind, Term::new(subject)?, Term::new(predicate)?)
    }

    pub fn kind(&self) -> PropositionType {
        self.kind
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    pub fn terms(&self) -> [&Term; 2] {
        [&self.subject, &self.predicate]
    }

    pub fn mentions(&self, term: &Term) -> bool {
        &self.subject == term || &self.predicate == term
    }

    /// Subject and predicate swapped. Legitimate for E and I only.
    pub fn convert(&self) -> Result<Self, LogicError> {
        match self.kind {
            PropositionType::E | PropositionType::I => Ok(CategoricalProposition {
                kind: self.kind,
                subject: self.predicate.clone(),
                predicate: self.subject.clone(),
            }),
            kind => Err(LogicError::IllegitimateConversion(kind)),
        }
    }

    /// Quality flipped and predicate complemented. Legitimate for all four types.
    pub fn obvert(&self) -> Self {
        CategoricalProposition {
            kind: self.kind.flip_quality(),
            subject: self.subject.clone(),
            predicate: self.predicate.complement(),
        }
    }

    /// Terms swapped and both complemented. Legitimate for A and O only.
    pub fn contrapose(&self) -> Result<Self, LogicError> {
        match self.kind {
            PropositionType::A | PropositionType::O => Ok(CategoricalProposition {
                kind: self.kind,
                subject: self.predicate.complement(),
                predicate: self.subject.complement(),
            }),
            kind => Err(LogicError::IllegitimateContraposition(kind)),
        }
    }

    /// Whether `term` is distributed in this proposition.
    pub fn distributes(&self, term: &Term) -> bool {
        (&self.subject == term && distribution(self.kind, TermPosition::Subject))
            || (&self.predicate == term && distribution(self.kind, TermPosition::Predicate))
    }

    pub(crate) fn map_terms(&self, mut f: impl FnMut(&Term) -> Term) -> Result<Self, LogicError> {
        Self::new(self.kind, f(&self.subject), f(&self.predicate))
    }
}

impl fmt::Display for CategoricalProposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", self.kind, self.subject, self.predicate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermPosition {
    Subject,
    Predicate,
}

/// Distribution table: A distributes its subject, E both terms, I neither,
/// O its predicate.
pub fn distribution(kind: PropositionType, position: TermPosition) -> bool {
    match position {
        TermPosition::Subject => kind.is_universal(),
        TermPosition::Predicate => kind.is_negative(),
    }
}

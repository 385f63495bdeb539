use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LogicError;

/// Prefix marking a complemented class ("non-voters").
pub const COMPLEMENT_PREFIX: &str = "non-";

/// A class term as it appears in a categorical proposition.
///
/// Labels are stored case-folded with whitespace collapsed. The complement
/// of a class is a flag rather than part of the label, so `non-non-x` can
/// never be represented: complementing twice yields the original term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Term {
    label: String,
    complemented: bool,
}

impl Term {
    /// Builds a term from free text. A leading `non-` is folded into the
    /// complement flag (repeatedly, so `non-non-x` is `x`).
    pub fn new(text: &str) -> Result<Self, LogicError> {
        let mut label = normalize_label(text);
        let mut complemented = false;
        while let Some(rest) = label.strip_prefix(COMPLEMENT_PREFIX) {
            label = rest.trim_start().to_string();
            complemented = !complemented;
        }
        if label.is_empty() {
            return Err(LogicError::EmptyTerm);
        }
        Ok(Term { label, complemented })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_complemented(&self) -> bool {
        self.complemented
    }

    pub fn complement(&self) -> Term {
        Term {
            label: self.label.clone(),
            complemented: !self.complemented,
        }
    }

    /// Same term with the complement flag cleared.
    pub fn base(&self) -> Term {
        Term {
            label: self.label.clone(),
            complemented: false,
        }
    }

    pub(crate) fn with_label(&self, label: &str) -> Term {
        Term {
            label: label.to_string(),
            complemented: self.complemented,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "{COMPLEMENT_PREFIX}{}", self.label)
        } else {
            f.write_str(&self.label)
        }
    }
}

impl std::str::FromStr for Term {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Term::new(s)
    }
}

/// Lowercases and collapses runs of whitespace to a single space.
pub fn normalize_label(text: &str) -> String {
    text.split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

//! The three validity checks: lookup in the table of valid forms, the
//! traditional rules of the syllogism, and exhaustive region-model
//! semantics. The table is not written out by hand; it is generated once
//! from the semantic check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::semantics::{countermodel, minimal_requirements, RegionModel, Requirement};
use crate::syllogism::{enumerate_configurations, Configuration, Role, Syllogism};
use crate::term::Term;

/// Whether terms carry existential import.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpretation {
    /// Boolean reading: universal propositions assert nothing exists.
    #[default]
    Modern,
    /// Every term is assumed to denote a non-empty class.
    Aristotelian,
}

impl Interpretation {
    pub const ALL: [Interpretation; 2] = [Interpretation::Modern, Interpretation::Aristotelian];

    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::Modern => "modern",
            Interpretation::Aristotelian => "aristotelian",
        }
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Interpretation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "modern" | "boolean" => Ok(Interpretation::Modern),
            "aristotelian" | "traditional" => Ok(Interpretation::Aristotelian),
            other => Err(format!("unknown interpretation `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidityStatus {
    Valid,
    ConditionallyValid,
    Invalid,
}

impl ValidityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ValidityStatus::Valid => "valid",
            ValidityStatus::ConditionallyValid => "conditionally-valid",
            ValidityStatus::Invalid => "invalid",
        }
    }
}

impl fmt::Display for ValidityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rules of the syllogism, as checked by [`validity_by_rules`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// The middle term is distributed at least once.
    R1,
    /// A term distributed in the conclusion is distributed in its premise.
    R2,
    /// Not both premises negative.
    R3,
    /// A negative premise needs a negative conclusion and vice versa.
    R4,
    /// Two universal premises cannot yield a particular conclusion.
    R5,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityVerdict {
    pub status: ValidityStatus,
    /// Roles that must be non-empty; only set for conditionally valid forms.
    pub required_nonempty_terms: BTreeSet<Role>,
    /// Only filled by the rule method.
    pub violated_rules: Vec<Rule>,
    /// Witness that the premises do not force the conclusion without extra
    /// assumptions. Only filled by the semantic method.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub countermodel: Option<RegionModel>,
}

impl ValidityVerdict {
    fn valid() -> Self {
        ValidityVerdict {
            status: ValidityStatus::Valid,
            required_nonempty_terms: BTreeSet::new(),
            violated_rules: Vec::new(),
            countermodel: None,
        }
    }

    fn invalid() -> Self {
        ValidityVerdict {
            status: ValidityStatus::Invalid,
            ..Self::valid()
        }
    }

    fn conditional(required: BTreeSet<Role>) -> Self {
        debug_assert!(!required.is_empty());
        ValidityVerdict {
            status: ValidityStatus::ConditionallyValid,
            required_nonempty_terms: required,
            ..Self::valid()
        }
    }

    pub fn is_valid(&self) -> bool {
        self.status == ValidityStatus::Valid
    }
}

struct FormTable {
    modern: BTreeSet<Configuration>,
    aristotelian: BTreeSet<Configuration>,
    requirements: Vec<Requirement>,
}

fn form_table() -> &'static FormTable {
    static TABLE: OnceLock<FormTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let (s, m, p) = canonical_terms();
        let mut modern = BTreeSet::new();
        let mut aristotelian = BTreeSet::new();
        let mut requirements = Vec::with_capacity(Configuration::COUNT);
        for c in enumerate_configurations() {
            let syllogism = c.instantiate(&s, &m, &p).expect("canonical terms are distinct");
            if validity_by_semantics(&syllogism, Interpretation::Modern).is_valid() {
                modern.insert(c);
            }
            if validity_by_semantics(&syllogism, Interpretation::Aristotelian).is_valid() {
                aristotelian.insert(c);
            }
            requirements.push(minimal_requirements(&syllogism));
        }
        FormTable {
            modern,
            aristotelian,
            requirements,
        }
    })
}

fn canonical_terms() -> (Term, Term, Term) {
    let t = |l: &str| Term::new(l).expect("non-empty");
    (t("s"), t("m"), t("p"))
}

/// Configurations valid under `interpretation`: 15 under Modern, 24 under
/// Aristotelian. Computed on first use from [`validity_by_semantics`].
pub fn valid_forms(interpretation: Interpretation) -> &'static BTreeSet<Configuration> {
    let table = form_table();
    match interpretation {
        Interpretation::Modern => &table.modern,
        Interpretation::Aristotelian => &table.aristotelian,
    }
}

/// Minimal existence assumptions under which `config` is valid.
pub fn conditional_requirements(config: Configuration) -> Requirement {
    form_table().requirements[config.index()].clone()
}

/// Validity by looking the configuration up in the list of valid forms.
pub fn validity_by_table(config: Configuration, interpretation: Interpretation) -> ValidityVerdict {
    if valid_forms(interpretation).contains(&config) {
        return ValidityVerdict::valid();
    }
    match (interpretation, conditional_requirements(config)) {
        (Interpretation::Modern, Requirement::Requires(roles)) => ValidityVerdict::conditional(roles),
        _ => ValidityVerdict::invalid(),
    }
}

/// Validity by enumerating all 256 region models.
///
/// Under Aristotelian, only models where each of the three terms is
/// non-empty are considered. Under Modern, a syllogism that fails without
/// assumptions but holds once some terms are assumed non-empty is reported
/// conditionally valid, with the minimal such set of roles; the attached
/// countermodel shows why it fails unconditionally.
pub fn validity_by_semantics(s: &Syllogism, interpretation: Interpretation) -> ValidityVerdict {
    let assumptions: BTreeSet<Role> = match interpretation {
        Interpretation::Modern => BTreeSet::new(),
        Interpretation::Aristotelian => Role::ALL.into_iter().collect(),
    };
    let Some(witness) = countermodel(s, &assumptions) else {
        return ValidityVerdict::valid();
    };
    let mut verdict = match (interpretation, minimal_requirements(s)) {
        (Interpretation::Modern, Requirement::Requires(roles)) => ValidityVerdict::conditional(roles),
        _ => ValidityVerdict::invalid(),
    };
    verdict.countermodel = Some(witness);
    verdict
}

/// Validity by the five rules R1–R5.
///
/// Under Aristotelian, R5 is not applied (all terms exist). Under Modern, a
/// syllogism whose only fault is R5 is conditionally valid: it becomes
/// valid once the term distributed in the premises more often than the
/// other rules require is assumed non-empty.
pub fn validity_by_rules(s: &Syllogism, interpretation: Interpretation) -> ValidityVerdict {
    let violated = violated_rules(s);
    let mut verdict = match interpretation {
        Interpretation::Aristotelian if violated.iter().all(|&r| r == Rule::R5) => ValidityVerdict::valid(),
        Interpretation::Modern if violated.is_empty() => ValidityVerdict::valid(),
        Interpretation::Modern if violated == [Rule::R5] => {
            let critical = superfluously_distributed(s);
            if critical.is_empty() {
                ValidityVerdict::invalid()
            } else {
                ValidityVerdict::conditional(critical)
            }
        }
        _ => ValidityVerdict::invalid(),
    };
    verdict.violated_rules = violated;
    verdict
}

/// Every rule the syllogism breaks, in rule order.
pub fn violated_rules(s: &Syllogism) -> Vec<Rule> {
    let major = s.major_premise();
    let minor = s.minor_premise();
    let conclusion = s.conclusion();
    let mut out = Vec::new();

    let middle = s.middle_term();
    if !major.distributes(middle) && !minor.distributes(middle) {
        out.push(Rule::R1);
    }
    let minor_ok = !conclusion.distributes(s.minor_term()) || minor.distributes(s.minor_term());
    let major_ok = !conclusion.distributes(s.major_term()) || major.distributes(s.major_term());
    if !(minor_ok && major_ok) {
        out.push(Rule::R2);
    }
    let negative_premises = [major, minor].iter().filter(|p| p.kind().is_negative()).count();
    if negative_premises == 2 {
        out.push(Rule::R3);
    }
    if (negative_premises > 0) != conclusion.kind().is_negative() {
        out.push(Rule::R4);
    }
    if major.kind().is_universal() && minor.kind().is_universal() && !conclusion.kind().is_universal() {
        out.push(Rule::R5);
    }
    out
}

/// Terms distributed in the premises more often than needed: the middle
/// term distributed twice, or a minor/major term distributed in its premise
/// but not in the conclusion.
fn superfluously_distributed(s: &Syllogism) -> BTreeSet<Role> {
    let count = |role: Role| {
        let term = s.term(role);
        [s.major_premise(), s.minor_premise()]
            .iter()
            .filter(|p| p.distributes(term))
            .count()
    };
    let needed = |role: Role| match role {
        Role::M => 1,
        _ => usize::from(s.conclusion().distributes(s.term(role))),
    };
    Role::ALL.into_iter().filter(|&r| count(r) > needed(r)).collect()
}

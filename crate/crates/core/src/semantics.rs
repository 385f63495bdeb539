//! Region-model semantics for propositions over at most three classes.
//!
//! Three classes split the universe into eight Venn regions. Every A/E/I/O
//! truth condition asks only whether some intersection of regions is empty
//! (`S ⊆ P` is "no element in S−P", `S ∩ P ≠ ∅` is "some element in S∩P"),
//! so a model only needs to record which regions are occupied. Any
//! assignment of sets collapses to one of these 256 occupancy patterns
//! without changing the truth value of any proposition, and every pattern is
//! realized by putting one element in each occupied region. Enumerating the
//! 256 patterns is therefore an exact decision procedure for syllogistic
//! entailment.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::proposition::{CategoricalProposition, PropositionType};
use crate::syllogism::{Role, Syllogism};
use crate::term::Term;

/// Region `r` (0..8) holds the elements whose membership in S, M, P is
/// given by bits 0, 1, 2 of `r`. Bit `r` of the model is set when that
/// region is occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionModel(u8);

impl RegionModel {
    pub const COUNT: usize = 256;

    pub fn from_bits(bits: u8) -> Self {
        RegionModel(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = RegionModel> {
        (0..=u8::MAX).map(RegionModel)
    }

    pub fn is_occupied(self, region: u8) -> bool {
        self.0 & (1 << region) != 0
    }

    /// Whether any region in `regions` (a region bitmask) is occupied.
    pub fn any_occupied(self, regions: u8) -> bool {
        self.0 & regions != 0
    }

    /// Bitmask of the regions lying inside the class `role` (or outside it
    /// when `complemented`).
    pub fn class_regions(role: Role, complemented: bool) -> u8 {
        let bit = role_bit(role);
        let mut mask = 0u8;
        for region in 0..8u8 {
            if (region & bit != 0) != complemented {
                mask |= 1 << region;
            }
        }
        mask
    }

    /// Truth of `kind` between the classes occupying `subject` and
    /// `predicate` region masks.
    pub fn holds(self, kind: PropositionType, subject: u8, predicate: u8) -> bool {
        match kind {
            PropositionType::A => !self.any_occupied(subject & !predicate),
            PropositionType::E => !self.any_occupied(subject & predicate),
            PropositionType::I => self.any_occupied(subject & predicate),
            PropositionType::O => self.any_occupied(subject & !predicate),
        }
    }

    /// Evaluates a proposition whose term labels all appear in `frame`.
    pub fn satisfies(self, frame: &Frame, prop: &CategoricalProposition) -> Option<bool> {
        let subject = frame.regions(prop.subject())?;
        let predicate = frame.regions(prop.predicate())?;
        Some(self.holds(prop.kind(), subject, predicate))
    }
}

impl fmt::Display for RegionModel {
    /// Eight 0/1 digits, region 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for region in 0..8 {
            f.write_str(if self.is_occupied(region) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for RegionModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn role_bit(role: Role) -> u8 {
    match role {
        Role::S => 1,
        Role::M => 2,
        Role::P => 4,
    }
}

/// Binds up to three class labels to the S, M and P region axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    labels: Vec<(String, Role)>,
}

impl Frame {
    /// Frame for the labels occurring in `props`, in first-occurrence order.
    /// `None` when more than three labels occur.
    pub fn for_propositions<'a>(props: impl IntoIterator<Item = &'a CategoricalProposition>) -> Option<Frame> {
        let mut labels: Vec<(String, Role)> = Vec::new();
        for p in props {
            for t in p.terms() {
                if labels.iter().all(|(l, _)| l != t.label()) {
                    let role = *Role::ALL.get(labels.len())?;
                    labels.push((t.label().to_string(), role));
                }
            }
        }
        Some(Frame { labels })
    }

    pub fn for_syllogism(s: &Syllogism) -> Frame {
        Frame {
            labels: Role::ALL
                .into_iter()
                .map(|r| (s.term(r).label().to_string(), r))
                .collect(),
        }
    }

    pub fn role(&self, label: &str) -> Option<Role> {
        self.labels.iter().find(|(l, _)| l == label).map(|&(_, r)| r)
    }

    pub fn regions(&self, term: &Term) -> Option<u8> {
        self.role(term.label())
            .map(|r| RegionModel::class_regions(r, term.is_complemented()))
    }
}

/// Whether two propositions are true in exactly the same region models.
/// `None` if together they mention more than three labels.
pub fn equivalent(a: &CategoricalProposition, b: &CategoricalProposition) -> Option<bool> {
    let frame = Frame::for_propositions([a, b])?;
    Some(RegionModel::all().all(|m| m.satisfies(&frame, a) == m.satisfies(&frame, b)))
}

/// First region model (in bit order) where both premises hold and the
/// conclusion fails, restricted to models in which every term whose role
/// is in `nonempty` denotes a non-empty class.
pub fn countermodel(s: &Syllogism, nonempty: &BTreeSet<Role>) -> Option<RegionModel> {
    let frame = Frame::for_syllogism(s);
    let regions = |t: &Term| frame.regions(t).expect("syllogism terms are in its frame");
    let required: Vec<u8> = nonempty.iter().map(|&r| regions(s.term(r))).collect();
    let eval =
        |m: RegionModel, p: &CategoricalProposition| m.holds(p.kind(), regions(p.subject()), regions(p.predicate()));

    RegionModel::all().find(|&m| {
        required.iter().all(|&mask| m.any_occupied(mask))
            && eval(m, s.major_premise())
            && eval(m, s.minor_premise())
            && !eval(m, s.conclusion())
    })
}

/// What a syllogism needs, beyond its premises, to be valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "roles", rename_all = "kebab-case")]
pub enum Requirement {
    /// Valid with no existence assumption.
    Unconditional,
    /// Valid once the terms in these roles are assumed non-empty; the set is
    /// minimal.
    Requires(BTreeSet<Role>),
    /// Invalid even if every term is non-empty.
    InvalidRegardless,
}

/// Smallest set of roles whose non-emptiness makes `s` valid, trying sets
/// by size and then in role order.
pub fn minimal_requirements(s: &Syllogism) -> Requirement {
    if countermodel(s, &BTreeSet::new()).is_none() {
        return Requirement::Unconditional;
    }
    let mut subsets: Vec<BTreeSet<Role>> = (1u8..8)
        .map(|mask| {
            Role::ALL
                .into_iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, r)| r)
                .collect()
        })
        .collect();
    subsets.sort_by_key(|set: &BTreeSet<Role>| (set.len(), set.iter().copied().collect::<Vec<_>>()));
    subsets
        .into_iter()
        .find(|set| countermodel(s, set).is_none())
        .map_or(Requirement::InvalidRegardless, Requirement::Requires)
}

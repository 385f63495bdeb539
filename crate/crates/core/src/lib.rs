//! Categorical syllogisms: standard-form propositions, mood and figure,
//! three independent validity checks, translation of ordinary-language
//! statements, argument analysis, and benchmark dataset tooling.

pub mod analyzer;
pub mod dataset;
pub mod error;
pub mod parser;
pub mod proposition;
pub mod semantics;
pub mod syllogism;
pub mod term;
pub mod validity;

pub use analyzer::{
    analyze, complete_enthymeme, decompose_sorites, reduce_terms, AnalysisReport, Argument, Enthymeme, Missing,
};
pub use error::{AnalyzeError, DatasetError, LogicError, ParseError};
pub use proposition::{distribution, CategoricalProposition, PropositionType, TermPosition};
pub use semantics::{RegionModel, Requirement};
pub use syllogism::{enumerate_configurations, standard_order, Configuration, Figure, Mood, Role, Syllogism};
pub use term::Term;
pub use validity::{
    conditional_requirements, valid_forms, validity_by_rules, validity_by_semantics, validity_by_table, Interpretation,
    Rule, ValidityStatus, ValidityVerdict,
};

//! Human-readable output.

use std::collections::BTreeSet;
use std::fmt::Write;

use syllogism::analyzer::{AnalysisReport, Flag, Missing, StepReport};
use syllogism::dataset::{CoverageReport, ErrorBreakdown};
use syllogism::parser::{render as sentence, TranslationResult};
use syllogism::{
    conditional_requirements, CategoricalProposition, Interpretation, Requirement, Role, Syllogism, ValidityVerdict,
};

fn role_names(roles: &BTreeSet<Role>) -> String {
    let names: Vec<&str> = roles
        .iter()
        .map(|r| match r {
            Role::S => "minor (S)",
            Role::M => "middle (M)",
            Role::P => "major (P)",
        })
        .collect();
    names.join(" and ")
}

fn verdict_line(v: &ValidityVerdict) -> String {
    let mut line = v.status.to_string();
    if !v.required_nonempty_terms.is_empty() {
        write!(
            line,
            " (if the {} term is non-empty)",
            role_names(&v.required_nonempty_terms)
        )
        .unwrap();
    }
    if !v.violated_rules.is_empty() {
        let rules: Vec<String> = v.violated_rules.iter().map(|r| r.to_string()).collect();
        write!(line, " (violates {})", rules.join(", ")).unwrap();
    }
    if let Some(model) = v.countermodel {
        write!(line, " (countermodel {model})").unwrap();
    }
    line
}

fn syllogism_block(out: &mut String, s: &Syllogism, indent: &str) {
    writeln!(out, "{indent}major premise: {}", sentence(s.major_premise())).unwrap();
    writeln!(out, "{indent}minor premise: {}", sentence(s.minor_premise())).unwrap();
    writeln!(out, "{indent}conclusion:    {}", sentence(s.conclusion())).unwrap();
}

/// The note owed whenever validity rests on an existence assumption.
fn existence_note(s: &Syllogism, i: Interpretation) -> Option<String> {
    let Requirement::Requires(roles) = conditional_requirements(s.configuration()) else {
        return None;
    };
    let terms: Vec<String> = roles.iter().map(|r| format!("`{}`", s.term(*r))).collect();
    let which = format!("the {} term {}", role_names(&roles), terms.join(", "));
    Some(match i {
        Interpretation::Modern => format!(
            "note: {} is conditionally valid: it holds only if {which} denotes something. \
             Rerun with --interpretation aristotelian to assume every term is non-empty.",
            s.configuration()
        ),
        Interpretation::Aristotelian => format!(
            "note: {} is valid here only because the aristotelian interpretation assumes {which} is non-empty; \
             under the modern interpretation it is conditionally valid.",
            s.configuration()
        ),
    })
}

pub fn validation(s: &Syllogism, i: Interpretation, verdicts: [&ValidityVerdict; 3]) -> String {
    let mut out = String::new();
    syllogism_block(&mut out, s, "");
    let c = s.configuration();
    writeln!(out, "configuration: {c} (mood {}, figure {})", c.mood, c.figure).unwrap();
    writeln!(out, "interpretation: {i}").unwrap();
    for (name, v) in ["table", "rules", "semantics"].iter().zip(verdicts) {
        writeln!(out, "  {name:<10} {}", verdict_line(v)).unwrap();
    }
    if let Some(note) = existence_note(s, i) {
        writeln!(out, "{note}").unwrap();
    }
    out
}

pub fn translation(t: &TranslationResult) -> String {
    let mut out = format!("category: {}\n", t.category);
    for p in &t.propositions {
        writeln!(out, "  {}  [{p}]", sentence(p)).unwrap();
    }
    writeln!(out, "trace: {}", t.trace_ids().join(" ")).unwrap();
    out
}

fn flag_line(flag: &Flag) -> String {
    match flag {
        Flag::Untranslatable { statement, reason } => format!("statement {statement} untranslatable: {reason}"),
        Flag::TooManyTerms { found } => format!("too many terms: {found} distinct terms remain after reduction"),
        Flag::MalformedStructure { reason } => format!("not a syllogism: {reason}"),
        Flag::EnthymemeSuspected { missing, candidates } => {
            let mut line = format!("enthymeme suspected: {missing:?} missing");
            if candidates.is_empty() {
                line.push_str("; no proposition completes it validly");
            } else {
                let texts: Vec<String> = candidates.iter().map(sentence).collect();
                write!(line, "; valid completions: {}", texts.join(" | ")).unwrap();
            }
            line
        }
        Flag::NoValidChain { reason } => format!("sorites: {reason}"),
        Flag::CrossCheckFailed { step, interpretation } => {
            format!("internal error: validity methods disagree on step {step} under {interpretation}")
        }
    }
}

fn step_block(out: &mut String, step: &StepReport, i: Interpretation) {
    syllogism_block(out, &step.syllogism, "  ");
    let v = step.verdicts(i);
    writeln!(out, "  configuration: {}", step.configuration).unwrap();
    writeln!(out, "  {i}: {}", verdict_line(&v.table)).unwrap();
    let other = match i {
        Interpretation::Modern => Interpretation::Aristotelian,
        Interpretation::Aristotelian => Interpretation::Modern,
    };
    writeln!(out, "  {other}: {}", step.verdicts(other).table.status).unwrap();
    if let Some(note) = existence_note(&step.syllogism, i) {
        writeln!(out, "  {note}").unwrap();
    }
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    for (k, s) in r.statements.iter().enumerate() {
        let marker = if s.is_conclusion { "conclusion" } else { "premise" };
        writeln!(out, "[{k}] {marker}: {}", s.text).unwrap();
        if let Some(t) = &s.translation {
            let texts: Vec<String> = t.propositions.iter().map(sentence).collect();
            writeln!(out, "    {} -> {}", t.category, texts.join(" | ")).unwrap();
        }
    }
    if !r.standardized.is_empty() {
        writeln!(out, "standard form:").unwrap();
        for (k, step) in r.standardized.iter().enumerate() {
            if r.standardized.len() > 1 {
                writeln!(out, " step {}:", k + 1).unwrap();
            }
            step_block(&mut out, step, r.interpretation);
        }
    }
    if let Some(status) = r.status {
        writeln!(out, "result: {status} ({})", r.interpretation).unwrap();
    }
    for flag in &r.flags {
        writeln!(out, "flag: {}", flag_line(flag)).unwrap();
    }
    out
}

pub fn completion(missing: Missing, candidates: &[CategoricalProposition], i: Interpretation) -> String {
    if candidates.is_empty() {
        return format!("no {} completes a valid syllogism ({i})\n", missing.as_str());
    }
    let mut out = format!("valid completions for the missing {} ({i}):\n", missing.as_str());
    for c in candidates {
        writeln!(out, "  {}", sentence(c)).unwrap();
    }
    out
}

pub fn chain(chain: &[Syllogism], i: Interpretation) -> String {
    let mut out = String::new();
    for (k, s) in chain.iter().enumerate() {
        writeln!(out, "step {} ({}):", k + 1, s.configuration()).unwrap();
        syllogism_block(&mut out, s, "  ");
    }
    writeln!(out, "every step is valid ({i})").unwrap();
    out
}

pub fn coverage(r: &CoverageReport) -> String {
    let mut out = format!("records: {}  statements: {}\n", r.total_records, r.total_statements);
    writeln!(out, "phraseology:").unwrap();
    for share in &r.phraseology {
        writeln!(
            out,
            "  {:<24} {:>6} {:>7.2}%",
            share.category.as_str(),
            share.count,
            share.percent
        )
        .unwrap();
    }
    writeln!(out, "configurations covered: {}/256", r.configurations_covered).unwrap();
    writeln!(
        out,
        "configuration source: {} annotated, {} analyzed, {} gold",
        r.sources.annotation, r.sources.analyzer, r.sources.gold
    )
    .unwrap();
    writeln!(out, "assessable: {} ({:.2}%)", r.assessable, r.assessable_percent).unwrap();
    writeln!(out, "flagged by cross-check: {}", r.flagged.len()).unwrap();
    for id in &r.flagged {
        writeln!(out, "  {id}").unwrap();
    }
    out
}

pub fn breakdown(b: &ErrorBreakdown, with_matrix: bool) -> String {
    let errors: usize = b.cells.iter().map(|c| c.errors).sum();
    let scored: usize = b.cells.iter().map(|c| c.n).sum();
    let mut out = format!("predictions: {}  scored: {scored}  errors: {errors}\n", b.total);
    writeln!(out, "N/A: {} ({} errors)", b.not_assessable.n, b.not_assessable.errors).unwrap();
    writeln!(out, "by figure:").unwrap();
    for m in &b.by_figure {
        let rate = m.rate.map_or_else(|| "-".to_string(), |r| format!("{r:.4}"));
        writeln!(out, "  {}: n={} errors={} rate={rate}", m.key, m.n, m.errors).unwrap();
    }
    let clean = b.cells.iter().filter(|c| c.n > 0 && c.errors == 0).count();
    writeln!(out, "configurations scored without errors: {clean}").unwrap();
    if with_matrix {
        out.push('\n');
        out.push_str(&b.matrix_csv());
    }
    out
}

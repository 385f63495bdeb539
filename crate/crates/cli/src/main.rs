//! `syllo`: command-line front end for the syllogism toolkit.
//!
//! Exit status is 0 on success (an invalid syllogism is still a successful
//! analysis), 1 when the input is rejected, and 2 on a usage error.

mod render;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use syllogism::analyzer::{self, Argument, Enthymeme, Missing};
use syllogism::dataset::{self, GenerateOptions};
use syllogism::parser;
use syllogism::{
    standard_order, validity_by_rules, validity_by_semantics, validity_by_table, CategoricalProposition, Interpretation,
};

type Error = Box<dyn std::error::Error>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Readable text.
    Human,
    /// Pretty-printed JSON with a stable schema.
    #[value(alias = "json")]
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "syllo", version, about = "Categorical syllogism toolkit")]
struct Cli {
    /// Existential reading of universal propositions: modern or aristotelian.
    #[arg(long, global = true, default_value = "modern")]
    interpretation: Interpretation,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Seed for premise shuffling in `generate`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output file (standard output when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a syllogism given as three standard-form statements (two
    /// premises in either order, then the conclusion).
    Validate {
        #[arg(num_args = 3, value_names = ["PREMISE", "PREMISE", "CONCLUSION"])]
        statements: Vec<String>,
    },
    /// Translate an ordinary-language statement into standard form.
    Translate { statement: String },
    /// Analyze an argument file with one statement per line (`-` for
    /// standard input). Blank lines and lines starting with `#` are skipped.
    Analyze {
        file: PathBuf,
        /// Zero-based index of the conclusion; by default a statement opening
        /// with "therefore", "so", "hence" or "thus", else the last one.
        #[arg(long)]
        conclusion: Option<usize>,
        /// Treat FROM as a synonym of TO (repeatable).
        #[arg(long = "synonym", value_name = "FROM=TO", value_parser = parse_synonym)]
        synonyms: Vec<(String, String)>,
    },
    /// List the propositions that complete an enthymeme into a valid
    /// syllogism. The two statements are given in the order major premise,
    /// minor premise, conclusion, leaving out the missing one.
    Complete {
        #[arg(long)]
        missing: Missing,
        #[arg(num_args = 2, value_names = ["FIRST", "SECOND"])]
        statements: Vec<String>,
    },
    /// Break a sorites into a chain of valid syllogisms. The last statement
    /// is the conclusion.
    Sorites {
        #[arg(num_args = 3.., value_name = "STATEMENT")]
        statements: Vec<String>,
    },
    /// Generate a dataset covering all 256 configurations for each term
    /// triple.
    Generate {
        /// CSV file of `s,m,p` term triples.
        #[arg(long)]
        triples: PathBuf,
        #[arg(long)]
        shuffle_premises: bool,
        /// Attach all eight candidate conclusions to each record.
        #[arg(long)]
        candidates: bool,
    },
    /// Report phraseology and configuration coverage of a dataset.
    Coverage {
        dataset: PathBuf,
        /// External annotations, one JSON object per line.
        #[arg(long)]
        annotations: Option<PathBuf>,
    },
    /// Break prediction errors down by configuration. With `--out`, the
    /// 64×4 matrix is written there and the long form next to it as
    /// `<out>.long.csv`.
    Breakdown {
        dataset: PathBuf,
        /// `id,label` lines (comma- or tab-separated).
        #[arg(long)]
        predictions: PathBuf,
    },
}

fn parse_synonym(s: &str) -> Result<(String, String), String> {
    let (from, to) = s
        .split_once('=')
        .ok_or_else(|| format!("expected FROM=TO, found `{s}`"))?;
    Ok((from.trim().to_string(), to.trim().to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let i = cli.interpretation;
    let output = match &cli.command {
        Command::Validate { statements } => validate(cli, statements)?,
        Command::Translate { statement } => {
            let result = parser::translate(statement)?;
            emit(cli, &result, || render::translation(&result))?
        }
        Command::Analyze {
            file,
            conclusion,
            synonyms,
        } => {
            let statements = read_input(file)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_string)
                .collect();
            let argument = Argument {
                statements,
                conclusion_index: *conclusion,
                synonyms: synonyms.iter().cloned().collect::<BTreeMap<_, _>>(),
            };
            let report = analyzer::analyze(&argument, i);
            emit(cli, &report, || render::analysis(&report))?
        }
        Command::Complete { missing, statements } => {
            let [first, second] = parse_all(statements)?.try_into().expect("clap enforces two statements");
            let enthymeme = Enthymeme::new(*missing, first, second);
            let candidates = analyzer::complete_enthymeme(&enthymeme, i)?;
            let out = Completion {
                interpretation: i,
                missing: *missing,
                candidates: &candidates,
            };
            emit(cli, &out, || render::completion(*missing, &candidates, i))?
        }
        Command::Sorites { statements } => {
            let mut props = parse_all(statements)?;
            let conclusion = props.pop().expect("clap enforces three statements");
            let chain = analyzer::decompose_sorites(&props, &conclusion, i)?;
            emit(cli, &chain, || render::chain(&chain, i))?
        }
        Command::Generate {
            triples,
            shuffle_premises,
            candidates,
        } => {
            let triples = dataset::read_triples(&read_input(triples)?)?;
            let opts = GenerateOptions {
                shuffle_premises: *shuffle_premises,
                candidate_conclusions: *candidates,
                seed: cli.seed,
            };
            let data = dataset::generate(&triples, i, opts)?;
            let mut bytes = Vec::new();
            dataset::write_dataset(&mut bytes, &data)?;
            if let Some(path) = &cli.out {
                fs::write(path, &bytes)?;
                let summary = GenerateSummary {
                    records: data.records.len(),
                    triples: triples.len(),
                    path,
                };
                print(&emit(cli, &summary, || {
                    format!(
                        "wrote {} records for {} triples to {}\n",
                        summary.records,
                        summary.triples,
                        path.display()
                    )
                })?);
            } else {
                print(&String::from_utf8(bytes)?);
            }
            return Ok(());
        }
        Command::Coverage {
            dataset: path,
            annotations,
        } => {
            let data = dataset::read_dataset(read_input(path)?.as_bytes())?;
            let annotations = match annotations {
                Some(p) => Some(dataset::read_annotations(read_input(p)?.as_bytes())?),
                None => None,
            };
            let report = dataset::assess_coverage(&data.records, annotations.as_ref(), i);
            emit(cli, &report, || render::coverage(&report))?
        }
        Command::Breakdown {
            dataset: path,
            predictions,
        } => {
            let data = dataset::read_dataset(read_input(path)?.as_bytes())?;
            let predictions = dataset::read_predictions(&read_input(predictions)?)?;
            let breakdown = dataset::error_breakdown(&data.records, &predictions)?;
            if let Some(out) = &cli.out {
                fs::write(out, breakdown.matrix_csv())?;
                fs::write(long_path(out), breakdown.long_csv())?;
            }
            let text = emit(cli, &breakdown, || render::breakdown(&breakdown, cli.out.is_none()))?;
            print(&text);
            return Ok(());
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, output)?,
        None => print(&output),
    }
    Ok(())
}

#[derive(Serialize)]
struct Completion<'a> {
    interpretation: Interpretation,
    missing: Missing,
    candidates: &'a [CategoricalProposition],
}

#[derive(Serialize)]
struct GenerateSummary<'a> {
    records: usize,
    triples: usize,
    path: &'a Path,
}

#[derive(Serialize)]
struct Validation {
    syllogism: syllogism::Syllogism,
    configuration: syllogism::Configuration,
    interpretation: Interpretation,
    table: syllogism::ValidityVerdict,
    rules: syllogism::ValidityVerdict,
    semantics: syllogism::ValidityVerdict,
}

fn validate(cli: &Cli, statements: &[String]) -> Result<String, Error> {
    let [first, second, conclusion] = parse_all(statements)?
        .try_into()
        .expect("clap enforces three statements");
    let syllogism = standard_order(first, second, conclusion)?;
    let i = cli.interpretation;
    let v = Validation {
        configuration: syllogism.configuration(),
        interpretation: i,
        table: validity_by_table(syllogism.configuration(), i),
        rules: validity_by_rules(&syllogism, i),
        semantics: validity_by_semantics(&syllogism, i),
        syllogism,
    };
    emit(cli, &v, || {
        render::validation(&v.syllogism, i, [&v.table, &v.rules, &v.semantics])
    })
}

fn parse_all(statements: &[String]) -> Result<Vec<CategoricalProposition>, Error> {
    statements
        .iter()
        .map(|s| parser::parse_standard(s).map_err(|e| format!("`{s}`: {e}").into()))
        .collect()
}

fn emit<T: Serialize>(cli: &Cli, value: &T, human: impl FnOnce() -> String) -> Result<String, Error> {
    Ok(match cli.format {
        Format::Human => human(),
        Format::Structured => serde_json::to_string_pretty(value)? + "\n",
    })
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn long_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".long.csv");
    PathBuf::from(name)
}

fn print(text: &str) {
    use std::io::Write;
    let mut stdout = io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(text.as_bytes());
}

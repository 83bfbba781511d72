//! Command-line front end: argument parsing, command execution and report
//! rendering. Every command produces a [`CommandOutput`] so the binary and the
//! tests share one code path.

mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::audit::{AuditBounds, AxiomId, Bundle, GenerationBounds};
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rules::RuleId;

pub use report::{
    ascii_text, AuditReport, AuditRow, CapacityReport, CompareReport, RankReport, TtbReport,
    ValidateReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bipolar",
    version,
    about = "Compare options described by ranked pros and cons"
)]
pub struct Cli {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress tables and warnings; the exit status still reports the result.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a problem file describes a valid, non-trivial universe.
    Validate { path: PathBuf },
    /// Compare two options under one rule or all six.
    Compare {
        path: PathBuf,
        #[command(flatten)]
        rules: RuleSelection,
        first: String,
        second: String,
    },
    /// Pairwise outcome matrix and undominated options under one rule.
    Rank {
        path: PathBuf,
        #[arg(long)]
        rule: RuleId,
    },
    /// Check axioms by exhaustive enumeration.
    Audit {
        /// Problem file whose universe is audited.
        #[arg(required_unless_present = "generate", conflicts_with = "generate")]
        path: Option<PathBuf>,
        /// Sweep every universe up to these bounds, e.g. "|X|=5,|L|=3".
        #[arg(long)]
        generate: Option<GenerationBounds>,
        #[command(flatten)]
        rules: RuleSelection,
        #[arg(long, conflicts_with = "bundle")]
        axiom: Option<AxiomId>,
        /// theorem1, theorem2 or propositions.
        #[arg(long)]
        bundle: Option<Bundle>,
        /// Largest universe swept by axioms over two profiles.
        #[arg(long, default_value_t = AuditBounds::default().pair_limit)]
        pair_limit: usize,
        /// Largest universe swept by axioms over three or four profiles.
        #[arg(long, default_value_t = AuditBounds::default().tuple_limit)]
        tuple_limit: usize,
    },
    /// Take-the-Best on a problem with distinct cue levels.
    Ttb {
        path: PathBuf,
        first: String,
        second: String,
    },
    /// Big-stepped capacities and net predisposition of every option.
    Capacities { path: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct RuleSelection {
    /// Rule name: pareto, biposs, impl, discri, bilexi, lexi.
    #[arg(long, conflicts_with = "all")]
    pub rule: Option<RuleId>,
    /// All six rules.
    #[arg(long)]
    pub all: bool,
}

impl RuleSelection {
    fn rules(&self) -> Vec<RuleId> {
        match self.rule {
            Some(rule) => vec![rule],
            None => RuleId::ALL.to_vec(),
        }
    }
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses a full argument list (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(err) => {
            let text = err.render().to_string();
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            if code == EXIT_OK {
                CommandOutput {
                    stdout: text,
                    ..Default::default()
                }
            } else {
                CommandOutput {
                    stderr: text,
                    code,
                    ..Default::default()
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CommandOutput {
    let mut out = CommandOutput::default();
    let result = match &cli.command {
        Command::Validate { path } => {
            cmd_validate(path).map(|r| emit(cli, &mut out, &r, r.render()))
        }
        Command::Compare {
            path,
            rules,
            first,
            second,
        } => load(path).and_then(|p| {
            warn_trivial(cli, &mut out, &p);
            let r = cmd_compare(&p, &rules.rules(), first, second)?;
            emit(cli, &mut out, &r, r.render());
            Ok(())
        }),
        Command::Rank { path, rule } => load(path).and_then(|p| {
            warn_trivial(cli, &mut out, &p);
            let r = cmd_rank(&p, *rule)?;
            emit(cli, &mut out, &r, r.render());
            if r.cycle.is_some() {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(())
        }),
        Command::Audit {
            path,
            generate,
            rules,
            axiom,
            bundle,
            pair_limit,
            tuple_limit,
        } => {
            let bounds = AuditBounds {
                pair_limit: *pair_limit,
                tuple_limit: *tuple_limit,
            };
            let source = match (path, generate) {
                (_, Some(g)) => Ok(AuditSource::Generated(*g)),
                (Some(path), None) => {
                    load(path).map(|p| AuditSource::File(path.display().to_string(), Box::new(p)))
                }
                (None, None) => Err(Error::InvalidBounds(String::new())),
            };
            source.and_then(|source| {
                let selection = match (axiom, bundle) {
                    (Some(a), _) => AxiomSelection::Axioms(vec![*a]),
                    (None, Some(b)) => AxiomSelection::Bundle(*b),
                    (None, None) => AxiomSelection::Axioms(AxiomId::ALL.to_vec()),
                };
                let r = cmd_audit(&source, &rules.rules(), &selection, &bounds)?;
                emit(cli, &mut out, &r, r.render());
                if !r.expectations_met() {
                    out.code = EXIT_CHECK_FAILED;
                }
                Ok(())
            })
        }
        Command::Ttb {
            path,
            first,
            second,
        } => load(path).and_then(|p| {
            let r = cmd_ttb(&p, first, second)?;
            emit(cli, &mut out, &r, r.render());
            if !r.coincide {
                out.code = EXIT_CHECK_FAILED;
            }
            Ok(())
        }),
        Command::Capacities { path } => load(path).and_then(|p| {
            warn_trivial(cli, &mut out, &p);
            let r = cmd_capacities(&p)?;
            emit(cli, &mut out, &r, r.render());
            Ok(())
        }),
    };
    if let Err(err) = result {
        out.stderr.push_str(&format!("error: {err}\n"));
        out.code = EXIT_USAGE;
    }
    out
}

fn load(path: &PathBuf) -> Result<Problem> {
    Problem::load(path)
}

fn warn_trivial(cli: &Cli, out: &mut CommandOutput, problem: &Problem) {
    if problem.universe.is_trivial() && !cli.quiet {
        out.stderr
            .push_str("warning: every argument has null importance; all options tie\n");
    }
}

fn emit<R: Serialize>(cli: &Cli, out: &mut CommandOutput, report: &R, table: String) {
    if cli.json {
        let json = serde_json::to_string_pretty(report).expect("reports serialize");
        out.stdout.push_str(&ascii_text(&json));
        out.stdout.push('\n');
    } else if !cli.quiet {
        out.stdout.push_str(&table);
    }
}

pub fn cmd_validate(path: &PathBuf) -> Result<ValidateReport> {
    let problem = load(path)?;
    if problem.universe.is_trivial() {
        return Err(Error::TrivialUniverse);
    }
    Ok(ValidateReport::new(&problem))
}

pub fn cmd_compare(
    problem: &Problem,
    rules: &[RuleId],
    first: &str,
    second: &str,
) -> Result<CompareReport> {
    let a = problem.option(first)?;
    let b = problem.option(second)?;
    let outcomes = rules
        .iter()
        .map(|&rule| Ok((rule, crate::rules::compare(rule, &a, &b)?)))
        .collect::<Result<_>>()?;
    Ok(CompareReport {
        first: first.to_string(),
        second: second.to_string(),
        outcomes,
    })
}

pub fn cmd_rank(problem: &Problem, rule: RuleId) -> Result<RankReport> {
    RankReport::build(problem, rule)
}

/// Where audited universes come from.
pub enum AuditSource {
    File(String, Box<Problem>),
    Generated(GenerationBounds),
}

pub enum AxiomSelection {
    Axioms(Vec<AxiomId>),
    Bundle(Bundle),
}

pub fn cmd_audit(
    source: &AuditSource,
    rules: &[RuleId],
    selection: &AxiomSelection,
    bounds: &AuditBounds,
) -> Result<AuditReport> {
    AuditReport::build(source, rules, selection, bounds)
}

pub fn cmd_ttb(problem: &Problem, first: &str, second: &str) -> Result<TtbReport> {
    TtbReport::build(problem, first, second)
}

pub fn cmd_capacities(problem: &Problem) -> Result<CapacityReport> {
    CapacityReport::build(problem)
}

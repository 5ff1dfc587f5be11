//! Thin batch runner over the check registry; all logic lives in the
//! library.

use clap::{Args, Parser, Subcommand};
use diagcat::base::{Backend, ClassPredicate, ModelClasses};
use diagcat::checks::{default_specs, run_checks, CheckId, CheckSpec};
use diagcat::fixtures;
use diagcat::io;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exhaustive verification engine for diagram categories over finite
/// index categories. Exit codes: 0 = all checks passed or were
/// inapplicable, 1 = at least one check failed, 2 = input error.
#[derive(Parser)]
#[command(name = "diagcat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate category / Reedy / diagram / transformation
    /// files.
    Validate {
        /// Files in the versioned JSON format.
        files: Vec<PathBuf>,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run a single check from the registry.
    Check {
        /// Check id: L1, L2, L3, L4, T1, C1, C2, C3, EXAMPLE, P1, R1,
        /// L5, or T2.
        #[arg(long)]
        id: String,
        /// Built-in fixture names (repeatable); defaults to the
        /// check's own fixture list.
        #[arg(long)]
        fixture: Vec<String>,
        /// Category or Reedy files to use as additional fixtures.
        #[arg(long)]
        files: Vec<PathBuf>,
        #[arg(long)]
        backend: Option<BackendArg>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run every check over its default fixtures.
    RunAll {
        /// Restrict to the given fixtures (repeatable).
        #[arg(long)]
        fixture: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Seed for the deterministic instance generator.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Size-budget knob; defaults to DIAGCAT_BUDGET or 3.
    #[arg(long)]
    budget: Option<usize>,
    /// Override the cofibration class (all, injective, surjective,
    /// bijective).
    #[arg(long)]
    cof: Option<ClassArg>,
    /// Override the weak-equivalence class.
    #[arg(long)]
    we: Option<ClassArg>,
    /// Override the fibration class.
    #[arg(long)]
    fib: Option<ClassArg>,
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum BackendArg {
    Finset,
    Finvect,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Finset => Backend::FinSet,
            BackendArg::Finvect => Backend::FinVect,
        }
    }
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ClassArg {
    All,
    Injective,
    Surjective,
    Bijective,
}

impl From<ClassArg> for ClassPredicate {
    fn from(c: ClassArg) -> ClassPredicate {
        match c {
            ClassArg::All => ClassPredicate::All,
            ClassArg::Injective => ClassPredicate::Injective,
            ClassArg::Surjective => ClassPredicate::Surjective,
            ClassArg::Bijective => ClassPredicate::Bijective,
        }
    }
}

fn env_budget() -> usize {
    std::env::var("DIAGCAT_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(3)
}

fn classes_override(run: &RunArgs, backend: Backend) -> Option<ModelClasses> {
    if run.cof.is_none() && run.we.is_none() && run.fib.is_none() {
        return None;
    }
    let std = ModelClasses::standard(backend);
    Some(ModelClasses {
        cof: run.cof.map(Into::into).unwrap_or(std.cof),
        we: run.we.map(Into::into).unwrap_or(std.we),
        fib: run.fib.map(Into::into).unwrap_or(std.fib),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { files, format } => validate(files, format),
        Command::Check {
            id,
            fixture,
            files,
            backend,
            run,
        } => check(id, fixture, files, backend.map(Into::into), run),
        Command::RunAll { fixture, run } => run_all(fixture, run),
    }
}

fn validate(files: Vec<PathBuf>, format: Format) -> ExitCode {
    if files.is_empty() {
        eprintln!("error: no files given");
        return ExitCode::from(2);
    }
    let mut kinds = Vec::new();
    for path in &files {
        match io::parse_file(path) {
            Ok(entity) => kinds.push(entity.kind()),
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    match format {
        Format::Text => {
            for (path, kind) in files.iter().zip(&kinds) {
                println!("ok {} ({kind})", path.display());
            }
        }
        Format::Json => {
            let docs: Vec<serde_json::Value> = files
                .iter()
                .zip(&kinds)
                .map(|(p, k)| {
                    serde_json::json!({
                        "file": p.display().to_string(),
                        "kind": k,
                        "status": "ok",
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&docs).unwrap());
        }
    }
    ExitCode::SUCCESS
}

fn check(
    id: String,
    fixture_names: Vec<String>,
    files: Vec<PathBuf>,
    backend: Option<Backend>,
    run: RunArgs,
) -> ExitCode {
    let Ok(check_id) = id.parse::<CheckId>() else {
        eprintln!("error: unknown check id {id:?}");
        return ExitCode::from(2);
    };
    let budget = run.budget.unwrap_or_else(env_budget);
    let mut extra_fixtures = Vec::new();
    for path in &files {
        match io::parse_file(path) {
            Ok(io::Entity::Reedy(r)) => {
                extra_fixtures.push(fixtures::register_adhoc(path, r.base.clone(), Some(r)))
            }
            Ok(io::Entity::Category(c)) => {
                extra_fixtures.push(fixtures::register_adhoc(path, c, None))
            }
            Ok(other) => {
                eprintln!(
                    "error: {}: cannot use a {} file as a fixture",
                    path.display(),
                    other.kind()
                );
                return ExitCode::from(2);
            }
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    let names: Vec<String> = if !fixture_names.is_empty() || !extra_fixtures.is_empty() {
        fixture_names.into_iter().chain(extra_fixtures).collect()
    } else {
        let mut seen = Vec::new();
        for s in default_specs(run.seed, budget) {
            if s.id == check_id && !seen.contains(&s.fixture) {
                seen.push(s.fixture);
            }
        }
        seen
    };
    if names.is_empty() {
        eprintln!("error: no fixtures for check {check_id}");
        return ExitCode::from(2);
    }
    let mut specs = Vec::new();
    for name in names {
        if fixtures::by_name(&name).is_none() {
            eprintln!("error: unknown fixture {name:?}");
            return ExitCode::from(2);
        }
        let backends = match backend {
            Some(b) => vec![b],
            None => {
                let defaults: Vec<Backend> = default_specs(run.seed, budget)
                    .into_iter()
                    .filter(|s| s.id == check_id && s.fixture == name)
                    .map(|s| s.backend)
                    .collect();
                if defaults.is_empty() {
                    vec![Backend::FinSet]
                } else {
                    defaults
                }
            }
        };
        for b in backends {
            specs.push(CheckSpec {
                id: check_id,
                fixture: name.clone(),
                backend: b,
                seed: run.seed,
                budget,
                classes: classes_override(&run, b),
            });
        }
    }
    emit(run_checks(&specs, run.seed, budget), run.format)
}

fn run_all(fixture_names: Vec<String>, run: RunArgs) -> ExitCode {
    let budget = run.budget.unwrap_or_else(env_budget);
    let mut specs = default_specs(run.seed, budget);
    if !fixture_names.is_empty() {
        for name in &fixture_names {
            if fixtures::by_name(name).is_none() {
                eprintln!("error: unknown fixture {name:?}");
                return ExitCode::from(2);
            }
        }
        specs.retain(|s| fixture_names.iter().any(|n| n == &s.fixture));
    }
    for spec in &mut specs {
        spec.classes = classes_override(&run, spec.backend);
    }
    emit(run_checks(&specs, run.seed, budget), run.format)
}

fn emit(report: diagcat::report::Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

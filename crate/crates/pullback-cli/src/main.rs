use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pullback_core::exactcore::parse_rat;
use pullback_core::registry::{
    builtin_catalog, load_catalog, run_all, run_case, select_cases, solve_family, CaseSpec, FamilyKind, ParamChoice,
    RunReport, SolveRequest,
};

const USAGE: u8 = 2;
const FAILED: u8 = 1;

#[derive(Parser)]
#[command(name = "pullback", version, about = "Verify pullback conditions in exact arithmetic")]
struct Cli {
    /// Catalog file to use instead of the builtin one.
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the cases in the catalog.
    List,
    /// Run every check of one case.
    Verify {
        case: String,
        #[arg(long, default_value_t = 8)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
    /// Solve a one-parameter family for the operator of a case.
    Solve {
        case: String,
        #[arg(long, value_enum)]
        family: Family,
        /// Leading exponent N.
        #[arg(long, default_value_t = 1)]
        leading: u32,
        /// `symbolic`, or `e=VALUE` for a fixed leading coefficient.
        #[arg(long, default_value = "symbolic", value_parser = parse_param)]
        param: ParamChoice,
        #[arg(long, default_value_t = 8)]
        order: i64,
    },
    /// Run every case.
    All {
        #[arg(long, default_value_t = 8)]
        order: i64,
        /// Cases run concurrently; defaults to the available cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Rank2,
    Schwarzian,
}

fn parse_param(text: &str) -> Result<ParamChoice, String> {
    if text == "symbolic" {
        return Ok(ParamChoice::Symbolic);
    }
    let value = text.strip_prefix("e=").ok_or("expected `symbolic` or `e=VALUE`")?;
    parse_rat(value).map(ParamChoice::Value).ok_or_else(|| format!("malformed rational `{value}`"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cases = match &cli.catalog {
        Some(path) => load_catalog(path),
        None => Ok(builtin_catalog()),
    };
    let cases = match cases {
        Ok(cases) => cases,
        Err(e) => return fail(USAGE, e),
    };
    match cli.command {
        Command::List => {
            for case in &cases {
                println!("{}\t{}", case.name, case.kind.as_str());
            }
            ExitCode::SUCCESS
        }
        Command::Verify { case, order, report } => {
            let spec = match lookup(&cases, &case, order) {
                Ok(spec) => spec,
                Err(code) => return code,
            };
            match run_case(spec, order) {
                Ok(run) => {
                    match report {
                        Format::Json => println!("{}", run.to_json()),
                        Format::Text => print!("{}", run.to_text()),
                    }
                    verdict(run.passed())
                }
                Err(e) => fail(FAILED, e),
            }
        }
        Command::Solve { case, family, leading, param, order } => {
            let spec = match lookup(&cases, &case, order) {
                Ok(spec) => spec,
                Err(code) => return code,
            };
            if matches!(family, Family::Rank2) && leading != 1 {
                return fail(USAGE, "rank-two families have leading exponent 1");
            }
            let family = match family {
                Family::Rank2 => FamilyKind::Rank2,
                Family::Schwarzian => FamilyKind::Schwarzian,
            };
            match solve_family(spec, &SolveRequest { family, leading, param, order }) {
                Ok(solved) => {
                    print!("{}", solved.to_text());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(FAILED, e),
            }
        }
        Command::All { order, jobs, report } => {
            if order < 1 {
                return fail(USAGE, format!("order must be positive, got {order}"));
            }
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            match run_all(&cases, order, jobs) {
                Ok(reports) => {
                    match report {
                        Format::Json => {
                            println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"))
                        }
                        Format::Text => print_summary(&reports),
                    }
                    verdict(reports.iter().all(RunReport::passed))
                }
                Err(e) => fail(FAILED, e),
            }
        }
    }
}

fn lookup<'c>(cases: &'c [CaseSpec], name: &str, order: i64) -> Result<&'c CaseSpec, ExitCode> {
    if order < 1 {
        return Err(fail(USAGE, format!("order must be positive, got {order}")));
    }
    select_cases(cases, name).map_err(|e| fail(USAGE, e))
}

fn print_summary(reports: &[RunReport]) {
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("{status:<5} {:<32} {:>3} checks {:>7} ms", r.case, r.checks.len(), r.elapsed_ms);
        for c in r.failures() {
            println!("      {:?} {}", c.status, c.name);
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} cases pass", reports.len());
}

fn verdict(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(FAILED)
    }
}

fn fail(code: u8, error: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {error}");
    ExitCode::from(code)
}

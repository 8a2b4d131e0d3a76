//! `prelie`: exact verification suites and table rendering for the
//! quasiassociative graded-algebra toolkit.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prelie::graded::StructureFamily;
use prelie_cli::report::parse_rat;
use prelie_cli::suites::run_suite;
use prelie_cli::tables::{print_table, OutputFormat, TableKind};
use prelie_cli::{SuiteCtx, SuiteReport};

#[derive(Parser)]
#[command(
    name = "prelie",
    version,
    about = "Exact verification suites and tables for a quasiassociative graded algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Graded,
    Cocycle,
    Complex,
    Homology,
    Diffalg,
    Ndim,
    Appendix1,
    Appendix2,
    Appendix3,
    Cotangent,
    All,
}

impl SuiteArg {
    fn as_str(self) -> &'static str {
        match self {
            SuiteArg::Graded => "graded",
            SuiteArg::Cocycle => "cocycle",
            SuiteArg::Complex => "complex",
            SuiteArg::Homology => "homology",
            SuiteArg::Diffalg => "diffalg",
            SuiteArg::Ndim => "ndim",
            SuiteArg::Appendix1 => "appendix1",
            SuiteArg::Appendix2 => "appendix2",
            SuiteArg::Appendix3 => "appendix3",
            SuiteArg::Cotangent => "cotangent",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Mul,
    Cocycle,
    Phi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    VirasoroEps,
    Lambda,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and report its failures.
    Verify {
        /// Suite to run (`all` runs every suite in order).
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Degree window for exhaustive sweeps.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(2..))]
        window: i64,
        /// Trial count for the seeded randomized checks.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Seed for the deterministic generator.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report format.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Evaluate scalar checks numerically at this rational parameter
        /// value; poles at it become failures.
        #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
        eps_value: Option<String>,
    },
    /// Render a structure-constant, cocycle, or charge table.
    Table {
        /// Which table to render.
        #[arg(value_enum)]
        kind: KindArg,
        /// Degrees range over `[-range, range]`.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(i64).range(0..))]
        range: i64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Structure family for the multiplication table.
        #[arg(long, value_enum, default_value_t = FamilyArg::VirasoroEps)]
        family: FamilyArg,
        /// Parameter for the `lambda` family.
        #[arg(
            long,
            default_value = "0",
            value_name = "P/Q",
            allow_hyphen_values = true
        )]
        lambda: String,
    },
}

fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    out.push_str(&format!(
        "suite {}: {} (cases={}, window={}, trials={}, seed={}, elapsed={:.2?})\n",
        report.suite,
        verdict,
        report.cases,
        report.window,
        report.trials,
        report.seed,
        report.elapsed,
    ));
    const SHOWN: usize = 50;
    for f in report.failures.iter().take(SHOWN) {
        out.push_str(&format!(
            "  FAIL {} [{}]: lhs = {}, rhs = {}\n",
            f.operation, f.inputs, f.lhs, f.rhs
        ));
    }
    if report.failures.len() > SHOWN {
        out.push_str(&format!(
            "  ... {} more failures\n",
            report.failures.len() - SHOWN
        ));
    }
    out
}

fn run_verify(
    suite: SuiteArg,
    window: i64,
    trials: u64,
    seed: u64,
    format: FormatArg,
    eps_value: Option<String>,
) -> ExitCode {
    let eps = match eps_value {
        None => None,
        Some(s) => match parse_rat(&s) {
            Ok(v) => Some(v),
            Err(e) => {
                eprintln!("error: invalid --eps-value: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let ctx = SuiteCtx {
        window,
        trials,
        seed,
        eps,
    };
    let reports = run_suite(suite.as_str(), &ctx).expect("clap restricts suite names");
    match format {
        FormatArg::Json => {
            let body = if suite == SuiteArg::All {
                serde_json::to_string(&reports).expect("reports serialize infallibly")
            } else {
                serde_json::to_string(&reports[0]).expect("reports serialize infallibly")
            };
            println!("{body}");
        }
        FormatArg::Text => {
            for report in &reports {
                print!("{}", render_text(report));
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!(
                "total: {} suite(s), {} passed, {} failed",
                reports.len(),
                reports.len() - failed,
                failed
            );
        }
    }
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_table(
    kind: KindArg,
    range: i64,
    format: FormatArg,
    family: FamilyArg,
    lambda: String,
) -> ExitCode {
    let fam = match family {
        FamilyArg::VirasoroEps => StructureFamily::VirasoroEps,
        FamilyArg::Lambda => match parse_rat(&lambda) {
            Ok(v) => StructureFamily::Lambda(v),
            Err(e) => {
                eprintln!("error: invalid --lambda: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let kind = match kind {
        KindArg::Mul => TableKind::Mul,
        KindArg::Cocycle => TableKind::Cocycle,
        KindArg::Phi => TableKind::Phi,
    };
    let fmt = match format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
    };
    print!("{}", print_table(kind, &fam, range, fmt));
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    // Die quietly when a downstream pager closes the pipe instead of
    // panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match Cli::parse().command {
        Command::Verify {
            suite,
            window,
            trials,
            seed,
            format,
            eps_value,
        } => run_verify(suite, window, trials, seed, format, eps_value),
        Command::Table {
            kind,
            range,
            format,
            family,
            lambda,
        } => run_table(kind, range, format, family, lambda),
    }
}

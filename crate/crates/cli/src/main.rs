//! `apoly`: counts, enumerates and constructs A-polynomials and runs the
//! verification suites. Reports are JSON lines on stdout; a summary goes to stderr.

mod commands;
mod report;
mod verify;

use std::process::ExitCode;
use std::time::Instant;

use apoly_core::apolynomial::DEFAULT_DEGREE_CAP;
use apoly_core::{Error, ResourceCap};
use clap::{Parser, Subcommand};

use commands::Method;
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "apoly", version, about = "A-polynomials over F_{2^r}")]
struct Cli {
    /// Largest exhaustive search, as log2 of the number of elements scanned.
    #[arg(long, global = true, env = "APOLY_CAP", default_value_t = ResourceCap::DEFAULT_BITS)]
    cap: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of A-polynomials of degree n over F_{2^r}.
    Count {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// All A-polynomials of degree n over F_{2^r}.
    Enumerate {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: u32,
    },
    /// Q-transform iterates f_0, ..., f_M of a seed.
    Construct {
        #[arg(long)]
        r: u32,
        /// Coefficients, constant term first (e.g. 1,1), or `auto` with --n.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        n: Option<u32>,
        /// Number of iterations.
        #[arg(long = "m", default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u64,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
enum Suite {
    /// Weighted Kloosterman average against the A-polynomial counts.
    Kloosterman {
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, default_value_t = 16)]
        max_rn: u32,
        /// Characters per cell; all of them by default when q <= 256.
        #[arg(long)]
        max_chars: Option<usize>,
    },
    /// Scanned point counts against the zeta function.
    Curve {
        #[arg(long, default_value_t = 20)]
        max_rn: u32,
    },
    /// Binomial expansion of s_t against the recurrence.
    Identity {
        #[arg(long, default_value_t = 200)]
        max_t: u64,
    },
    /// The estimate for |A_r(n) - q^n/4n|.
    Bound {
        #[arg(long, default_value_t = 8)]
        max_r: u32,
        #[arg(long, default_value_t = 64)]
        max_n: u32,
    },
    /// A_r(n) >= 1 except at (1, 3).
    Existence {
        #[arg(long, default_value_t = 8)]
        max_r: u32,
        #[arg(long, default_value_t = 64)]
        max_n: u32,
    },
    /// Formula, polynomial scan and orbit scan agree for q^n <= 2^max_log.
    Oracles {
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = 20)]
        max_log: u32,
    },
    /// C_r(n) = 2 A_r(n).
    Inert {
        #[arg(long, default_value_t = 8)]
        max_r: u32,
        #[arg(long, default_value_t = 64)]
        max_n: u32,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::CapExceeded { .. } | Error::DegreeCapExceeded { .. }) => 3,
            CliError::Core(
                Error::IterationFailed { .. }
                | Error::ZetaMismatch { .. }
                | Error::Indivisible { .. },
            ) => 1,
            CliError::Core(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Count { .. } => "count",
        Command::Enumerate { .. } => "enumerate",
        Command::Construct { .. } => "construct",
        Command::Verify { .. } => "verify",
    }
}

fn run(command: Command, cap: ResourceCap) -> Result<Report, CliError> {
    match command {
        Command::Count { r, n, method } => commands::count(r, n, method, cap),
        Command::Enumerate { r, n } => commands::enumerate(r, n, cap),
        Command::Construct {
            r,
            seed,
            n,
            m,
            degree_cap,
        } => commands::construct(r, &seed, n, m, degree_cap, cap),
        Command::Verify { suite } => match suite {
            Suite::Kloosterman {
                r,
                max_n,
                max_rn,
                max_chars,
            } => verify::kloosterman(r, max_n, max_rn, max_chars, cap),
            Suite::Curve { max_rn } => verify::curve(max_rn, cap),
            Suite::Identity { max_t } => verify::identity(max_t),
            Suite::Bound { max_r, max_n } => verify::bound(max_r, max_n),
            Suite::Existence { max_r, max_n } => verify::existence_suite(max_r, max_n),
            Suite::Oracles { r, max_log } => verify::oracles(r, max_log, cap),
            Suite::Inert { max_r, max_n } => verify::inert(max_r, max_n),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let name = command_name(&cli.command);
    let (mut report, code) = match run(cli.command, ResourceCap::new(cli.cap)) {
        Ok(report) => {
            let code = if report.passed() { 0 } else { 1 };
            (report, code)
        }
        Err(e) => {
            let mut report = Report::new(name);
            report.error = Some(e.to_string());
            (report, e.exit_code())
        }
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    if report.emit().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

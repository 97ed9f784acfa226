//! Command-line front end for `bellpart`.
//!
//! Standard output only ever carries the requested value or JSON report;
//! diagnostics go to standard error. Exit codes:
//!
//! | code | meaning                                            |
//! |------|----------------------------------------------------|
//! | 0    | success, or every verification entry passed        |
//! | 1    | at least one verification entry failed             |
//! | 2    | usage or parse error                               |
//! | 3    | precondition violated (e.g. `n = 0` for `theorem`) |

use std::io::Write;

use bellpart::bell::{complete_bell, ArgumentSequence};
use bellpart::identity::{verify_congruences, verify_theorem};
use bellpart::numtheory::{d_coefficient, e_coefficient, sigma};
use bellpart::partitions::PartitionTable;
use bellpart::qseries::{euler_product, series_g, series_h, verify_eq2, verify_eq3};
use bellpart::{parse_rational, render_rational, ExactRational, VerificationReport};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

pub const DEFAULT_MAX_N: usize = 64;
pub const DEFAULT_ORDER: usize = 200;
pub const DEFAULT_MAX_K: usize = 1000;

#[derive(Debug, Parser)]
#[command(
    name = "bellpart",
    version,
    about = "Exact Bell polynomials, partition numbers and q-series, and a checker for the Bell-polynomial identity for p(7n+5)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print p(n), the number of partitions of n.
    Partition { n: usize },
    /// Print the sum of the divisors of n (n >= 1).
    Sigma { n: u64 },
    /// Print d_n or e_n as an exact rational (n >= 1).
    Coeff { which: Coeff, n: u64 },
    /// Print the complete Bell polynomial B_n(x1, ..., xn).
    Bell {
        n: usize,
        /// Arguments as "num" or "num/den".
        #[arg(value_parser = parse_rational_arg, allow_hyphen_values = true)]
        xs: Vec<ExactRational>,
    },
    /// Print a truncated series, one "index<TAB>coefficient" line per term.
    Series {
        which: SeriesKind,
        #[arg(long)]
        order: usize,
    },
    /// Run a verification suite and print its JSON report.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Coeff {
    D,
    E,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesKind {
    Euler,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// The identity for 1 <= n <= N (the identity does not cover n = 0).
    Theorem {
        #[arg(long = "max-n", default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Sum p(5k+4) x^k = 5 (x^5;x^5)^5 / (x;x)^6 through x^K.
    Eq2 {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Sum p(7n+5) x^n = G(x) + H(x) through x^K.
    Eq3 {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Ramanujan's congruences mod 5, 7 and 11 for 0 <= k <= K.
    Congruences {
        #[arg(long = "max-k", default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
    },
    /// Every suite above at its default size; prints a JSON array.
    All,
}

fn parse_rational_arg(s: &str) -> Result<ExactRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Outcome {
    Text(String),
    Reports(Vec<VerificationReport>, bool),
}

fn execute(command: Command) -> bellpart::Result<Outcome> {
    let text = match command {
        Command::Partition { n } => PartitionTable::new().get(n).to_string(),
        Command::Sigma { n } => sigma(n)?.to_string(),
        Command::Coeff { which, n } => {
            let v = match which {
                Coeff::D => d_coefficient(n)?,
                Coeff::E => e_coefficient(n)?,
            };
            render_rational(&v)
        }
        Command::Bell { n, xs } => render_rational(&complete_bell(n, &ArgumentSequence::new(xs))?),
        Command::Series { which, order } => {
            let s = match which {
                SeriesKind::Euler => euler_product(order),
                SeriesKind::G => series_g(order),
                SeriesKind::H => series_h(order),
            };
            return Ok(Outcome::Text(s.to_lines()));
        }
        Command::Verify(v) => {
            let reports = match v {
                Verify::Theorem { max_n } => vec![verify_theorem(max_n)?],
                Verify::Eq2 { order } => vec![verify_eq2(order)],
                Verify::Eq3 { order } => vec![verify_eq3(order)],
                Verify::Congruences { max_k } => vec![verify_congruences(max_k)],
                Verify::All => vec![
                    verify_theorem(DEFAULT_MAX_N)?,
                    verify_eq2(DEFAULT_ORDER),
                    verify_eq3(DEFAULT_ORDER),
                    verify_congruences(DEFAULT_MAX_K),
                ],
            };
            return Ok(Outcome::Reports(reports, matches!(v, Verify::All)));
        }
    };
    Ok(Outcome::Text(text + "\n"))
}

fn exit_code_for(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::overall_pass) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{rendered}");
            return EXIT_OK;
        }
    };

    match execute(cli.command) {
        Ok(Outcome::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::Reports(reports, as_array)) => {
            let json = if as_array {
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            } else {
                reports[0].to_json()
            };
            let _ = writeln!(out, "{json}");
            for r in reports.iter().filter(|r| !r.overall_pass()) {
                let bad: Vec<String> = r.failures().map(|e| e.index.to_string()).collect();
                let _ = writeln!(
                    err,
                    "verification failed: {} (n = {})",
                    r.label(),
                    bad.join(", ")
                );
            }
            exit_code_for(&reports)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PRECONDITION
        }
    }
}

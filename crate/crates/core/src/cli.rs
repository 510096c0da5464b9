//! The `numsys` command line. Every subcommand is a thin wrapper over one
//! library call; output goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (unknown symbol,
//! not representable, not a radix family, ...), 3 invalid system.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::analysis::{analyze_completeness, analyze_univocality, AnalysisConfig, AnalysisReport};
use crate::arithmetic::{self, TieRule};
use crate::codec::{self, CanonicalForm, DEFAULT_BUDGET};
use crate::error::Error;
use crate::system::{self, PreNumerationSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SYSTEM: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "numsys", version, about = "Generalized positional numeral systems")]
struct Cli {
    /// Built-in system name or path to a system definition file.
    #[arg(long, short, global = true)]
    system: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert between integers and numeral strings.
    Convert(ConvertArgs),
    Add {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Negate {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Round to a multiple of a grain, or zero the rightmost numerals.
    Round(RoundArgs),
    Compare {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Print the times table.
    Table {
        #[arg(long)]
        metrics: bool,
    },
    /// Positional expansion of a fraction P/Q.
    Expand {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        #[arg(long, default_value_t = 100_000)]
        max_period: usize,
    },
    /// Completeness and univocality on a bounded window.
    Analyze(AnalyzeArgs),
    Classify {
        #[arg(long, default_value_t = 40)]
        prefix: usize,
    },
    Validate,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ConvertTarget {
    /// Integer to encode.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
    to_digits: Option<BigInt>,
    /// Numeral string to evaluate.
    #[arg(long, allow_hyphen_values = true)]
    to_value: Option<String>,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[command(flatten)]
    target: ConvertTarget,
    /// Search bound for systems without carry arithmetic.
    #[arg(long, default_value_t = 8)]
    max_len: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct RoundMode {
    #[arg(long, value_parser = parse_int)]
    grain: Option<BigInt>,
    #[arg(long)]
    truncate: Option<usize>,
}

#[derive(Debug, Args)]
struct RoundArgs {
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[command(flatten)]
    mode: RoundMode,
    #[arg(long, value_enum, default_value_t = Tie::HalfAwayFromZero)]
    tie: Tie,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Tie {
    HalfAwayFromZero,
    HalfToEven,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Lines,
    Text,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Integer window `A..B`, both ends inclusive.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    range: Option<(BigInt, BigInt)>,
    #[arg(long)]
    max_len: usize,
    /// Also look for two canonical strings with the same value.
    #[arg(long)]
    univocal: bool,
    /// Use the closed form for radix families instead of searching.
    #[arg(long)]
    fast_path: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.replace('−', "-").parse().map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_range(s: &str) -> Result<(BigInt, BigInt), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    Ok((parse_int(a)?, parse_int(b)?))
}

fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), Error> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidArgument(format!("expected P/Q, got {s:?}")))?;
    let p = parse_int(p).map_err(Error::InvalidArgument)?;
    let q = parse_int(q).map_err(Error::InvalidArgument)?;
    Ok((p, q))
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidSystem(_) | Error::Definition { .. } | Error::UnknownSystem(_) => EXIT_SYSTEM,
        Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Resolves a built-in name or a definition file path.
pub fn resolve_system(reference: &str) -> Result<PreNumerationSystem, Error> {
    load_system(reference, true)
}

fn load_system(reference: &str, checked: bool) -> Result<PreNumerationSystem, Error> {
    if let Some(s) = system::builtin(reference) {
        return Ok(s);
    }
    let path = Path::new(reference);
    if !path.is_file() {
        return Err(Error::UnknownSystem(reference.to_string()));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Definition { line: 0, message: format!("{}: {e}", path.display()) })?;
    if checked {
        system::parse_definition(&text)
    } else {
        system::parse_definition_unchecked(&text)
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::fail(code, text) };
        }
    };
    let Some(reference) = cli.system.as_deref() else {
        return Outcome::fail(EXIT_USAGE, "error: --system is required\n".into());
    };
    if let Command::Validate = cli.command {
        return validate_command(reference);
    }
    let result = resolve_system(reference).and_then(|s| execute(&s, &cli.command));
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(e) => Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    }
}

fn validate_command(reference: &str) -> Outcome {
    let system = match load_system(reference, false) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(exit_code(&e), format!("error: {e}\n")),
    };
    let violations = system::validate(&system);
    if violations.is_empty() {
        return Outcome::ok("valid\n".into());
    }
    let stdout: String = violations.iter().map(|v| format!("violation {v}\n")).collect();
    Outcome { code: EXIT_SYSTEM, stdout, stderr: String::new() }
}

fn canonical(system: &PreNumerationSystem, text: &str) -> Result<CanonicalForm, Error> {
    codec::canonicalize(system, &codec::parse(system, text)?)
}

fn encode(system: &PreNumerationSystem, n: &BigInt, max_len: usize) -> Result<CanonicalForm, Error> {
    if system.is_radix_family() {
        codec::encode_radix(system, n)
    } else {
        codec::encode_search(system, n, max_len)
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn execute(system: &PreNumerationSystem, command: &Command) -> Result<String, Error> {
    let show = |c: &CanonicalForm| line(codec::render(system, c));
    match command {
        Command::Convert(args) => match (&args.target.to_digits, &args.target.to_value) {
            (Some(n), _) => Ok(show(&encode(system, n, args.max_len)?)),
            (_, Some(text)) => Ok(line(codec::value_of(system, &codec::parse(system, text)?)?)),
            _ => unreachable!("clap enforces one target"),
        },
        Command::Add { x, y } => {
            Ok(show(&arithmetic::add(system, &canonical(system, x)?, &canonical(system, y)?)?))
        }
        Command::Mul { x, y } => {
            Ok(show(&arithmetic::mul(system, &canonical(system, x)?, &canonical(system, y)?)?))
        }
        Command::Negate { x } => Ok(show(&codec::negate(system, &canonical(system, x)?)?)),
        Command::Round(args) => {
            let x = canonical(system, &args.x)?;
            match (&args.mode.grain, args.mode.truncate) {
                (Some(grain), _) => {
                    let tie = match args.tie {
                        Tie::HalfAwayFromZero => TieRule::HalfAwayFromZero,
                        Tie::HalfToEven => TieRule::HalfToEven,
                    };
                    let v = arithmetic::round_value(&codec::value_of(system, &x)?, grain, tie)?;
                    Ok(show(&encode(system, &v, 64)?))
                }
                (_, Some(k)) => Ok(show(&arithmetic::truncate_at(system, &x, k)?)),
                _ => unreachable!("clap enforces one mode"),
            }
        }
        Command::Compare { x, y } => {
            let ord = codec::compare(system, &canonical(system, x)?, &canonical(system, y)?)?;
            Ok(line(match ord {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            }))
        }
        Command::Table { metrics } => {
            if *metrics {
                let m = arithmetic::table_metrics(system)?;
                let mut out = String::new();
                let _ = writeln!(out, "base {}", system.radix()?.base);
                let _ = writeln!(out, "total-pairs {}", m.total_pairs);
                let _ = writeln!(out, "trivial-pairs {}", m.trivial_pairs);
                let _ = writeln!(out, "nontrivial-no-carry {}", m.nontrivial_no_carry);
                let _ = writeln!(out, "carry-pairs {}", m.carry_pairs);
                let _ = writeln!(out, "carry-ratio {}", m.carry_ratio());
                Ok(out)
            } else {
                let table = arithmetic::times_table(system)?;
                let symbol = |i: usize| system.alphabet().get(i).symbol;
                Ok(table
                    .iter()
                    .map(|(&(x, y), p)| {
                        format!("{} {} {}\n", symbol(x), symbol(y), codec::render(system, p))
                    })
                    .collect())
            }
        }
        Command::Expand { fraction, max_period } => {
            let (p, q) = parse_fraction(fraction)?;
            let e = arithmetic::fraction_expansion(system, &p, &q, *max_period)?;
            Ok(line(e.render(system)))
        }
        Command::Analyze(args) => analyze(system, args),
        Command::Classify { prefix } => {
            let r = system::classify(system, *prefix)?;
            Ok(format!(
                "finite {}\nperfectly-ordered {}\nperfectly-disordered {}\nchecked-prefix {}\n",
                r.finite, r.perfectly_ordered, r.perfectly_disordered, r.checked_prefix_length
            ))
        }
        Command::Validate => unreachable!("handled before resolution"),
    }
}

fn analyze(system: &PreNumerationSystem, args: &AnalyzeArgs) -> Result<String, Error> {
    if args.range.is_none() && !args.univocal {
        return Err(Error::InvalidArgument("analyze needs --range, --univocal, or both".into()));
    }
    let config = AnalysisConfig {
        budget: args.budget,
        jobs: args.jobs.max(1),
        use_fast_path: args.fast_path,
        ..AnalysisConfig::default()
    };
    let mut report: Option<AnalysisReport> = None;
    if let Some((lo, hi)) = &args.range {
        report = Some(analyze_completeness(system, lo, hi, args.max_len, &config)?);
    }
    if args.univocal {
        let u = analyze_univocality(system, args.max_len, &config)?;
        report = Some(match report {
            Some(mut r) => {
                r.univocal_on_window = u.univocal_on_window;
                r.duplicate_examples = u.duplicate_examples;
                r.duplicate_count = u.duplicate_count;
                r.fast_path_used = r.fast_path_used.or(u.fast_path_used);
                r
            }
            None => u,
        });
    }
    let report = report.expect("at least one analysis ran");
    Ok(match args.format {
        Format::Lines => report.to_lines(system),
        Format::Text => report.to_text(system),
    })
}

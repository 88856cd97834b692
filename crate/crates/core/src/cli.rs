//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage, parse or domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use crate::catalog::Catalog;
use crate::dsl::parse_term;
use crate::error::{Error, Result};
use crate::numeric::{format_rational, truncated_decimal};
use crate::precision::{measure_rate, sum_to_digits, tail_bound, SumMode};
use crate::wz::{accelerate, lhs_series, verify_grid, verify_symbolic};

/// Decimals shown in the partial-sum comparison line of `accelerate`.
const COMPARISON_DECIMALS: u32 = 30;

#[derive(Debug, Parser)]
#[command(name = "zeta3", about = "Certified digits of zeta(3) from WZ-accelerated series")]
struct Cli {
    /// Catalog file with `name = expression` lines, replacing the bundled one.
    #[arg(long, global = true, value_name = "PATH")]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog series and pairs.
    List,
    /// Sum a series to a number of certified decimals.
    Digits {
        #[arg(long)]
        series: String,
        #[arg(long)]
        digits: u32,
        #[arg(long, default_value = "exact")]
        mode: SumMode,
    },
    /// Check a WZ pair exactly.
    Verify {
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 60)]
        nmax: i64,
        /// Prove the identity via the rational certificate instead of a grid.
        #[arg(long)]
        symbolic: bool,
    },
    /// Print the accelerated series of a pair.
    Accelerate {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        terms: i64,
        /// Number of left-hand terms G(n,0), n < this, in the comparison line.
        #[arg(long, default_value_t = 300)]
        lhs_terms: i64,
    },
    /// Fit digits gained per term over an index range.
    Rate {
        #[arg(long)]
        series: String,
        #[arg(long)]
        lo: i64,
        #[arg(long)]
        hi: i64,
    },
    /// Evaluate a DSL expression at a point.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        k: i64,
    },
}

impl clap::builder::ValueParserFactory for SumMode {
    type Parser = clap::builder::ValueParser;
    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<SumMode>().map_err(|e| e.to_string()))
    }
}

/// Runs one invocation, writing the payload to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog> {
    match path {
        None => Ok(Catalog::bundled()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::Catalog(format!("{}: {e}", p.display())))?;
            Catalog::from_text(&text)
        }
    }
}

fn write_out(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> Result<()> {
    out.write_fmt(text)
        .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let started = Instant::now();
    let catalog = load_catalog(cli.catalog.as_ref())?;
    let code = match &cli.command {
        Command::List => {
            for entry in catalog.entries() {
                write_out(out, format_args!("{entry}\n"))?;
            }
            0
        }
        Command::Digits { series, digits, mode } => {
            let report = sum_to_digits(catalog.series(series)?, *digits, *mode)?;
            write_out(out, format_args!("{report}\n"))?;
            0
        }
        Command::Verify { pair, nmax, symbolic } => {
            let pair = catalog.pair(pair)?;
            let report = if *symbolic {
                verify_symbolic(pair)?
            } else {
                verify_grid(pair, *nmax)?
            };
            write_out(out, format_args!("{report}\n"))?;
            if report.passed() {
                0
            } else {
                1
            }
        }
        Command::Accelerate { pair, terms, lhs_terms } => {
            if *terms < 1 || *lhs_terms < 1 {
                return Err(Error::InvalidArgument("term counts must be positive".into()));
            }
            let pair = catalog.pair(pair)?;
            let accel = accelerate(pair)?;
            let mut rhs = BigRational::from_integer(0.into());
            for n in 1..=*terms {
                let b = accel.term_at(n)?;
                write_out(out, format_args!("{n} {}\n", format_rational(&b)))?;
                rhs += b;
            }
            let lhs_spec = lhs_series(pair)?;
            let lhs = lhs_spec.partial_sum(lhs_terms - 1)?;
            let bound = tail_bound(&lhs_spec, *lhs_terms)?.bound + tail_bound(&accel, terms + 1)?.bound;
            let diff = &lhs - &rhs;
            let consistent = num_traits::Signed::abs(&diff) <= bound;
            write_out(
                out,
                format_args!(
                    "lhs_partial={} rhs_partial={} diff={} bound={} consistent={}\n",
                    truncated_decimal(&lhs, COMPARISON_DECIMALS),
                    truncated_decimal(&rhs, COMPARISON_DECIMALS),
                    truncated_decimal(&diff, COMPARISON_DECIMALS),
                    truncated_decimal(&bound, COMPARISON_DECIMALS),
                    consistent
                ),
            )?;
            0
        }
        Command::Rate { series, lo, hi } => {
            let rate = measure_rate(catalog.series(series)?, *lo, *hi)?;
            write_out(out, format_args!("{rate:.6}\n"))?;
            0
        }
        Command::Eval { expr, n, k } => {
            let value = parse_term(expr)?.eval_exact(*n, *k)?;
            write_out(out, format_args!("{}\n", format_rational(&value)))?;
            0
        }
    };
    let _ = writeln!(err, "elapsed_ms={}", started.elapsed().as_millis());
    Ok(code)
}

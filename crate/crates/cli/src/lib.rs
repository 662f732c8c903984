//! Front end for the `homfly` binary. [`run_command`] takes the argument
//! vector and returns the exit code with both output streams, so the whole
//! command surface is testable in process.

pub mod record;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use homfly_core::checks::{run_suite, Config, Suite, DEFAULT_CASES, DEFAULT_SEED};
use homfly_core::{homfly_double_twist, verify_conjecture, KnotParams};
use rayon::prelude::*;

use record::FORMULA_THEOREM;
pub use record::{format_output, Format, OutputRecord, VariableSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Inclusive integer range written `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let start: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
        let end: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(IntRange { start, end })
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "homfly",
    version,
    about = "Exact colored HOMFLY-PT invariants of double twist knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Core,
    Coefficients,
    Cyclotomic,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant of K_{p,s} colored by Sym^N.
    Compute {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long = "N", value_name = "N")]
        color: u32,
        /// Specialize to a = q^n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        sun: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Extract H_0..H_kmax and re-check them at extra colors.
    Expand {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        sun: u32,
        #[arg(long)]
        kmax: u32,
        #[arg(long = "extra-N", value_name = "COUNT", default_value_t = 2)]
        extra: u32,
    },
    /// Run the named identity checks.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
    },
    /// Write the generic invariants over a parameter grid as NDJSON.
    Table {
        #[arg(long = "p-range", allow_hyphen_values = true)]
        p_range: IntRange,
        #[arg(long = "s-range", allow_hyphen_values = true)]
        s_range: IntRange,
        #[arg(long = "N-max", value_name = "N")]
        color_max: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
    },
}

#[derive(Default)]
struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command(argv: &[String]) -> (i32, String, String) {
    let out = match Cli::try_parse_from(argv) {
        Ok(cli) => dispatch(cli.command),
        Err(err) => {
            let mut rendered = err.render().to_string();
            if err.use_stderr() {
                // value errors render without a usage line
                if !rendered.contains("Usage:") {
                    rendered = format!("{rendered}\n{}\n", Cli::command().render_usage());
                }
                Output {
                    code: EXIT_USAGE,
                    stderr: rendered,
                    ..Output::default()
                }
            } else {
                Output {
                    stdout: rendered,
                    ..Output::default()
                }
            }
        }
    };
    (out.code, out.stdout, out.stderr)
}

fn dispatch(cmd: Command) -> Output {
    match cmd {
        Command::Compute {
            p,
            s,
            color,
            sun,
            format,
        } => compute(p, s, color, sun, format),
        Command::Expand {
            p,
            s,
            sun,
            kmax,
            extra,
        } => expand(p, s, sun, kmax, extra),
        Command::Verify { suite, seed, cases } => verify(suite, Config { seed, cases }),
        Command::Table {
            p_range,
            s_range,
            color_max,
            out,
            jobs,
        } => table(p_range, s_range, color_max, &out, jobs),
    }
}

pub fn compute_record(p: i64, s: i64, color: u32, sun: Option<u32>) -> OutputRecord {
    let generic = homfly_double_twist(KnotParams::new(p, s, color));
    match sun {
        None => OutputRecord::new(
            p,
            s,
            color,
            VariableSpec::GenericA,
            &generic,
            FORMULA_THEOREM,
        ),
        Some(n) => {
            let special = generic.specialize_a(n as i64);
            OutputRecord::new(
                p,
                s,
                color,
                VariableSpec::AEqQn(n),
                &special,
                FORMULA_THEOREM,
            )
        }
    }
}

fn compute(p: i64, s: i64, color: u32, sun: Option<u32>, fmt: Format) -> Output {
    let rec = compute_record(p, s, color, sun);
    Output {
        stdout: format_output(&rec, fmt) + "\n",
        ..Output::default()
    }
}

fn expand(p: i64, s: i64, n: u32, kmax: u32, extra: u32) -> Output {
    let data = verify_conjecture(p, s, n, kmax, extra);
    let mut stdout = String::new();
    for (k, h) in data.coefficients.iter().enumerate() {
        writeln!(stdout, "H_{k} = {}", h.to_text()).unwrap();
    }
    let colors: Vec<String> = data.checked_colors.iter().map(u32::to_string).collect();
    writeln!(stdout, "checked N: {}", colors.join(",")).unwrap();
    writeln!(stdout, "status: {}", data.status).unwrap();
    Output {
        code: if data.is_verified() {
            EXIT_OK
        } else {
            EXIT_FAILED
        },
        stdout,
        ..Output::default()
    }
}

fn verify(suite: SuiteArg, cfg: Config) -> Output {
    let suites: &[Suite] = match suite {
        SuiteArg::Core => &[Suite::Core],
        SuiteArg::Coefficients => &[Suite::Coefficients],
        SuiteArg::Cyclotomic => &[Suite::Cyclotomic],
        SuiteArg::All => &Suite::ALL,
    };
    let mut stdout = String::new();
    let (mut passed, mut failed) = (0usize, 0usize);
    for &s in suites {
        for outcome in run_suite(s, &cfg) {
            if outcome.passed {
                passed += 1;
            } else {
                failed += 1;
            }
            writeln!(stdout, "{outcome}").unwrap();
        }
    }
    writeln!(stdout, "{passed} passed, {failed} failed").unwrap();
    Output {
        code: if failed == 0 { EXIT_OK } else { EXIT_FAILED },
        stdout,
        ..Output::default()
    }
}

/// NDJSON lines for the grid, sorted by `(p, s, N)`.
///
/// Rows are computed on a pool of `jobs` threads and collected in grid order,
/// so the bytes do not depend on the thread count.
pub fn table_lines(p_range: IntRange, s_range: IntRange, color_max: u32, jobs: u32) -> String {
    let rows: Vec<(i64, i64, u32)> = (p_range.start..=p_range.end)
        .flat_map(|p| (s_range.start..=s_range.end).map(move |s| (p, s)))
        .flat_map(|(p, s)| (0..=color_max).map(move |color| (p, s, color)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .expect("thread pool");
    let lines: Vec<String> = pool.install(|| {
        rows.par_iter()
            .map(|&(p, s, color)| format_output(&compute_record(p, s, color, None), Format::Json))
            .collect()
    });
    let mut out = String::with_capacity(lines.iter().map(|l| l.len() + 1).sum());
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn table(
    p_range: IntRange,
    s_range: IntRange,
    color_max: u32,
    path: &PathBuf,
    jobs: u32,
) -> Output {
    let body = table_lines(p_range, s_range, color_max, jobs);
    let rows = body.lines().count();
    match std::fs::write(path, body) {
        Ok(()) => Output {
            stdout: format!("wrote {rows} records to {}\n", path.display()),
            ..Output::default()
        },
        Err(e) => Output {
            code: EXIT_USAGE,
            stderr: format!("error: cannot write {}: {e}\n", path.display()),
            ..Output::default()
        },
    }
}

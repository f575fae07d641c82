//! The `robinson` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch / non-stabilization /
//! runtime failure, 2 bad flags. Results go to standard output; diagnostics
//! and the one-line error report go to standard error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::complexity::{closed_form_a, coeff_a, coeff_b, paperfolding_p, RecurrenceTable};
use crate::enumerator::{decode_pattern_set, peek_version, CornerPos, Oracle};
use crate::render::{render_ascii, render_svg, RenderStyle};
use crate::supertile::{build_supertile, validate, Facing, SupertileSpec, TileGrid};

pub const DEFAULT_MAX_RANK: u32 = 11;
pub const CACHE_ENV: &str = "ROBINSON_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "robinson", version, about = "Distinct n×n blocks of the Robinson tiling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridFormat {
    Svg,
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// closed form for the number of distinct n×n blocks (n >= 2)
    #[value(name = "A")]
    ClosedA,
    /// coefficient of A_1
    #[value(name = "a")]
    CoeffA,
    /// coefficient of B_1
    #[value(name = "b")]
    CoeffB,
    /// conjectured paper-folding block count (n >= 3)
    #[value(name = "P")]
    Paperfolding,
    /// A(n) from the recurrences
    #[value(name = "R")]
    RecurrenceA,
    /// B(n) from the recurrences
    #[value(name = "B")]
    RecurrenceB,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a supertile and print or save it.
    Supertile {
        #[arg(long)]
        rank: u32,
        #[arg(long, default_value = "ne", value_parser = parse_facing)]
        facing: Facing,
        #[arg(long, value_enum, default_value = "ascii")]
        out: GridFormat,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Draw the nested-square hierarchy (SVG only).
        #[arg(long)]
        overlay: bool,
    },
    /// Count distinct n×n blocks by enumeration until the count stabilizes.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: u32,
        /// Only blocks with a bumpy corner at ROW,COL (1-based, within the top-left 2×2).
        #[arg(long, value_parser = parse_position)]
        restrict: Option<CornerPos>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Evaluate a formula exactly.
    Formula {
        #[arg(long, value_parser = parse_bigint)]
        n: BigInt,
        #[arg(long, value_enum, default_value = "A")]
        which: Which,
    },
    /// Compare closed form, recurrence and enumeration for a range of n.
    Verify {
        #[arg(long, default_value_t = 2)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_RANK)]
        max_rank: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Compare only the closed form and the recurrence.
        #[arg(long)]
        skip_oracle: bool,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Render a JSON grid dump as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        overlay: bool,
        #[arg(long, default_value_t = 40.0)]
        cell_size: f64,
    },
    /// Inspect a pattern-set cache file.
    Cache {
        #[arg(long)]
        inspect: PathBuf,
    },
}

fn parse_facing(s: &str) -> Result<Facing, String> {
    Facing::parse(s).ok_or_else(|| format!("unknown facing `{s}` (expected ne, nw, sw or se)"))
}

fn parse_position(s: &str) -> Result<CornerPos, String> {
    let (r, c) = s.split_once(',').ok_or("expected ROW,COL")?;
    let r: usize = r.trim().parse().map_err(|_| format!("bad row `{r}`"))?;
    let c: usize = c.trim().parse().map_err(|_| format!("bad column `{c}`"))?;
    if !(1..=2).contains(&r) || !(1..=2).contains(&c) {
        return Err(format!("position [{r},{c}] must lie in the top-left 2×2"));
    }
    Ok(CornerPos::new(r, c))
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("`{s}` is not an integer"))
}

/// A failure with its exit code and a short kind tag for the error line.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, kind: "usage", message: message.into() }
    }

    fn runtime(message: impl ToString) -> Failure {
        Failure { code: 1, kind: "runtime", message: message.to_string() }
    }

    fn check(message: impl Into<String>) -> Failure {
        Failure { code: 1, kind: "check", message: message.into() }
    }
}

fn threads_or_default(threads: Option<usize>) -> usize {
    threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::runtime(format!("{}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    }
                }
                _ => {
                    let rendered = e.render().to_string();
                    let line = rendered.lines().next().unwrap_or("").trim_start_matches("error: ");
                    let _ = writeln!(stderr, "error[usage]: {line}");
                    2
                }
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error[{}]: {}", f.kind, f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8, Failure> {
    let out = |stdout: &mut dyn Write, text: &str| stdout.write_all(text.as_bytes()).map_err(Failure::runtime);
    match command {
        Command::Supertile { rank, facing, out: format, output, overlay } => {
            if rank == 0 || rank > 14 {
                return Err(Failure::usage(format!("--rank must be in 1..=14, got {rank}")));
            }
            let grid = build_supertile(SupertileSpec::new(rank, facing)).map_err(Failure::runtime)?;
            let text = match format {
                GridFormat::Ascii => render_ascii(&grid),
                GridFormat::Json => grid.to_json() + "\n",
                GridFormat::Svg => render_svg(&grid, &RenderStyle::default().with_overlay(overlay)),
            };
            match output {
                Some(path) => write_file(&path, &text)?,
                None => out(stdout, &text)?,
            }
            Ok(0)
        }
        Command::Count { n, max_rank, restrict, csv, cache, threads } => {
            if n == 0 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            if let Some(p) = restrict {
                if p.row > n || p.col > n {
                    return Err(Failure::usage(format!("--restrict {},{} does not fit a {n}×{n} block", p.row, p.col)));
                }
            }
            let mut oracle = Oracle::default().with_threads(threads_or_default(threads));
            if let Some(dir) = cache {
                oracle = oracle.with_cache_dir(dir);
            }
            let report = oracle.count_stabilized(n, max_rank, restrict).map_err(Failure::runtime)?;
            if let Some(path) = csv {
                write_file(&path, &report.to_csv())?;
            }
            out(stdout, &format!("{}\n", report.count))?;
            let _ = writeln!(stderr, "n={} rank={} stabilized={}", n, report.rank_used, report.stabilized);
            if !report.stabilized {
                return Err(Failure::check(format!("count for n={n} did not stabilize by rank {max_rank}")));
            }
            Ok(0)
        }
        Command::Formula { n, which } => {
            let small = || -> Result<u64, Failure> {
                u64::try_from(&n).map_err(|_| Failure::usage(format!("--n {n} is out of range for the recurrences")))
            };
            let value = match which {
                Which::ClosedA => closed_form_a(n.clone()),
                Which::CoeffA => coeff_a(n.clone()),
                Which::CoeffB => coeff_b(n.clone()),
                Which::Paperfolding => {
                    let _ = writeln!(stderr, "note: conjectured formula; evaluated, not verified");
                    paperfolding_p(n.clone())
                }
                Which::RecurrenceA => RecurrenceTable::new().a(small()?),
                Which::RecurrenceB => RecurrenceTable::new().b(small()?),
            };
            let value = value.map_err(|e| Failure::usage(e.0))?;
            out(stdout, &format!("{value}\n"))?;
            Ok(0)
        }
        Command::Verify { n_min, n_max, max_rank, csv, skip_oracle, cache, threads } => {
            if n_min < 2 {
                return Err(Failure::usage("--n-min must be at least 2"));
            }
            if n_max < n_min {
                return Err(Failure::usage("--n-max must not be below --n-min"));
            }
            let mut oracle = Oracle::default().with_threads(threads_or_default(threads));
            if let Some(dir) = cache {
                oracle = oracle.with_cache_dir(dir);
            }
            let mut table = RecurrenceTable::new();
            let mut text = String::from("n,closed_form,recurrence,oracle,match\n");
            let mut all_match = true;
            for n in n_min..=n_max {
                let closed = closed_form_a(n).map_err(|e| Failure::runtime(e.0))?;
                let rec = table.a(n).map_err(|e| Failure::runtime(e.0))?;
                let mut ok = closed == rec;
                let oracle_col = if skip_oracle {
                    String::new()
                } else {
                    let size = usize::try_from(n).map_err(|_| Failure::usage("--n-max too large"))?;
                    let report = oracle.count_stabilized(size, max_rank, None).map_err(Failure::runtime)?;
                    let _ = writeln!(stderr, "n={n} rank={} stabilized={}", report.rank_used, report.stabilized);
                    ok &= report.stabilized && BigInt::from(report.count) == closed;
                    report.count.to_string()
                };
                all_match &= ok;
                let _ = writeln!(text, "{n},{closed},{rec},{oracle_col},{ok}");
            }
            out(stdout, &text)?;
            if let Some(path) = csv {
                write_file(&path, &text)?;
            }
            if !all_match {
                return Err(Failure::check("closed form, recurrence and oracle disagree"));
            }
            Ok(0)
        }
        Command::Render { input, out: path, overlay, cell_size } => {
            let style = RenderStyle::new(cell_size, 1.0, true, overlay).map_err(|e| Failure::usage(e.to_string()))?;
            let text = fs::read_to_string(&input).map_err(|e| Failure::runtime(format!("{}: {e}", input.display())))?;
            let grid = TileGrid::from_json(&text).map_err(Failure::runtime)?;
            let report = validate(&grid);
            if !report.is_ok() {
                let _ = writeln!(stderr, "warning: grid has {} rule violations", report.violations.len());
            }
            write_file(&path, &render_svg(&grid, &style))?;
            Ok(0)
        }
        Command::Cache { inspect } => {
            let data = fs::read(&inspect).map_err(|e| Failure::runtime(format!("{}: {e}", inspect.display())))?;
            let version = peek_version(&data).map_err(Failure::runtime)?;
            let set = decode_pattern_set(&data).map_err(Failure::runtime)?;
            out(stdout, &format!("n,count,version\n{},{},{}\n", set.n(), set.count(), version))?;
            Ok(0)
        }
    }
}

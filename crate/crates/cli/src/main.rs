//! `bspin`: command-line verifier for classes of classifying stacks of
//! spin groups and `G_2`.
//!
//! Exit status is 0 when every check passes, 1 when a check fails, and 2
//! on usage errors or when an expression cannot be parsed or evaluated.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bspin_core::clifford::DeltaGroup;
use bspin_core::dsl::{self, DslError};
use bspin_core::lefschetz::LefschetzClass;
use bspin_core::motive::{all_ones, bspin, substitute_deltas, MotiveExpr};
use bspin_core::report::CheckReport;
use bspin_core::suites::{run_suite, Suite, SuiteOptions};
use clap::{Parser, Subcommand, ValueEnum};

/// Largest `n` for which `delta --table` writes the multiplication table.
const MAX_TABLE_N: u32 = 8;

#[derive(Parser)]
#[command(name = "bspin", version, about = "Exact checks for motivic classes of BSpin_n, BG_2 and related groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Field size for the finite-model suite.
        #[arg(long, default_value_t = 5)]
        q: u64,
    },
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Set every BDelta atom to 1.
        #[arg(long)]
        deltas_one: bool,
        /// Specialize L to this integer (at least 2).
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        at: Option<u64>,
    },
    /// Print the class of BSpin_n.
    Bspin {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Describe the finite group Delta_n.
    Delta {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=12))]
        n: u32,
        /// Write the multiplication table as CSV (n <= 8).
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ring,
    G2,
    Spin78,
    Tower,
    Clifford,
    Finite,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Ring => Suite::Ring,
            SuiteArg::G2 => Suite::G2,
            SuiteArg::Spin78 => Suite::Spin78,
            SuiteArg::Tower => Suite::Tower,
            SuiteArg::Clifford => Suite::Clifford,
            SuiteArg::Finite => Suite::Finite,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A failed command: the message and the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Verify { suite, seed, samples, json, q } => {
            verify(suite.into(), SuiteOptions { seed, samples: samples as usize, q }, json.as_deref())
        }
        Command::Eval { expr, deltas_one, at } => eval(&expr, deltas_one, at),
        Command::Bspin { n, format } => print_bspin(n, format),
        Command::Delta { n, table } => delta(n, table.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn verify(suite: Suite, opts: SuiteOptions, json: Option<&Path>) -> Result<u8, Failure> {
    let report = run_suite(suite, &opts).map_err(|e| Failure::usage(e.to_string()))?;
    print!("{}", report.to_text());
    if let Some(path) = json {
        write_json(&report, path)?;
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn write_json(report: &CheckReport, path: &Path) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report).map_err(|e| Failure::failed(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn eval(src: &str, deltas_one: bool, at: Option<u64>) -> Result<u8, Failure> {
    let mut value = dsl::evaluate(src)?;
    if deltas_one {
        let class = substitute_deltas(&value, &all_ones(&value)).map_err(|e| Failure::usage(e.to_string()))?;
        value = MotiveExpr::scalar(class);
    }
    match at {
        None => println!("{}", dsl::render(&value)),
        Some(q) => {
            let class: &LefschetzClass = value.as_scalar().ok_or_else(|| {
                Failure::usage("the value contains BDelta atoms; pass --deltas-one to specialize it")
            })?;
            println!("{}", class.eval_at(q));
        }
    }
    Ok(0)
}

fn print_bspin(n: u32, format: Format) -> Result<u8, Failure> {
    let value = bspin(n).map_err(|e| Failure::failed(e.to_string()))?;
    match format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let tree = value.to_tree();
            let doc = serde_json::json!({ "n": n, "scalar": tree.scalar, "atoms": tree.atoms });
            println!("{}", serde_json::to_string_pretty(&doc).map_err(|e| Failure::failed(e.to_string()))?);
        }
    }
    Ok(0)
}

fn delta(n: u32, table: Option<&Path>) -> Result<u8, Failure> {
    if table.is_some() && n > MAX_TABLE_N {
        return Err(Failure::usage(format!("--table is limited to n <= {MAX_TABLE_N}")));
    }
    let g = DeltaGroup::new(n);
    let center = g.center().len();
    println!("order: {}", g.order());
    println!("center: {center}");
    println!("abelianization: {}", g.abelianization_order());
    println!("abelian: {}", g.is_abelian());
    if let Some(path) = table {
        let cannot = |e: std::io::Error| Failure::usage(format!("cannot write {}: {e}", path.display()));
        let mut out = BufWriter::new(File::create(path).map_err(cannot)?);
        g.write_table_csv(&mut out).and_then(|_| out.flush()).map_err(cannot)?;
    }
    Ok(0)
}

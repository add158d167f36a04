//! Command line tool for classifying optimal LCD codes over GF(2) and
//! GF(3) in dimensions 2 to 4.
//!
//! Subcommands: `dmax` evaluates the largest-minimum-weight formula,
//! `classify` enumerates equivalence classes at given parameters, `expand`
//! prints an optimal generator matrix for an arbitrary length, `equiv`
//! tests monomial equivalence, `verify-tables` recomputes the recorded
//! tables, and `oracle` exposes the brute-force cross-checks.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parameter error,
//! 3 data unavailable. Results go to standard output; diagnostics go to
//! standard error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcdkit::classify::{self, ClassificationResult, ClassifyOptions, Mode};
use lcdkit::code::{self, MultiplicityVector};
use lcdkit::store;
use lcdkit::theory;
use lcdkit::{Error, Result};
use lcdkit_cli::expected::{self, CostClass, RowStatus, Verifier};

#[derive(Parser)]
#[command(
    name = "lcdkit",
    version,
    about = "Classify optimal LCD codes over GF(2) and GF(3)",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Minimum weight exactly d.
    Exact,
    /// Minimum weight at least d.
    AtLeast,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::ExactD,
            ModeArg::AtLeast => Mode::AtLeastD,
        }
    }
}

#[derive(Args)]
struct ParamArgs {
    /// Field order (2 or 3).
    #[arg(long)]
    q: u8,
    /// Code dimension.
    #[arg(long)]
    k: usize,
    /// Code length.
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the largest minimum weight among LCD [n, k] codes over GF(q).
    Dmax {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate equivalence classes of LCD [n, k, d] codes with no zero
    /// column and print how many there are.
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        /// Minimum weight to search at.
        #[arg(long)]
        d: u64,
        /// Whether d is an exact weight or a lower bound.
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Write the representatives to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record format for --out, or for standard output when given
        /// without --out.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads for the search (0 = all cores).
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Print a generator matrix of an optimal LCD [n, k] code.
    Expand {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Test whether two multiplicity vectors define equivalent codes.
    Equiv {
        /// Field order (2 or 3).
        #[arg(long)]
        q: u8,
        /// Code dimension.
        #[arg(long)]
        k: usize,
        /// First multiplicity vector, comma separated.
        #[arg(long)]
        m1: String,
        /// Second multiplicity vector, comma separated.
        #[arg(long)]
        m2: String,
    },
    /// Recompute the recorded tables and print one line per row.
    #[command(name = "verify-tables")]
    VerifyTables {
        /// Only check tables whose name contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Include rows of every cost class, however slow.
        #[arg(long)]
        all: bool,
        /// Worker threads for the searches (0 = all cores).
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Directory of expected-table files (defaults to the fixture tree).
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Brute-force oracles for small-scale cross checks.
    Oracle {
        #[command(subcommand)]
        oracle: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum weight by scanning every codeword.
    MinWeight {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        k: usize,
        /// Multiplicity vector, comma separated.
        #[arg(long)]
        m: String,
    },
    /// Dual minimum weight by scanning every dual codeword.
    DualMinWeight {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        k: usize,
        /// Multiplicity vector, comma separated.
        #[arg(long)]
        m: String,
    },
    /// Equivalence by trying every monomial transformation.
    Equiv {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        k: usize,
        /// First multiplicity vector, comma separated.
        #[arg(long)]
        m1: String,
        /// Second multiplicity vector, comma separated.
        #[arg(long)]
        m2: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::DataUnavailable(_) | Error::Io(_) => 3,
        Error::MalformedData(_) | Error::AssumptionViolated(_) | Error::NotLcd => 1,
        _ => 2,
    }
}

fn parse_multiplicities(q: u8, k: usize, text: &str) -> Result<MultiplicityVector> {
    let m = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>().map_err(|_| {
                Error::InvalidParameter(format!("multiplicity {s:?} is not a nonnegative integer"))
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    MultiplicityVector::new(q, k, m)
}

fn cmd_dmax(params: ParamArgs, format: Format) -> Result<u8> {
    let answer = theory::largest_lcd_weight(params.q, params.k, params.n)?;
    let row = &answer.case_row;
    match format {
        Format::Text => {
            println!("{}", answer.d);
            println!("formula row {} at s = {}", row.branch, row.s);
        }
        Format::Jsonl => {
            let value = serde_json::json!({
                "q": answer.q,
                "k": answer.k,
                "n": answer.n,
                "d": answer.d,
                "s": row.s,
                "residue": row.residue,
                "branch": row.branch,
            });
            println!("{value}");
        }
        Format::Csv => {
            println!(
                "{},{},{},{},{},{},\"{}\"",
                answer.q, answer.k, answer.n, answer.d, row.s, row.residue, row.branch
            );
        }
    }
    Ok(0)
}

fn write_records<W: Write>(out: &mut W, result: &ClassificationResult, format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            for rep in &result.representatives {
                let m: Vec<String> = rep.entries().iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},\"{}\",true",
                    result.q,
                    result.k,
                    result.n,
                    result.d,
                    m.join(" ")
                )?;
            }
        }
        _ => {
            for rep in &result.representatives {
                let record = store::LineRecord {
                    q: result.q,
                    k: result.k,
                    n: result.n,
                    d: result.d,
                    m: rep.entries().to_vec(),
                    canonical: true,
                };
                let line = serde_json::to_string(&record)
                    .map_err(|e| Error::MalformedData(e.to_string()))?;
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn cmd_classify(
    params: ParamArgs,
    d: u64,
    mode: ModeArg,
    out: Option<PathBuf>,
    format: Format,
    workers: usize,
) -> Result<u8> {
    let opts = ClassifyOptions { workers, ..ClassifyOptions::default() };
    let result = classify::classify_with(params.q, params.k, params.n, d, mode.into(), &opts)?;
    println!("{}", result.count);
    if let Some(path) = out {
        match format {
            Format::Csv => {
                if let Some(parent) = path.parent() {
                    std::fs::create_dir_all(parent)?;
                }
                let mut file = std::fs::File::create(&path)?;
                write_records(&mut file, &result, Format::Csv)?;
            }
            _ => store::write_classification(&result, &path)?,
        }
        eprintln!("wrote {} records to {}", result.count, path.display());
    } else if format != Format::Text {
        let stdout = std::io::stdout();
        write_records(&mut stdout.lock(), &result, format)?;
    }
    Ok(0)
}

fn cmd_expand(params: ParamArgs) -> Result<u8> {
    let g = theory::optimal_generator(params.q, params.k, params.n)?;
    let d = theory::largest_lcd_weight(params.q, params.k, params.n)?.d;
    eprintln!("[{}, {}, {d}] over GF({})", g.cols(), g.rows(), params.q);
    print!("{}", g.to_text());
    Ok(0)
}

fn cmd_equiv(q: u8, k: usize, m1: &str, m2: &str) -> Result<u8> {
    let a = parse_multiplicities(q, k, m1)?;
    let b = parse_multiplicities(q, k, m2)?;
    let eq = classify::are_equivalent(&a, &b)?;
    println!("{eq}");
    Ok(0)
}

fn cmd_verify_tables(
    filter: Option<String>,
    all: bool,
    workers: usize,
    dir: Option<PathBuf>,
) -> Result<u8> {
    let dir = dir.unwrap_or_else(expected::tables_dir);
    let tables = expected::load_tables(&dir)?;
    let budget = if all { CostClass::Heavy } else { CostClass::Medium };
    let mut verifier = Verifier::new(budget, workers);
    let (mut passed, mut failed, mut skipped) = (0u64, 0u64, 0u64);
    for table in &tables {
        if let Some(f) = &filter {
            if !table.name.contains(f.as_str()) {
                continue;
            }
        }
        for report in verifier.verify_table(table) {
            println!("{report}");
            match report.status {
                RowStatus::Pass => passed += 1,
                RowStatus::Fail { .. } => failed += 1,
                RowStatus::Skipped => skipped += 1,
            }
        }
    }
    eprintln!("{passed} passed, {failed} failed, {skipped} skipped");
    Ok(if failed > 0 { 1 } else { 0 })
}

fn cmd_oracle(oracle: OracleCommand) -> Result<u8> {
    match oracle {
        OracleCommand::MinWeight { q, k, m } => {
            let mv = parse_multiplicities(q, k, &m)?;
            let g = mv.generator_matrix()?;
            println!("{}", code::min_weight_bruteforce(&g)?);
        }
        OracleCommand::DualMinWeight { q, k, m } => {
            let mv = parse_multiplicities(q, k, &m)?;
            let g = mv.generator_matrix()?;
            println!("{}", code::dual_min_weight_bruteforce(&g)?);
        }
        OracleCommand::Equiv { q, k, m1, m2 } => {
            let a = parse_multiplicities(q, k, &m1)?.generator_matrix()?;
            let b = parse_multiplicities(q, k, &m2)?.generator_matrix()?;
            println!("{}", classify::bruteforce_equiv_oracle(&a, &b)?);
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Dmax { params, format } => cmd_dmax(params, format),
        Command::Classify { params, d, mode, out, format, workers } => {
            cmd_classify(params, d, mode, out, format, workers)
        }
        Command::Expand { params } => cmd_expand(params),
        Command::Equiv { q, k, m1, m2 } => cmd_equiv(q, k, &m1, &m2),
        Command::VerifyTables { filter, all, workers, dir } => {
            cmd_verify_tables(filter, all, workers, dir)
        }
        Command::Oracle { oracle } => cmd_oracle(oracle),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

//! Regenerates the base-classification store.
//!
//! For every supported field and dimension and every length residue, this
//! classifies the optimal LCD codes at the smallest supported length of
//! that residue and writes the representatives as line records. The
//! `expand` subcommand lifts these stored codes to arbitrary lengths.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use lcdkit::classify::{classify_with, ClassifyOptions, Mode};
use lcdkit::{store, theory, Error, Result};

#[derive(Parser)]
#[command(name = "gen-fixtures", about = "Regenerate the base-classification store")]
struct Cli {
    /// Output directory (defaults to the base subdirectory of the fixture
    /// tree).
    #[arg(long)]
    dir: Option<PathBuf>,
    /// Worker threads per search (0 = all cores).
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

fn run(cli: Cli) -> Result<()> {
    let dir = cli.dir.unwrap_or_else(|| store::fixtures_dir().join("base"));
    let opts = ClassifyOptions { workers: cli.workers, ..ClassifyOptions::default() };
    for (q, k) in [(2u8, 3usize), (2, 4), (3, 2), (3, 3)] {
        let v = theory::gaussian_count(q, k);
        for t in 0..v {
            let n = theory::smallest_supported_length(q, k, t)?;
            let d = theory::largest_lcd_weight(q, k, n)?.d;
            let started = Instant::now();
            let result = classify_with(q, k, n, d, Mode::ExactD, &opts)?;
            if result.count == 0 {
                return Err(Error::AssumptionViolated(format!(
                    "no optimal LCD [{n}, {k}, {d}] code over GF({q}); the formula \
                     promises at least one"
                )));
            }
            let path = dir.join(store::base_file_name(q, k, t)?);
            store::write_classification(&result, &path)?;
            eprintln!(
                "q={q} k={k} t={t}: [{n}, {k}, {d}] -> {} classes in {:.2?} -> {}",
                result.count,
                started.elapsed(),
                path.display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

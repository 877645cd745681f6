//! `npinv`: JSON front end for lattice-polygon curve invariants.

mod commands;
mod pretty;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "npinv", version, about = "Curve invariants from Newton polygons")]
struct Cli {
    /// Worker threads for enumeration (default: all cores, or NPINV_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Human-readable aligned output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Genus, gonality, Clifford data, scrollar and Schreyer invariants of a polygon.
    Analyze {
        polygon: String,
        #[arg(long)]
        direction: Option<String>,
    },
    /// Unimodular equivalence with a witness map.
    Equiv { p: String, q: String },
    /// Interior hulls, the interior-polygon test and the maximal polygon.
    Interior { polygon: String },
    /// Lattice width and width directions.
    Width {
        polygon: String,
        #[arg(long)]
        direction: Option<String>,
    },
    /// Census of interior polygons; `--genus` takes `g` or `a..b`.
    Enumerate {
        #[arg(long)]
        genus: String,
        #[arg(long)]
        csv: bool,
    },
    /// Fingerprint of an interior polygon, or the partition of a genus census.
    Fingerprint {
        polygon: Option<String>,
        #[arg(long)]
        genus: Option<i64>,
    },
    /// Non-degeneracy verdict for a polynomial file, or a random certified sample.
    Nondeg {
        file: Option<std::path::PathBuf>,
        /// Test weak non-degeneracy with respect to this polygon.
        #[arg(long)]
        container: Option<String>,
        /// Draw a random non-degenerate polynomial on this polygon.
        #[arg(long)]
        sample: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Toric binomials and the quadrics `Q_w` of the canonical model.
    Quadrics {
        file: std::path::PathBuf,
        /// Well-aligned decomposition along this direction.
        #[arg(long)]
        direction: Option<String>,
    },
    /// `16δ(f)` for a genus-5 polynomial with Newton polygon `Δ⁵₁`.
    Discriminant { file: std::path::PathBuf },
    /// Newton polygon of a `C_{a,b}` curve.
    Cab { a: i64, b: i64 },
    /// Predicted graded Betti table.
    Betti { polygon: String },
}

fn threads(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("NPINV_THREADS") {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| CliError::Usage(format!("NPINV_THREADS={s:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn emit_error(kind: &str, message: &str) {
    println!("{}", json!({ "error": { "kind": kind, "message": message } }));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            emit_error("usage", e.to_string().trim());
            return ExitCode::from(1);
        }
    };
    let result = threads(cli.threads).and_then(|n| {
        if let Some(n) = n.filter(|&n| n > 0) {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
        commands::run(&cli.command, cli.pretty)
    });
    match result {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(m)) => {
            emit_error("usage", &m);
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            emit_error("domain", &e.to_string());
            ExitCode::from(2)
        }
    }
}

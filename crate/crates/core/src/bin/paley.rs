// SPDX-License-Identifier: Apache-2.0

//! `paley`: build, verify, search and export Paley graphs `P(q²)`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use paley_core::certify::{
    self, Certificate, CliquesRequest, Instance, Selection, CENSUS_FULL_MAX_Q, CENSUS_SIZED_MAX_Q, VERIFY_MAX_Q,
};
use paley_core::constructions::theorem1_sets;
use paley_core::graph::export::{to_adjacency_json, to_dimacs};
use paley_core::spectral::{build_oval_eigenfunction, to_csv, to_json};
use paley_core::Error;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "paley", version, about = "Exact checks and searches on Paley graphs P(q^2)")]
struct Cli {
    /// Worker threads for parallel checks and search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Raise the largest accepted q for this command.
    #[arg(long, global = true, value_name = "Q")]
    cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print parameters that follow from q.
    Info {
        #[arg(long)]
        q: u64,
    },
    /// Run verification suites and emit a certificate.
    Verify(VerifyArgs),
    /// Enumerate maximal cliques and emit a census certificate.
    Cliques {
        #[arg(long)]
        q: u64,
        /// Only count maximal cliques of exactly this size.
        #[arg(long)]
        size: Option<usize>,
        /// Stop after this many cliques (marks the census truncated).
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the graph, the oval eigenfunction or the oval sets to a file.
    Export {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    theorem1: bool,
    #[arg(long)]
    theorem2: bool,
    #[arg(long)]
    lemmas: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Graph,
    Eigenfunction,
    Sets,
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value()
        .map(|p| p.get_name().to_string())
        .unwrap_or_default()
}

fn limit(default: u64, cap: Option<u64>) -> u64 {
    match cap {
        Some(c) if c != default => {
            eprintln!("warning: q limit changed from {default} to {c} by --cap; large runs may take a long time");
            c
        }
        _ => default,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Lib(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(cert: &Certificate, out: Option<&PathBuf>) -> Result<u8, Failure> {
    emit(&cert.to_json()?, out)?;
    for c in cert.failed_checks() {
        eprintln!("FAILED {}: {}", c.name, c.details);
    }
    if !cert.passed && !cert.truncated() {
        Ok(EXIT_CHECK_FAILED)
    } else if cert.truncated() {
        eprintln!("census truncated by --limit");
        Ok(EXIT_CAP)
    } else {
        Ok(0)
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info { q } => {
            let report = certify::info(q, limit(VERIFY_MAX_Q, cli.cap))?;
            emit(
                &(serde_json::to_string_pretty(&report).map_err(Error::from)? + "\n"),
                None,
            )?;
            Ok(0)
        }
        Command::Verify(a) => {
            let mut sel = Selection {
                theorem1: a.theorem1,
                theorem2: a.theorem2,
                lemmas: a.lemmas,
            };
            if a.all || sel.is_empty() {
                sel = Selection::all();
            }
            let cert = certify::verify(a.q, limit(VERIFY_MAX_Q, cli.cap), sel)?;
            finish(&cert, a.out.as_ref())
        }
        Command::Cliques {
            q,
            size,
            limit: lim,
            out,
        } => {
            if size == Some(0) || lim == Some(0) {
                return Err(Failure::Usage("--size and --limit must be positive".into()));
            }
            let default = if size.is_some() {
                CENSUS_SIZED_MAX_Q
            } else {
                CENSUS_FULL_MAX_Q
            };
            let cert = certify::cliques(q, limit(default, cli.cap), CliquesRequest { size, limit: lim })?;
            finish(&cert, out.as_ref())
        }
        Command::Export { q, format, what, out } => {
            let inst = Instance::new(q, limit(VERIFY_MAX_Q, cli.cap))?;
            let json = |v: serde_json::Result<String>| v.map(|s| s + "\n").map_err(|e| Failure::Lib(e.into()));
            let text = match (what, format) {
                (What::Graph, Format::Dimacs) => to_dimacs(
                    inst.graph.graph(),
                    &format!("Paley graph P({}^2), canonical vertex order", q),
                ),
                (What::Graph, Format::Json) => {
                    json(serde_json::to_string(&to_adjacency_json(inst.graph.graph(), inst.q())))?
                }
                (What::Eigenfunction, Format::Json) => {
                    let f = build_oval_eigenfunction(&inst.dec);
                    json(serde_json::to_string_pretty(&to_json(inst.q(), &f)))?
                }
                (What::Eigenfunction, Format::Csv) => to_csv(&build_oval_eigenfunction(&inst.dec)),
                (What::Sets, Format::Json) => json(serde_json::to_string_pretty(&serde_json::json!({
                    "q": inst.q(),
                    "sets": theorem1_sets(&inst.dec),
                })))?,
                (w, f) => {
                    return Err(Failure::Usage(format!(
                        "format `{}` is not available for `{}`",
                        value_name(f),
                        value_name(w)
                    )));
                }
            };
            emit(&text, out.as_ref())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let job = move || run(cli);
    let result = match threads {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(job),
            Err(e) => Err(Failure::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => job(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                Error::CheckFailed { .. } => EXIT_CHECK_FAILED,
                Error::NotPrime(_) | Error::EvenCharacteristic(_) | Error::NotOddPrimePower(_) => EXIT_USAGE,
                Error::Io(_) => EXIT_USAGE,
                _ => EXIT_CHECK_FAILED,
            })
        }
    }
}

//! The `blockspec` command line.
//!
//! Exit codes: 0 success, 1 a validation/spectral/golden check failed,
//! 2 bad usage or unreadable input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::design::{validate, Design, DesignFile};
use crate::error::{Error, Result};
use crate::expr::construct;
use crate::graphs::{
    block_intersection_graph, export_dot, merged_self_graph, mutual_incidence_graph,
    s_block_intersection_graph,
};
use crate::mutual::mutual_matrix;
use crate::paper_examples::{paper_examples, Which};
use crate::spectral::verify_spectrum;

#[derive(Debug, Parser)]
#[command(name = "blockspec", version, about = "Block design spectral toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a design file against the BIBD axioms.
    Validate { design: PathBuf },
    /// Build a design from a fixture name or construction expression,
    /// e.g. `complement(fano)` or `cyclic(11,1,3,4,5,9)`.
    Construct {
        expr: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mutual incidence matrix of two designs, or one of its Gram products.
    Mim {
        d1: PathBuf,
        d2: PathBuf,
        #[arg(long, value_enum, default_value_t = Product::None)]
        product: Product,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify every spectral claim for M(d1, d2)M(d1, d2)^T.
    Spectrum {
        d1: PathBuf,
        d2: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export a block graph as DOT.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        d1: PathBuf,
        d2: Option<PathBuf>,
        /// Intersection sizes for `s-intersection`, comma separated.
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompute the worked examples and diff them against the printed data.
    PaperExamples {
        #[arg(long, default_value = "all")]
        which: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Product {
    None,
    Mmt,
    Mtm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphKind {
    Mutual,
    MergedSelf,
    Intersection,
    SIntersection,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CheckFailed(_) | Error::GoldenMismatch(_) => 1,
        _ => 2,
    }
}

fn read_design(path: &Path) -> Result<Design> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Design::from_json(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => Error::Parse(format!("{}: not a valid design: {other}", path.display())),
    })
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Validate { design } => {
            let text = std::fs::read_to_string(&design)
                .map_err(|e| Error::Io(format!("{}: {e}", design.display())))?;
            let file: DesignFile = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", design.display())))?;
            let report = validate(file.v, &file.blocks);
            match (&report.violation, &report.params) {
                (None, Some(p)) => {
                    let mut line = format!("valid {p}");
                    if report.trivial_refinement {
                        line.push_str(" (trivial refinement)");
                    }
                    if report.fisher_holds == Some(false) {
                        line.push_str(" (b < v)");
                    }
                    emit(out, None, &with_newline(line))
                }
                (Some(e), _) => Err(Error::CheckFailed(e.to_string())),
                (None, None) => Err(Error::CheckFailed("design rejected".into())),
            }
        }
        Command::Construct { expr, output } => {
            let d = construct(&expr)?;
            emit(out, output.as_deref(), &with_newline(d.to_json()))
        }
        Command::Mim {
            d1,
            d2,
            product,
            format,
            output,
        } => {
            let mim = mutual_matrix(&read_design(&d1)?, &read_design(&d2)?)?;
            let m = match product {
                Product::None => mim.m,
                Product::Mmt => mim.mmt(),
                Product::Mtm => mim.mtm(),
            };
            let text = match format {
                MatrixFormat::Csv => m.to_csv(),
                MatrixFormat::Json => with_newline(m.to_json()),
            };
            emit(out, output.as_deref(), &text)
        }
        Command::Spectrum {
            d1,
            d2,
            format,
            output,
        } => {
            let report = verify_spectrum(&read_design(&d1)?, &read_design(&d2)?)?;
            let text = match format {
                ReportFormat::Json => with_newline(report.to_json()),
                ReportFormat::Text => report.summary(),
            };
            emit(out, output.as_deref(), &text)?;
            match report.failed_checks().first() {
                None => Ok(()),
                Some(c) => Err(Error::CheckFailed(match &c.witness {
                    Some(w) => format!("{} ({w})", c.name),
                    None => c.name.clone(),
                })),
            }
        }
        Command::Graph {
            kind,
            d1,
            d2,
            s,
            output,
        } => {
            let a = read_design(&d1)?;
            let needs_d2 = matches!(kind, GraphKind::Mutual);
            if needs_d2 != d2.is_some() {
                return Err(Error::Usage(if needs_d2 {
                    "mutual graph needs two design files".into()
                } else {
                    "this graph kind takes a single design file".into()
                }));
            }
            if !s.is_empty() && !matches!(kind, GraphKind::SIntersection) {
                return Err(Error::Usage("--s only applies to s-intersection".into()));
            }
            let dot = match kind {
                GraphKind::Mutual => {
                    let b = read_design(d2.as_deref().expect("checked above"))?;
                    export_dot(&mutual_incidence_graph(&a, &b)?)
                }
                GraphKind::MergedSelf => export_dot(&merged_self_graph(&a)),
                GraphKind::Intersection => export_dot(&block_intersection_graph(&a)),
                GraphKind::SIntersection => {
                    let sizes: BTreeSet<usize> = s.into_iter().collect();
                    export_dot(&s_block_intersection_graph(&a, &sizes)?)
                }
            };
            emit(out, output.as_deref(), &dot)
        }
        Command::PaperExamples { which } => {
            let report = paper_examples(which.parse::<Which>()?)?;
            emit(out, None, &report.text)?;
            match report.mismatches.first() {
                None => Ok(()),
                Some(m) => Err(Error::GoldenMismatch(format!(
                    "{m} ({} mismatch(es) in total)",
                    report.mismatches.len()
                ))),
            }
        }
    }
}

/// Runs the CLI with explicit output streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "blockspec: {}", first.trim_start_matches("error: "));
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(err, "blockspec: {e}");
            exit_code(&e)
        }
    }
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

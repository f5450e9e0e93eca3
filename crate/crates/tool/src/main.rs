//! `gtg`: command-line front end for the segment and sector reductions.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 parameter search exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gtg_core::realize::realize_sectors;
use gtg_core::verify::{round_trip_sectors, round_trip_segments, VerifyError};
use gtg_core::{
    export_dot, extract_description, load_document, random_simple_arrangement, realize_segments, reduce_sectors,
    reduce_segments, render_svg, save_document, transmission_graph, validate_description, Document, RandomSpec,
    RealizeError, RenderStyle, RenderSubject,
};

#[derive(Parser)]
#[command(
    name = "gtg",
    version,
    about = "Line arrangements to generalized transmission graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Segments,
    Sectors,
}

#[derive(Subcommand)]
enum Command {
    /// Random simple arrangement with integer coefficients.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Arrangement → description.
    Describe {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Checks a description; exit 0 iff well formed.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Description → graph.
    Reduce {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Arrangement → instance.
    Realize {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Instance → transmission graph.
    Tgraph {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Full round trip on an arrangement; exit 0 iff it passes.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Instance or arrangement → SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Graph → Graphviz DOT.
    ExportDot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

const VERIFICATION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const SEARCH_EXHAUSTED: u8 = 3;

fn load(path: &Path) -> Result<Document> {
    load_document(path).with_context(|| format!("cannot load {}", path.display()))
}

fn save(doc: &Document, path: &Path) -> Result<()> {
    save_document(doc, path).with_context(|| format!("cannot write {}", path.display()))
}

fn write_text(text: &str, path: &Path) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { n, seed, bound, out } => {
            let l = random_simple_arrangement(RandomSpec {
                n,
                seed,
                coord_bound: bound,
            })?;
            save(&Document::Arrangement(l), &out)?;
        }
        Command::Describe { input, out } => {
            let l = load(&input)?.into_arrangement()?;
            save(&Document::Description(extract_description(&l)), &out)?;
        }
        Command::Validate { input } => {
            let d = load(&input)?.into_description()?;
            let report = validate_description(&d);
            for v in &report.violations {
                println!("{}", serde_json::to_string(v)?);
            }
            if !report.is_valid() {
                println!("invalid: {} violations", report.violations.len());
                return Ok(VERIFICATION_FAILED);
            }
            println!("valid ({})", if report.simple { "simple" } else { "not simple" });
        }
        Command::Reduce { mode, input, out } => {
            let d = load(&input)?.into_description()?;
            let g = match mode {
                Mode::Segments => reduce_segments(&d)?,
                Mode::Sectors => reduce_sectors(&d)?,
            };
            save(&Document::Graph(g), &out)?;
        }
        Command::Realize { mode, input, out } => {
            let l = load(&input)?.into_arrangement()?;
            let inst = match mode {
                Mode::Segments => realize_segments(&l)?.instance,
                Mode::Sectors => realize_sectors(&l)?.instance,
            };
            save(&Document::Instance(inst), &out)?;
        }
        Command::Tgraph { input, out } => {
            let inst = load(&input)?.into_instance()?;
            save(&Document::Graph(transmission_graph(&inst)), &out)?;
        }
        Command::Verify { mode, input, report } => {
            let l = load(&input)?.into_arrangement()?;
            let r = match mode {
                Mode::Segments => round_trip_segments(&l)?,
                Mode::Sectors => round_trip_sectors(&l)?,
            };
            print!("{r}");
            let passed = r.passed();
            if let Some(path) = report {
                save(&Document::Report(Box::new(r)), &path)?;
            }
            if !passed {
                return Ok(VERIFICATION_FAILED);
            }
        }
        Command::Render { input, out } => {
            let style = RenderStyle::default();
            let svg = match load(&input)? {
                Document::Instance(inst) => render_svg(RenderSubject::Instance(&inst), &style),
                Document::Arrangement(l) => render_svg(RenderSubject::Arrangement(&l), &style),
                other => bail!("cannot render a {} document", other.kind()),
            };
            write_text(&svg, &out)?;
        }
        Command::ExportDot { input, out } => {
            let g = load(&input)?.into_graph()?;
            write_text(&export_dot(&g), &out)?;
        }
    }
    Ok(0)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let exhausted = err.chain().any(|e| {
        matches!(
            e.downcast_ref::<RealizeError>(),
            Some(RealizeError::ParameterSearchExhausted { .. })
        ) || matches!(
            e.downcast_ref::<VerifyError>(),
            Some(VerifyError::Realize(RealizeError::ParameterSearchExhausted { .. }))
        )
    });
    if exhausted {
        SEARCH_EXHAUSTED
    } else {
        INPUT_ERROR
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

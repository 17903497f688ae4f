mod commands;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oni_kit::complex::FOREST_FACET_CAP;
use oni_kit::graph::SEARCH_VERTEX_CAP;
use oni_kit::universe::BRUTE_FORCE_CAP;

#[derive(Parser)]
#[command(name = "oni-kit", version, about = "Open neighborhood ideals, simplicial complexes and geometric vertex decomposition")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Options {
    /// Input document; repeat for binary operations. Reads stdin when absent.
    #[arg(long = "in", global = true)]
    pub inputs: Vec<PathBuf>,
    /// Encoding of graph inputs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Exit with status 1 when a boolean result is false.
    #[arg(long, global = true)]
    pub assert: bool,
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest facet count for simplicial forest, tree and cycle tests.
    #[arg(long, global = true, default_value_t = FOREST_FACET_CAP)]
    pub cap_forest: usize,
    /// Largest tree accepted by the decomposition search.
    #[arg(long, global = true, default_value_t = SEARCH_VERTEX_CAP)]
    pub cap_search: usize,
    /// Largest universe handed to brute-force oracles.
    #[arg(long, global = true, default_value_t = BRUTE_FORCE_CAP)]
    pub cap_oracle: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Minimal transversals of a Sperner family.
    Dualize,
    #[command(subcommand)]
    Ideal(IdealCmd),
    #[command(subcommand)]
    Complex(ComplexCmd),
    #[command(subcommand)]
    Graph(GraphCmd),
    #[command(subcommand)]
    Build(BuildCmd),
    #[command(subcommand)]
    Gvd(GvdCmd),
    /// Print a bundled example object.
    Fixture { name: String },
    /// Run the bundled reference checks.
    VerifyPaper,
}

#[derive(Subcommand)]
pub enum IdealCmd {
    Primes,
    Unmixed,
    SrComplex,
    Equal,
    Sum,
    Intersect,
}

#[derive(Subcommand)]
pub enum ComplexCmd {
    Vd,
    SrIdeal,
    FacetIdeal,
    Covers,
    Tree,
    Cycle,
    Join,
}

#[derive(Subcommand)]
pub enum GraphCmd {
    Oni,
    OddOni,
    TdSets,
    OddTdSets,
    Heights,
    Unmixed,
    Stable,
    EvenStable,
    Chordal,
    /// Search a decomposition of a tree, or verify one given as two more inputs.
    Decompose,
    SplitVertex,
}

#[derive(Subcommand)]
pub enum BuildCmd {
    Path { n: usize },
    /// Apply the O-operator to P6 at each vertex in turn.
    OSeq { vertices: Vec<String> },
    Realize,
    EdgeJoin { first: String, second: String },
}

#[derive(Subcommand)]
pub enum GvdCmd {
    Check,
    Split { y: String },
    CertifyTree,
    /// Replay a certificate (second input) against an ideal (first input).
    Validate,
}

/// A command result: the document to print and, for predicates, its truth value.
pub struct Outcome {
    pub doc: Value,
    pub verdict: Option<bool>,
}

impl Options {
    pub fn read_inputs(&self) -> Result<Vec<String>, String> {
        if self.inputs.is_empty() {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("reading stdin: {e}"))?;
            return Ok(vec![text]);
        }
        self.inputs
            .iter()
            .map(|p| fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display())))
            .collect()
    }
}

fn emit(opts: &Options, doc: &Value) -> io::Result<()> {
    let mut text = if opts.pretty {
        serde_json::to_string_pretty(doc)?
    } else {
        serde_json::to_string(doc)?
    };
    text.push('\n');
    match &opts.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.opts) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.opts, &outcome.doc) {
                eprintln!("oni-kit: {e}");
                return ExitCode::from(2);
            }
            match outcome.verdict {
                Some(false) if cli.opts.assert => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(commands::Failure::Checks(doc)) => {
            let _ = emit(&cli.opts, &doc);
            ExitCode::from(1)
        }
        Err(commands::Failure::Error(msg)) => {
            println!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}

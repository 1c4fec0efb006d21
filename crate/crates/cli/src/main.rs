//! `wpolar`: verification, enumeration and export for W(2N-1, 2) and N-qubit Paulis.
//!
//! Exit codes: 0 success or pass, 1 anticommute or a failed check, 2 usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wpolar::export::{generators_document, report_document, spreads_document, CommutationGraph};
use wpolar::pauli::{commutes, commutes_matrix, mcs_of_generator, PauliOperator};
use wpolar::polar::{desarguesian_spread, enumerate_generators, enumerate_spreads, Spread, MAX_SPREAD_CENSUS_QUBITS};
use wpolar::report::verify;

#[derive(Parser)]
#[command(name = "wpolar", version, about = "N-qubit Pauli operators as points of the symplectic polar space W(2N-1, 2)")]
struct Cli {
    /// Output format; `dot` applies to `graph` only.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Desarguesian,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every count by enumeration and compare with its closed form.
    Verify {
        n: usize,
        /// Also compare against exact matrix commutation on all operator pairs (N <= 3).
        #[arg(long)]
        oracle: bool,
    },
    /// List every maximally commuting subset (generator), one per line.
    Generators { n: usize },
    /// Print a spread: a partition of all operators into maximally commuting subsets.
    Spread {
        n: usize,
        #[arg(long, value_enum, default_value = "desarguesian")]
        method: Method,
        /// Every spread (search only, N <= 2).
        #[arg(long, conflicts_with = "limit")]
        all: bool,
        /// Stop after this many spreads (search only).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Export the commutation (perpendicularity) graph.
    Graph { n: usize },
    /// Decide whether two Pauli words commute.
    Commute {
        word1: String,
        word2: String,
        /// Also compute the verdict from exact matrices (N <= 6).
        #[arg(long)]
        oracle: bool,
    },
}

/// A usage problem: reported on stderr with exit code 2.
struct Usage(String);

impl From<wpolar::Error> for Usage {
    fn from(e: wpolar::Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<(String, ExitCode), Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Verify { n, oracle } => cmd_verify(n, oracle, text_or_json(format)?),
        Command::Generators { n } => cmd_generators(n, text_or_json(format)?),
        Command::Spread { n, method, all, limit } => cmd_spread(n, method, all, limit, text_or_json(format)?),
        Command::Graph { n } => cmd_graph(n, format.unwrap_or(Format::Dot)),
        Command::Commute { word1, word2, oracle } => {
            if format.is_some_and(|f| f != Format::Text) {
                return Err(Usage("commute only supports --format text".into()));
            }
            cmd_commute(&word1, &word2, oracle)
        }
    }
}

fn text_or_json(format: Option<Format>) -> Result<Format, Usage> {
    match format.unwrap_or(Format::Text) {
        Format::Dot => Err(Usage("--format dot is only supported by `graph`".into())),
        f => Ok(f),
    }
}

fn ok(out: String) -> Outcome {
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_verify(n: usize, oracle: bool, format: Format) -> Outcome {
    let report = verify(n, oracle)?;
    let out = match format {
        Format::Json => report_document(&report).to_json() + "\n",
        _ => format!("{report}\n"),
    };
    let code = if report.overall { ExitCode::SUCCESS } else { ExitCode::from(1) };
    Ok((out, code))
}

fn mcs_line(block: &wpolar::Subspace) -> Result<String, Usage> {
    let words: Vec<String> = mcs_of_generator(block)?.iter().map(ToString::to_string).collect();
    Ok(words.join(","))
}

fn cmd_generators(n: usize, format: Format) -> Outcome {
    let gens = enumerate_generators(n)?;
    if format == Format::Json {
        return ok(generators_document(n, &gens)?.to_json() + "\n");
    }
    let mut out = String::new();
    for g in &gens {
        writeln!(out, "{}", mcs_line(g)?).unwrap();
    }
    ok(out)
}

fn cmd_spread(n: usize, method: Method, all: bool, limit: Option<usize>, format: Format) -> Outcome {
    let spreads = match method {
        Method::Desarguesian => {
            if all || limit.is_some() {
                return Err(Usage("--all and --limit require --method search".into()));
            }
            vec![desarguesian_spread(n)?]
        }
        Method::Search => {
            if all && n > MAX_SPREAD_CENSUS_QUBITS {
                return Err(Usage(format!("--all is only supported for N <= {MAX_SPREAD_CENSUS_QUBITS}")));
            }
            let limit = if all { None } else { Some(limit.unwrap_or(1)) };
            enumerate_spreads(n, limit)?
        }
    };
    for s in &spreads {
        s.validate()?;
    }
    if format == Format::Json {
        return ok(spreads_document(n, &spreads)?.to_json() + "\n");
    }
    render_spreads(&spreads)
}

fn render_spreads(spreads: &[Spread]) -> Outcome {
    let mut out = String::new();
    for (k, s) in spreads.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        writeln!(out, "spread {} of {}: {} blocks", k + 1, spreads.len(), s.blocks().len()).unwrap();
        for block in s.blocks() {
            writeln!(out, "{}", mcs_line(block)?).unwrap();
        }
    }
    ok(out)
}

fn cmd_graph(n: usize, format: Format) -> Outcome {
    let graph = CommutationGraph::new(n)?;
    match format {
        Format::Dot => ok(graph.to_dot()),
        Format::Json => ok(graph.document().to_json() + "\n"),
        Format::Text => Err(Usage("graph supports --format dot or json".into())),
    }
}

fn cmd_commute(word1: &str, word2: &str, oracle: bool) -> Outcome {
    let p: PauliOperator = word1.parse()?;
    let q: PauliOperator = word2.parse()?;
    let symplectic = commutes(&p, &q)?;
    let verdict = |c: bool| if c { "commute" } else { "anticommute" };
    let mut out = String::new();
    let mut agree = true;
    if oracle {
        let by_matrix = commutes_matrix(&p, &q)?;
        agree = by_matrix == symplectic;
        writeln!(out, "symplectic: {}", verdict(symplectic)).unwrap();
        writeln!(out, "matrix: {}", verdict(by_matrix)).unwrap();
        writeln!(out, "agree: {agree}").unwrap();
    } else {
        writeln!(out, "{}", verdict(symplectic)).unwrap();
    }
    let code = if symplectic && agree { ExitCode::SUCCESS } else { ExitCode::from(1) };
    Ok((out, code))
}

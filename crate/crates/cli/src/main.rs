mod gen;
mod io;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bchroma::bcolor::{
    b_spectrum, b_vertices, first_conflict, phi, phi_oracle_with, ORACLE_MAX_VERTICES,
};
use bchroma::families::EdgeSetAdjacency;
use bchroma::verify::{
    parse_claims, run_suite, EvalConfig, Format, SuiteConfig, EXIT_INTERNAL, EXIT_TIMEOUT,
};
use bchroma::{Coloring, Reading, SolveError, SolverConfig};
use clap::{Parser, Subcommand, ValueEnum};

use crate::io::{
    check_output, read_graph, read_text, write_atomic, CliResult, Failure, EXIT_NOT_B_COLORING,
};

#[derive(Debug, Parser)]
#[command(
    name = "bchroma",
    version,
    about = "b-chromatic numbers of graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReadingArg {
    /// Every class has a vertex adjacent to all other classes
    Representative,
    /// Every pair of classes is joined by an edge
    Pairwise,
}

impl From<ReadingArg> for Reading {
    fn from(r: ReadingArg) -> Reading {
        match r {
            ReadingArg::Representative => Reading::Representative,
            ReadingArg::Pairwise => Reading::Pairwise,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct SolverArgs {
    /// Search nodes allowed per k before giving up
    #[arg(long, default_value_t = bchroma::bcolor::DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Worker threads (0 = all cores)
    #[arg(long, env = "BCHROMA_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Byte-identical output across runs
    #[arg(long)]
    deterministic: bool,
    #[arg(long, value_enum, default_value = "representative")]
    reading: ReadingArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a family member as an edge list
    Gen(gen::GenArgs),
    /// Compute the b-chromatic number of an edge-list file
    Phi {
        graph: PathBuf,
        /// Cross-check against brute-force enumeration (small graphs only)
        #[arg(long)]
        oracle: bool,
        /// Print every k admitting a k-b-coloring
        #[arg(long)]
        spectrum: bool,
        /// Write the witness coloring as JSON
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Check a coloring given as JSON `{"k": .., "colors": [..]}`
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "representative")]
        reading: ReadingArg,
    },
    /// Evaluate claims over their parameter grids
    Verify {
        /// Comma-separated claim ids, or `all`
        #[arg(long, default_value = "all")]
        claims: String,
        /// Cap on every n parameter
        #[arg(long)]
        max_n: Option<usize>,
        /// Keep only instances with this n
        #[arg(long)]
        n: Option<usize>,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Format of the report on stdout
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Edge-set graphs: subsets sharing an edge are also adjacent
        #[arg(long)]
        shared_edge_adjacent: bool,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

impl SolverArgs {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            node_budget: self.budget,
            parallel: self.workers != 1 && !self.deterministic,
            reading: self.reading.into(),
        }
    }
}

fn braces(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn install_pool(workers: usize) -> CliResult {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| Failure::input(format!("cannot start worker pool: {e}")))
}

fn cmd_phi(
    graph: &Path,
    oracle: bool,
    spectrum: bool,
    witness: Option<&PathBuf>,
    solver: &SolverArgs,
) -> CliResult {
    if let Some(path) = witness {
        check_output(path)?;
    }
    let g = read_graph(graph)?;
    install_pool(solver.workers)?;
    let cfg = solver.config();
    let result = match phi(&g, &cfg) {
        Ok(r) => r,
        Err(SolveError::Timeout { lower, upper }) => {
            return Err(Failure::with_code(
                EXIT_TIMEOUT,
                format!("timeout: phi undecided in {lower}..={upper}"),
            ));
        }
    };
    println!("phi {}", result.phi);
    let bv: Vec<String> = result
        .b_vertices
        .iter()
        .map(|(c, v)| format!("{c}:{v}"))
        .collect();
    println!("b-vertices {}", bv.join(" "));
    if oracle {
        if g.order() > ORACLE_MAX_VERTICES {
            println!(
                "oracle skipped: {} vertices exceed the cap {ORACLE_MAX_VERTICES}",
                g.order()
            );
        } else {
            let o = phi_oracle_with(&g, cfg.reading).expect("order checked against the cap");
            if o != result.phi {
                return Err(Failure::with_code(
                    EXIT_INTERNAL,
                    format!(
                        "internal error: solver phi {} but oracle phi {o}",
                        result.phi
                    ),
                ));
            }
            println!("oracle {o} agrees");
        }
    }
    if spectrum {
        let s = b_spectrum(&g, &cfg);
        println!("spectrum {}", braces(&s.feasible));
        if !s.undecided.is_empty() {
            println!("undecided {}", braces(&s.undecided));
            return Err(Failure::with_code(
                EXIT_TIMEOUT,
                "timeout: spectrum incomplete",
            ));
        }
    }
    if let Some(path) = witness {
        let mut json = serde_json::to_string_pretty(&result).expect("result serializes");
        json.push('\n');
        write_atomic(path, &json)?;
    }
    Ok(())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(graph: &Path, coloring: &Path, reading: Reading) -> CliResult {
    let g = read_graph(graph)?;
    let c: Coloring = serde_json::from_str(&read_text(coloring)?)
        .map_err(|e| Failure::input(format!("{}: {e}", coloring.display())))?;
    match first_conflict(&g, &c).map_err(Failure::input)? {
        Some((u, v)) => println!("proper: no (edge {u}-{v} is monochromatic)"),
        None => println!("proper: yes"),
    }
    let empty: Vec<String> = (1..=c.k())
        .filter(|&k| c.class(k).is_empty())
        .map(|k| k.to_string())
        .collect();
    if empty.is_empty() {
        println!("surjective: yes");
    } else {
        println!("surjective: no (empty classes {})", empty.join(","));
    }
    let ok = reading.accepts(&g, &c).map_err(Failure::input)?;
    match reading {
        Reading::Representative => println!("b-coloring: {}", yes(ok)),
        Reading::Pairwise => println!("b-coloring (pairwise): {}", yes(ok)),
    }
    if let Ok(map) = b_vertices(&g, &c) {
        for (class, set) in map {
            match set.first() {
                Some(v) => println!("class {class}: b-vertex {v}"),
                None => println!("class {class}: no b-vertex"),
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::with_code(EXIT_NOT_B_COLORING, "not a b-coloring"))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    claims: &str,
    max_n: Option<usize>,
    n: Option<usize>,
    json: Option<&PathBuf>,
    format: FormatArg,
    shared_edge_adjacent: bool,
    solver: &SolverArgs,
) -> CliResult<i32> {
    if let Some(path) = json {
        check_output(path)?;
    }
    let claims = parse_claims(claims).map_err(Failure::input)?;
    let edge_set = if shared_edge_adjacent {
        EdgeSetAdjacency::SharedEdge
    } else {
        EdgeSetAdjacency::Strict
    };
    let cfg = SuiteConfig {
        suite: if claims.len() == bchroma::verify::ClaimId::ALL.len() {
            "all".into()
        } else {
            "custom".into()
        },
        claims,
        max_n,
        n,
        // instances already run in parallel; each solve stays sequential
        eval: EvalConfig {
            solver: SolverConfig {
                parallel: false,
                ..solver.config()
            },
            edge_set,
        },
        workers: solver.workers,
        deterministic: solver.deterministic,
    };
    let report = run_suite(&cfg).map_err(|e| {
        let code = if e.is_internal() {
            EXIT_INTERNAL
        } else {
            io::EXIT_INPUT
        };
        Failure::with_code(code, e)
    })?;
    let stdout_format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    print!("{}", report.render(stdout_format));
    if let Some(path) = json {
        write_atomic(path, &report.to_json())?;
    }
    Ok(report.exit_code())
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Gen(args) => gen::run(&args).map(|()| 0),
        Command::Phi {
            graph,
            oracle,
            spectrum,
            witness,
            solver,
        } => cmd_phi(&graph, oracle, spectrum, witness.as_ref(), &solver).map(|()| 0),
        Command::Check {
            graph,
            coloring,
            reading,
        } => cmd_check(&graph, &coloring, reading.into()).map(|()| 0),
        Command::Verify {
            claims,
            max_n,
            n,
            json,
            format,
            shared_edge_adjacent,
            solver,
        } => cmd_verify(
            &claims,
            max_n,
            n,
            json.as_ref(),
            format,
            shared_edge_adjacent,
            &solver,
        ),
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("bchroma: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}

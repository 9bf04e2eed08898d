use clap::{Parser, Subcommand, ValueEnum};
use selfsim::boundary::{boundary_prefixes, is_complete_boundary_path};
use selfsim::checkers::{simplicity_verdict, AnalysisReport};
use selfsim::degree::{Degree, MAX_RANK};
use selfsim::isg::{is_idempotent_flagged, multiply, star};
use selfsim::parse::{format_element, parse_element_document, parse_system, ElementOp};
use selfsim::SelfSimilarSystem;
use std::path::PathBuf;
use std::process::ExitCode;

/// Structural checkers for self-similar group actions on finitely aligned
/// k-graphs: validation, semigroup arithmetic, boundary enumeration, and
/// Hausdorffness / minimality / effectiveness / simplicity analysis.
#[derive(Parser)]
#[command(name = "selfsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a system file and run all structural validations.
    Validate { file: PathBuf },
    /// Run every checker and print the combined report.
    Analyze {
        file: PathBuf,
        /// Depth bound per coordinate: a single integer, or a comma list.
        #[arg(long, default_value = "6")]
        depth: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the products and involutions requested in an elements file.
    Mul { system: PathBuf, elements: PathBuf },
    /// Enumerate boundary prefixes from a vertex.
    Boundary {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value = "4")]
        depth: String,
    },
}

const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_INTERNAL: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT_ERROR, message: message.into() }
}

fn internal_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INTERNAL, message: message.into() }
}

fn load_system(path: &PathBuf) -> Result<SelfSimilarSystem, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    parse_system(&text).map_err(|d| input_error(format!("{}:\n{d}", path.display())))
}

fn parse_depth(spec: &str, rank: usize) -> Result<Degree, Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    let coords: Vec<u32> = parts
        .iter()
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| input_error(format!("bad depth `{spec}`: use N or N1,N2,...")))?;
    match coords.len() {
        1 => Ok(Degree::uniform(rank, coords[0])),
        n if n == rank => Ok(Degree::from_coords(&coords)),
        _ => Err(input_error(format!(
            "depth has {} coordinates but the graph has rank {rank} (max {MAX_RANK})",
            coords.len()
        ))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let sys = load_system(&file)?;
            println!(
                "ok: rank {}, {} vertices, {} edges, group of order {}",
                sys.graph().rank(),
                sys.graph().vertex_count(),
                sys.graph().edge_count(),
                sys.group().order()
            );
            Ok(())
        }
        Command::Analyze { file, depth, format } => {
            let sys = load_system(&file)?;
            let cap = parse_depth(&depth, sys.graph().rank())?;
            let report = simplicity_verdict(&sys, &cap)
                .map_err(|e| internal_error(format!("checker failure: {e}")))?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| internal_error(e.to_string()))?
                ),
                Format::Text => print_text_report(&report),
            }
            Ok(())
        }
        Command::Mul { system, elements } => {
            let sys = load_system(&system)?;
            let text = std::fs::read_to_string(&elements)
                .map_err(|e| input_error(format!("cannot read {}: {e}", elements.display())))?;
            let program = parse_element_document(&sys, &text)
                .map_err(|d| input_error(format!("{}:\n{d}", elements.display())))?;
            for op in &program.ops {
                match op {
                    ElementOp::Mul(a, b) => {
                        let (ea, eb) = (fetch(&program, a)?, fetch(&program, b)?);
                        let prod = multiply(&sys, ea, eb)
                            .map_err(|e| internal_error(format!("MUL {a} {b}: {e}")))?;
                        println!(
                            "MUL {a} {b} = {}{}",
                            format_element(&sys, &prod),
                            is_idempotent_flagged(&prod)
                        );
                    }
                    ElementOp::Star(a) => {
                        let ea = fetch(&program, a)?;
                        let s = star(&sys, ea);
                        println!(
                            "STAR {a} = {}{}",
                            format_element(&sys, &s),
                            is_idempotent_flagged(&s)
                        );
                    }
                }
            }
            Ok(())
        }
        Command::Boundary { file, vertex, depth } => {
            let sys = load_system(&file)?;
            let graph = sys.graph();
            let v = graph
                .vertex_by_name(&vertex)
                .ok_or_else(|| input_error(format!("unknown vertex `{vertex}`")))?;
            let cap = parse_depth(&depth, graph.rank())?;
            let prefixes = boundary_prefixes(graph, v, &cap)
                .map_err(|e| internal_error(e.to_string()))?;
            for b in &prefixes {
                let complete = if is_complete_boundary_path(graph, &b.prefix) {
                    " [complete boundary path]"
                } else {
                    ""
                };
                println!(
                    "{} degree {} regime {}{}",
                    graph.format_path(&b.prefix),
                    b.prefix.degree(),
                    b.regime,
                    complete
                );
            }
            Ok(())
        }
    }
}

fn fetch<'p>(
    program: &'p selfsim::parse::ElementProgram,
    name: &str,
) -> Result<&'p selfsim::ISGElement, Failure> {
    program
        .elements
        .get(name)
        .ok_or_else(|| input_error(format!("element `{name}` is not defined")))
}

fn print_text_report(report: &AnalysisReport) {
    println!(
        "graph: rank {}, {} vertices, {} edges, row-finite {}, source-free {}",
        report.graph.rank,
        report.graph.vertices,
        report.graph.edges,
        report.graph.row_finite,
        report.graph.source_free
    );
    println!("group: order {}, amenable {}", report.group.order, report.group.amenable);
    println!("depth: {}", report.depth);
    println!("pseudo_free: {}", report.pseudo_free);
    println!("hausdorff: {}", report.hausdorff);
    println!("g_cofinal (minimality): {}", report.g_cofinal);
    println!("aperiodicity: {}", report.aperiodicity);
    println!("fixed_points: {}", report.fixed_points);
    println!("cocycle_triviality: {}", report.cocycle_triviality);
    println!("simplicity: {} ({})", report.simplicity.status, report.simplicity.reason);
}

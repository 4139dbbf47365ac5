use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use proxsearch::engine::{enumerate_exp, Problem};
use proxsearch::graph::Graph;
use proxsearch::oracle::brute_force_maximal;
use proxsearch::pspace::enumerate_pspace;
use proxsearch::registry::{self, InputKind, DEFAULT_MAX_K, PSPACE_VARIANTS, VARIANTS};
use proxsearch::{collect_exp, Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exp,
    Pspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeedOrder {
    /// Edge ids follow the sorted endpoint pairs.
    Id,
    /// Edge ids follow the input lines.
    Given,
}

/// List all maximal subgraphs of a given kind.
#[derive(Debug, Parser)]
#[command(name = "proxsearch", version)]
struct Args {
    /// Problem variant.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(VARIANTS))]
    problem: String,

    #[arg(long, value_enum, default_value_t = Mode::Exp)]
    mode: Mode,

    /// Instance file; `-` reads standard input.
    #[arg(long)]
    input: PathBuf,

    /// Degeneracy bound for the kdeg variants.
    #[arg(long)]
    k: Option<usize>,

    /// Accept k above the default cap.
    #[arg(long)]
    allow_large_k: bool,

    /// Print only the number of solutions.
    #[arg(long)]
    count_only: bool,

    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,

    /// Print run counters to standard error as key=value lines.
    #[arg(long)]
    stats: bool,

    /// Compare the full solution set with brute force before listing.
    #[arg(long)]
    oracle_check: bool,

    /// Numbering of edges used for tie-breaking.
    #[arg(long, value_enum, default_value_t = SeedOrder::Id)]
    seed_order: SeedOrder,
}

enum Failure {
    Input(String),
    Unsupported(String),
    Oracle(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(msg) => Failure::Unsupported(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unsupported(msg)) => {
            eprintln!("unsupported: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Oracle(msg)) => {
            eprintln!("oracle check failed: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)?;
    }
    Ok(text)
}

/// Loads the instance. The second value maps internal edge ids back to
/// input edge ids when edges were renumbered.
fn load(args: &Args, text: &str) -> Result<(Box<dyn Problem>, Option<Vec<usize>>), Failure> {
    if let (Some(k), false) = (args.k, args.allow_large_k) {
        if k > DEFAULT_MAX_K {
            return Err(Failure::Input(format!("k = {k} exceeds {DEFAULT_MAX_K}; pass --allow-large-k to proceed")));
        }
    }
    let kind = registry::input_kind(&args.problem).expect("clap checked the variant");
    if kind == InputKind::Points || args.seed_order == SeedOrder::Given {
        return Ok((registry::load(&args.problem, text, args.k)?, None));
    }
    let given = Graph::parse(text)?;
    if (kind == InputKind::DirectedGraph) != given.is_directed() {
        // let the registry word the error
        return Ok((registry::load(&args.problem, text, args.k)?, None));
    }
    let mut ids: Vec<usize> = (0..given.m()).collect();
    ids.sort_by_key(|&e| given.edge(e));
    let pairs: Vec<(usize, usize)> = ids.iter().map(|&e| given.edge(e)).collect();
    let g = if given.is_directed() {
        Graph::directed(given.n(), &pairs)
    } else {
        Graph::undirected(given.n(), &pairs)
    };
    Ok((registry::from_graph(&args.problem, g, args.k)?, Some(ids)))
}

fn run(args: &Args) -> Result<(), Failure> {
    let text = read_input(&args.input).map_err(|e| Failure::Input(format!("{}: {e}", args.input.display())))?;
    let (p, edge_map) = load(args, &text)?;
    let p = p.as_ref();

    if args.mode == Mode::Pspace && p.as_pspace().is_none() {
        return Err(Failure::Unsupported(format!(
            "no poly-space mode for {}; available for: {}",
            args.problem,
            PSPACE_VARIANTS.join(", ")
        )));
    }

    if args.oracle_check {
        let expected = brute_force_maximal(p)?;
        let (got, _) = collect_exp(p);
        if got != expected {
            return Err(Failure::Oracle(format!(
                "enumeration found {} solutions, brute force {}",
                got.len(),
                expected.len()
            )));
        }
        if args.stats {
            eprintln!("oracle_solutions={}", expected.len());
        }
    }

    let prefix = p.element_kind().prefix();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut count = 0u64;
    let limit = args.limit;
    let mut line = String::new();
    let sink = |s: &[usize]| -> io::Result<ControlFlow<()>> {
        if limit == Some(count) {
            return Ok(ControlFlow::Break(()));
        }
        count += 1;
        if !args.count_only {
            let mut ids: Vec<usize> = match &edge_map {
                Some(map) => s.iter().map(|&e| map[e]).collect(),
                None => s.to_vec(),
            };
            ids.sort_unstable();
            line.clear();
            line.push_str(prefix);
            for id in ids {
                line.push(' ');
                line.push_str(&id.to_string());
            }
            writeln!(out, "{line}")?;
        }
        Ok(if limit == Some(count) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        })
    };

    let stats: Vec<(&str, String)> = if limit == Some(0) {
        Vec::new()
    } else {
        match args.mode {
            Mode::Exp => {
                let c = enumerate_exp(p, sink)?;
                vec![
                    ("mode", "exp".into()),
                    ("solutions", c.solutions_emitted.to_string()),
                    ("neighbors_calls", c.neighbors_calls.to_string()),
                    ("comp_calls", c.comp_calls.to_string()),
                    ("max_comp_gap", c.max_comp_gap.to_string()),
                    ("comp_before_first", c.comp_before_first.to_string()),
                    ("dict_operations", c.dict_operations.to_string()),
                    ("dict_allocated", c.dict_allocated.to_string()),
                ]
            }
            Mode::Pspace => {
                let pp = p.as_pspace().expect("checked above");
                let comp_calls = || p.comp_calls();
                let st = enumerate_pspace(pp, &comp_calls, sink)?;
                let c = &st.counters;
                vec![
                    ("mode", "pspace".into()),
                    ("solutions", c.solutions_emitted.to_string()),
                    ("neighbors_calls", c.neighbors_calls.to_string()),
                    ("comp_calls", c.comp_calls.to_string()),
                    ("max_comp_gap", c.max_comp_gap.to_string()),
                    ("comp_before_first", c.comp_before_first.to_string()),
                    ("dict_operations", c.dict_operations.to_string()),
                    ("dict_allocated", c.dict_allocated.to_string()),
                    ("roots", st.roots.to_string()),
                    ("max_depth", st.max_depth.to_string()),
                    ("children_candidates", st.children.candidates.to_string()),
                    ("tuple_check_passes", st.children.tuple_check_passes.to_string()),
                ]
            }
        }
    };

    if args.count_only {
        writeln!(out, "{count}").map_err(|e| Failure::Input(e.to_string()))?;
    }
    out.flush().map_err(|e| Failure::Input(e.to_string()))?;
    if args.stats {
        eprintln!("problem={}", args.problem);
        for (k, v) in stats {
            eprintln!("{k}={v}");
        }
    }
    Ok(())
}

//! `mincut`: max-flow, constrained min-cuts, irreducibles, enumeration and
//! slice search over DIMACS graph files.
//!
//! Exit codes: 0 on success, 1 when no cut qualifies, 2 on bad input.

use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lattice_mincut::dimacs::parse_dimacs;
use lattice_mincut::predicate_file::{build_predicates, parse_predicates, PredicateItem, Predicates};
use lattice_mincut::predicates::{Conjunction, GeneralPredicate};
use lattice_mincut::{
    compute_irreducibles, compute_max_flow, enumerate_min_cuts, least_sat_min_cut, slice_search, Cut, MaxFlow,
    Normalized, VertexSet,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mincut", version, about = "Minimum cuts under lattice-linear constraints")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum flow value and per-edge flows.
    Maxflow { graph: PathBuf },
    /// Least min-cut satisfying the lattice-linear predicates.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        predicates: Option<PathBuf>,
    },
    /// Bottom and join-irreducible min-cuts of the predicate's slice.
    Irreducibles {
        graph: PathBuf,
        #[arg(long)]
        predicates: Option<PathBuf>,
    },
    /// Every min-cut of the predicate's slice, once each.
    Enumerate {
        graph: PathBuf,
        #[arg(long)]
        predicates: Option<PathBuf>,
        /// Stop after this many cuts.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// First min-cut in the regular slice that satisfies a general predicate.
    Slice {
        graph: PathBuf,
        /// Lattice-linear predicates bounding the slice (default: all min-cuts).
        #[arg(long)]
        regular: Option<PathBuf>,
        /// Predicates tested on each member of the slice.
        #[arg(long)]
        general: PathBuf,
    },
}

/// Input error, reported with exit code 2.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type CmdResult = Result<ExitCode, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Maxflow { graph } => cmd_maxflow(&graph, cli.format),
        Command::Solve { graph, predicates } => cmd_solve(&graph, predicates.as_deref(), cli.format),
        Command::Irreducibles { graph, predicates } => cmd_irreducibles(&graph, predicates.as_deref(), cli.format),
        Command::Enumerate {
            graph,
            predicates,
            limit,
        } => cmd_enumerate(&graph, predicates.as_deref(), limit, cli.format),
        Command::Slice {
            graph,
            regular,
            general,
        } => cmd_slice(&graph, regular.as_deref(), &general, cli.format),
    };
    match result {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("MINCUT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("MINCUT_THREADS must be a positive integer, got {value:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

struct Loaded {
    norm: Normalized<u64>,
    flow: MaxFlow,
}

impl Loaded {
    fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let raw = parse_dimacs::<u64>(&text).with_context(|| path.display().to_string())?;
        let norm = raw.normalize()?;
        let flow = compute_max_flow(&norm.network);
        Ok(Self { norm, flow })
    }

    fn predicates(&self, path: Option<&Path>) -> Result<Predicates, InputError> {
        let items = match path {
            Some(p) => read_items(p)?,
            None => Vec::new(),
        };
        let mut preds = build_predicates(&self.norm.network, self.norm.original_vertex_count, &items)?;
        preds.general = preds.general.map(|g| g.with_counted(self.counted()));
        Ok(preds)
    }

    fn lattice_only(&self, path: Option<&Path>) -> Result<Conjunction<'static>, InputError> {
        let preds = self.predicates(path)?;
        if preds.general.is_some() {
            let p = path.expect("general items come from a file");
            return Err(anyhow!("{}: contains a general expression, which requires slice", p.display()).into());
        }
        Ok(preds.lattice)
    }

    /// Original non-terminals, the vertices counted by cardinality atoms.
    fn counted(&self) -> VertexSet {
        let n = &self.norm;
        VertexSet::from_ids(
            n.network.vertex_count(),
            (0..n.original_vertex_count).filter(|&v| v != n.original_source && v != n.original_sink),
        )
    }

    /// Source side in the file's 1-based ids, without synthetic vertices.
    fn side_ids(&self, cut: &Cut) -> Vec<usize> {
        let mut ids: Vec<usize> = cut
            .vertices()
            .into_iter()
            .chain([self.norm.network.source()])
            .filter(|&v| !self.norm.is_synthetic(v))
            .map(|v| v + 1)
            .collect();
        ids.sort_unstable();
        ids
    }

    fn capacity(&self, cut: &Cut) -> u64 {
        self.norm.network.cut_capacity(cut).expect("cut of this network")
    }
}

fn read_items(path: &Path) -> anyhow::Result<Vec<PredicateItem>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_predicates(&text).with_context(|| path.display().to_string())
}

fn ids_text(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_maxflow(graph: &Path, format: Format) -> CmdResult {
    let g = Loaded::read(graph)?;
    let edges = &g.norm.network.edges()[..g.norm.original_edge_count];
    let mut out = BufWriter::new(io::stdout().lock());
    match format {
        Format::Text => {
            writeln!(out, "value {}", g.flow.value())?;
            for (i, e) in edges.iter().enumerate() {
                writeln!(out, "flow {} {} {}", e.tail + 1, e.head + 1, g.flow.on_edge(i))?;
            }
        }
        Format::Json => {
            let flows: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(i, e)| json!({"tail": e.tail + 1, "head": e.head + 1, "flow": g.flow.on_edge(i)}))
                .collect();
            writeln!(out, "{}", json!({"value": g.flow.value(), "flows": flows}))?;
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_solve(graph: &Path, predicates: Option<&Path>, format: Format) -> CmdResult {
    let g = Loaded::read(graph)?;
    let pred = g.lattice_only(predicates)?;
    let trace = least_sat_min_cut(&g.norm.network, &g.flow, &pred)?;
    let found = trace.found();
    match (format, found) {
        (Format::Text, Some(cut)) => {
            println!("S: {}", ids_text(&g.side_ids(cut)));
            println!("capacity: {}", g.capacity(cut));
            println!("rounds: {}", trace.rounds);
        }
        (Format::Text, None) => println!("INFEASIBLE"),
        (Format::Json, Some(cut)) => println!(
            "{}",
            json!({"s_side": g.side_ids(cut), "capacity": g.capacity(cut), "rounds": trace.rounds})
        ),
        (Format::Json, None) => println!("{}", json!({"infeasible": true, "rounds": trace.rounds})),
    }
    Ok(if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_irreducibles(graph: &Path, predicates: Option<&Path>, format: Format) -> CmdResult {
    let g = Loaded::read(graph)?;
    let pred = g.lattice_only(predicates)?;
    let Some(poset) = compute_irreducibles(&g.norm.network, &g.flow, &pred)? else {
        match format {
            Format::Text => println!("INFEASIBLE"),
            Format::Json => println!("{}", json!({"infeasible": true})),
        }
        return Ok(ExitCode::from(1));
    };
    match format {
        Format::Text => {
            println!("bottom: {}", ids_text(&g.side_ids(poset.bottom())));
            for c in poset.elements() {
                println!("irreducible: {}", ids_text(&g.side_ids(c)));
            }
        }
        Format::Json => {
            let elements: Vec<_> = poset.elements().iter().map(|c| g.side_ids(c)).collect();
            println!(
                "{}",
                json!({"bottom": g.side_ids(poset.bottom()), "irreducibles": elements})
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(graph: &Path, predicates: Option<&Path>, limit: Option<usize>, format: Format) -> CmdResult {
    let g = Loaded::read(graph)?;
    let pred = g.lattice_only(predicates)?;
    let mut out = BufWriter::new(io::stdout().lock());
    if format == Format::Json {
        write!(out, "{{\"cuts\":[")?;
    }
    let mut first = true;
    let e = enumerate_min_cuts(&g.norm.network, &g.flow, &pred, limit, |cut| {
        let ids = g.side_ids(cut);
        let written = match format {
            Format::Text => writeln!(out, "S: {}", ids_text(&ids)),
            Format::Json => write!(out, "{}{}", if first { "" } else { "," }, json!(ids)),
        };
        first = false;
        match written {
            Ok(()) => ControlFlow::Continue(()),
            Err(err) => ControlFlow::Break(err),
        }
    })?;
    if let Some(err) = e.break_value {
        return Err(err.into());
    }
    match format {
        Format::Text => writeln!(out, "count {}", e.listed)?,
        Format::Json => writeln!(out, "],\"count\":{}}}", e.listed)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_slice(graph: &Path, regular: Option<&Path>, general: &Path, format: Format) -> CmdResult {
    let g = Loaded::read(graph)?;
    let reg = g.lattice_only(regular)?;
    let gen = g.predicates(Some(general))?;
    if !gen.lattice.is_empty() {
        return Err(anyhow!("{}: lattice-linear items belong in --regular", general.display()).into());
    }
    let gen: GeneralPredicate = match gen.general {
        Some(p) => p,
        None => return Err(anyhow!("{}: no general expression", general.display()).into()),
    };
    let r = slice_search(&g.norm.network, &g.flow, &reg, &gen)?;
    match (format, &r.found) {
        (Format::Text, Some(cut)) => {
            println!("S: {}", ids_text(&g.side_ids(cut)));
            println!("capacity: {}", g.capacity(cut));
            println!("examined: {}", r.examined);
        }
        (Format::Text, None) => {
            println!("NOT FOUND");
            println!("examined: {}", r.examined);
        }
        (Format::Json, Some(cut)) => println!(
            "{}",
            json!({"s_side": g.side_ids(cut), "capacity": g.capacity(cut), "examined": r.examined})
        ),
        (Format::Json, None) => println!("{}", json!({"found": false, "examined": r.examined})),
    }
    Ok(if r.found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

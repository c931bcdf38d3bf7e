//! `shiftrep`: shift-graph generators, semi-transitive orientation
//! tools, exhaustive word-representability decisions, representing-word
//! search, and a reproducible experiment suite.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shiftrep_cli::error::CliError;
use shiftrep_cli::experiments::{run_suite, SuiteConfig, DEFAULT_SEED};
use shiftrep_cli::io;
use shiftrep_core::codec::{dot_digraph, dot_graph, label_sidecar, ArcListFile};
use shiftrep_core::orient::NAIVE_CHECKER_VERTEX_LIMIT;
use shiftrep_core::words::{find_uniform_word, graph_of_word, represents, Word, WordSearch};
use shiftrep_core::{
    complete_graph, decide_word_representable, graph6_encode, line_digraph, line_graph,
    m_shift_graph, orient_m_shift, shift_graph, simplified_de_bruijn, spread_de_bruijn,
    transitive_tournament, DecideOptions, Digraph, LabeledGraph, Orientation, Verdict,
    VertexLabel, DEFAULT_WORD_SEARCH_BUDGET,
};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Orient(args) => cmd_orient(args),
        Command::Check(args) => cmd_check(args),
        Command::Decide(args) => cmd_decide(args),
        Command::Word(WordCommand::Find(args)) => cmd_word_find(args),
        Command::Word(WordCommand::Verify(args)) => cmd_word_verify(args),
        Command::Experiments(args) => cmd_experiments(args),
    }
}

// ============================================================================
// argument surface
// ============================================================================

#[derive(Parser)]
#[command(
    name = "shiftrep",
    version,
    about = "Shift graphs, semi-transitive orientations, and word-representability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph-family member.
    Generate(GenerateArgs),
    /// Emit the canonical orientation of an m-shift graph.
    Orient(OrientArgs),
    /// Test an orientation of a graph for semi-transitivity.
    Check(CheckArgs),
    /// Decide word-representability by exhaustive ordering search.
    Decide(DecideArgs),
    /// Find or verify representing words.
    #[command(subcommand)]
    Word(WordCommand),
    /// Run a built-in verification suite and write a JSON report.
    Experiments(ExperimentsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Shift,
    Mshift,
    Debruijn,
    SpreadDebruijn,
    Complete,
    Tournament,
    LinegraphOf,
    LinedigraphOf,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Shift => "shift",
            Family::Mshift => "mshift",
            Family::Debruijn => "debruijn",
            Family::SpreadDebruijn => "spread-debruijn",
            Family::Complete => "complete",
            Family::Tournament => "tournament",
            Family::LinegraphOf => "linegraph-of",
            Family::LinedigraphOf => "linedigraph-of",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family to generate.
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Base graph (graph6) or digraph (arc-list JSON) for the
    /// line-graph families.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Label sidecar accompanying --input.
    #[arg(long)]
    labels: Option<PathBuf>,
    /// graph6 is the default for graphs, json for digraphs.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout; a label sidecar, if any,
    /// goes to FILE.labels.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrientArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Re-check the construction with both shortcut checkers.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Base graph, graph6.
    #[arg(long)]
    graph: PathBuf,
    /// Label sidecar for the base graph.
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Orientation to test, arc-list JSON naming vertices by their
    /// rendered labels.
    #[arg(long)]
    orientation: PathBuf,
}

#[derive(Args)]
struct DecideArgs {
    /// Graph to decide, graph6.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Search graphs above the default vertex limit.
    #[arg(long)]
    allow_large: bool,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    max_seconds: Option<u64>,
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Judge complete orderings only instead of pruning prefixes.
    #[arg(long)]
    no_prune: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum WordCommand {
    /// Search for a uniform representing word.
    Find(WordFindArgs),
    /// Check whether a word represents the graph.
    Verify(WordVerifyArgs),
}

#[derive(Args)]
struct WordFindArgs {
    /// Graph to represent, graph6.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Occurrences required of every letter.
    #[arg(long)]
    uniform: u32,
    /// Prefix extensions to attempt before giving up.
    #[arg(long, default_value_t = DEFAULT_WORD_SEARCH_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct WordVerifyArgs {
    /// Graph to test against, graph6.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Comma-separated letters; parenthesized tuples stay intact, so
    /// "(1,2),(2,3)" is two letters.
    #[arg(long)]
    word: String,
}

#[derive(Args)]
struct ExperimentsArgs {
    /// Suite to run.
    #[arg(long)]
    suite: String,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip claims bearing this tag; repeatable.
    #[arg(long = "skip", value_name = "TAG")]
    skip: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

// ============================================================================
// command handlers
// ============================================================================

/// Prints a line, treating a closed pipe as success so downstream
/// `head`-style consumers do not trigger a panic.
fn print_line(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(CliError::usage(format!("cannot write to stdout: {e}"))),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        None => print_line(text),
        Some(path) => io::write_text(path, &format!("{text}\n")),
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    enum Built {
        Graph(LabeledGraph),
        Digraph(Digraph),
    }
    let family = args.family;
    let need = |flag: &str, value: Option<u32>| {
        value.ok_or_else(|| {
            CliError::usage(format!("family {} requires --{flag}", family.name()))
        })
    };
    let need_input = || {
        args.input
            .as_deref()
            .ok_or_else(|| CliError::usage(format!("family {} requires --input", family.name())))
    };
    let usage = |e: &dyn std::fmt::Display| CliError::usage(e.to_string());

    let built = match family {
        Family::Shift => Built::Graph(
            shift_graph(need("n", args.n)?, need("k", args.k)?).map_err(|e| usage(&e))?,
        ),
        Family::Mshift => Built::Graph(
            m_shift_graph(need("n", args.n)?, need("k", args.k)?, need("m", args.m)?)
                .map_err(|e| usage(&e))?,
        ),
        Family::Debruijn => Built::Graph(
            simplified_de_bruijn(need("n", args.n)?, need("k", args.k)?).map_err(|e| usage(&e))?,
        ),
        Family::SpreadDebruijn => Built::Graph(
            spread_de_bruijn(need("n", args.n)?, need("k", args.k)?, need("m", args.m)?)
                .map_err(|e| usage(&e))?,
        ),
        Family::Complete => {
            Built::Graph(complete_graph(need("n", args.n)?).map_err(|e| usage(&e))?)
        }
        Family::Tournament => {
            Built::Digraph(transitive_tournament(need("n", args.n)?).map_err(|e| usage(&e))?)
        }
        Family::LinegraphOf => {
            let g = io::load_graph(need_input()?, args.labels.as_deref())?;
            Built::Graph(line_graph(&g))
        }
        Family::LinedigraphOf => {
            let text = io::read_text(need_input()?)?;
            let file = ArcListFile::parse(&text).map_err(|e| usage(&e))?;
            let d = io::digraph_from_arc_list(&file.vertices, &file.arcs)?;
            Built::Digraph(line_digraph(&d))
        }
    };

    match built {
        Built::Graph(g) => match args.format.unwrap_or(Format::Graph6) {
            Format::Graph6 => {
                let line = graph6_encode(&g).map_err(|e| usage(&e))?;
                match &args.out {
                    None => {
                        print_line(&line)?;
                        if let Some(sidecar) = label_sidecar(&g) {
                            print_line(&sidecar)?;
                        }
                        Ok(())
                    }
                    Some(path) => {
                        io::write_text(path, &format!("{line}\n"))?;
                        if let Some(sidecar) = label_sidecar(&g) {
                            let sidecar_path =
                                PathBuf::from(format!("{}.labels.json", path.display()));
                            io::write_text(&sidecar_path, &format!("{sidecar}\n"))?;
                        }
                        Ok(())
                    }
                }
            }
            Format::Dot => emit(&dot_graph(&g), args.out.as_deref()),
            Format::Json => emit(&io::edge_list_json(&g), args.out.as_deref()),
        },
        Built::Digraph(d) => match args.format.unwrap_or(Format::Json) {
            Format::Graph6 => Err(CliError::usage(
                "graph6 encodes undirected graphs; use dot or json for a digraph",
            )),
            Format::Dot => emit(&dot_digraph(&d), args.out.as_deref()),
            Format::Json => emit(&ArcListFile::of_digraph(&d).to_json(), args.out.as_deref()),
        },
    }
}

fn cmd_orient(args: OrientArgs) -> Result<(), CliError> {
    let o = orient_m_shift(args.n, args.k, args.m).map_err(|e| CliError::usage(e.to_string()))?;
    let mut payload: Value = serde_json::from_str(&ArcListFile::of_orientation(&o).to_json())
        .expect("arc lists are JSON");
    if args.verify {
        if let Ok(Some(w)) = o.find_shortcut_fast() {
            return Err(CliError::failure(format!(
                "orientation of ({},{},{}) failed verification: {w}",
                args.n, args.k, args.m
            )));
        }
        if o.base().vertex_count() <= NAIVE_CHECKER_VERTEX_LIMIT {
            if let Ok(Some(w)) = o.find_shortcut_naive() {
                return Err(CliError::failure(format!(
                    "orientation of ({},{},{}) failed the exhaustive recheck: {w}",
                    args.n, args.k, args.m
                )));
            }
        }
        if !o.is_acyclic() {
            return Err(CliError::failure("orientation contains a directed cycle"));
        }
        payload["verified"] = json!(true);
    }
    emit(
        &serde_json::to_string_pretty(&payload).expect("payload serializes"),
        args.out.as_deref(),
    )
}

fn cmd_check(args: CheckArgs) -> Result<(), CliError> {
    let g = io::load_graph(&args.graph, args.labels.as_deref())?;
    let text = io::read_text(&args.orientation)?;
    let file = ArcListFile::parse(&text).map_err(|e| CliError::usage(e.to_string()))?;
    let lookup = io::label_lookup(g.labels());
    let arcs: Vec<(VertexLabel, VertexLabel)> = file
        .arcs
        .iter()
        .map(|[t, h]| Ok((io::resolve_label(&lookup, t)?, io::resolve_label(&lookup, h)?)))
        .collect::<Result<_, CliError>>()?;
    let o = Orientation::from_arcs(g, &arcs).map_err(|e| CliError::usage(e.to_string()))?;
    if !o.is_acyclic() {
        return Err(CliError::failure(
            "not semi-transitive: the orientation contains a directed cycle",
        ));
    }
    match o.find_shortcut_fast() {
        Ok(None) => {
            print_line("semi-transitive")
        }
        Ok(Some(w)) => Err(CliError::failure(format!("not semi-transitive: {w}"))),
        Err(e) => Err(CliError::failure(format!("not semi-transitive: {e}"))),
    }
}

fn cmd_decide(args: DecideArgs) -> Result<(), CliError> {
    let g = io::load_graph(&args.input, args.labels.as_deref())?;
    let opts = DecideOptions {
        allow_large: args.allow_large,
        workers: args.workers,
        max_nodes: args.max_nodes,
        max_millis: args.max_seconds.map(|s| s.saturating_mul(1000)),
        prune: !args.no_prune,
    };
    let d = decide_word_representable(&g, &opts).map_err(|e| CliError::usage(e.to_string()))?;
    let witness_arcs = match &d.witness {
        Some(o) => {
            let arcs: Vec<[String; 2]> = o
                .arc_labels()
                .into_iter()
                .map(|(t, h)| [t.to_string(), h.to_string()])
                .collect();
            json!(arcs)
        }
        None => Value::Null,
    };
    let payload = json!({
        "verdict": match d.verdict {
            Verdict::Representable => "representable",
            Verdict::NonRepresentable => "non-representable",
            Verdict::Unknown => "unknown",
        },
        "witness_arcs": witness_arcs,
        "witness_deterministic": d.witness_deterministic,
        "orderings_examined": d.stats.orderings_examined,
        "prunes": d.stats.prunes,
        "orderings_covered": d.stats.orderings_covered,
        "total_orderings": d.stats.total_orderings,
        "nodes_expanded": d.stats.nodes_expanded,
        "elapsed_ms": d.stats.elapsed_ms,
        "workers": args.workers,
    });
    emit(
        &serde_json::to_string_pretty(&payload).expect("payload serializes"),
        args.out.as_deref(),
    )?;
    if d.verdict == Verdict::Unknown {
        return Err(CliError::budget("search budget exhausted before a verdict"));
    }
    Ok(())
}

fn cmd_word_find(args: WordFindArgs) -> Result<(), CliError> {
    let g = io::load_graph(&args.input, args.labels.as_deref())?;
    match find_uniform_word(&g, args.uniform, args.budget) {
        Ok(WordSearch::Found(w)) => {
            print_line(&w.to_string())
        }
        Ok(WordSearch::NoneExists) => {
            print_line(&format!(
                "no {}-uniform word represents this graph",
                args.uniform
            ))
        }
        Ok(WordSearch::BudgetExhausted) => Err(CliError::budget(format!(
            "word search budget of {} extensions exhausted",
            args.budget
        ))),
        Err(e) => Err(CliError::usage(e.to_string())),
    }
}

fn cmd_word_verify(args: WordVerifyArgs) -> Result<(), CliError> {
    let g = io::load_graph(&args.input, args.labels.as_deref())?;
    let lookup = io::label_lookup(g.labels());
    let tokens = io::split_letters(&args.word);
    if tokens.is_empty() {
        return Err(CliError::usage("--word is empty"));
    }
    let letters: Vec<VertexLabel> = tokens
        .iter()
        .map(|t| io::resolve_label(&lookup, t))
        .collect::<Result<_, _>>()?;
    let w = Word::new(letters).map_err(|e| CliError::usage(e.to_string()))?;
    if represents(&w, &g) {
        return print_line("the word represents the graph");
    }
    let h = graph_of_word(&w);
    let mut reason = String::from("alphabet differs from the vertex set");
    if h.labels() == g.labels() {
        for (a, b) in g.edge_labels() {
            if !h.has_edge(a, b) {
                reason = format!("{a} and {b} are adjacent but do not alternate");
                break;
            }
        }
        for (a, b) in h.edge_labels() {
            if !g.has_edge(a, b) {
                reason = format!("{a} and {b} alternate but are not adjacent");
                break;
            }
        }
    }
    Err(CliError::failure(format!(
        "the word does not represent the graph: {reason}"
    )))
}

fn cmd_experiments(args: ExperimentsArgs) -> Result<(), CliError> {
    let cfg = SuiteConfig {
        seed: args.seed,
        workers: args.workers,
        skip_tags: args.skip.into_iter().collect(),
    };
    let report = run_suite(&args.suite, &cfg).map_err(CliError::usage)?;
    for claim in &report.claims {
        print_line(&format!(
            "claim {}: {} ({} ms)",
            claim.claim_id, claim.verdict, claim.elapsed_ms
        ))?;
    }
    match &args.out {
        Some(path) => io::write_text(path, &format!("{}\n", report.to_json()))?,
        None => print_line(&report.to_json())?,
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::failure(format!(
            "failing claims: {}",
            report.failing_ids().join(", ")
        )))
    }
}

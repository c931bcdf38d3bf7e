//! The built-in verification suite behind `shiftrep experiments`: each
//! claim exercises one property of the shift and de Bruijn
//! constructions at desk scale and reports pass, fail, or skipped.
//!
//! Claims run in a fixed order and register every undirected graph
//! they build into a shared pool; the final claim round-trips that
//! whole pool through the graph6 codec.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use itertools::Itertools;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use shiftrep_core::{
    binomial, complete_graph, decide_word_representable, find_uniform_word, graph6_decode,
    graph6_encode, line_digraph, line_graph, m_shift_graph, orient_m_shift,
    orientation_from_ordering, represents, shift_graph, simplified_de_bruijn, spread_de_bruijn,
    transitive_tournament, underlying_graph, CodecError, DecideOptions, Decision, LabeledGraph,
    Verdict, VertexLabel, WordSearch, DEFAULT_WORD_SEARCH_BUDGET,
};

use crate::report::{ClaimReport, ClaimVerdict, ExperimentReport, REPORT_SCHEMA};

pub const SUITE_PAPER: &str = "paper";
pub const SUITE_NAMES: &[&str] = &[SUITE_PAPER];

/// Fixed default so repeated runs sample identical random cases.
pub const DEFAULT_SEED: u64 = 7;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub workers: usize,
    pub skip_tags: BTreeSet<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            workers: 1,
            skip_tags: BTreeSet::new(),
        }
    }
}

/// Runs a named suite; the only suite today is `paper`.
pub fn run_suite(suite: &str, cfg: &SuiteConfig) -> Result<ExperimentReport, String> {
    if suite != SUITE_PAPER {
        return Err(format!(
            "unknown suite {suite:?}; available suites: {}",
            SUITE_NAMES.join(", ")
        ));
    }
    let suite_start = Instant::now();
    let mut registry: Vec<LabeledGraph> = Vec::new();
    let mut claims = Vec::new();
    for spec in claim_list() {
        let started = Instant::now();
        let (verdict, parameters, artifact, failures) =
            match (&spec.run, spec.tags.iter().find(|t| cfg.skip_tags.contains(**t))) {
                (_, Some(tag)) => (
                    ClaimVerdict::Skipped,
                    Value::Null,
                    json!({ "reason": format!("skipped by tag {tag:?}") }),
                    vec![],
                ),
                (Run::OutOfScope(reason), None) => (
                    ClaimVerdict::Skipped,
                    Value::Null,
                    json!({ "reason": reason }),
                    vec![],
                ),
                (Run::Exec(f), None) => {
                    let outcome = f(cfg, &mut registry);
                    let verdict = if outcome.passed {
                        ClaimVerdict::Pass
                    } else {
                        ClaimVerdict::Fail
                    };
                    (verdict, outcome.parameters, outcome.artifact, outcome.failures)
                }
            };
        claims.push(ClaimReport {
            claim_id: spec.id.to_string(),
            description: spec.description.to_string(),
            parameters,
            verdict,
            elapsed_ms: started.elapsed().as_millis() as u64,
            tags: spec.tags.iter().map(|t| t.to_string()).collect(),
            artifact,
            failures,
        });
    }
    Ok(ExperimentReport {
        schema: REPORT_SCHEMA.to_string(),
        suite: suite.to_string(),
        seed: cfg.seed,
        workers: cfg.workers,
        elapsed_ms: suite_start.elapsed().as_millis() as u64,
        claims,
    })
}

enum Run {
    Exec(fn(&SuiteConfig, &mut Vec<LabeledGraph>) -> Outcome),
    OutOfScope(&'static str),
}

struct ClaimSpec {
    id: &'static str,
    description: &'static str,
    tags: &'static [&'static str],
    run: Run,
}

fn claim_list() -> Vec<ClaimSpec> {
    vec![
        ClaimSpec {
            id: "orientation-sweep",
            description: "every m-shift orientation across the parameter sweep is semi-transitive",
            tags: &[],
            run: Run::Exec(claim_orientation_sweep),
        },
        ClaimSpec {
            id: "shift-counts",
            description: "the m-shift graph on (n,k) has C(n,k) vertices and C(n,k+m) edges",
            tags: &[],
            run: Run::Exec(claim_shift_counts),
        },
        ClaimSpec {
            id: "one-shift-coincidence",
            description: "the 1-shift graph coincides label-for-label with the shift graph",
            tags: &[],
            run: Run::Exec(claim_one_shift_coincidence),
        },
        ClaimSpec {
            id: "line-digraph-identity",
            description: "the underlying graph of the transitive tournament's line digraph is the shift graph on pairs",
            tags: &[],
            run: Run::Exec(claim_line_digraph_identity),
        },
        ClaimSpec {
            id: "k5-contrast",
            description: "K5 is word-representable while its line graph is certified not to be",
            tags: &["slow"],
            run: Run::Exec(claim_k5_contrast),
        },
        ClaimSpec {
            id: "debruijn-verdicts",
            description: "small simplified de Bruijn graphs receive their expected representability verdicts",
            tags: &[],
            run: Run::Exec(claim_debruijn_verdicts),
        },
        ClaimSpec {
            id: "debruijn-large-skip",
            description: "non-representability of S(n,3) for n >= 3",
            tags: &[],
            run: Run::OutOfScope(
                "the smallest instance S(3,3) has 27 vertices, beyond the certified decision limit of 11",
            ),
        },
        ClaimSpec {
            id: "checker-agreement",
            description: "both shortcut checkers agree on every small acyclic orientation and on seeded random ones",
            tags: &[],
            run: Run::Exec(claim_checker_agreement),
        },
        ClaimSpec {
            id: "five-vertex-representability",
            description: "all 1024 labeled five-vertex graphs are representable, each by a verified word of multiplicity at most 3",
            tags: &[],
            run: Run::Exec(claim_five_vertex_representability),
        },
        ClaimSpec {
            id: "shift-structure",
            description: "shift graphs on pairs are triangle-free, have odd girth 5 at n=5, and chromatic number ceil(log2 n)",
            tags: &[],
            run: Run::Exec(claim_shift_structure),
        },
        ClaimSpec {
            id: "graph6-roundtrip",
            description: "graph6 encoding round-trips every instance generated by the other claims",
            tags: &[],
            run: Run::Exec(claim_graph6_roundtrip),
        },
    ]
}

struct Outcome {
    passed: bool,
    parameters: Value,
    artifact: Value,
    failures: Vec<String>,
}

impl Outcome {
    fn new(parameters: Value) -> Self {
        Outcome {
            passed: true,
            parameters,
            artifact: Value::Null,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        self.passed = false;
        if self.failures.len() < 25 {
            self.failures.push(message);
        }
    }
}

// ============================================================================
// claim implementations
// ============================================================================

const SWEEP_EXTRAS: [(u32, u32, u32); 3] = [(12, 2, 1), (10, 3, 1), (10, 3, 2)];

/// All (n, k, m) with 2 <= k < n <= 9 and 1 <= m < k, plus the larger
/// spot checks.
fn sweep_triples() -> Vec<(u32, u32, u32)> {
    let mut triples = Vec::new();
    for n in 3..=9 {
        for k in 2..n {
            for m in 1..k {
                triples.push((n, k, m));
            }
        }
    }
    triples.extend(SWEEP_EXTRAS);
    triples
}

fn claim_orientation_sweep(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let triples = sweep_triples();
    let mut out = Outcome::new(json!({ "instances": triples.len() }));
    for (n, k, m) in triples {
        match orient_m_shift(n, k, m) {
            Ok(o) => {
                registry.push(o.base().clone());
                if !o.is_semi_transitive() {
                    out.fail(format!(
                        "the orientation of the {m}-shift graph on ({n},{k}) has a shortcut"
                    ));
                }
            }
            Err(e) => out.fail(format!("({n},{k},{m}): {e}")),
        }
    }
    out
}

fn claim_shift_counts(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let triples = sweep_triples();
    let mut out = Outcome::new(json!({ "instances": triples.len() }));
    for (n, k, m) in triples {
        let g = match m_shift_graph(n, k, m) {
            Ok(g) => g,
            Err(e) => {
                out.fail(format!("({n},{k},{m}): {e}"));
                continue;
            }
        };
        let vertices = binomial(n as u64, k as u64);
        let edges = binomial(n as u64, (k + m) as u64);
        if g.vertex_count() as u64 != vertices {
            out.fail(format!(
                "({n},{k},{m}): {} vertices, expected C({n},{k}) = {vertices}",
                g.vertex_count()
            ));
        }
        if g.edge_count() as u64 != edges {
            out.fail(format!(
                "({n},{k},{m}): {} edges, expected C({n},{}) = {edges}",
                g.edge_count(),
                k + m
            ));
        }
        registry.push(g);
    }
    out
}

fn claim_one_shift_coincidence(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for n in 3..=9 {
        for k in 2..n {
            pairs.push((n, k));
        }
    }
    pairs.extend([(12, 2), (10, 3)]);
    let mut out = Outcome::new(json!({ "instances": pairs.len() }));
    for (n, k) in pairs {
        match (m_shift_graph(n, k, 1), shift_graph(n, k)) {
            (Ok(one_shift), Ok(plain)) => {
                if one_shift != plain {
                    out.fail(format!("1-shift and shift graphs differ on ({n},{k})"));
                }
                registry.push(plain);
            }
            (Err(e), _) | (_, Err(e)) => out.fail(format!("({n},{k}): {e}")),
        }
    }
    out
}

fn claim_line_digraph_identity(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let mut out = Outcome::new(json!({ "n": [3, 10] }));
    for n in 3..=10 {
        let tournament = transitive_tournament(n).expect("n >= 1");
        let from_lines = underlying_graph(&line_digraph(&tournament));
        match shift_graph(n, 2) {
            Ok(expected) => {
                if from_lines != expected {
                    out.fail(format!(
                        "underlying line digraph of the {n}-tournament differs from the shift graph"
                    ));
                }
                registry.push(from_lines);
                registry.push(expected);
            }
            Err(e) => out.fail(format!("shift({n},2): {e}")),
        }
    }
    out
}

fn decide_stats_json(d: &Decision) -> Value {
    json!({
        "orderings_examined": d.stats.orderings_examined,
        "prunes": d.stats.prunes,
        "orderings_covered": d.stats.orderings_covered,
        "total_orderings": d.stats.total_orderings,
        "nodes_expanded": d.stats.nodes_expanded,
        "elapsed_ms": d.stats.elapsed_ms,
    })
}

fn claim_k5_contrast(cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let mut out = Outcome::new(json!({ "graphs": ["K5", "L(K5)"] }));
    let opts = DecideOptions {
        workers: cfg.workers,
        ..DecideOptions::default()
    };
    let k5 = complete_graph(5).expect("n >= 1");
    let lk5 = line_graph(&k5);
    registry.push(k5.clone());
    registry.push(lk5.clone());

    let mut artifact = Map::new();
    match decide_word_representable(&k5, &opts) {
        Ok(d) if d.verdict == Verdict::Representable => {
            let witness = d.witness.as_ref().expect("representable verdicts carry a witness");
            let arcs: Vec<[String; 2]> = witness
                .arc_labels()
                .into_iter()
                .map(|(t, h)| [t.to_string(), h.to_string()])
                .collect();
            artifact.insert("k5_witness_arcs".into(), json!(arcs));
        }
        Ok(d) => out.fail(format!("K5 decided as {:?}", d.verdict)),
        Err(e) => out.fail(format!("K5: {e}")),
    }
    match decide_word_representable(&lk5, &opts) {
        Ok(d) if d.verdict == Verdict::NonRepresentable => {
            if d.stats.orderings_covered != d.stats.total_orderings {
                out.fail("L(K5): exhaustion accounting incomplete".into());
            }
            artifact.insert("lk5_search".into(), decide_stats_json(&d));
        }
        Ok(d) => out.fail(format!("L(K5) decided as {:?}", d.verdict)),
        Err(e) => out.fail(format!("L(K5): {e}")),
    }
    out.artifact = Value::Object(artifact);
    out
}

fn claim_debruijn_verdicts(cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let opts = DecideOptions {
        workers: cfg.workers,
        ..DecideOptions::default()
    };
    let cases: Vec<(&str, Result<LabeledGraph, _>, Verdict)> = vec![
        ("S(3,2)", simplified_de_bruijn(3, 2), Verdict::NonRepresentable),
        ("S(2,2)", simplified_de_bruijn(2, 2), Verdict::Representable),
        ("S(2,3)", simplified_de_bruijn(2, 3), Verdict::Representable),
        ("S_1(3,2)", spread_de_bruijn(3, 2, 1), Verdict::Representable),
    ];
    let mut out = Outcome::new(json!({ "instances": cases.len() }));
    let mut verdicts = Map::new();
    for (name, built, expected) in cases {
        let g = match built {
            Ok(g) => g,
            Err(e) => {
                out.fail(format!("{name}: {e}"));
                continue;
            }
        };
        registry.push(g.clone());
        match decide_word_representable(&g, &opts) {
            Ok(d) => {
                verdicts.insert(name.into(), json!(format!("{:?}", d.verdict)));
                if d.verdict != expected {
                    out.fail(format!("{name} decided as {:?}, expected {expected:?}", d.verdict));
                }
            }
            Err(e) => out.fail(format!("{name}: {e}")),
        }
    }
    out.artifact = Value::Object(verdicts);
    out
}

/// Every labeled graph on `n` vertices (integer labels 1..=n), by edge
/// mask over the C(n,2) vertex pairs.
fn all_labeled_graphs(n: u32) -> Vec<LabeledGraph> {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let labels: Vec<VertexLabel> = (1..=n).map(VertexLabel::int).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(VertexLabel, VertexLabel)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &(i, j))| (VertexLabel::int(i), VertexLabel::int(j)))
                .collect();
            LabeledGraph::new(labels.clone(), &edges).expect("masks build valid graphs")
        })
        .collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: u32, edge_prob: f64) -> LabeledGraph {
    let labels: Vec<VertexLabel> = (1..=n).map(VertexLabel::int).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(edge_prob) {
                edges.push((VertexLabel::int(i), VertexLabel::int(j)));
            }
        }
    }
    LabeledGraph::new(labels, &edges).expect("random graphs are valid")
}

fn claim_checker_agreement(cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let random_cases = 1000usize;
    let mut out = Outcome::new(json!({
        "exhaustive_max_vertices": 5,
        "random_cases": random_cases,
        "random_vertices": 8,
        "seed": cfg.seed,
    }));
    let mut exhaustive_orientations = 0u64;
    for n in 1..=5u32 {
        for g in all_labeled_graphs(n) {
            let labels = g.labels().to_vec();
            let mut seen = HashSet::new();
            for perm in (0..labels.len()).permutations(labels.len()) {
                let mut rank = vec![0usize; labels.len()];
                for (r, &v) in perm.iter().enumerate() {
                    rank[v] = r;
                }
                let forward: Vec<bool> =
                    g.edges().iter().map(|&(i, j)| rank[i] < rank[j]).collect();
                if !seen.insert(forward) {
                    continue;
                }
                let order: Vec<VertexLabel> = perm.iter().map(|&v| labels[v].clone()).collect();
                let o = orientation_from_ordering(&g, &order).expect("permutations are valid");
                exhaustive_orientations += 1;
                let naive = o.find_shortcut_naive().expect("acyclic, small");
                let fast = o.find_shortcut_fast().expect("acyclic");
                if naive.is_none() != fast.is_none() {
                    out.fail(format!("checkers disagree on {g} ordered {order:?}"));
                }
            }
            registry.push(g);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for case in 0..random_cases {
        let g = random_graph(&mut rng, 8, 0.5);
        let mut order = g.labels().to_vec();
        order.shuffle(&mut rng);
        let o = orientation_from_ordering(&g, &order).expect("shuffled labels are valid");
        let naive = o.find_shortcut_naive().expect("acyclic, small");
        let fast = o.find_shortcut_fast().expect("acyclic");
        if naive.is_none() != fast.is_none() {
            out.fail(format!("checkers disagree on random case {case}: {g}"));
        }
        registry.push(g);
    }
    out.artifact = json!({ "exhaustive_orientations": exhaustive_orientations });
    out
}

fn claim_five_vertex_representability(
    cfg: &SuiteConfig,
    registry: &mut Vec<LabeledGraph>,
) -> Outcome {
    let opts = DecideOptions {
        workers: cfg.workers,
        ..DecideOptions::default()
    };
    let graphs = all_labeled_graphs(5);
    let mut out = Outcome::new(json!({ "graphs": graphs.len(), "max_multiplicity": 3 }));
    let mut hardest = 0u32;
    for (i, g) in graphs.into_iter().enumerate() {
        match decide_word_representable(&g, &opts) {
            Ok(d) if d.verdict == Verdict::Representable => {}
            Ok(d) => out.fail(format!("graph {i} decided as {:?}", d.verdict)),
            Err(e) => out.fail(format!("graph {i}: {e}")),
        }
        let mut found = None;
        for k in 1..=3u32 {
            match find_uniform_word(&g, k, DEFAULT_WORD_SEARCH_BUDGET) {
                Ok(WordSearch::Found(w)) => {
                    found = Some((k, w));
                    break;
                }
                Ok(WordSearch::NoneExists) => {}
                Ok(WordSearch::BudgetExhausted) => {
                    out.fail(format!("graph {i}: word search budget exhausted at k={k}"));
                    break;
                }
                Err(e) => {
                    out.fail(format!("graph {i}: {e}"));
                    break;
                }
            }
        }
        match found {
            Some((k, w)) => {
                hardest = hardest.max(k);
                if !represents(&w, &g) {
                    out.fail(format!("graph {i}: found word {w} does not represent it"));
                }
            }
            None => out.fail(format!("graph {i}: no uniform word with multiplicity <= 3")),
        }
        registry.push(g);
    }
    out.artifact = json!({ "largest_multiplicity_needed": hardest });
    out
}

fn ceil_log2(n: u32) -> u32 {
    u32::BITS - (n - 1).leading_zeros()
}

fn claim_shift_structure(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let mut out = Outcome::new(json!({
        "triangle_free_n": [3, 12],
        "odd_girth_at": 5,
        "chromatic_n": [2, 8],
    }));
    for n in 3..=12u32 {
        match shift_graph(n, 2) {
            Ok(g) => {
                if !g.is_triangle_free() {
                    out.fail(format!("shift({n},2) contains a triangle"));
                }
                registry.push(g);
            }
            Err(e) => out.fail(format!("shift({n},2): {e}")),
        }
    }
    let girth = shift_graph(5, 2).expect("valid").odd_girth();
    if girth != Some(5) {
        out.fail(format!("odd girth of shift(5,2) is {girth:?}, expected Some(5)"));
    }
    let mut chromatic = Map::new();
    // The generator requires n > k, so the n = 2 member of the family,
    // a single vertex (1,2) with no edges, is built directly.
    let lone = LabeledGraph::new(vec![VertexLabel::tuple(&[1, 2])], &[]).expect("valid");
    registry.push(lone.clone());
    let mut cases: Vec<(u32, LabeledGraph)> = vec![(2, lone)];
    for n in 3..=8u32 {
        cases.push((n, shift_graph(n, 2).expect("valid")));
    }
    for (n, g) in cases {
        match g.chromatic_number_with_limit(30) {
            Ok(chi) => {
                chromatic.insert(n.to_string(), json!(chi));
                if chi != ceil_log2(n) {
                    out.fail(format!(
                        "chromatic number of shift({n},2) is {chi}, expected {}",
                        ceil_log2(n)
                    ));
                }
            }
            Err(e) => out.fail(format!("shift({n},2) coloring: {e}")),
        }
    }
    out.artifact = json!({ "chromatic_numbers": chromatic, "odd_girth_5_2": girth });
    out
}

#[allow(clippy::ptr_arg)]
fn claim_graph6_roundtrip(_cfg: &SuiteConfig, registry: &mut Vec<LabeledGraph>) -> Outcome {
    let mut out = Outcome::new(json!({ "instances": registry.len() }));
    let mut oversize = 0u64;
    for (i, g) in registry.iter().enumerate() {
        if g.vertex_count() > 62 {
            match graph6_encode(g) {
                Err(CodecError::TooManyVertices { .. }) => oversize += 1,
                other => out.fail(format!(
                    "instance {i} ({} vertices): expected the oversize refusal, got {other:?}",
                    g.vertex_count()
                )),
            }
            continue;
        }
        let text = match graph6_encode(g) {
            Ok(t) => t,
            Err(e) => {
                out.fail(format!("instance {i}: {e}"));
                continue;
            }
        };
        let expected = g
            .map_labels(|l| {
                VertexLabel::int(g.index_of(l).expect("own label") as u32 + 1)
            })
            .expect("canonical integer relabeling is injective");
        match graph6_decode(&text) {
            Ok(back) if back == expected => {}
            Ok(_) => out.fail(format!("instance {i}: decode differs from encode input")),
            Err(e) => out.fail(format!("instance {i}: {e}")),
        }
    }
    out.artifact = json!({
        "round_tripped": registry.len() as u64 - oversize,
        "oversize_rejected": oversize,
    });
    out
}

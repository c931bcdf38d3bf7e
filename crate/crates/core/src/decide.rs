//! Certified decision of word-representability by exhaustive search
//! over vertex orderings.
//!
//! Every acyclic orientation arises from some vertex ordering (direct
//! each edge from the earlier to the later endpoint), so a graph is
//! word-representable exactly when some ordering induces a
//! semi-transitive orientation. The search walks orderings depth-first
//! in lexicographic order. Arcs always point from an earlier-placed to
//! a later-placed vertex, so a newly placed vertex is a sink of the
//! prefix: a new shortcut must use a new closing arc, and the prefix
//! test only needs to examine those. A shortcut found in a prefix
//! survives every extension, which makes the pruning sound; a
//! non-representable verdict additionally requires the pruned subtree
//! sizes and examined leaves to add up to n! exactly.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::LabeledGraph;
use crate::label::VertexLabel;
use crate::orient::Orientation;

/// Vertex-count ceiling for the decision search unless explicitly
/// overridden; beyond it the ordering space is impractical anyway.
pub const DEFAULT_DECIDE_VERTEX_LIMIT: usize = 11;

/// Hard engine limit from the bitmask representation.
pub const DECIDE_ENGINE_VERTEX_CAP: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecideError {
    #[error("ordering lists {got} vertices; the graph has {expected}")]
    OrderingWrongLength { expected: usize, got: usize },
    #[error("ordering mentions {0}, which is not a vertex of the graph")]
    OrderingUnknownVertex(String),
    #[error("ordering repeats vertex {0}")]
    OrderingDuplicateVertex(String),
    #[error(
        "graph has {vertices} vertices, above the default decision limit of {limit}; \
         enable the large-graph override to search anyway"
    )]
    AboveVertexLimit { vertices: usize, limit: usize },
    #[error("graph has {vertices} vertices; the decision engine handles at most {cap}")]
    AboveEngineCap { vertices: usize, cap: usize },
}

/// Orients every edge of `g` from the earlier to the later vertex of
/// `order`, which must list every vertex exactly once.
pub fn orientation_from_ordering(
    g: &LabeledGraph,
    order: &[VertexLabel],
) -> Result<Orientation, DecideError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(DecideError::OrderingWrongLength {
            expected: n,
            got: order.len(),
        });
    }
    let mut rank = vec![usize::MAX; n];
    for (r, label) in order.iter().enumerate() {
        let i = g
            .index_of(label)
            .ok_or_else(|| DecideError::OrderingUnknownVertex(label.to_string()))?;
        if rank[i] != usize::MAX {
            return Err(DecideError::OrderingDuplicateVertex(label.to_string()));
        }
        rank[i] = r;
    }
    let forward = g.edges().iter().map(|&(i, j)| rank[i] < rank[j]).collect();
    Ok(Orientation::from_forward(g.clone(), forward))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Representable,
    NonRepresentable,
    /// The budget ran out before the ordering space was covered.
    Unknown,
}

#[derive(Debug, Clone)]
pub struct DecideOptions {
    /// Permit graphs above [`DEFAULT_DECIDE_VERTEX_LIMIT`].
    pub allow_large: bool,
    /// Search threads; the top-level branching is split across them.
    pub workers: usize,
    /// Abort after this many placement attempts.
    pub max_nodes: Option<u64>,
    /// Abort after this much wall-clock time.
    pub max_millis: Option<u64>,
    /// Disable prefix pruning (full check at each complete ordering
    /// instead); the verdict must not change.
    pub prune: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            allow_large: false,
            workers: 1,
            max_nodes: None,
            max_millis: None,
            prune: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete orderings reached.
    pub orderings_examined: u64,
    /// Subtrees cut by the prefix test.
    pub prunes: u64,
    /// Orderings accounted for (examined plus pruned away); equals
    /// `total_orderings` exactly on a finished exhaustive run.
    pub orderings_covered: u64,
    /// n!, saturating at u64::MAX for n > 20.
    pub total_orderings: u64,
    /// Placement attempts.
    pub nodes_expanded: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub verdict: Verdict,
    /// A semi-transitive orientation, present exactly for
    /// [`Verdict::Representable`].
    pub witness: Option<Orientation>,
    /// With several workers the verdict is stable but the reported
    /// witness may depend on scheduling; single-worker runs always
    /// yield the lexicographically least surviving ordering.
    pub witness_deterministic: bool,
    pub stats: SearchStats,
}

fn saturating_factorial(n: usize) -> u64 {
    let mut acc: u64 = 1;
    for i in 2..=n as u64 {
        acc = acc.saturating_mul(i);
    }
    acc
}

/// Decides word-representability by exhausting vertex orderings.
pub fn decide_word_representable(
    g: &LabeledGraph,
    opts: &DecideOptions,
) -> Result<Decision, DecideError> {
    let n = g.vertex_count();
    if n > DECIDE_ENGINE_VERTEX_CAP {
        return Err(DecideError::AboveEngineCap {
            vertices: n,
            cap: DECIDE_ENGINE_VERTEX_CAP,
        });
    }
    if !opts.allow_large && n > DEFAULT_DECIDE_VERTEX_LIMIT {
        return Err(DecideError::AboveVertexLimit {
            vertices: n,
            limit: DEFAULT_DECIDE_VERTEX_LIMIT,
        });
    }
    let started = Instant::now();
    let mut adj = vec![0u32; n];
    for &(i, j) in g.edges() {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let deadline = opts
        .max_millis
        .map(|ms| started + Duration::from_millis(ms));
    let shared = Shared {
        found: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
    };
    let workers = opts.workers.max(1).min(n.max(1));
    let outcomes: Vec<WorkerOutcome> = if workers == 1 {
        let first: Vec<usize> = (0..n).collect();
        vec![run_worker(n, &adj, opts.prune, first, &shared, opts.max_nodes, deadline)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let adj = &adj;
                    let shared = &shared;
                    let first: Vec<usize> = (0..n).filter(|v| v % workers == w).collect();
                    scope.spawn(move || {
                        run_worker(n, adj, opts.prune, first, shared, opts.max_nodes, deadline)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search workers do not panic"))
                .collect()
        })
    };

    let mut stats = SearchStats {
        orderings_examined: 0,
        prunes: 0,
        orderings_covered: 0,
        total_orderings: saturating_factorial(n),
        nodes_expanded: shared.nodes.load(AtomicOrdering::Relaxed),
        elapsed_ms: 0,
    };
    let mut best: Option<Vec<u8>> = None;
    let mut aborted = false;
    for outcome in outcomes {
        stats.orderings_examined += outcome.leaves;
        stats.prunes += outcome.prunes;
        stats.orderings_covered = stats.orderings_covered.saturating_add(outcome.covered);
        aborted |= outcome.aborted;
        if let Some(order) = outcome.found {
            if best.as_ref().is_none_or(|b| order < *b) {
                best = Some(order);
            }
        }
    }
    stats.elapsed_ms = started.elapsed().as_millis() as u64;

    let (verdict, witness) = if let Some(order) = best {
        let labels: Vec<VertexLabel> = order.iter().map(|&v| g.label(v as usize).clone()).collect();
        let o = orientation_from_ordering(g, &labels).expect("search orderings are permutations");
        assert!(
            o.is_semi_transitive(),
            "internal error: surviving ordering fails the independent check"
        );
        (Verdict::Representable, Some(o))
    } else if aborted {
        (Verdict::Unknown, None)
    } else {
        if n <= 20 {
            assert_eq!(
                stats.orderings_covered, stats.total_orderings,
                "internal error: exhaustion accounting does not cover n!"
            );
        }
        (Verdict::NonRepresentable, None)
    };
    let witness_deterministic = workers == 1 || witness.is_none();
    Ok(Decision {
        verdict,
        witness,
        witness_deterministic,
        stats,
    })
}

// ============================================================================
// search engine
// ============================================================================

struct Shared {
    found: AtomicBool,
    nodes: AtomicU64,
}

struct WorkerOutcome {
    found: Option<Vec<u8>>,
    leaves: u64,
    prunes: u64,
    covered: u64,
    aborted: bool,
}

struct Engine<'a> {
    n: usize,
    adj: &'a [u32],
    prune: bool,
    /// `reach[x]`: vertices reachable from `x` in the prefix
    /// orientation, `x` included; maintained only for placed vertices.
    reach: Vec<u32>,
    placed_mask: u32,
    order: Vec<u8>,
    factorial: Vec<u64>,
    first: Vec<usize>,
    shared: &'a Shared,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    local_nodes: u64,
    leaves: u64,
    prunes: u64,
    covered: u64,
    aborted: bool,
}

fn run_worker(
    n: usize,
    adj: &[u32],
    prune: bool,
    first: Vec<usize>,
    shared: &Shared,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
) -> WorkerOutcome {
    let mut engine = Engine {
        n,
        adj,
        prune,
        reach: vec![0; n],
        placed_mask: 0,
        order: Vec::with_capacity(n),
        factorial: (0..=n).map(saturating_factorial).collect(),
        first,
        shared,
        max_nodes,
        deadline,
        local_nodes: 0,
        leaves: 0,
        prunes: 0,
        covered: 0,
        aborted: false,
    };
    let found = engine.dfs(0);
    if found.is_some() {
        shared.found.store(true, AtomicOrdering::Relaxed);
    }
    WorkerOutcome {
        found,
        leaves: engine.leaves,
        prunes: engine.prunes,
        covered: engine.covered,
        aborted: engine.aborted,
    }
}

impl Engine<'_> {
    fn dfs(&mut self, depth: usize) -> Option<Vec<u8>> {
        if depth == self.n {
            self.leaves += 1;
            self.covered += 1;
            if self.prune || self.full_check_passes() {
                return Some(self.order.clone());
            }
            return None;
        }
        let mut pos = 0;
        loop {
            let v = if depth == 0 {
                match self.first.get(pos) {
                    Some(&v) => {
                        pos += 1;
                        v
                    }
                    None => break,
                }
            } else {
                match (pos..self.n).find(|&v| self.placed_mask & (1 << v) == 0) {
                    Some(v) => {
                        pos = v + 1;
                        v
                    }
                    None => break,
                }
            };
            if self.out_of_budget() {
                return None;
            }
            let alive = self.place(v);
            if alive {
                if let Some(order) = self.dfs(depth + 1) {
                    return Some(order);
                }
                self.placed_mask &= !(1 << v);
                self.order.pop();
            } else {
                self.prunes += 1;
                self.covered = self
                    .covered
                    .saturating_add(self.factorial[self.n - depth - 1]);
            }
            self.clear_reach(v);
            if self.aborted {
                return None;
            }
        }
        None
    }

    fn out_of_budget(&mut self) -> bool {
        self.local_nodes += 1;
        let total = self.shared.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if let Some(max) = self.max_nodes {
            if total > max {
                self.aborted = true;
                return true;
            }
        }
        if self.local_nodes.is_multiple_of(1024) {
            if self.shared.found.load(AtomicOrdering::Relaxed) {
                self.aborted = true;
                return true;
            }
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                    return true;
                }
            }
        }
        false
    }

    /// Commits reachability for `v` and, when pruning, tests every new
    /// closing arc `u -> v` for a shortcut in the prefix orientation.
    /// On success `v` is placed; on a violation the caller must still
    /// clear `v`'s reachability bit.
    fn place(&mut self, v: usize) -> bool {
        let bit = 1u32 << v;
        let into_v = self.adj[v] & self.placed_mask;
        self.reach[v] = bit;
        let mut m = self.placed_mask;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.reach[x] & into_v != 0 {
                self.reach[x] |= bit;
            }
        }
        if self.prune {
            let mut um = into_v;
            while um != 0 {
                let u = um.trailing_zeros() as usize;
                um &= um - 1;
                // Interior vertices of u ~> v paths.
                let mut s: u32 = 0;
                let mut xm = self.reach[u] & !bit & !(1 << u);
                while xm != 0 {
                    let x = xm.trailing_zeros() as usize;
                    xm &= xm - 1;
                    if self.reach[x] & bit != 0 {
                        s |= 1 << x;
                    }
                }
                let mut sm = s;
                while sm != 0 {
                    let x = sm.trailing_zeros() as usize;
                    sm &= sm - 1;
                    if self.adj[u] & (1 << x) == 0 || self.adj[v] & (1 << x) == 0 {
                        return false;
                    }
                }
                let mut x1m = s;
                while x1m != 0 {
                    let x1 = x1m.trailing_zeros() as usize;
                    x1m &= x1m - 1;
                    let downstream = s & self.reach[x1] & !(1 << x1);
                    if downstream & !self.adj[x1] != 0 {
                        return false;
                    }
                }
            }
        }
        self.placed_mask |= bit;
        self.order.push(v as u8);
        true
    }

    fn clear_reach(&mut self, v: usize) {
        let keep = !(1u32 << v);
        for r in &mut self.reach {
            *r &= keep;
        }
        self.reach[v] = 0;
    }

    /// Pruning disabled: judge the complete ordering with the
    /// standalone checker.
    fn full_check_passes(&self) -> bool {
        let mut rank = vec![0usize; self.n];
        for (r, &v) in self.order.iter().enumerate() {
            rank[v as usize] = r;
        }
        // Check each arc (u, w) for interior vertices breaking the
        // transitivity requirement, via ranks.
        let reach = {
            let mut reach = vec![0u32; self.n];
            let mut by_rank: Vec<usize> = (0..self.n).collect();
            by_rank.sort_by_key(|&v| std::cmp::Reverse(rank[v]));
            for &v in &by_rank {
                reach[v] = 1 << v;
                let mut m = self.adj[v];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if rank[w] > rank[v] {
                        reach[v] |= reach[w];
                    }
                }
            }
            reach
        };
        for u in 0..self.n {
            let mut m = self.adj[u];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if rank[w] < rank[u] {
                    continue;
                }
                let mut s: u32 = 0;
                let mut xm = reach[u] & !(1 << u) & !(1 << w);
                while xm != 0 {
                    let x = xm.trailing_zeros() as usize;
                    xm &= xm - 1;
                    if reach[x] & (1 << w) != 0 {
                        s |= 1 << x;
                    }
                }
                let mut sm = s;
                while sm != 0 {
                    let x = sm.trailing_zeros() as usize;
                    sm &= sm - 1;
                    if self.adj[u] & (1 << x) == 0 || self.adj[w] & (1 << x) == 0 {
                        return false;
                    }
                    let downstream = s & reach[x] & !(1 << x);
                    if downstream & !self.adj[x] != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_graph;
    use crate::label::VertexLabel as L;

    fn graph(labels: &[u32], edges: &[(u32, u32)]) -> LabeledGraph {
        let ls: Vec<_> = labels.iter().map(|&v| L::int(v)).collect();
        let es: Vec<_> = edges.iter().map(|&(a, b)| (L::int(a), L::int(b))).collect();
        LabeledGraph::new(ls, &es).unwrap()
    }

    /// The wheel with five spokes: a 5-cycle 1..5 plus hub 6.
    fn wheel5() -> LabeledGraph {
        graph(
            &[1, 2, 3, 4, 5, 6],
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (6, 1),
                (6, 2),
                (6, 3),
                (6, 4),
                (6, 5),
            ],
        )
    }

    fn decide(g: &LabeledGraph) -> Decision {
        decide_word_representable(g, &DecideOptions::default()).unwrap()
    }

    // ------------------------------------------------------------------
    // orientation_from_ordering
    // ------------------------------------------------------------------

    #[test]
    fn lex_ordering_of_a_complete_graph_is_the_transitive_tournament() {
        let k4 = complete_graph(4).unwrap();
        let order: Vec<_> = k4.labels().to_vec();
        let o = orientation_from_ordering(&k4, &order).unwrap();
        assert!(o.is_semi_transitive());
        for (t, h) in o.arc_labels() {
            assert!(t < h);
        }
    }

    #[test]
    fn lex_ordering_of_the_shift_graph_reproduces_its_orientation() {
        let g = crate::families::shift_graph(4, 2).unwrap();
        let o = orientation_from_ordering(&g, g.labels()).unwrap();
        assert_eq!(o, crate::orient::orient_m_shift(4, 2, 1).unwrap());
    }

    #[test]
    fn ordering_validation() {
        let g = graph(&[1, 2, 3], &[(1, 2)]);
        assert_eq!(
            orientation_from_ordering(&g, &[L::int(1)]).unwrap_err(),
            DecideError::OrderingWrongLength {
                expected: 3,
                got: 1
            }
        );
        assert_eq!(
            orientation_from_ordering(&g, &[L::int(1), L::int(2), L::int(9)]).unwrap_err(),
            DecideError::OrderingUnknownVertex("9".into())
        );
        assert_eq!(
            orientation_from_ordering(&g, &[L::int(1), L::int(2), L::int(1)]).unwrap_err(),
            DecideError::OrderingDuplicateVertex("1".into())
        );
    }

    // ------------------------------------------------------------------
    // decide: verdicts
    // ------------------------------------------------------------------

    #[test]
    fn complete_graphs_are_decided_on_the_first_ordering() {
        let d = decide(&complete_graph(5).unwrap());
        assert_eq!(d.verdict, Verdict::Representable);
        assert_eq!(d.stats.orderings_examined, 1);
        assert!(d.witness.unwrap().is_semi_transitive());
        assert!(d.witness_deterministic);
    }

    #[test]
    fn the_five_spoke_wheel_is_not_representable() {
        let d = decide(&wheel5());
        assert_eq!(d.verdict, Verdict::NonRepresentable);
        assert!(d.witness.is_none());
        assert_eq!(d.stats.total_orderings, 720);
        assert_eq!(
            d.stats.orderings_covered, 720,
            "exhaustion must account for every ordering"
        );
    }

    #[test]
    fn every_graph_on_up_to_four_vertices_is_representable() {
        let pairs = [(1u32, 2u32), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = graph(&[1, 2, 3, 4], &edges);
            assert_eq!(decide(&g).verdict, Verdict::Representable, "mask {mask}");
        }
    }

    #[test]
    fn the_empty_graph_is_trivially_representable() {
        let g = LabeledGraph::new(vec![], &[]).unwrap();
        let d = decide(&g);
        assert_eq!(d.verdict, Verdict::Representable);
        assert_eq!(d.stats.orderings_covered, 1);
    }

    // ------------------------------------------------------------------
    // decide: invariances
    // ------------------------------------------------------------------

    #[test]
    fn pruning_does_not_change_verdicts() {
        let cases = [
            wheel5(),
            complete_graph(5).unwrap(),
            graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]),
            graph(&[1, 2, 3, 4, 5, 6], &[(1, 4), (2, 5), (3, 6), (1, 5), (2, 6)]),
        ];
        for g in &cases {
            let pruned = decide(g);
            let unpruned = decide_word_representable(
                g,
                &DecideOptions {
                    prune: false,
                    ..DecideOptions::default()
                },
            )
            .unwrap();
            assert_eq!(pruned.verdict, unpruned.verdict, "{g}");
            assert_eq!(
                unpruned.stats.orderings_covered, unpruned.stats.orderings_examined,
                "without pruning every covered ordering is examined"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_verdicts() {
        for g in [wheel5(), complete_graph(5).unwrap(), crate::families::shift_graph(4, 2).unwrap()] {
            let expected = decide(&g).verdict;
            for workers in [2, 3, 4] {
                let d = decide_word_representable(
                    &g,
                    &DecideOptions {
                        workers,
                        ..DecideOptions::default()
                    },
                )
                .unwrap();
                assert_eq!(d.verdict, expected, "{g} with {workers} workers");
                if let Some(w) = d.witness {
                    assert!(w.is_semi_transitive());
                }
            }
        }
    }

    // ------------------------------------------------------------------
    // decide: limits and budgets
    // ------------------------------------------------------------------

    #[test]
    fn vertex_limit_is_enforced_and_overridable() {
        let g = graph(&(1..=12).collect::<Vec<_>>(), &[(1, 2)]);
        assert_eq!(
            decide_word_representable(&g, &DecideOptions::default()).unwrap_err(),
            DecideError::AboveVertexLimit {
                vertices: 12,
                limit: DEFAULT_DECIDE_VERTEX_LIMIT
            }
        );
        let d = decide_word_representable(
            &g,
            &DecideOptions {
                allow_large: true,
                ..DecideOptions::default()
            },
        )
        .unwrap();
        assert_eq!(d.verdict, Verdict::Representable);
    }

    #[test]
    fn engine_cap_is_a_hard_error() {
        let g = graph(&(1..=33).collect::<Vec<_>>(), &[]);
        assert_eq!(
            decide_word_representable(
                &g,
                &DecideOptions {
                    allow_large: true,
                    ..DecideOptions::default()
                }
            )
            .unwrap_err(),
            DecideError::AboveEngineCap {
                vertices: 33,
                cap: DECIDE_ENGINE_VERTEX_CAP
            }
        );
    }

    #[test]
    fn a_tiny_node_budget_yields_unknown() {
        let d = decide_word_representable(
            &wheel5(),
            &DecideOptions {
                max_nodes: Some(3),
                ..DecideOptions::default()
            },
        )
        .unwrap();
        assert_eq!(d.verdict, Verdict::Unknown);
        assert!(d.witness.is_none());
    }
}

//! Edge orientations and the semi-transitivity test.
//!
//! An orientation is semi-transitive when it is acyclic and no directed
//! path short-circuits: whenever a directed path runs from `u` to `v`
//! and the arc `u -> v` is also present, every pair of path vertices
//! must be adjacent (and, being acyclic, oriented along the path). A
//! path with the closing arc but a missing pair is a *shortcut*; both
//! checkers below hunt for one.

use std::fmt;

use thiserror::Error;

use crate::families::{m_shift_graph, shifted_into, FamilyError};
use crate::graph::{kahn_topological_order, Digraph, LabeledGraph};
use crate::label::VertexLabel;

/// Vertex-count ceiling for the path-enumerating checker, which walks
/// every directed path and is exponential in the worst case.
pub const NAIVE_CHECKER_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientError {
    #[error("the orientation contains a directed cycle; shortcut checks need acyclic input")]
    CyclicInput,
    #[error(
        "the path-enumerating checker is limited to {limit} vertices (got {vertices}); \
         use the arc-criterion checker instead"
    )]
    TooLargeForNaive { vertices: usize, limit: usize },
    #[error("arc endpoint {0} is not a vertex of the base graph")]
    UnknownVertex(String),
    #[error("arc {tail} -> {head} does not correspond to an edge of the base graph")]
    NotAnEdge { tail: String, head: String },
    #[error("edge {a} - {b} is directed more than once")]
    ConflictingDirection { a: String, b: String },
    #[error("edge {a} - {b} is left undirected")]
    MissingDirection { a: String, b: String },
}

/// A directed path that closes into a chord but skips an adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortcutWitness {
    /// The vertices of the offending directed path, in path order.
    pub path: Vec<VertexLabel>,
    /// The closing arc from the first to the last path vertex.
    pub chord: (VertexLabel, VertexLabel),
    /// A pair of path vertices with no edge between them.
    pub violation: (VertexLabel, VertexLabel),
}

impl fmt::Display for ShortcutWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "path {} with chord {} -> {} and non-adjacent pair {{{}, {}}}",
            path.join(" -> "),
            self.chord.0,
            self.chord.1,
            self.violation.0,
            self.violation.1
        )
    }
}

// ============================================================================
// Orientation
// ============================================================================

/// An assignment of a direction to every edge of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: LabeledGraph,
    /// `forward[e]` directs edge `(i, j)` (with `i < j`) as `i -> j`.
    forward: Vec<bool>,
}

impl Orientation {
    pub(crate) fn from_forward(base: LabeledGraph, forward: Vec<bool>) -> Self {
        debug_assert_eq!(base.edge_count(), forward.len());
        Orientation { base, forward }
    }

    /// Builds an orientation from an explicit arc list, which must
    /// direct every edge of the base graph exactly once.
    pub fn from_arcs(
        base: LabeledGraph,
        arcs: &[(VertexLabel, VertexLabel)],
    ) -> Result<Self, OrientError> {
        let mut forward: Vec<Option<bool>> = vec![None; base.edge_count()];
        for (tail, head) in arcs {
            let t = base
                .index_of(tail)
                .ok_or_else(|| OrientError::UnknownVertex(tail.to_string()))?;
            let h = base
                .index_of(head)
                .ok_or_else(|| OrientError::UnknownVertex(head.to_string()))?;
            let key = (t.min(h), t.max(h));
            let e = base
                .edges()
                .binary_search(&key)
                .map_err(|_| OrientError::NotAnEdge {
                    tail: tail.to_string(),
                    head: head.to_string(),
                })?;
            if forward[e].is_some() {
                return Err(OrientError::ConflictingDirection {
                    a: base.label(key.0).to_string(),
                    b: base.label(key.1).to_string(),
                });
            }
            forward[e] = Some(t < h);
        }
        if let Some(e) = forward.iter().position(|d| d.is_none()) {
            let (i, j) = base.edges()[e];
            return Err(OrientError::MissingDirection {
                a: base.label(i).to_string(),
                b: base.label(j).to_string(),
            });
        }
        let forward = forward.into_iter().map(|d| d.expect("checked")).collect();
        Ok(Orientation { base, forward })
    }

    pub fn base(&self) -> &LabeledGraph {
        &self.base
    }

    /// Arcs as `(tail, head)` index pairs, in base edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(i, j), &fwd)| if fwd { (i, j) } else { (j, i) })
            .collect()
    }

    pub fn arc_labels(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.arcs()
            .into_iter()
            .map(|(t, h)| (self.base.label(t).clone(), self.base.label(h).clone()))
            .collect()
    }

    pub fn has_arc_idx(&self, tail: usize, head: usize) -> bool {
        let key = (tail.min(head), tail.max(head));
        match self.base.edges().binary_search(&key) {
            Ok(e) => self.forward[e] == (tail < head),
            Err(_) => false,
        }
    }

    /// The same orientation viewed as a digraph.
    pub fn to_digraph(&self) -> Digraph {
        let labels = self.base.labels().to_vec();
        let arcs = self.arcs().into_iter().collect();
        Digraph::from_parts(labels, arcs)
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            base: self.base.clone(),
            forward: self.forward.iter().map(|d| !d).collect(),
        }
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.base.vertex_count()];
        for (t, h) in self.arcs() {
            succ[t].push(h);
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        succ
    }

    pub fn is_acyclic(&self) -> bool {
        kahn_topological_order(self.base.vertex_count(), &self.successors()).is_some()
    }

    /// Semi-transitivity: acyclic and shortcut-free.
    pub fn is_semi_transitive(&self) -> bool {
        self.is_acyclic()
            && self
                .find_shortcut_fast()
                .expect("acyclicity was just checked")
                .is_none()
    }

    // ------------------------------------------------------------------
    // checker 1: exhaustive path enumeration
    // ------------------------------------------------------------------

    /// Walks every directed path of three or more vertices, depth-first
    /// with lexicographic extension, and reports the first path that
    /// closes into a chord while skipping an adjacency. Exponential;
    /// limited to [`NAIVE_CHECKER_VERTEX_LIMIT`] vertices.
    pub fn find_shortcut_naive(&self) -> Result<Option<ShortcutWitness>, OrientError> {
        let n = self.base.vertex_count();
        if n > NAIVE_CHECKER_VERTEX_LIMIT {
            return Err(OrientError::TooLargeForNaive {
                vertices: n,
                limit: NAIVE_CHECKER_VERTEX_LIMIT,
            });
        }
        let succ = self.successors();
        if kahn_topological_order(n, &succ).is_none() {
            return Err(OrientError::CyclicInput);
        }
        let mut path = Vec::with_capacity(n);
        for start in 0..n {
            path.push(start);
            if let Some(w) = self.extend_path(&mut path, &succ) {
                return Ok(Some(w));
            }
            path.pop();
        }
        Ok(None)
    }

    fn extend_path(&self, path: &mut Vec<usize>, succ: &[Vec<usize>]) -> Option<ShortcutWitness> {
        // Acyclic, so a directed walk never revisits a vertex and no
        // on-path bookkeeping is needed.
        let last = *path.last().expect("paths start non-empty");
        if path.len() >= 3 && self.has_arc_idx(path[0], last) {
            for p in 0..path.len() {
                for q in p + 1..path.len() {
                    if (p, q) == (0, path.len() - 1) {
                        continue; // the chord itself
                    }
                    if !self.has_arc_idx(path[p], path[q]) {
                        return Some(self.witness(path.clone(), (path[p], path[q])));
                    }
                }
            }
        }
        for &next in &succ[last] {
            path.push(next);
            if let Some(w) = self.extend_path(path, succ) {
                return Some(w);
            }
            path.pop();
        }
        None
    }

    fn witness(&self, path: Vec<usize>, violation: (usize, usize)) -> ShortcutWitness {
        let label = |i: usize| self.base.label(i).clone();
        ShortcutWitness {
            chord: (label(path[0]), label(*path.last().expect("non-empty"))),
            violation: (label(violation.0), label(violation.1)),
            path: path.into_iter().map(label).collect(),
        }
    }

    // ------------------------------------------------------------------
    // checker 2: per-arc criterion over reachability
    // ------------------------------------------------------------------

    /// Polynomial check: for each arc `u -> v`, every vertex lying on a
    /// directed `u`-to-`v` path must carry the arcs `u -> x` and
    /// `x -> v`, and every reachability-comparable pair of such interior
    /// vertices must be adjacent. Any miss yields a shortcut, whose
    /// explicit path is rebuilt greedily (lexicographically smallest
    /// next vertex).
    pub fn find_shortcut_fast(&self) -> Result<Option<ShortcutWitness>, OrientError> {
        let n = self.base.vertex_count();
        let succ = self.successors();
        let Some(topo) = kahn_topological_order(n, &succ) else {
            return Err(OrientError::CyclicInput);
        };
        let words = n.div_ceil(64).max(1);
        // reach[v] holds every vertex reachable from v, v included.
        let mut reach = vec![vec![0u64; words]; n];
        for &v in topo.iter().rev() {
            reach[v][v / 64] |= 1 << (v % 64);
            for &s in &succ[v] {
                let (head, tail) = if v < s {
                    let (a, b) = reach.split_at_mut(s);
                    (&mut a[v], &b[0])
                } else {
                    let (a, b) = reach.split_at_mut(v);
                    (&mut b[0], &a[s])
                };
                for (dst, src) in head.iter_mut().zip(tail) {
                    *dst |= src;
                }
            }
        }
        let reaches = |a: usize, b: usize| reach[a][b / 64] >> (b % 64) & 1 == 1;
        let mut interior = Vec::new();
        for (u, v) in self.arcs() {
            interior.clear();
            for x in 0..n {
                if x != u && x != v && reaches(u, x) && reaches(x, v) {
                    interior.push(x);
                }
            }
            for &x in &interior {
                if !self.has_arc_idx(u, x) {
                    return Ok(Some(self.rebuild(u, v, u, x, &reach, &succ)));
                }
                if !self.has_arc_idx(x, v) {
                    return Ok(Some(self.rebuild(u, v, x, v, &reach, &succ)));
                }
            }
            for &x1 in &interior {
                for &x2 in &interior {
                    if x1 != x2 && reaches(x1, x2) && !self.has_arc_idx(x1, x2) {
                        return Ok(Some(self.rebuild(u, v, x1, x2, &reach, &succ)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Stitches the witness path `u ~> a ~> b ~> v` from greedy
    /// lexicographic segments.
    fn rebuild(
        &self,
        u: usize,
        v: usize,
        a: usize,
        b: usize,
        reach: &[Vec<u64>],
        succ: &[Vec<usize>],
    ) -> ShortcutWitness {
        let reaches = |x: usize, y: usize| reach[x][y / 64] >> (y % 64) & 1 == 1;
        let mut path = vec![u];
        for target in [a, b, v] {
            let mut cur = *path.last().expect("non-empty");
            while cur != target {
                let next = succ[cur]
                    .iter()
                    .copied()
                    .find(|&s| reaches(s, target))
                    .expect("reachability guarantees a continuation");
                path.push(next);
                cur = next;
            }
        }
        self.witness(path, (a, b))
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orientation of {} with {} arcs",
            self.base,
            self.forward.len()
        )
    }
}

// ============================================================================
// the m-shift orientation
// ============================================================================

/// Orients the m-shift graph by directing each edge from a tuple to its
/// m-place continuation, which is always the lexicographically larger
/// endpoint.
pub fn orient_m_shift(n: u32, k: u32, m: u32) -> Result<Orientation, FamilyError> {
    let base = m_shift_graph(n, k, m)?;
    let m = m as usize;
    let forward = base
        .edges()
        .iter()
        .map(|&(i, j)| {
            let (VertexLabel::Tuple(u), VertexLabel::Tuple(v)) = (base.label(i), base.label(j))
            else {
                unreachable!("m-shift vertices are tuples")
            };
            if shifted_into(u, v, m) {
                true
            } else {
                debug_assert!(shifted_into(v, u, m), "adjacency demands one shift condition");
                false
            }
        })
        .collect();
    Ok(Orientation::from_forward(base, forward))
}

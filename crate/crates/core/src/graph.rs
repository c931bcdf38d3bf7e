//! Simple labeled graphs and digraphs, plus the structural queries the
//! rest of the crate builds on.
//!
//! Vertices are stored in canonical (sorted) label order and addressed
//! by index internally; all values are immutable after construction.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::label::VertexLabel;

/// Vertex-count ceiling for the exact coloring routine; callers may
/// raise it explicitly via [`LabeledGraph::chromatic_number_with_limit`].
pub const DEFAULT_CHROMATIC_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("vertex labels mix kinds ({0} vs {1}); a graph must be single-kinded")]
    MixedLabelKinds(String, String),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownLabel(String),
    #[error("loop at vertex {0}; only simple graphs are supported")]
    LoopEdge(String),
    #[error("relabeling collapses two vertices onto {0}")]
    LabelCollision(String),
    #[error(
        "graph has {vertices} vertices, above the exact-coloring limit of {limit}; \
         raise the limit explicitly to proceed"
    )]
    TooManyVerticesForColoring { vertices: usize, limit: usize },
}

// ============================================================================
// Undirected graphs
// ============================================================================

/// An immutable simple graph with canonically ordered vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<VertexLabel>,
    /// Edges as index pairs `(i, j)` with `i < j`, ascending.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl LabeledGraph {
    /// Builds a graph from a label set and an edge list.
    ///
    /// Labels are sorted into canonical order; the edge list is treated
    /// as a set (duplicates collapse). Loops, unknown endpoints, repeated
    /// labels, and mixed label kinds are rejected.
    pub fn new(
        labels: Vec<VertexLabel>,
        edges: &[(VertexLabel, VertexLabel)],
    ) -> Result<Self, GraphError> {
        let mut sorted = labels;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateLabel(pair[0].to_string()));
            }
            if !pair[0].same_kind(&pair[1]) {
                return Err(GraphError::MixedLabelKinds(
                    pair[0].to_string(),
                    pair[1].to_string(),
                ));
            }
        }
        let index_of = |label: &VertexLabel| -> Result<usize, GraphError> {
            sorted
                .binary_search(label)
                .map_err(|_| GraphError::UnknownLabel(label.to_string()))
        };
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let i = index_of(a)?;
            let j = index_of(b)?;
            if i == j {
                return Err(GraphError::LoopEdge(a.to_string()));
            }
            edge_set.insert((i.min(j), i.max(j)));
        }
        Ok(Self::from_parts(sorted, edge_set))
    }

    /// Builds a graph from pre-sorted labels and a normalized edge set.
    /// Callers must pass labels in canonical order and index pairs with
    /// `i < j`.
    pub(crate) fn from_parts(labels: Vec<VertexLabel>, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| i < j && j < labels.len()));
        let mut adj = vec![Vec::new(); labels.len()];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        LabeledGraph {
            labels,
            edges: edges.into_iter().collect(),
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex labels in canonical order; index `i` names vertex `i`.
    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn contains(&self, label: &VertexLabel) -> bool {
        self.index_of(label).is_some()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> {
        self.edges.iter().map(|&(i, j)| (&self.labels[i], &self.labels[j]))
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Label-based edge query; unknown labels simply report `false`.
    pub fn has_edge(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    /// The subgraph induced by `keep`; every requested label must exist.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexLabel>) -> Result<Self, GraphError> {
        let mut old_index = Vec::with_capacity(keep.len());
        for label in keep {
            match self.index_of(label) {
                Some(i) => old_index.push(i),
                None => return Err(GraphError::UnknownLabel(label.to_string())),
            }
        }
        old_index.sort_unstable();
        let labels: Vec<VertexLabel> =
            old_index.iter().map(|&i| self.labels[i].clone()).collect();
        let mut edges = BTreeSet::new();
        for (new_i, &gi) in old_index.iter().enumerate() {
            for (new_j, &gj) in old_index.iter().enumerate().skip(new_i + 1) {
                if self.has_edge_idx(gi, gj) {
                    edges.insert((new_i, new_j));
                }
            }
        }
        Ok(Self::from_parts(labels, edges))
    }

    /// Applies an injective relabeling; the result is re-sorted into
    /// canonical order.
    pub fn map_labels<F>(&self, f: F) -> Result<Self, GraphError>
    where
        F: FnMut(&VertexLabel) -> VertexLabel,
    {
        let new_labels: Vec<VertexLabel> = self.labels.iter().map(f).collect();
        let mut check = new_labels.clone();
        check.sort();
        for pair in check.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::LabelCollision(pair[0].to_string()));
            }
        }
        let edges: Vec<(VertexLabel, VertexLabel)> = self
            .edges
            .iter()
            .map(|&(i, j)| (new_labels[i].clone(), new_labels[j].clone()))
            .collect();
        LabeledGraph::new(new_labels, &edges)
    }

    /// True when no three vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        for &(i, j) in &self.edges {
            // Sorted adjacency lists; scan for a common neighbor.
            let (mut a, mut b) = (self.adj[i].iter().peekable(), self.adj[j].iter().peekable());
            while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
                match x.cmp(&y) {
                    std::cmp::Ordering::Less => {
                        a.next();
                    }
                    std::cmp::Ordering::Greater => {
                        b.next();
                    }
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }

    /// Length of a shortest odd cycle, or `None` for bipartite graphs.
    ///
    /// Runs a breadth-first search over (vertex, parity) states from
    /// every start vertex; the shortest odd closed walk found this way
    /// is always a cycle, and its minimum over all starts is the odd
    /// girth.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![[usize::MAX; 2]; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n {
            for d in dist.iter_mut() {
                *d = [usize::MAX; 2];
            }
            dist[s][0] = 0;
            queue.clear();
            queue.push_back((s, 0usize));
            while let Some((v, parity)) = queue.pop_front() {
                let d = dist[v][parity];
                if d + 1 >= best {
                    continue;
                }
                for &w in &self.adj[v] {
                    let flipped = 1 - parity;
                    if dist[w][flipped] > d + 1 {
                        dist[w][flipped] = d + 1;
                        queue.push_back((w, flipped));
                    }
                }
            }
            best = best.min(dist[s][1]);
        }
        (best < usize::MAX).then_some(best)
    }

    /// Exact chromatic number, with the default vertex-count limit.
    pub fn chromatic_number(&self) -> Result<u32, GraphError> {
        self.chromatic_number_with_limit(DEFAULT_CHROMATIC_VERTEX_LIMIT)
    }

    /// Exact chromatic number by backtracking, trying k = 1, 2, ... in
    /// turn. The empty graph needs zero colors.
    pub fn chromatic_number_with_limit(&self, limit: usize) -> Result<u32, GraphError> {
        let n = self.vertex_count();
        if n > limit {
            return Err(GraphError::TooManyVerticesForColoring {
                vertices: n,
                limit,
            });
        }
        if n == 0 {
            return Ok(0);
        }
        // Color along a BFS order seeded at a maximum-degree vertex of
        // each component, so most vertices already have a colored
        // neighbor when reached and dead branches fail early.
        let order = self.coloring_order();
        for k in 1..=n as u32 {
            if self.colorable(k, &order) {
                return Ok(k);
            }
        }
        Ok(n as u32)
    }

    fn coloring_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut queue = std::collections::VecDeque::new();
        for &seed in &by_degree {
            if seen[seed] {
                continue;
            }
            seen[seed] = true;
            queue.push_back(seed);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    fn colorable(&self, k: u32, order: &[usize]) -> bool {
        const UNCOLORED: u32 = u32::MAX;
        let mut color = vec![UNCOLORED; self.vertex_count()];
        // Colors used so far always form the prefix 0..used; trying at
        // most one fresh color per vertex removes color-permutation
        // symmetry.
        fn assign(g: &LabeledGraph, order: &[usize], color: &mut [u32], pos: usize, used: u32, k: u32) -> bool {
            if pos == order.len() {
                return true;
            }
            let v = order[pos];
            let mut forbidden: u64 = 0;
            for &w in &g.adj[v] {
                if color[w] != u32::MAX {
                    forbidden |= 1 << color[w];
                }
            }
            let ceiling = k.min(used + 1);
            for c in 0..ceiling {
                if forbidden & (1 << c) != 0 {
                    continue;
                }
                color[v] = c;
                if assign(g, order, color, pos + 1, used.max(c + 1), k) {
                    return true;
                }
                color[v] = u32::MAX;
            }
            false
        }
        assign(self, order, &mut color, 0, 0, k)
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph on {} vertices with {} edges",
            self.vertex_count(),
            self.edge_count()
        )
    }
}

// ============================================================================
// Digraphs
// ============================================================================

/// An immutable loop-free digraph; antiparallel arc pairs are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<VertexLabel>,
    /// Arcs as `(tail, head)` index pairs, ascending.
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(
        labels: Vec<VertexLabel>,
        arcs: &[(VertexLabel, VertexLabel)],
    ) -> Result<Self, GraphError> {
        let mut sorted = labels;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateLabel(pair[0].to_string()));
            }
            if !pair[0].same_kind(&pair[1]) {
                return Err(GraphError::MixedLabelKinds(
                    pair[0].to_string(),
                    pair[1].to_string(),
                ));
            }
        }
        let index_of = |label: &VertexLabel| -> Result<usize, GraphError> {
            sorted
                .binary_search(label)
                .map_err(|_| GraphError::UnknownLabel(label.to_string()))
        };
        let mut arc_set = BTreeSet::new();
        for (tail, head) in arcs {
            let t = index_of(tail)?;
            let h = index_of(head)?;
            if t == h {
                return Err(GraphError::LoopEdge(tail.to_string()));
            }
            arc_set.insert((t, h));
        }
        Ok(Self::from_parts(sorted, arc_set))
    }

    pub(crate) fn from_parts(labels: Vec<VertexLabel>, arcs: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut out_adj = vec![Vec::new(); labels.len()];
        let mut in_adj = vec![Vec::new(); labels.len()];
        for &(t, h) in &arcs {
            out_adj[t].push(h);
            in_adj[h].push(t);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        Digraph {
            labels,
            arcs: arcs.into_iter().collect(),
            out_adj,
            in_adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Arcs as `(tail, head)` index pairs, in ascending order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_labels(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> {
        self.arcs.iter().map(|&(t, h)| (&self.labels[t], &self.labels[h]))
    }

    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        &self.out_adj[i]
    }

    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        &self.in_adj[i]
    }

    pub fn has_arc_idx(&self, tail: usize, head: usize) -> bool {
        self.out_adj[tail].binary_search(&head).is_ok()
    }

    /// True when the digraph has no directed cycle (Kahn's algorithm:
    /// repeatedly strip vertices of in-degree zero).
    pub fn is_acyclic(&self) -> bool {
        kahn_topological_order(self.vertex_count(), &self.out_adj).is_some()
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "digraph on {} vertices with {} arcs",
            self.vertex_count(),
            self.arc_count()
        )
    }
}

/// Kahn's algorithm over successor lists: the vertices in one
/// topological order, or `None` when a directed cycle remains.
pub(crate) fn kahn_topological_order(n: usize, out_adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut in_degree = vec![0usize; n];
    for succs in out_adj {
        for &h in succs {
            in_degree[h] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| in_degree[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = stack.pop() {
        order.push(v);
        for &h in &out_adj[v] {
            in_degree[h] -= 1;
            if in_degree[h] == 0 {
                stack.push(h);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::VertexLabel as L;

    fn ints(values: &[u32]) -> Vec<VertexLabel> {
        values.iter().map(|&v| L::int(v)).collect()
    }

    fn graph(labels: &[u32], edges: &[(u32, u32)]) -> LabeledGraph {
        let e: Vec<_> = edges.iter().map(|&(a, b)| (L::int(a), L::int(b))).collect();
        LabeledGraph::new(ints(labels), &e).unwrap()
    }

    // ------------------------------------------------------------------
    // construction
    // ------------------------------------------------------------------

    #[test]
    fn labels_are_sorted_canonically() {
        let g = graph(&[3, 1, 2], &[(3, 1)]);
        assert_eq!(g.labels(), &ints(&[1, 2, 3])[..]);
        assert_eq!(g.edges(), &[(0, 2)]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = graph(&[1, 2], &[(1, 2), (2, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn loops_are_rejected() {
        let err = LabeledGraph::new(ints(&[1, 2]), &[(L::int(1), L::int(1))]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge("1".into()));
    }

    #[test]
    fn unknown_endpoints_are_rejected() {
        let err = LabeledGraph::new(ints(&[1, 2]), &[(L::int(1), L::int(5))]).unwrap_err();
        assert_eq!(err, GraphError::UnknownLabel("5".into()));
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let err = LabeledGraph::new(ints(&[1, 1]), &[]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateLabel("1".into()));
    }

    #[test]
    fn mixed_label_kinds_are_rejected() {
        let err = LabeledGraph::new(vec![L::int(1), L::tuple(&[1, 2])], &[]).unwrap_err();
        assert!(matches!(err, GraphError::MixedLabelKinds(_, _)));
    }

    #[test]
    fn empty_graph_is_allowed() {
        let g = LabeledGraph::new(Vec::new(), &[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.chromatic_number().unwrap(), 0);
    }

    // ------------------------------------------------------------------
    // induced subgraphs
    // ------------------------------------------------------------------

    #[test]
    fn induced_subgraph_keeps_internal_edges_only() {
        let g = graph(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let keep: BTreeSet<_> = ints(&[1, 2, 3]).into_iter().collect();
        let h = g.induced_subgraph(&keep).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert!(h.has_edge(&L::int(1), &L::int(2)));
        assert!(h.has_edge(&L::int(2), &L::int(3)));
        assert!(!h.has_edge(&L::int(1), &L::int(3)));
    }

    #[test]
    fn induced_subgraph_on_full_vertex_set_is_identity() {
        let g = graph(&[1, 2, 3], &[(1, 2), (2, 3)]);
        let keep: BTreeSet<_> = g.labels().iter().cloned().collect();
        assert_eq!(g.induced_subgraph(&keep).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_rejects_unknown_vertices() {
        let g = graph(&[1, 2], &[(1, 2)]);
        let keep: BTreeSet<_> = ints(&[1, 9]).into_iter().collect();
        assert_eq!(
            g.induced_subgraph(&keep).unwrap_err(),
            GraphError::UnknownLabel("9".into())
        );
    }

    // ------------------------------------------------------------------
    // triangle-freeness and odd girth
    // ------------------------------------------------------------------

    #[test]
    fn triangle_is_detected() {
        let g = graph(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]);
        assert!(!g.is_triangle_free());
        assert_eq!(g.odd_girth(), Some(3));
    }

    #[test]
    fn five_cycle_has_odd_girth_five() {
        let g = graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        assert!(g.is_triangle_free());
        assert_eq!(g.odd_girth(), Some(5));
    }

    #[test]
    fn bipartite_graphs_have_no_odd_girth() {
        let g = graph(&[1, 2, 3, 4], &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(g.odd_girth(), None);
    }

    #[test]
    fn triangle_free_iff_odd_girth_not_three() {
        // Sweep all labeled graphs on 4 vertices.
        let pairs = [(1u32, 2u32), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &(a, b))| (a, b))
                .collect();
            let g = graph(&[1, 2, 3, 4], &edges);
            assert_eq!(
                g.is_triangle_free(),
                g.odd_girth() != Some(3),
                "disagreement on edge mask {mask}"
            );
        }
    }

    // ------------------------------------------------------------------
    // chromatic number
    // ------------------------------------------------------------------

    #[test]
    fn chromatic_number_of_complete_graph_is_its_order() {
        let g = graph(&[1, 2, 3, 4], &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(g.chromatic_number().unwrap(), 4);
    }

    #[test]
    fn chromatic_number_of_odd_cycle_is_three() {
        let g = graph(&[1, 2, 3, 4, 5], &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        assert_eq!(g.chromatic_number().unwrap(), 3);
    }

    #[test]
    fn chromatic_number_of_edgeless_graph_is_one() {
        let g = graph(&[1, 2, 3], &[]);
        assert_eq!(g.chromatic_number().unwrap(), 1);
    }

    #[test]
    fn chromatic_number_two_iff_bipartite_with_an_edge() {
        let pairs = [(1u32, 2u32), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &(a, b))| (a, b))
                .collect();
            let g = graph(&[1, 2, 3, 4], &edges);
            let two_chromatic = g.chromatic_number().unwrap() == 2;
            let bipartite_with_edge = g.odd_girth().is_none() && g.edge_count() > 0;
            assert_eq!(two_chromatic, bipartite_with_edge, "edge mask {mask}");
        }
    }

    #[test]
    fn chromatic_limit_is_enforced_and_overridable() {
        let labels = ints(&(1..=21).collect::<Vec<_>>());
        let g = LabeledGraph::new(labels, &[]).unwrap();
        assert!(matches!(
            g.chromatic_number(),
            Err(GraphError::TooManyVerticesForColoring { vertices: 21, limit: 20 })
        ));
        assert_eq!(g.chromatic_number_with_limit(21).unwrap(), 1);
    }

    // ------------------------------------------------------------------
    // relabeling
    // ------------------------------------------------------------------

    #[test]
    fn map_labels_preserves_structure() {
        let g = graph(&[1, 2, 3], &[(1, 2), (2, 3)]);
        let h = g
            .map_labels(|l| match l {
                L::Int(v) => L::tuple(&[*v, *v + 1]),
                other => other.clone(),
            })
            .unwrap();
        assert!(h.has_edge(&L::tuple(&[1, 2]), &L::tuple(&[2, 3])));
        assert!(!h.has_edge(&L::tuple(&[1, 2]), &L::tuple(&[3, 4])));
    }

    #[test]
    fn map_labels_rejects_collisions() {
        let g = graph(&[1, 2], &[]);
        let err = g.map_labels(|_| L::int(7)).unwrap_err();
        assert_eq!(err, GraphError::LabelCollision("7".into()));
    }

    // ------------------------------------------------------------------
    // digraphs
    // ------------------------------------------------------------------

    fn digraph(labels: &[u32], arcs: &[(u32, u32)]) -> Digraph {
        let a: Vec<_> = arcs.iter().map(|&(t, h)| (L::int(t), L::int(h))).collect();
        Digraph::new(ints(labels), &a).unwrap()
    }

    #[test]
    fn acyclicity_of_small_digraphs() {
        assert!(digraph(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).is_acyclic());
        assert!(!digraph(&[1, 2, 3], &[(1, 2), (2, 3), (3, 1)]).is_acyclic());
        assert!(!digraph(&[1, 2], &[(1, 2), (2, 1)]).is_acyclic());
        assert!(digraph(&[1, 2], &[]).is_acyclic());
    }

    #[test]
    fn digraph_rejects_loops() {
        let err = Digraph::new(ints(&[1]), &[(L::int(1), L::int(1))]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge("1".into()));
    }

    #[test]
    fn antiparallel_arcs_are_two_arcs() {
        let d = digraph(&[1, 2], &[(1, 2), (2, 1)]);
        assert_eq!(d.arc_count(), 2);
    }
}

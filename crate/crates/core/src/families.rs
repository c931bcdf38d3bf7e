//! Graph families: complete graphs, transitive tournaments, shift
//! graphs and their m-shift generalization, simplified de Bruijn
//! graphs with a spread variant, and line (di)graph constructions.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Digraph, LabeledGraph};
use crate::label::VertexLabel;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("complete graph requires n >= 1 (got n={n})")]
    CompleteParams { n: u32 },
    #[error("transitive tournament requires n >= 1 (got n={n})")]
    TournamentParams { n: u32 },
    #[error("shift graph requires n > k >= 2 (got n={n}, k={k})")]
    ShiftParams { n: u32, k: u32 },
    #[error("m-shift graph requires n > k >= 2 and 1 <= m < k (got n={n}, k={k}, m={m})")]
    MShiftParams { n: u32, k: u32, m: u32 },
    #[error("de Bruijn graph requires n >= 2 and k >= 2 (got n={n}, k={k})")]
    DeBruijnParams { n: u32, k: u32 },
    #[error("spread de Bruijn graph requires n >= 2, k >= 2, m >= 1 (got n={n}, k={k}, m={m})")]
    SpreadParams { n: u32, k: u32, m: u32 },
    #[error("de Bruijn graph on n={n}, k={k} would have n^k > 2^20 vertices")]
    DeBruijnTooLarge { n: u32, k: u32 },
}

/// Binomial coefficient, exact in u64 at the sizes this crate handles.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

// ============================================================================
// elementary families
// ============================================================================

/// The complete graph on vertices `1..=n`.
pub fn complete_graph(n: u32) -> Result<LabeledGraph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::CompleteParams { n });
    }
    let labels: Vec<VertexLabel> = (1..=n).map(VertexLabel::int).collect();
    let mut edges = BTreeSet::new();
    for i in 0..n as usize {
        for j in i + 1..n as usize {
            edges.insert((i, j));
        }
    }
    Ok(LabeledGraph::from_parts(labels, edges))
}

/// The transitive tournament on `1..=n`: an arc `i -> j` whenever `i < j`.
pub fn transitive_tournament(n: u32) -> Result<Digraph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TournamentParams { n });
    }
    let labels: Vec<VertexLabel> = (1..=n).map(VertexLabel::int).collect();
    let mut arcs = BTreeSet::new();
    for i in 0..n as usize {
        for j in i + 1..n as usize {
            arcs.insert((i, j));
        }
    }
    Ok(Digraph::from_parts(labels, arcs))
}

// ============================================================================
// shift graphs
// ============================================================================

/// All strictly increasing k-tuples over `{1..=n}`, in lexicographic
/// order.
pub(crate) fn increasing_tuples(n: u32, k: u32) -> Vec<Vec<u32>> {
    let k = k as usize;
    let mut out = Vec::new();
    if k == 0 || (k as u32) > n {
        return out;
    }
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) as u32 {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// True when `v` continues `u` shifted by `m` places: `v[i] = u[i + m]`
/// for every position `i` up to `k - m`.
pub(crate) fn shifted_into(u: &[u32], v: &[u32], m: usize) -> bool {
    let k = u.len();
    debug_assert_eq!(v.len(), k);
    debug_assert!(m < k);
    (0..k - m).all(|i| v[i] == u[i + m])
}

/// The shift graph: vertices are increasing k-tuples over `{1..=n}`,
/// and two tuples are adjacent when one continues the other by a
/// single position.
pub fn shift_graph(n: u32, k: u32) -> Result<LabeledGraph, FamilyError> {
    if !(n > k && k >= 2) {
        return Err(FamilyError::ShiftParams { n, k });
    }
    let tuples = increasing_tuples(n, k);
    let labels: Vec<VertexLabel> = tuples.iter().map(|t| VertexLabel::tuple(t)).collect();
    let k = k as usize;
    let mut edges = BTreeSet::new();
    for (i, u) in tuples.iter().enumerate() {
        for (j, v) in tuples.iter().enumerate().skip(i + 1) {
            let u_into_v = (0..k - 1).all(|p| v[p] == u[p + 1]);
            let v_into_u = (0..k - 1).all(|p| u[p] == v[p + 1]);
            if u_into_v || v_into_u {
                edges.insert((i, j));
            }
        }
    }
    Ok(LabeledGraph::from_parts(labels, edges))
}

/// The m-shift graph: adjacency asks for continuation by `m` positions
/// instead of one.
pub fn m_shift_graph(n: u32, k: u32, m: u32) -> Result<LabeledGraph, FamilyError> {
    if !(n > k && k >= 2 && (1..k).contains(&m)) {
        return Err(FamilyError::MShiftParams { n, k, m });
    }
    let tuples = increasing_tuples(n, k);
    let labels: Vec<VertexLabel> = tuples.iter().map(|t| VertexLabel::tuple(t)).collect();
    let m = m as usize;
    let mut edges = BTreeSet::new();
    for (i, u) in tuples.iter().enumerate() {
        for (j, v) in tuples.iter().enumerate().skip(i + 1) {
            if shifted_into(u, v, m) || shifted_into(v, u, m) {
                edges.insert((i, j));
            }
        }
    }
    Ok(LabeledGraph::from_parts(labels, edges))
}

// ============================================================================
// de Bruijn graphs
// ============================================================================

/// All length-k words over `{1..=n}`, in lexicographic order.
pub(crate) fn all_words(n: u32, k: u32) -> Vec<Vec<u32>> {
    let k = k as usize;
    let mut out = Vec::new();
    let mut cur = vec![1u32; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                break;
            }
        }
    }
}

fn de_bruijn_on(words: Vec<Vec<u32>>, n: u32) -> LabeledGraph {
    // Words arrive sorted; binary search doubles as the membership test.
    let labels: Vec<VertexLabel> = words.iter().map(|w| VertexLabel::string(w)).collect();
    let mut edges = BTreeSet::new();
    for (i, u) in words.iter().enumerate() {
        let mut v = u[1..].to_vec();
        v.push(0);
        for c in 1..=n {
            *v.last_mut().expect("k >= 2") = c;
            if v == *u {
                continue; // a loop in the unsimplified graph; dropped here
            }
            if let Ok(j) = words.binary_search(&v) {
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    LabeledGraph::from_parts(labels, edges)
}

/// The simplified de Bruijn graph: vertices are all length-k words over
/// `{1..=n}`; two distinct words are adjacent when the last `k - 1`
/// symbols of one equal the first `k - 1` symbols of the other. Loops
/// and parallel adjacencies of the classical multigraph collapse.
pub fn simplified_de_bruijn(n: u32, k: u32) -> Result<LabeledGraph, FamilyError> {
    if n < 2 || k < 2 {
        return Err(FamilyError::DeBruijnParams { n, k });
    }
    match (n as u64).checked_pow(k) {
        Some(count) if count <= 1 << 20 => {}
        _ => return Err(FamilyError::DeBruijnTooLarge { n, k }),
    }
    Ok(de_bruijn_on(all_words(n, k), n))
}

/// The spread variant: the subgraph of the simplified de Bruijn graph
/// induced on words whose symbols are pairwise at distance >= m.
pub fn spread_de_bruijn(n: u32, k: u32, m: u32) -> Result<LabeledGraph, FamilyError> {
    if n < 2 || k < 2 {
        return Err(FamilyError::DeBruijnParams { n, k });
    }
    if m < 1 {
        return Err(FamilyError::SpreadParams { n, k, m });
    }
    match (n as u64).checked_pow(k) {
        Some(count) if count <= 1 << 20 => {}
        _ => return Err(FamilyError::DeBruijnTooLarge { n, k }),
    }
    let words: Vec<Vec<u32>> = all_words(n, k)
        .into_iter()
        .filter(|w| {
            (0..w.len()).all(|i| {
                (i + 1..w.len()).all(|j| w[i].abs_diff(w[j]) >= m)
            })
        })
        .collect();
    Ok(de_bruijn_on(words, n))
}

// ============================================================================
// line graphs
// ============================================================================

/// Canonical integer name per vertex: integer labels keep their value,
/// anything else is numbered `1..=n` in canonical order.
fn integer_names(labels: &[VertexLabel]) -> Vec<u32> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            VertexLabel::Int(v) => *v,
            _ => (i + 1) as u32,
        })
        .collect()
}

/// The line graph: one vertex per edge of `g` (labeled by the endpoint
/// pair), with two such vertices adjacent when the edges share an
/// endpoint.
pub fn line_graph(g: &LabeledGraph) -> LabeledGraph {
    let names = integer_names(g.labels());
    let edge_labels: Vec<VertexLabel> = g
        .edges()
        .iter()
        .map(|&(i, j)| VertexLabel::tuple(&[names[i], names[j]]))
        .collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        incident[i].push(e);
        incident[j].push(e);
    }
    let mut edges: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    for list in &incident {
        for (a, &e1) in list.iter().enumerate() {
            for &e2 in list.iter().skip(a + 1) {
                edges.push((edge_labels[e1].clone(), edge_labels[e2].clone()));
            }
        }
    }
    LabeledGraph::new(edge_labels, &edges).expect("line graph construction is internally consistent")
}

/// The line digraph: one vertex per arc of `d`, with an arc from
/// `(a,b)` to `(b,c)` whenever the first arc's head is the second's
/// tail.
pub fn line_digraph(d: &Digraph) -> Digraph {
    let names = integer_names(d.labels());
    let arc_labels: Vec<VertexLabel> = d
        .arcs()
        .iter()
        .map(|&(t, h)| VertexLabel::tuple(&[names[t], names[h]]))
        .collect();
    let mut out_of: Vec<Vec<usize>> = vec![Vec::new(); d.vertex_count()];
    for (a, &(t, _)) in d.arcs().iter().enumerate() {
        out_of[t].push(a);
    }
    let mut arcs: Vec<(VertexLabel, VertexLabel)> = Vec::new();
    for (a, &(_, h)) in d.arcs().iter().enumerate() {
        for &b in &out_of[h] {
            arcs.push((arc_labels[a].clone(), arc_labels[b].clone()));
        }
    }
    Digraph::new(arc_labels, &arcs).expect("line digraph construction is internally consistent")
}

/// Forgets arc directions; antiparallel arc pairs collapse to one edge.
pub fn underlying_graph(d: &Digraph) -> LabeledGraph {
    let edges = d
        .arcs()
        .iter()
        .map(|&(t, h)| (t.min(h), t.max(h)))
        .collect::<BTreeSet<_>>();
    LabeledGraph::from_parts(d.labels().to_vec(), edges)
}

//! Seeded cross-validation of the decision engine: the pruned search,
//! the unpruned search, and multi-worker runs must all tell the same
//! story, and verdicts must respect known sufficient conditions.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use shiftrep_core::{
    decide_word_representable, orient_m_shift, orientation_from_ordering, shift_graph,
    DecideOptions, LabeledGraph, Verdict, VertexLabel,
};

fn random_graph(rng: &mut ChaCha8Rng, n: u32, edge_prob: f64) -> LabeledGraph {
    let labels: Vec<_> = (1..=n).map(VertexLabel::int).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(edge_prob) {
                edges.push((VertexLabel::int(i), VertexLabel::int(j)));
            }
        }
    }
    LabeledGraph::new(labels, &edges).unwrap()
}

#[test]
fn pruned_and_unpruned_searches_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..150 {
        let n = rng.random_range(4..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let pruned = decide_word_representable(&g, &DecideOptions::default()).unwrap();
        let unpruned = decide_word_representable(
            &g,
            &DecideOptions {
                prune: false,
                ..DecideOptions::default()
            },
        )
        .unwrap();
        assert_eq!(pruned.verdict, unpruned.verdict, "case {case}: {g}");
        if let Some(w) = &pruned.witness {
            assert!(w.is_semi_transitive(), "case {case}: witness must verify");
        }
    }
}

#[test]
fn worker_splits_agree_with_the_sequential_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..60 {
        let n = rng.random_range(5..=7);
        let g = random_graph(&mut rng, n, 0.6);
        let sequential = decide_word_representable(&g, &DecideOptions::default()).unwrap();
        for workers in [2, 4] {
            let parallel = decide_word_representable(
                &g,
                &DecideOptions {
                    workers,
                    ..DecideOptions::default()
                },
            )
            .unwrap();
            assert_eq!(
                sequential.verdict, parallel.verdict,
                "case {case} with {workers} workers: {g}"
            );
        }
    }
}

#[test]
fn three_colorable_graphs_are_always_representable() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for case in 0..80 {
        let n = rng.random_range(5..=8);
        let parts: Vec<u8> = (0..n).map(|_| rng.random_range(0..3)).collect();
        let labels: Vec<_> = (1..=n).map(VertexLabel::int).collect();
        let mut edges = Vec::new();
        for i in 0..n as usize {
            for j in i + 1..n as usize {
                if parts[i] != parts[j] && rng.random_bool(0.6) {
                    edges.push((
                        VertexLabel::int(i as u32 + 1),
                        VertexLabel::int(j as u32 + 1),
                    ));
                }
            }
        }
        let g = LabeledGraph::new(labels, &edges).unwrap();
        assert!(g.chromatic_number().unwrap() <= 3, "case {case} is 3-partite");
        let d = decide_word_representable(&g, &DecideOptions::default()).unwrap();
        assert_eq!(
            d.verdict,
            Verdict::Representable,
            "case {case}: 3-colorable graphs admit semi-transitive orientations: {g}"
        );
    }
}

#[test]
fn shift_graphs_are_decided_by_their_lexicographic_ordering() {
    for n in [4, 5] {
        let g = shift_graph(n, 2).unwrap();
        let d = decide_word_representable(&g, &DecideOptions::default()).unwrap();
        assert_eq!(d.verdict, Verdict::Representable, "shift({n}, 2)");
        assert_eq!(
            d.stats.orderings_examined, 1,
            "the first ordering tried is lexicographic and already works"
        );
        assert_eq!(d.witness.unwrap(), orient_m_shift(n, 2, 1).unwrap());
    }
}

#[test]
fn checker_agreement_on_larger_random_orientations() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for case in 0..200 {
        let n = rng.random_range(6..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let mut order = g.labels().to_vec();
        order.shuffle(&mut rng);
        let o = orientation_from_ordering(&g, &order).unwrap();
        let naive = o.find_shortcut_naive().unwrap();
        let fast = o.find_shortcut_fast().unwrap();
        assert_eq!(
            naive.is_none(),
            fast.is_none(),
            "case {case}: checkers disagree on {g} with order {order:?}"
        );
    }
}

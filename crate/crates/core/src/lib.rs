//! Combinatorics of word-representable graphs: shift graphs and their
//! m-step generalization, simplified de Bruijn graphs, line graphs and
//! line digraphs, semi-transitive orientations with two independent
//! shortcut checkers, an exhaustive word-representability decision
//! procedure, alternation words, and graph6/DOT/JSON codecs.

#![forbid(unsafe_code)]

pub mod codec;
pub mod decide;
pub mod families;
pub mod graph;
pub mod label;
pub mod orient;
pub mod words;

pub use codec::{graph6_decode, graph6_encode, CodecError, GRAPH6_MAX_VERTICES};
pub use decide::{
    decide_word_representable, orientation_from_ordering, DecideError, DecideOptions, Decision,
    SearchStats, Verdict, DEFAULT_DECIDE_VERTEX_LIMIT,
};
pub use families::{
    binomial, complete_graph, line_digraph, line_graph, m_shift_graph, shift_graph,
    simplified_de_bruijn, spread_de_bruijn, transitive_tournament, underlying_graph, FamilyError,
};
pub use graph::{Digraph, GraphError, LabeledGraph};
pub use label::VertexLabel;
pub use orient::{orient_m_shift, OrientError, Orientation, ShortcutWitness};
pub use words::{
    alternates, find_uniform_word, graph_of_word, represents, Word, WordError, WordSearch,
    DEFAULT_WORD_SEARCH_BUDGET,
};

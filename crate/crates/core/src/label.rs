//! Vertex labels shared by every graph family in this crate.
//!
//! All vertices of one graph carry labels of a single kind: plain
//! integers (complete graphs, tournaments, decoded graph6 files),
//! integer tuples (shift graphs, line graphs), or symbol sequences
//! over an integer alphabet (de Bruijn graphs).

use std::cmp::Ordering;
use std::fmt;

/// A vertex name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// A 1-based integer vertex.
    Int(u32),
    /// An integer tuple, e.g. `(1,2,3)`.
    Tuple(Vec<u32>),
    /// A sequence of symbols drawn from `{1..n}`, e.g. the de Bruijn
    /// word `112`.
    Str(Vec<u32>),
}

impl VertexLabel {
    pub fn int(value: u32) -> Self {
        VertexLabel::Int(value)
    }

    pub fn tuple(entries: &[u32]) -> Self {
        VertexLabel::Tuple(entries.to_vec())
    }

    pub fn string(symbols: &[u32]) -> Self {
        VertexLabel::Str(symbols.to_vec())
    }

    /// Discriminant used to keep every graph single-kinded.
    pub(crate) fn kind_rank(&self) -> u8 {
        match self {
            VertexLabel::Int(_) => 0,
            VertexLabel::Tuple(_) => 1,
            VertexLabel::Str(_) => 2,
        }
    }

    pub fn same_kind(&self, other: &Self) -> bool {
        self.kind_rank() == other.kind_rank()
    }
}

/// Canonical vertex order: integers numerically, tuples and symbol
/// sequences lexicographically (entry-wise numeric).
impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        use VertexLabel::*;
        match (self, other) {
            (Int(a), Int(b)) => a.cmp(b),
            (Tuple(a), Tuple(b)) => a.cmp(b),
            (Str(a), Str(b)) => a.cmp(b),
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    /// Integers print bare (`7`), tuples parenthesised (`(1,2,3)`),
    /// symbol sequences as concatenated digits (`112`) unless some
    /// symbol exceeds 9, in which case they are comma-separated
    /// (`1,12,3`) to stay unambiguous.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(v) => write!(f, "{v}"),
            VertexLabel::Tuple(entries) => {
                write!(f, "(")?;
                for (pos, e) in entries.iter().enumerate() {
                    if pos > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            VertexLabel::Str(symbols) => {
                if symbols.iter().all(|&s| s <= 9) {
                    for s in symbols {
                        write!(f, "{s}")?;
                    }
                    Ok(())
                } else {
                    for (pos, s) in symbols.iter().enumerate() {
                        if pos > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{s}")?;
                    }
                    Ok(())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(VertexLabel::int(7).to_string(), "7");
        assert_eq!(VertexLabel::tuple(&[1, 2, 3]).to_string(), "(1,2,3)");
        assert_eq!(VertexLabel::string(&[1, 1, 2]).to_string(), "112");
        assert_eq!(VertexLabel::string(&[1, 12, 3]).to_string(), "1,12,3");
    }

    #[test]
    fn tuple_order_is_lexicographic() {
        let a = VertexLabel::tuple(&[1, 9]);
        let b = VertexLabel::tuple(&[2, 3]);
        assert!(a < b, "tuples must compare entry-wise, not by last entry");
    }

    #[test]
    fn int_order_is_numeric() {
        assert!(VertexLabel::int(2) < VertexLabel::int(10));
    }

    #[test]
    fn string_order_is_lexicographic() {
        assert!(VertexLabel::string(&[1, 2]) < VertexLabel::string(&[2, 1]));
        assert!(VertexLabel::string(&[1, 1]) < VertexLabel::string(&[1, 2]));
    }
}

use std::fmt;

use crate::function::Shape;

/// Sorted (non-increasing) dimensions `p - |E_j|` of the clause subspaces.
///
/// The derived order is the total order on levels: compare at the first
/// differing entry, and otherwise a proper prefix is smaller.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level(Vec<u8>);

impl Level {
    pub fn new(mut dims: Vec<u8>) -> Self {
        dims.sort_unstable_by(|a, b| b.cmp(a));
        Level(dims)
    }

    pub fn of_shape(shape: &Shape) -> Self {
        let p = shape.arity();
        Level::new(
            shape
                .clauses()
                .iter()
                .map(|c| (p - c.len()) as u8)
                .collect(),
        )
    }

    pub fn dims(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn level_leq(a: &Level, b: &Level) -> bool {
    a <= b
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Level{self}")
    }
}

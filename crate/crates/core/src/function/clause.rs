use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::function::MAX_ARITY;

/// A conjunctive clause, stored as the set of regulator indices it mentions.
///
/// Bit `k - 1` of the mask stands for regulator `k`. Indices are 1-based in
/// every public API and in the textual form `{1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Clause(u32);

impl Clause {
    pub fn from_mask(mask: u32) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptyClause);
        }
        let top = 32 - mask.leading_zeros() as usize;
        if top > MAX_ARITY {
            return Err(Error::IndexOutOfRange {
                index: top,
                arity: MAX_ARITY,
            });
        }
        Ok(Clause(mask))
    }

    pub(crate) const fn from_mask_unchecked(mask: u32) -> Self {
        Clause(mask)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut mask = 0u32;
        for k in indices {
            if k == 0 || k > MAX_ARITY {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    arity: MAX_ARITY,
                });
            }
            mask |= 1 << (k - 1);
        }
        Clause::from_mask(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, k: usize) -> bool {
        (1..=32).contains(&k) && self.0 >> (k - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Clause) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Clause) -> bool {
        self != other && self.is_subset(other)
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(k + 1)
        })
    }

    /// Largest index mentioned by the clause.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }
}

/// Canonical clause order: by size, then lexicographically by index list.
impl Ord for Clause {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Clause {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, k) in self.indices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Removes every clause that is a superset of another clause, keeping the
/// minimal elements in canonical order.
pub fn minimize<I: IntoIterator<Item = Clause>>(clauses: I) -> Result<Vec<Clause>> {
    let mut all: Vec<Clause> = clauses.into_iter().collect();
    if all.is_empty() {
        return Err(Error::EmptyClauseSet);
    }
    all.sort();
    all.dedup();
    Ok(minimal_sorted(all))
}

/// `clauses` must be sorted by size; returns the minimal ones.
pub(crate) fn minimal_sorted(clauses: Vec<Clause>) -> Vec<Clause> {
    let mut kept: Vec<Clause> = Vec::with_capacity(clauses.len());
    for c in clauses {
        if !kept.iter().any(|k| k.is_subset(c)) {
            kept.push(c);
        }
    }
    kept
}

//! Consistent regulatory functions and their antichain-cover representation.
//!
//! A consistent function of `p` regulators (monotone, every regulator
//! essential, each regulator acting with a fixed sign) is fully described by
//! the index sets of the clauses of its complete DNF. That sign-free
//! description is a [`Shape`]; pairing it with a [`RegulatorContext`] yields a
//! concrete Boolean function.
//!
//! Internally, evaluation works in *operative* coordinates: a regulator is
//! operative when its literal is satisfied (activator present, inhibitor
//! absent). A local state `s` maps to the operative mask `s ^ negatives`, and
//! a shape is true exactly on the up-set generated by its clauses.

mod clause;
mod consistency;
mod level;
mod shape;
mod signature;

pub use clause::{minimize, Clause};
pub use consistency::{is_consistent, TruthTable};
pub use level::{level_leq, Level};
pub use shape::Shape;
pub use signature::{Signature, Symbol};

pub(crate) use clause::minimal_sorted;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of regulators for a single function.
pub const MAX_ARITY: usize = 16;

const _: () = assert!(MAX_ARITY >= 16 && MAX_ARITY < 32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Signs of the `p` regulators of one component, and where the component
/// itself sits among them when it is auto-regulated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegulatorContext {
    signs: Vec<Sign>,
    self_index: Option<usize>,
}

impl RegulatorContext {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.len() > MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity: signs.len(),
                limit: MAX_ARITY,
            });
        }
        Ok(RegulatorContext {
            signs,
            self_index: None,
        })
    }

    pub fn all_positive(p: usize) -> Result<Self> {
        RegulatorContext::new(vec![Sign::Positive; p])
    }

    /// Marks regulator `k` (1-based) as the regulated component itself.
    pub fn with_self_index(mut self, k: usize) -> Result<Self> {
        if k == 0 || k > self.arity() {
            return Err(Error::IndexOutOfRange {
                index: k,
                arity: self.arity(),
            });
        }
        self.self_index = Some(k - 1);
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Sign of regulator `k` (1-based).
    pub fn sign(&self, k: usize) -> Sign {
        self.signs[k - 1]
    }

    /// 1-based index of the component among its own regulators.
    pub fn self_index(&self) -> Option<usize> {
        self.self_index.map(|i| i + 1)
    }

    pub fn self_sign(&self) -> Option<Sign> {
        self.self_index.map(|i| self.signs[i])
    }

    /// Mask of inhibitors, bit `k - 1` for regulator `k`.
    pub fn negative_mask(&self) -> u32 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Negative)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn positive_mask(&self) -> u32 {
        self.full_mask() & !self.negative_mask()
    }

    pub(crate) fn full_mask(&self) -> u32 {
        (1u32 << self.arity()) - 1
    }

    /// Local state (bit `k - 1` = regulator `k` active) to operative mask.
    pub fn operative(&self, local_state: u32) -> u32 {
        (local_state ^ self.negative_mask()) & self.full_mask()
    }

    /// Inverse of [`RegulatorContext::operative`].
    pub fn local_state(&self, operative: u32) -> u32 {
        (operative ^ self.negative_mask()) & self.full_mask()
    }
}

//! Boolean state vectors and dense state sets.
//!
//! Bit `i` of a [`State`] holds the activity of component `i` (0-based).
//! Textual states print component 1 leftmost, so `"010"` is the state where
//! only the second component is active.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Upper bound on the number of components a [`State`] can hold.
pub const MAX_STATE_LEN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    bits: u64,
    len: u8,
}

impl State {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(
            len <= MAX_STATE_LEN,
            "state length {len} exceeds {MAX_STATE_LEN}"
        );
        let mask = if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
        State {
            bits: bits & mask,
            len: len as u8,
        }
    }

    pub fn zeros(len: usize) -> Self {
        State::new(0, len)
    }

    pub fn from_bools(values: &[bool]) -> Self {
        let bits = values
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &v)| acc | ((v as u64) << i));
        State::new(bits, values.len())
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Activity of component `i` (0-based).
    pub fn get(self, i: usize) -> bool {
        debug_assert!(i < self.len());
        self.bits >> i & 1 == 1
    }

    pub fn with(self, i: usize, value: bool) -> Self {
        debug_assert!(i < self.len());
        let bits = if value {
            self.bits | 1 << i
        } else {
            self.bits & !(1 << i)
        };
        State {
            bits,
            len: self.len,
        }
    }

    /// The state differing from `self` only in component `i`.
    pub fn flip(self, i: usize) -> Self {
        debug_assert!(i < self.len());
        State {
            bits: self.bits ^ 1 << i,
            len: self.len,
        }
    }

    pub fn to_bools(self) -> Vec<bool> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "State({self})")
    }
}

impl serde::Serialize for State {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for State {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_STATE_LEN {
            return Err(Error::InvalidState(format!(
                "{} components is too many",
                s.len()
            )));
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::InvalidState(format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        Ok(State::new(bits, s.len()))
    }
}

/// A dense set of states over `B^dim`, indexed by the state bits.
#[derive(Clone, PartialEq, Eq)]
pub struct StateSet {
    dim: usize,
    bits: FixedBitSet,
}

impl StateSet {
    pub fn empty(dim: usize) -> Self {
        assert!(
            dim < usize::BITS as usize,
            "state space 2^{dim} is not addressable"
        );
        StateSet {
            dim,
            bits: FixedBitSet::with_capacity(1 << dim),
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut set = StateSet::empty(dim);
        set.bits.insert_range(..);
        set
    }

    pub fn from_states(dim: usize, states: impl IntoIterator<Item = State>) -> Self {
        let mut set = StateSet::empty(dim);
        for s in states {
            set.insert(s);
        }
        set
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, s: State) {
        assert_eq!(
            s.len(),
            self.dim,
            "state length does not match set dimension"
        );
        self.bits.insert(s.bits() as usize);
    }

    pub(crate) fn insert_index(&mut self, index: usize) {
        self.bits.insert(index);
    }

    pub fn contains(&self, s: State) -> bool {
        s.len() == self.dim && self.bits.contains(s.bits() as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.dim == other.dim && self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        assert_eq!(self.dim, other.dim);
        self.bits.union_with(&other.bits);
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        assert_eq!(self.dim, other.dim);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        StateSet {
            dim: self.dim,
            bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.bits
            .ones()
            .map(move |i| State::new(i as u64, self.dim))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|s| s.to_string()))
            .finish()
    }
}

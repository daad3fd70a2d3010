use std::fmt;

use crate::function::{Clause, RegulatorContext};
use crate::state::{State, StateSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// The regulator's literal is satisfied: activator present or
    /// inhibitor absent.
    Operative,
    NonOperative,
    /// Either value.
    Free,
}

/// Compact description of a set of local states, one symbol per regulator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Signature { symbols }
    }

    /// Operative on the clause members, free elsewhere.
    pub fn of_clause(clause: Clause, p: usize) -> Self {
        let symbols = (1..=p)
            .map(|k| {
                if clause.contains(k) {
                    Symbol::Operative
                } else {
                    Symbol::Free
                }
            })
            .collect();
        Signature { symbols }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn arity(&self) -> usize {
        self.symbols.len()
    }

    /// Number of local states the signature stands for.
    pub fn state_count(&self) -> u64 {
        let free = self.symbols.iter().filter(|s| **s == Symbol::Free).count();
        1 << free
    }

    /// Local states described by the signature under the given signs.
    pub fn expand(&self, ctx: &RegulatorContext) -> Vec<State> {
        assert_eq!(
            ctx.arity(),
            self.arity(),
            "signature and context arity differ"
        );
        let p = self.arity();
        let mut fixed = 0u32;
        let mut free = 0u32;
        for (k, sym) in self.symbols.iter().enumerate() {
            match sym {
                Symbol::Operative => fixed |= 1 << k,
                Symbol::NonOperative => {}
                Symbol::Free => free |= 1 << k,
            }
        }
        // walk every submask of `free`
        let mut out = Vec::with_capacity(1 << free.count_ones());
        let mut sub = free;
        loop {
            out.push(State::new(ctx.local_state(fixed | sub) as u64, p));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        out.sort();
        out
    }

    pub fn expand_set(&self, ctx: &RegulatorContext) -> StateSet {
        StateSet::from_states(self.arity(), self.expand(ctx))
    }

    /// Renders the signature with `o`, `n` and `*`. When `mark_inhibitors`
    /// is set, an operative inhibitor prints as `ō` instead of `o`.
    pub fn render(&self, ctx: &RegulatorContext, mark_inhibitors: bool) -> String {
        let neg = ctx.negative_mask();
        let mut out = String::from("(");
        for (k, sym) in self.symbols.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(match sym {
                Symbol::Operative if mark_inhibitors && neg >> k & 1 == 1 => "ō",
                Symbol::Operative => "o",
                Symbol::NonOperative => "n",
                Symbol::Free => "*",
            });
        }
        out.push(')');
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, sym) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(match sym {
                Symbol::Operative => "o",
                Symbol::NonOperative => "n",
                Symbol::Free => "*",
            })?;
        }
        f.write_str(")")
    }
}

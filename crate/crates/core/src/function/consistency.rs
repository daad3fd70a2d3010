use fixedbitset::FixedBitSet;

use crate::function::{Clause, RegulatorContext, Shape};

/// Full truth table over `B^p`, indexed by local state mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    arity: usize,
    values: FixedBitSet,
}

impl TruthTable {
    pub fn from_fn(arity: usize, f: impl Fn(u32) -> bool) -> Self {
        assert!(arity < 32, "truth table arity {arity} too large");
        let mut values = FixedBitSet::with_capacity(1 << arity);
        for s in 0..(1u32 << arity) {
            values.set(s as usize, f(s));
        }
        TruthTable { arity, values }
    }

    /// `values[s]` is the output on local state `s`; the length must be a
    /// power of two.
    pub fn from_values(values: &[bool]) -> Option<Self> {
        if !values.len().is_power_of_two() {
            return None;
        }
        let arity = values.len().trailing_zeros() as usize;
        Some(TruthTable::from_fn(arity, |s| values[s as usize]))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, local_state: u32) -> bool {
        self.values.contains(local_state as usize)
    }

    pub fn true_count(&self) -> usize {
        self.values.count_ones(..)
    }
}

/// Whether the table is monotone in the direction prescribed by `ctx` for
/// every regulator, with every regulator essential. On success the unique
/// shape (minimal operative true points) is returned.
pub fn is_consistent(table: &TruthTable, ctx: &RegulatorContext) -> Option<Shape> {
    let p = table.arity();
    if p == 0 || ctx.arity() != p {
        return None;
    }
    let g = |x: u32| table.get(ctx.local_state(x));
    let mut essential = 0u32;
    for x in 0..(1u32 << p) {
        let gx = g(x);
        for k in 0..p {
            let bit = 1 << k;
            if x & bit != 0 {
                continue;
            }
            let gy = g(x | bit);
            if gx && !gy {
                return None;
            }
            if gy && !gx {
                essential |= bit;
            }
        }
    }
    if essential != ctx.full_mask() {
        return None;
    }
    let minimal: Vec<Clause> = (1..(1u32 << p))
        .filter(|&x| g(x) && (0..p).all(|k| x >> k & 1 == 0 || !g(x ^ 1 << k)))
        .map(Clause::from_mask_unchecked)
        .collect();
    Some(Shape::from_antichain(p, minimal))
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::function::{
    minimal_sorted, Clause, Level, RegulatorContext, Signature, TruthTable, MAX_ARITY,
};
use crate::state::{State, StateSet};

/// Antichain cover of `{1..p}`: the sign-free clause structure of a
/// consistent regulatory function.
///
/// Clauses are kept in canonical order, so derived equality, hashing and
/// ordering are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    arity: u8,
    clauses: Vec<Clause>,
}

impl Shape {
    /// Validates `clauses` as an antichain cover of `{1..arity}`.
    ///
    /// Duplicated clauses collapse; a clause absorbing another is rejected
    /// rather than minimized away.
    pub fn new<I: IntoIterator<Item = Clause>>(arity: usize, clauses: I) -> Result<Self> {
        check_arity(arity)?;
        let mut clauses: Vec<Clause> = clauses.into_iter().collect();
        if clauses.is_empty() {
            return Err(Error::EmptyClauseSet);
        }
        clauses.sort();
        clauses.dedup();
        for c in &clauses {
            if c.max_index() > arity {
                return Err(Error::IndexOutOfRange {
                    index: c.max_index(),
                    arity,
                });
            }
        }
        for (i, a) in clauses.iter().enumerate() {
            for b in &clauses[i + 1..] {
                if a.is_subset(*b) {
                    return Err(Error::NotAntichain {
                        absorbed: b.to_string(),
                        by: a.to_string(),
                    });
                }
            }
        }
        let union = clauses.iter().fold(0, |m, c| m | c.mask());
        let full = full_mask(arity);
        if union != full {
            let missing = (full & !union).trailing_zeros() as usize + 1;
            return Err(Error::NotCover { index: missing });
        }
        Ok(Shape {
            arity: arity as u8,
            clauses,
        })
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_index_sets(arity: usize, sets: &[&[usize]]) -> Result<Self> {
        let clauses = sets
            .iter()
            .map(|s| Clause::from_indices(s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Shape::new(arity, clauses)
    }

    /// Builds a shape from clauses already known to be minimal and covering.
    pub(crate) fn from_antichain(arity: usize, mut clauses: Vec<Clause>) -> Self {
        clauses.sort();
        debug_assert!(
            is_antichain_cover(arity, &clauses),
            "not an antichain cover: {clauses:?}"
        );
        Shape {
            arity: arity as u8,
            clauses,
        }
    }

    /// Minimizes `clauses` and returns the shape if the result covers
    /// `{1..arity}`.
    pub(crate) fn minimal_cover(arity: usize, mut clauses: Vec<Clause>) -> Option<Self> {
        clauses.sort();
        clauses.dedup();
        let clauses = minimal_sorted(clauses);
        let union = clauses.iter().fold(0, |m, c| m | c.mask());
        (!clauses.is_empty() && union == full_mask(arity)).then_some(Shape {
            arity: arity as u8,
            clauses,
        })
    }

    /// Presence of at least one activator or absence of at least one
    /// inhibitor: `{{1},...,{p}}`.
    pub fn sup(p: usize) -> Result<Self> {
        check_positive_arity(p)?;
        Ok(Shape::from_antichain(
            p,
            (0..p)
                .map(|k| Clause::from_mask_unchecked(1 << k))
                .collect(),
        ))
    }

    /// Presence of every activator and absence of every inhibitor:
    /// `{{1,...,p}}`.
    pub fn inf(p: usize) -> Result<Self> {
        check_positive_arity(p)?;
        Ok(Shape::from_antichain(
            p,
            vec![Clause::from_mask_unchecked(full_mask(p))],
        ))
    }

    /// Threshold function: at least `r` regulators operative.
    pub fn majority_rule(p: usize, r: usize) -> Result<Self> {
        check_positive_arity(p)?;
        if r == 0 || r > p {
            return Err(Error::ThresholdOutOfRange {
                threshold: r,
                arity: p,
            });
        }
        let clauses = (1..=full_mask(p))
            .filter(|m| m.count_ones() as usize == r)
            .map(Clause::from_mask_unchecked)
            .collect();
        Ok(Shape::from_antichain(p, clauses))
    }

    /// At least one activator present and every inhibitor absent.
    pub fn no_inhibitors(ctx: &RegulatorContext) -> Result<Self> {
        let p = ctx.arity();
        check_positive_arity(p)?;
        let neg = ctx.negative_mask();
        let pos = ctx.positive_mask();
        if pos == 0 {
            return Err(Error::NoActivators);
        }
        let clauses = (0..p)
            .filter(|k| pos >> k & 1 == 1)
            .map(|k| Clause::from_mask_unchecked(neg | 1 << k))
            .collect();
        Ok(Shape::from_antichain(p, clauses))
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_sup(&self) -> bool {
        self.clauses.iter().all(|c| c.len() == 1)
    }

    pub fn is_inf(&self) -> bool {
        self.clauses.len() == 1
    }

    /// Whether the operative mask `x` contains some clause, i.e. lies in
    /// the up-set generated by the shape.
    #[inline]
    pub fn covers_mask(&self, x: u32) -> bool {
        self.clauses.iter().any(|c| c.mask() & !x == 0)
    }

    /// `self ⪯ other`: every clause of `self` contains a clause of `other`.
    pub fn leq(&self, other: &Shape) -> Result<bool> {
        self.same_arity(other)?;
        Ok(self.clauses.iter().all(|c| other.covers_mask(c.mask())))
    }

    pub fn is_below(&self, other: &Shape) -> Result<bool> {
        Ok(self != other && self.leq(other)?)
    }

    /// Number of true states, which does not depend on the signs.
    pub fn true_state_count(&self) -> u64 {
        (0..=full_mask(self.arity()))
            .filter(|&x| self.covers_mask(x))
            .count() as u64
    }

    pub fn evaluate(&self, ctx: &RegulatorContext, s: State) -> Result<bool> {
        self.check_context(ctx)?;
        if s.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: s.len(),
            });
        }
        Ok(self.evaluate_local(ctx, s.bits() as u32))
    }

    /// Evaluation on a local state mask; the context must match the arity.
    #[inline]
    pub fn evaluate_local(&self, ctx: &RegulatorContext, local_state: u32) -> bool {
        self.covers_mask(ctx.operative(local_state))
    }

    pub fn true_states(&self, ctx: &RegulatorContext) -> Result<StateSet> {
        self.check_context(ctx)?;
        let mut set = StateSet::empty(self.arity());
        for s in 0..=full_mask(self.arity()) {
            if self.evaluate_local(ctx, s) {
                set.insert_index(s as usize);
            }
        }
        Ok(set)
    }

    pub fn truth_table(&self, ctx: &RegulatorContext) -> Result<TruthTable> {
        self.check_context(ctx)?;
        Ok(TruthTable::from_fn(self.arity(), |s| {
            self.evaluate_local(ctx, s)
        }))
    }

    /// One signature per clause: operative on the clause, free elsewhere.
    pub fn signatures(&self, ctx: &RegulatorContext) -> Result<Vec<Signature>> {
        self.check_context(ctx)?;
        Ok(self
            .clauses
            .iter()
            .map(|c| Signature::of_clause(*c, self.arity()))
            .collect())
    }

    pub fn level(&self) -> Level {
        Level::of_shape(self)
    }

    fn same_arity(&self, other: &Shape) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        Ok(())
    }

    fn check_context(&self, ctx: &RegulatorContext) -> Result<()> {
        if ctx.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: ctx.arity(),
            });
        }
        Ok(())
    }
}

pub(crate) fn full_mask(p: usize) -> u32 {
    (1u32 << p) - 1
}

pub(crate) fn is_antichain_cover(arity: usize, clauses: &[Clause]) -> bool {
    !clauses.is_empty()
        && clauses.iter().fold(0, |m, c| m | c.mask()) == full_mask(arity)
        && clauses.iter().enumerate().all(|(i, a)| {
            clauses[i + 1..]
                .iter()
                .all(|b| !a.is_subset(*b) && !b.is_subset(*a))
        })
}

fn check_arity(p: usize) -> Result<()> {
    if p > MAX_ARITY {
        return Err(Error::ArityTooLarge {
            arity: p,
            limit: MAX_ARITY,
        });
    }
    Ok(())
}

fn check_positive_arity(p: usize) -> Result<()> {
    check_arity(p)?;
    if p == 0 {
        return Err(Error::EmptyClauseSet);
    }
    Ok(())
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `{{1},{2,3}}`. The arity is the largest index, which the cover
/// condition forces anyway.
impl FromStr for Shape {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let syntax = |column: usize, message: &str| Error::Syntax {
            column,
            message: message.to_string(),
        };
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut pos = 0;
        let col = |pos: usize| chars.get(pos).map_or(text.len() + 1, |(i, _)| i + 1);
        let expect = |pos: &mut usize, want: char| -> Result<()> {
            match chars.get(*pos) {
                Some((_, c)) if *c == want => {
                    *pos += 1;
                    Ok(())
                }
                _ => Err(syntax(col(*pos), &format!("expected '{want}'"))),
            }
        };
        expect(&mut pos, '{')?;
        let mut clauses = Vec::new();
        loop {
            expect(&mut pos, '{')?;
            let mut indices = Vec::new();
            loop {
                let start = pos;
                let mut value: usize = 0;
                while let Some((_, c)) = chars.get(pos).filter(|(_, c)| c.is_ascii_digit()) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(c.to_digit(10).unwrap() as usize))
                        .ok_or_else(|| syntax(col(start), "index too large"))?;
                    pos += 1;
                }
                if pos == start {
                    return Err(syntax(col(pos), "expected an index"));
                }
                indices.push(value);
                match chars.get(pos) {
                    Some((_, ',')) => pos += 1,
                    Some((_, '}')) => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(syntax(col(pos), "expected ',' or '}'")),
                }
            }
            clauses.push(Clause::from_indices(indices)?);
            match chars.get(pos) {
                Some((_, ',')) => pos += 1,
                Some((_, '}')) => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(col(pos), "expected ',' or '}'")),
            }
        }
        if pos != chars.len() {
            return Err(syntax(col(pos), "trailing input"));
        }
        let arity = clauses.iter().map(|c| c.max_index()).max().unwrap_or(0);
        Shape::new(arity, clauses)
    }
}

//! Local navigation of the Hasse diagram of antichain covers.
//!
//! Parents come from three generation rules; children are whatever shapes
//! list the current shape among their parents. The enumeration and the
//! brute-force cover relation in [`hasse`] serve as ground truth.

mod enumerate;
mod hasse;
mod path;

pub use enumerate::{count_consistent, enumerate_all, Enumeration, DEDEKIND, ENUMERATION_LIMIT};
pub use hasse::{build_hasse, HasseGraph, HASSE_LIMIT};
pub use path::random_path;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::function::{minimal_sorted, Clause, Shape};

/// Which parent rule relates a shape to its neighbor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ParentRule {
    /// Add a maximal independent set.
    R1,
    /// Add a proper subset of a clause; the result is already a cover.
    R2,
    /// Add two proper subsets of clauses that only cover together.
    R3,
}

impl ParentRule {
    /// Number of true states gained along the edge.
    pub fn delta(self) -> u32 {
        match self {
            ParentRule::R1 | ParentRule::R2 => 1,
            ParentRule::R3 => 2,
        }
    }
}

impl fmt::Display for ParentRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParentRule::R1 => "R1",
            ParentRule::R2 => "R2",
            ParentRule::R3 => "R3",
        })
    }
}

/// A direct neighbor together with the parent rule that relates the pair.
/// For a child, the rule is the one that generates the current shape from
/// the child.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeighborStep {
    pub target: Shape,
    pub rule: ParentRule,
}

impl NeighborStep {
    pub fn delta_true_states(&self) -> u32 {
        self.rule.delta()
    }
}

/// Parents, children and siblings of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseSlice {
    pub center: Shape,
    pub parents: Vec<NeighborStep>,
    pub children: Vec<NeighborStep>,
    pub siblings: Vec<Shape>,
}

impl HasseSlice {
    pub fn of(center: &Shape) -> Self {
        let parents = parents(center);
        let siblings = siblings_from(center, &parents);
        HasseSlice {
            center: center.clone(),
            children: children(center),
            parents,
            siblings,
        }
    }
}

/// `sigma` is neither a subset nor a superset of any clause.
pub fn independent(sigma: u32, s: &Shape) -> bool {
    independent_of(sigma, s.clauses())
}

fn independent_of(sigma: u32, clauses: &[Clause]) -> bool {
    clauses
        .iter()
        .all(|c| sigma & !c.mask() != 0 && c.mask() & !sigma != 0)
}

fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    // proper non-empty submasks, descending
    let mut sub = mask;
    std::iter::from_fn(move || {
        sub = (sub.wrapping_sub(1)) & mask;
        (sub != 0).then_some(sub)
    })
}

fn with_added(s: &Shape, extra: &[u32]) -> Option<Shape> {
    let mut clauses = s.clauses().to_vec();
    clauses.extend(extra.iter().map(|&m| Clause::from_mask_unchecked(m)));
    Shape::minimal_cover(s.arity(), clauses)
}

/// Maximal sets independent of `s`: the sets admitted by rule 1.
pub(crate) fn rule_one_sets(s: &Shape) -> Vec<u32> {
    let p = s.arity();
    let full = (1u32 << p) - 1;
    let clauses = s.clauses();
    (1..=full)
        .filter(|&x| independent_of(x, clauses))
        .filter(|&x| {
            (0..p)
                .filter(|k| x >> k & 1 == 0)
                .all(|k| !independent_of(x | 1 << k, clauses))
        })
        .collect()
}

/// Proper subsets of clauses satisfying conditions (a) to (c) of rule 2.
fn rule_two_sets(s: &Shape, rule_one: &[u32]) -> Vec<u32> {
    let clauses = s.clauses();
    let mut sigmas: Vec<u32> = clauses.iter().flat_map(|c| submasks(c.mask())).collect();
    sigmas.sort_unstable();
    sigmas.dedup();
    sigmas.retain(|&sigma| {
        let size = sigma.count_ones();
        // (b): no set strictly between sigma and a clause above it
        let tight = clauses
            .iter()
            .filter(|c| sigma & !c.mask() == 0 && sigma != c.mask())
            .all(|c| c.mask().count_ones() == size + 1);
        // (c): not inside a rule-1 set
        tight && rule_one.iter().all(|&c| sigma & !c != 0)
    });
    sigmas
}

/// Hasse parents of `s`, tagged by generating rule, in canonical order.
pub fn parents(s: &Shape) -> Vec<NeighborStep> {
    let rule_one = rule_one_sets(s);
    let mut out: Vec<NeighborStep> = rule_one
        .iter()
        .map(|&c| NeighborStep {
            target: with_added(s, &[c]).expect("adding an independent set keeps a cover"),
            rule: ParentRule::R1,
        })
        .collect();
    let mut uncovered = Vec::new();
    for sigma in rule_two_sets(s, &rule_one) {
        match with_added(s, &[sigma]) {
            Some(target) => out.push(NeighborStep {
                target,
                rule: ParentRule::R2,
            }),
            None => uncovered.push(sigma),
        }
    }
    for (i, &a) in uncovered.iter().enumerate() {
        for &b in &uncovered[i + 1..] {
            if let Some(target) = with_added(s, &[a, b]) {
                out.push(NeighborStep {
                    target,
                    rule: ParentRule::R3,
                });
            }
        }
    }
    out.sort();
    out.dedup_by(|a, b| a.target == b.target);
    out
}

fn removing(clauses: &[Clause], full: u32, drop: usize) -> Vec<Clause> {
    let c = clauses[drop].mask();
    let mut next: Vec<Clause> = clauses
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, c)| *c)
        .collect();
    next.extend(
        (0..32)
            .map(|k| 1u32 << k)
            .filter(|b| full & b != 0 && c & b == 0)
            .map(|b| Clause::from_mask_unchecked(c | b)),
    );
    next.sort();
    next.dedup();
    minimal_sorted(next)
}

fn child_candidates(s: &Shape) -> Vec<Shape> {
    let p = s.arity();
    let full = (1u32 << p) - 1;
    let clauses = s.clauses();
    let mut out = Vec::new();
    let mut push = |cs: Vec<Clause>| {
        if let Some(shape) = Shape::minimal_cover(p, cs) {
            out.push(shape);
        }
    };
    // Inverses of the parent rules: drop one or two minimal true points.
    for i in 0..clauses.len() {
        if clauses[i].mask() == full {
            continue;
        }
        let once = removing(clauses, full, i);
        push(once.clone());
        for j in 0..once.len() {
            if once[j].mask() != full {
                push(removing(&once, full, j));
            }
        }
    }
    // Child rules as printed.
    for i in 0..clauses.len() {
        let rest: Vec<Clause> = clauses
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, c)| *c)
            .collect();
        push(rest.clone());
        let c = clauses[i].mask();
        let mut above: Vec<Clause> = (1..=full)
            .filter(|&x| x & c == c && x != c && independent_of(x, &rest))
            .map(Clause::from_mask_unchecked)
            .collect();
        above.sort();
        let mut extended = rest;
        extended.extend(minimal_sorted(above));
        push(extended);
        for j in i + 1..clauses.len() {
            let mut merged: Vec<Clause> = clauses
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, c)| *c)
                .collect();
            merged.push(Clause::from_mask_unchecked(c | clauses[j].mask()));
            push(merged);
        }
    }
    out.sort();
    out.dedup();
    out.retain(|t| t != s);
    out
}

/// Hasse children of `s`: exactly the shapes having `s` among their parents.
pub fn children(s: &Shape) -> Vec<NeighborStep> {
    child_candidates(s)
        .into_iter()
        .filter_map(|candidate| {
            let rule = parents(&candidate)
                .into_iter()
                .find(|step| step.target == *s)?
                .rule;
            Some(NeighborStep {
                target: candidate,
                rule,
            })
        })
        .collect()
}

/// Shapes sharing at least one parent with `s`.
pub fn siblings(s: &Shape) -> Vec<Shape> {
    siblings_from(s, &parents(s))
}

fn siblings_from(s: &Shape, parents: &[NeighborStep]) -> Vec<Shape> {
    let mut out: Vec<Shape> = parents
        .iter()
        .flat_map(|p| children(&p.target))
        .map(|step| step.target)
        .filter(|t| t != s)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Shapes sharing at least one parent or at least one child with `s`.
pub fn extended_siblings(s: &Shape) -> Vec<Shape> {
    let mut out = siblings(s);
    out.extend(
        children(s)
            .iter()
            .flat_map(|c| parents(&c.target))
            .map(|step| step.target)
            .filter(|t| t != s),
    );
    out.sort();
    out.dedup();
    out
}

/// True states gained from `child` to `parent`.
pub fn true_state_delta(child: &Shape, parent: &Shape) -> Result<u32> {
    parents(child)
        .into_iter()
        .find(|step| step.target == *parent)
        .map(|step| step.delta_true_states())
        .ok_or_else(|| Error::NotAParent {
            child: child.to_string(),
            parent: parent.to_string(),
        })
}

use serde::Serialize;

use crate::dynamics::graph::{check_limit, DEFAULT_STATE_LIMIT};
use crate::dynamics::BooleanNetwork;
use crate::error::{Error, Result};
use crate::function::{Clause, RegulatorContext, Shape, Sign};
use crate::neighborhood::parents;
use crate::state::State;

/// Asynchronous transitions of one component, split by direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSet {
    pub component: usize,
    pub increasing: Vec<(State, State)>,
    pub decreasing: Vec<(State, State)>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TransitionCounts {
    pub increasing: u64,
    pub decreasing: u64,
}

impl TransitionCounts {
    pub fn total(&self) -> u64 {
        self.increasing + self.decreasing
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Autoregulation {
    NotAutoregulated,
    PositiveAutoreg,
    NegativeAutoreg,
}

impl Autoregulation {
    pub fn of(ctx: &RegulatorContext) -> Self {
        match ctx.self_sign() {
            None => Autoregulation::NotAutoregulated,
            Some(Sign::Positive) => Autoregulation::PositiveAutoreg,
            Some(Sign::Negative) => Autoregulation::NegativeAutoreg,
        }
    }
}

/// Bounds on the transitions of one component in `B^n`. `incr_upper` and
/// `incr_lower` bound both the increasing and the decreasing counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub case: Autoregulation,
    pub n: usize,
    pub total_lower: u64,
    pub total_upper: u64,
    pub incr_upper: u64,
    pub incr_lower: u64,
    pub observed: Option<TransitionCounts>,
}

impl BoundsReport {
    pub fn admits(&self, counts: &TransitionCounts) -> bool {
        let within = |x: u64| self.incr_lower <= x && x <= self.incr_upper;
        (self.total_lower..=self.total_upper).contains(&counts.total())
            && within(counts.increasing)
            && within(counts.decreasing)
    }

    pub fn with_observed(mut self, counts: TransitionCounts) -> Self {
        self.observed = Some(counts);
        self
    }

    pub fn holds(&self) -> bool {
        self.observed.as_ref().is_none_or(|c| self.admits(c))
    }
}

pub fn transition_bounds(ctx: &RegulatorContext, n: usize) -> BoundsReport {
    let half = 1u64 << n.saturating_sub(1);
    let case = Autoregulation::of(ctx);
    let (total_lower, total_upper, incr_upper, incr_lower) = match case {
        Autoregulation::NotAutoregulated => (half, half, half - 1, 1),
        Autoregulation::PositiveAutoreg => (0, half - 1, half - 1, 0),
        Autoregulation::NegativeAutoreg => (half + 1, 2 * half, half, 1),
    };
    BoundsReport {
        case,
        n,
        total_lower,
        total_upper,
        incr_upper,
        incr_lower,
        observed: None,
    }
}

/// Counts over the reduced space: `B^p` when the component regulates
/// itself, otherwise `B^(p+1)` with the target as extra coordinate.
pub fn local_transition_counts(shape: &Shape, ctx: &RegulatorContext) -> Result<TransitionCounts> {
    if shape.arity() != ctx.arity() {
        return Err(Error::ArityMismatch {
            expected: ctx.arity(),
            found: shape.arity(),
        });
    }
    let mut counts = TransitionCounts::default();
    for x in 0..(1u32 << shape.arity()) {
        let f = shape.evaluate_local(ctx, x);
        match ctx.self_index() {
            Some(k) => {
                let current = x >> (k - 1) & 1 == 1;
                if f && !current {
                    counts.increasing += 1;
                } else if !f && current {
                    counts.decreasing += 1;
                }
            }
            // target 0 rises where f holds, target 1 falls elsewhere
            None if f => counts.increasing += 1,
            None => counts.decreasing += 1,
        }
    }
    Ok(counts)
}

/// Reduced-space counts lifted to a network of `n` components.
pub fn transition_counts(
    shape: &Shape,
    ctx: &RegulatorContext,
    n: usize,
) -> Result<TransitionCounts> {
    let dim = reduced_dim(ctx);
    if n < dim || n - dim >= 64 {
        return Err(Error::ArityMismatch {
            expected: dim,
            found: n,
        });
    }
    let local = local_transition_counts(shape, ctx)?;
    let lift = 1u64 << (n - dim);
    Ok(TransitionCounts {
        increasing: local.increasing * lift,
        decreasing: local.decreasing * lift,
    })
}

fn reduced_dim(ctx: &RegulatorContext) -> usize {
    ctx.arity() + usize::from(ctx.self_index().is_none())
}

/// Transitions of component `i` in the asynchronous graph, by direct
/// enumeration of `B^n`.
pub fn component_transitions(bn: &BooleanNetwork, i: usize) -> Result<TransitionSet> {
    check_limit(bn.len(), DEFAULT_STATE_LIMIT)?;
    let n = bn.len();
    let c = bn.component(i);
    let mut out = TransitionSet {
        component: i,
        increasing: Vec::new(),
        decreasing: Vec::new(),
    };
    for s in 0..1u64 << n {
        let current = s >> i & 1 == 1;
        if c.evaluate(s) != current {
            let pair = (State::new(s, n), State::new(s ^ 1 << i, n));
            if current {
                out.decreasing.push(pair);
            } else {
                out.increasing.push(pair);
            }
        }
    }
    Ok(out)
}

/// Counts for component `i` via the reduced space, lifted to the network.
pub fn component_transition_counts(bn: &BooleanNetwork, i: usize) -> Result<TransitionCounts> {
    let c = bn.component(i);
    match (c.shape(), c.context()) {
        (Some(shape), Some(ctx)) => transition_counts(shape, ctx, bn.len()),
        _ => {
            let set = component_transitions(bn, i)?;
            Ok(TransitionCounts {
                increasing: set.increasing.len() as u64,
                decreasing: set.decreasing.len() as u64,
            })
        }
    }
}

/// Maximally functional auto-regulation: every clause pairs the self
/// literal with one other regulator.
pub fn f_star(ctx: &RegulatorContext) -> Result<Shape> {
    let k = ctx.self_index().ok_or(Error::NotAutoregulated)?;
    if ctx.arity() < 2 {
        return Err(Error::SingleRegulator);
    }
    let own = 1u32 << (k - 1);
    let clauses = (0..ctx.arity())
        .filter(|&j| j != k - 1)
        .map(|j| Clause::from_mask_unchecked(own | 1 << j))
        .collect::<Vec<_>>();
    Shape::new(ctx.arity(), clauses)
}

/// Per-shape counts along an ascending Hasse chain.
pub fn path_trace(
    ctx: &RegulatorContext,
    n: usize,
    path: &[Shape],
) -> Result<Vec<TransitionCounts>> {
    for (i, pair) in path.windows(2).enumerate() {
        if !parents(&pair[0]).iter().any(|step| step.target == pair[1]) {
            return Err(Error::NotAChain { position: i + 1 });
        }
    }
    path.iter().map(|s| transition_counts(s, ctx, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::fixtures::toy;
    use crate::function::Sign::{Negative as N, Positive as P};
    use crate::neighborhood::random_path;

    fn sh(t: &str) -> Shape {
        t.parse().unwrap()
    }

    #[test]
    fn toy_component_one() {
        let bn = toy();
        let t = component_transitions(&bn, 0).unwrap();
        let inc: Vec<String> = t
            .increasing
            .iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        assert_eq!(inc, ["010->110"]);
        assert!(t.decreasing.is_empty());
        assert_eq!(
            component_transition_counts(&bn, 0).unwrap(),
            TransitionCounts {
                increasing: 1,
                decreasing: 0
            }
        );
        let sup = bn.with_shape(0, Shape::sup(3).unwrap()).unwrap();
        let t = component_transitions(&sup, 0).unwrap();
        assert_eq!((t.increasing.len(), t.decreasing.len()), (3, 0));
        let inf = bn.with_shape(0, Shape::inf(3).unwrap()).unwrap();
        let t = component_transitions(&inf, 0).unwrap();
        assert_eq!((t.increasing.len(), t.decreasing.len()), (0, 3));
    }

    #[test]
    fn reduced_counts_match_enumeration() {
        let bn = toy();
        for i in 0..3 {
            let set = component_transitions(&bn, i).unwrap();
            let counts = component_transition_counts(&bn, i).unwrap();
            assert_eq!(counts.increasing, set.increasing.len() as u64);
            assert_eq!(counts.decreasing, set.decreasing.len() as u64);
        }
    }

    #[test]
    fn bounds_table() {
        let plain = RegulatorContext::new(vec![P, P]).unwrap();
        let b = transition_bounds(&plain, 3);
        assert_eq!(
            (b.total_lower, b.total_upper, b.incr_upper, b.incr_lower),
            (4, 4, 3, 1)
        );
        let pos = RegulatorContext::new(vec![P, P, N])
            .unwrap()
            .with_self_index(3)
            .unwrap();
        let pos = RegulatorContext::new(pos.signs().iter().map(|_| P).collect())
            .unwrap()
            .with_self_index(3)
            .unwrap();
        let b = transition_bounds(&pos, 3);
        assert_eq!(
            (b.total_lower, b.total_upper, b.incr_upper, b.incr_lower),
            (0, 3, 3, 0)
        );
        let neg = RegulatorContext::new(vec![P, P, N])
            .unwrap()
            .with_self_index(3)
            .unwrap();
        let b = transition_bounds(&neg, 3);
        assert_eq!(
            (b.total_lower, b.total_upper, b.incr_upper, b.incr_lower),
            (5, 8, 4, 1)
        );
    }

    #[test]
    fn f_star_examples() {
        let ctx = RegulatorContext::new(vec![P, P, N])
            .unwrap()
            .with_self_index(1)
            .unwrap();
        assert_eq!(f_star(&ctx).unwrap(), sh("{{1,2},{1,3}}"));
        assert_eq!(
            f_star(&RegulatorContext::new(vec![P, N]).unwrap()),
            Err(Error::NotAutoregulated)
        );
        let single = RegulatorContext::new(vec![N])
            .unwrap()
            .with_self_index(1)
            .unwrap();
        assert_eq!(f_star(&single), Err(Error::SingleRegulator));
        let pos = f_star(&ctx).unwrap();
        let c = transition_counts(&pos, &ctx, 3).unwrap();
        assert_eq!((c.total(), c.decreasing), (1, 1));
    }

    #[test]
    fn trace_along_random_path() {
        let ctx = RegulatorContext::all_positive(4).unwrap();
        let path = random_path(4, 3).unwrap();
        let rows = path_trace(&ctx, 5, &path).unwrap();
        assert!(rows.iter().all(|r| r.total() == 16));
        assert_eq!(rows[0].increasing, 1);
        assert_eq!(rows.last().unwrap().increasing, 15);
        for w in rows.windows(2) {
            assert!(w[0].increasing <= w[1].increasing);
        }
        let mut broken = path.clone();
        broken.swap(1, 2);
        assert!(matches!(
            path_trace(&ctx, 5, &broken),
            Err(Error::NotAChain { .. })
        ));
    }
}

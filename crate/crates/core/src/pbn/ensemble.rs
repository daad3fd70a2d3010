use crate::dynamics::{BooleanNetwork, UpdateFunction};
use crate::error::{Error, Result};
use crate::function::{is_consistent, RegulatorContext, Shape};
use crate::neighborhood::{children, extended_siblings, parents};

/// Tolerance on the total probability mass of an ensemble.
pub const PROBABILITY_TOLERANCE: f64 = 1e-9;

/// Probability-weighted alternative functions for one component.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionEnsemble {
    component: usize,
    entries: Vec<(Shape, f64)>,
}

impl FunctionEnsemble {
    /// Every shape must be consistent with `ctx`, appear once, and carry a
    /// positive probability; the probabilities must sum to one.
    pub fn new(
        component: usize,
        entries: Vec<(Shape, f64)>,
        ctx: &RegulatorContext,
    ) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidNetwork(format!(
                "empty ensemble for component {component}"
            )));
        }
        for (i, (shape, prob)) in entries.iter().enumerate() {
            if !prob.is_finite() || *prob <= 0.0 || *prob > 1.0 + PROBABILITY_TOLERANCE {
                return Err(Error::InvalidProbability(*prob));
            }
            if shape.arity() != ctx.arity() {
                return Err(Error::ArityMismatch {
                    expected: ctx.arity(),
                    found: shape.arity(),
                });
            }
            if is_consistent(&shape.truth_table(ctx)?, ctx).as_ref() != Some(shape) {
                return Err(Error::InvalidNetwork(format!("{shape} is not consistent")));
            }
            if entries[..i].iter().any(|(s, _)| s == shape) {
                return Err(Error::InvalidNetwork(format!("{shape} listed twice")));
            }
        }
        let total: f64 = entries.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > PROBABILITY_TOLERANCE {
            return Err(Error::InvalidProbability(total));
        }
        Ok(FunctionEnsemble { component, entries })
    }

    pub fn singleton(component: usize, shape: Shape) -> Self {
        FunctionEnsemble {
            component,
            entries: vec![(shape, 1.0)],
        }
    }

    pub fn component(&self) -> usize {
        self.component
    }

    pub fn entries(&self) -> &[(Shape, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.entries.len() == 1
    }

    /// Entry with the largest probability, the first one on ties.
    pub fn most_probable(&self) -> &Shape {
        let mut best = &self.entries[0];
        for e in &self.entries[1..] {
            if e.1 > best.1 {
                best = e;
            }
        }
        &best.0
    }

    /// Picks an entry given a uniform draw in `[0, 1)`.
    pub fn pick(&self, u: f64) -> &Shape {
        let mut acc = 0.0;
        for (shape, p) in &self.entries {
            acc += p;
            if u < acc {
                return shape;
            }
        }
        &self.entries[self.entries.len() - 1].0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NeighborMode {
    /// Direct parents and children.
    ParentsChildren,
    /// Parents, children and every shape sharing a parent or a child.
    WithSiblings,
}

/// The component's reference function with probability `ref_prob`, the
/// rest split evenly over the selected neighbors.
pub fn neighbor_ensemble(
    bn: &BooleanNetwork,
    i: usize,
    mode: NeighborMode,
    ref_prob: f64,
) -> Result<FunctionEnsemble> {
    if !(ref_prob > 0.0 && ref_prob < 1.0) {
        return Err(Error::InvalidProbability(ref_prob));
    }
    let (shape, ctx) = match bn.component(i).function() {
        UpdateFunction::Regulated { shape, ctx } => (shape, ctx),
        UpdateFunction::Constant(_) => {
            return Err(Error::InvalidNetwork(format!(
                "{} is an input",
                bn.component(i).name()
            )))
        }
    };
    let mut neighbors: Vec<Shape> = parents(shape)
        .into_iter()
        .chain(children(shape))
        .map(|step| step.target)
        .collect();
    if mode == NeighborMode::WithSiblings {
        neighbors.extend(extended_siblings(shape));
    }
    if neighbors.is_empty() {
        return Ok(FunctionEnsemble::singleton(i, shape.clone()));
    }
    let share = (1.0 - ref_prob) / neighbors.len() as f64;
    let mut entries = vec![(shape.clone(), ref_prob)];
    entries.extend(neighbors.into_iter().map(|s| (s, share)));
    FunctionEnsemble::new(i, entries, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let ctx = RegulatorContext::all_positive(2).unwrap();
        let sup = Shape::sup(2).unwrap();
        let inf = Shape::inf(2).unwrap();
        assert!(
            FunctionEnsemble::new(0, vec![(sup.clone(), 0.5), (inf.clone(), 0.5)], &ctx).is_ok()
        );
        assert_eq!(
            FunctionEnsemble::new(0, vec![(sup.clone(), 0.5), (inf.clone(), 0.4)], &ctx),
            Err(Error::InvalidProbability(0.9))
        );
        assert!(matches!(
            FunctionEnsemble::new(0, vec![(sup.clone(), 1.0), (inf.clone(), 0.0)], &ctx),
            Err(Error::InvalidProbability(_))
        ));
        assert!(
            FunctionEnsemble::new(0, vec![(sup.clone(), 0.5), (sup.clone(), 0.5)], &ctx).is_err()
        );
        assert!(FunctionEnsemble::new(0, vec![(Shape::sup(3).unwrap(), 1.0)], &ctx).is_err());
    }

    #[test]
    fn pick_follows_cumulative_mass() {
        let ctx = RegulatorContext::all_positive(2).unwrap();
        let sup = Shape::sup(2).unwrap();
        let inf = Shape::inf(2).unwrap();
        let e =
            FunctionEnsemble::new(0, vec![(inf.clone(), 0.25), (sup.clone(), 0.75)], &ctx).unwrap();
        assert_eq!(e.pick(0.0), &inf);
        assert_eq!(e.pick(0.2499), &inf);
        assert_eq!(e.pick(0.25), &sup);
        assert_eq!(e.pick(0.999_999), &sup);
        assert_eq!(e.most_probable(), &sup);
    }
}

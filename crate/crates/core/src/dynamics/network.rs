use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::function::{RegulatorContext, Shape, Sign};
use crate::state::State;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpdateFunction {
    /// Input component held at a fixed value.
    Constant(bool),
    Regulated {
        shape: Shape,
        ctx: RegulatorContext,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    name: String,
    regulators: Vec<usize>,
    function: UpdateFunction,
}

impl Component {
    /// `regulators` are 0-based component indices with their signs, in the
    /// order matching the shape's indices `1..=p`.
    pub fn regulated(
        name: impl Into<String>,
        regulators: Vec<(usize, Sign)>,
        shape: Shape,
    ) -> Result<Self> {
        if shape.arity() != regulators.len() {
            return Err(Error::ArityMismatch {
                expected: regulators.len(),
                found: shape.arity(),
            });
        }
        let (indices, signs): (Vec<usize>, Vec<Sign>) = regulators.into_iter().unzip();
        Ok(Component {
            name: name.into(),
            regulators: indices,
            function: UpdateFunction::Regulated {
                shape,
                ctx: RegulatorContext::new(signs)?,
            },
        })
    }

    pub fn constant(name: impl Into<String>, value: bool) -> Self {
        Component {
            name: name.into(),
            regulators: Vec::new(),
            function: UpdateFunction::Constant(value),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn regulators(&self) -> &[usize] {
        &self.regulators
    }

    pub fn function(&self) -> &UpdateFunction {
        &self.function
    }

    pub fn is_input(&self) -> bool {
        matches!(self.function, UpdateFunction::Constant(_))
    }

    pub fn shape(&self) -> Option<&Shape> {
        match &self.function {
            UpdateFunction::Regulated { shape, .. } => Some(shape),
            UpdateFunction::Constant(_) => None,
        }
    }

    pub fn context(&self) -> Option<&RegulatorContext> {
        match &self.function {
            UpdateFunction::Regulated { ctx, .. } => Some(ctx),
            UpdateFunction::Constant(_) => None,
        }
    }

    /// Regulator values gathered from a global state, bit `k` = regulator
    /// `k + 1`.
    #[inline]
    pub fn local_state(&self, state: u64) -> u32 {
        self.regulators
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &r)| acc | (((state >> r) & 1) as u32) << k)
    }

    #[inline]
    pub fn evaluate(&self, state: u64) -> bool {
        match &self.function {
            UpdateFunction::Constant(v) => *v,
            UpdateFunction::Regulated { shape, ctx } => {
                shape.evaluate_local(ctx, self.local_state(state))
            }
        }
    }

    /// Evaluates an alternative shape over this component's regulators.
    #[inline]
    pub fn evaluate_shape(&self, shape: &Shape, state: u64) -> bool {
        match &self.function {
            UpdateFunction::Constant(v) => *v,
            UpdateFunction::Regulated { ctx, .. } => {
                shape.evaluate_local(ctx, self.local_state(state))
            }
        }
    }

    pub(crate) fn with_shape(&self, shape: Shape) -> Result<Self> {
        match &self.function {
            UpdateFunction::Regulated { ctx, .. } if ctx.arity() == shape.arity() => {
                Ok(Component {
                    name: self.name.clone(),
                    regulators: self.regulators.clone(),
                    function: UpdateFunction::Regulated {
                        shape,
                        ctx: ctx.clone(),
                    },
                })
            }
            _ => Err(Error::ArityMismatch {
                expected: self.regulators.len(),
                found: shape.arity(),
            }),
        }
    }
}

/// Components in declaration order; bit `i` of a state is component `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanNetwork {
    components: Vec<Component>,
}

impl BooleanNetwork {
    pub fn new(mut components: Vec<Component>) -> Result<Self> {
        if components.len() > crate::state::MAX_STATE_LEN {
            return Err(Error::StateSpaceTooLarge {
                components: components.len(),
                limit: crate::state::MAX_STATE_LEN,
            });
        }
        let mut names = HashMap::new();
        for (i, c) in components.iter().enumerate() {
            if names.insert(c.name.clone(), i).is_some() {
                return Err(Error::DuplicateComponent(c.name.clone()));
            }
        }
        let n = components.len();
        for (i, c) in components.iter_mut().enumerate() {
            let mut seen = c.regulators.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != c.regulators.len() {
                return Err(Error::InvalidNetwork(format!(
                    "{} lists a regulator twice",
                    c.name
                )));
            }
            if let Some(&bad) = c.regulators.iter().find(|&&r| r >= n) {
                return Err(Error::InvalidNetwork(format!(
                    "{} is regulated by unknown component #{bad}",
                    c.name
                )));
            }
            if let UpdateFunction::Regulated { ctx, .. } = &mut c.function {
                let mut fresh = RegulatorContext::new(ctx.signs().to_vec())?;
                if let Some(k) = c.regulators.iter().position(|&r| r == i) {
                    fresh = fresh.with_self_index(k + 1)?;
                }
                *ctx = fresh;
            }
        }
        Ok(BooleanNetwork { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.components.iter().map(|c| c.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.components.iter().position(|c| c.name == name)
    }

    /// Copy of the network with component `i` using another shape.
    pub fn with_shape(&self, i: usize, shape: Shape) -> Result<Self> {
        let mut components = self.components.clone();
        components[i] = components[i].with_shape(shape)?;
        Ok(BooleanNetwork { components })
    }

    /// Bits `i` with `f_i(s) != s_i`.
    #[inline]
    pub fn update_mask(&self, state: u64) -> u64 {
        self.components.iter().enumerate().fold(0, |m, (i, c)| {
            m | ((((state >> i) & 1 == 1) != c.evaluate(state)) as u64) << i
        })
    }

    pub fn sync_successor(&self, state: State) -> State {
        State::new(state.bits() ^ self.update_mask(state.bits()), self.len())
    }

    pub fn is_stable(&self, state: State) -> bool {
        self.update_mask(state.bits()) == 0
    }
}

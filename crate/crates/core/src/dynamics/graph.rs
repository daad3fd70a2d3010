use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::dynamics::BooleanNetwork;
use crate::error::{Error, Result};
use crate::state::{State, StateSet};

/// Default cap on the number of components for explicit state spaces.
pub const DEFAULT_STATE_LIMIT: usize = 25;
/// Hard cap: update masks are stored as `u32`.
pub const MAX_STATE_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpdateMode {
    Async,
    Sync,
}

/// Explicit state transition graph over `B^n`.
///
/// Each state stores the set of components whose function disagrees with
/// their current value; edges are derived from it on demand.
#[derive(Clone, Debug)]
pub struct StateGraph {
    n: usize,
    mode: UpdateMode,
    masks: Vec<u32>,
}

pub(crate) fn check_limit(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_STATE_LIMIT);
    if n > limit {
        return Err(Error::StateSpaceTooLarge {
            components: n,
            limit,
        });
    }
    Ok(())
}

pub fn stg_async(bn: &BooleanNetwork) -> Result<StateGraph> {
    StateGraph::build(bn, UpdateMode::Async, DEFAULT_STATE_LIMIT)
}

pub fn stg_sync(bn: &BooleanNetwork) -> Result<StateGraph> {
    StateGraph::build(bn, UpdateMode::Sync, DEFAULT_STATE_LIMIT)
}

/// Fixed points of the network, found without building a graph.
pub fn stable_states(bn: &BooleanNetwork) -> Result<StateSet> {
    stable_states_with_limit(bn, DEFAULT_STATE_LIMIT)
}

pub fn stable_states_with_limit(bn: &BooleanNetwork, limit: usize) -> Result<StateSet> {
    check_limit(bn.len(), limit)?;
    let n = bn.len();
    let stable: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .filter(|&s| bn.update_mask(s) == 0)
        .collect();
    Ok(StateSet::from_states(
        n,
        stable.into_iter().map(|s| State::new(s, n)),
    ))
}

impl StateGraph {
    pub fn build(bn: &BooleanNetwork, mode: UpdateMode, limit: usize) -> Result<Self> {
        check_limit(bn.len(), limit)?;
        let n = bn.len();
        let masks = (0..1u64 << n)
            .into_par_iter()
            .map(|s| bn.update_mask(s) as u32)
            .collect();
        Ok(StateGraph { n, mode, masks })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> UpdateMode {
        self.mode
    }

    pub fn state_count(&self) -> usize {
        self.masks.len()
    }

    pub fn is_stable(&self, s: State) -> bool {
        self.masks[s.bits() as usize] == 0
    }

    pub fn successors(&self, s: State) -> Vec<State> {
        self.successor_indices(s.bits() as u32)
            .map(|t| State::new(t as u64, self.n))
            .collect()
    }

    pub(crate) fn successor_indices(&self, s: u32) -> impl Iterator<Item = u32> + '_ {
        let mask = self.masks[s as usize];
        let (mut rest, single) = match self.mode {
            UpdateMode::Async => (mask, None),
            UpdateMode::Sync => (0, (mask != 0).then_some(s ^ mask)),
        };
        single.into_iter().chain(std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            Some(s ^ bit)
        }))
    }

    pub fn edge_count(&self) -> usize {
        match self.mode {
            UpdateMode::Async => self.masks.iter().map(|m| m.count_ones() as usize).sum(),
            UpdateMode::Sync => self.masks.iter().filter(|&&m| m != 0).count(),
        }
    }

    /// All edges in increasing order of source, then target.
    pub fn edges(&self) -> impl Iterator<Item = (State, State)> + '_ {
        (0..self.masks.len() as u32).flat_map(move |s| {
            let mut ts: Vec<u32> = self.successor_indices(s).collect();
            ts.sort_unstable();
            ts.into_iter()
                .map(move |t| (State::new(s as u64, self.n), State::new(t as u64, self.n)))
        })
    }

    pub fn stable_states(&self) -> Vec<State> {
        self.masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m == 0)
            .map(|(s, _)| State::new(s as u64, self.n))
            .collect()
    }
}

/// Terminal strongly connected components, each sorted, ordered by their
/// smallest state.
pub fn attractors(graph: &StateGraph) -> Vec<Vec<State>> {
    let count = graph.state_count();
    const UNSEEN: u32 = u32::MAX;
    let mut index = vec![UNSEEN; count];
    let mut low = vec![0u32; count];
    let mut component = vec![UNSEEN; count];
    let mut on_stack = FixedBitSet::with_capacity(count);
    let mut stack: Vec<u32> = Vec::new();
    let mut calls: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut next_index = 0u32;
    let mut components: Vec<Vec<u32>> = Vec::new();

    for root in 0..count as u32 {
        if index[root as usize] != UNSEEN {
            continue;
        }
        let open = |v: u32, index: &mut Vec<u32>, low: &mut Vec<u32>, next: &mut u32| {
            index[v as usize] = *next;
            low[v as usize] = *next;
            *next += 1;
        };
        open(root, &mut index, &mut low, &mut next_index);
        stack.push(root);
        on_stack.insert(root as usize);
        calls.push((root, graph.successor_indices(root).collect()));
        while let Some((v, pending)) = calls.last_mut() {
            let v = *v;
            if let Some(w) = pending.pop() {
                if index[w as usize] == UNSEEN {
                    open(w, &mut index, &mut low, &mut next_index);
                    stack.push(w);
                    on_stack.insert(w as usize);
                    calls.push((w, graph.successor_indices(w).collect()));
                } else if on_stack.contains(w as usize) {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
                continue;
            }
            calls.pop();
            if let Some((parent, _)) = calls.last() {
                let parent = *parent as usize;
                low[parent] = low[parent].min(low[v as usize]);
            }
            if low[v as usize] == index[v as usize] {
                let id = components.len() as u32;
                let mut members = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack.set(w as usize, false);
                    component[w as usize] = id;
                    members.push(w);
                    if w == v {
                        break;
                    }
                }
                components.push(members);
            }
        }
    }

    let mut out: Vec<Vec<State>> = components
        .iter()
        .enumerate()
        .filter(|(id, members)| {
            members.iter().all(|&v| {
                graph
                    .successor_indices(v)
                    .all(|w| component[w as usize] == *id as u32)
            })
        })
        .map(|(_, members)| {
            let mut states: Vec<State> = members
                .iter()
                .map(|&v| State::new(v as u64, graph.dim()))
                .collect();
            states.sort();
            states
        })
        .collect();
    out.sort();
    out
}

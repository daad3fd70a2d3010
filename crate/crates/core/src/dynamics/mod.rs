//! Boolean network dynamics: state transition graphs, stable states,
//! attractors and per-component transition counts.

mod graph;
mod network;
mod transitions;

pub use graph::{
    attractors, stable_states, stable_states_with_limit, stg_async, stg_sync, StateGraph,
    UpdateMode, DEFAULT_STATE_LIMIT, MAX_STATE_LIMIT,
};
pub use network::{BooleanNetwork, Component, UpdateFunction};
pub use transitions::{
    component_transition_counts, component_transitions, f_star, local_transition_counts,
    path_trace, transition_bounds, transition_counts, Autoregulation, BoundsReport,
    TransitionCounts, TransitionSet,
};

#[cfg(test)]
pub(crate) mod fixtures {
    use super::{BooleanNetwork, Component};
    use crate::function::Shape;
    use crate::function::Sign::{Negative as N, Positive as P};

    /// f1 = s1 | (s2 & !s3), f2 = !s3, f3 = !s2
    pub(crate) fn toy() -> BooleanNetwork {
        let f1 = Shape::from_index_sets(3, &[&[1], &[2, 3]]).unwrap();
        let single = Shape::sup(1).unwrap();
        BooleanNetwork::new(vec![
            Component::regulated("g1", vec![(0, P), (1, P), (2, N)], f1).unwrap(),
            Component::regulated("g2", vec![(2, N)], single.clone()).unwrap(),
            Component::regulated("g3", vec![(1, N)], single).unwrap(),
        ])
        .unwrap()
    }
}

//! JSON views of networks and Hasse neighborhoods.

use serde::Serialize;

use crate::dynamics::{BooleanNetwork, StateGraph};
use crate::function::Sign;
use crate::io::model::render_component;
use crate::neighborhood::{HasseSlice, NeighborStep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegulatorJson {
    pub name: String,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentJson {
    pub name: String,
    pub regulators: Vec<RegulatorJson>,
    pub function: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetworkJson {
    pub components: Vec<ComponentJson>,
}

pub fn network_json(bn: &BooleanNetwork) -> NetworkJson {
    let components = bn
        .components()
        .iter()
        .enumerate()
        .map(|(i, c)| ComponentJson {
            name: c.name().to_string(),
            regulators: match c.context() {
                None => Vec::new(),
                Some(ctx) => c
                    .regulators()
                    .iter()
                    .zip(ctx.signs())
                    .map(|(&r, &sign)| RegulatorJson {
                        name: bn.component(r).name().to_string(),
                        sign,
                    })
                    .collect(),
            },
            function: render_component(bn, i),
        })
        .collect();
    NetworkJson { components }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepJson {
    pub shape: String,
    pub rule: String,
    pub delta: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceJson {
    pub center: String,
    pub parents: Vec<StepJson>,
    pub children: Vec<StepJson>,
    pub siblings: Vec<String>,
}

fn step(s: &NeighborStep) -> StepJson {
    StepJson {
        shape: s.target.to_string(),
        rule: s.rule.to_string(),
        delta: s.delta_true_states(),
    }
}

pub fn slice_json(slice: &HasseSlice) -> SliceJson {
    SliceJson {
        center: slice.center.to_string(),
        parents: slice.parents.iter().map(step).collect(),
        children: slice.children.iter().map(step).collect(),
        siblings: slice.siblings.iter().map(|s| s.to_string()).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateGraphJson {
    pub dim: usize,
    pub edges: Vec<(String, String)>,
    pub stable: Vec<String>,
}

pub fn state_graph_json(graph: &StateGraph) -> StateGraphJson {
    StateGraphJson {
        dim: graph.dim(),
        edges: graph
            .edges()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        stable: graph
            .stable_states()
            .iter()
            .map(|s| s.to_string())
            .collect(),
    }
}

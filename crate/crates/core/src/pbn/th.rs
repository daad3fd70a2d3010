//! T helper cell differentiation model (Mendoza & Xenarios) and the
//! perturbation experiments run on it.

use std::fmt;
use std::str::FromStr;

use crate::dynamics::{BooleanNetwork, Component};
use crate::error::{Error, Result};
use crate::function::{Shape, Sign};
use crate::neighborhood::{children, count_consistent, extended_siblings, parents};
use crate::pbn::ensemble::{neighbor_ensemble, NeighborMode};
use crate::pbn::simulate::ProbabilisticNetwork;
use crate::state::State;

use Sign::{Negative as N, Positive as P};

/// Components in table order; inputs last.
pub const TH_COMPONENTS: [&str; 23] = [
    "GATA3", "IFNbR", "IFNg", "IFNgR", "IL10", "IL10R", "IL12R", "IL18R", "IL4", "IL4R", "IRAK",
    "JAK1", "NFAT", "SOCS1", "STAT1", "STAT3", "STAT4", "STAT6", "Tbet", "IFNb", "IL12", "IL18",
    "TCR",
];

const INPUTS: [&str; 4] = ["IFNb", "IL12", "IL18", "TCR"];

/// Reference functions: signed regulators, then clauses as 1-based indices
/// into that list.
#[allow(clippy::type_complexity)]
const TABLE: [(&str, &[(&str, Sign)], &[&[usize]]); 19] = [
    (
        "GATA3",
        &[("GATA3", P), ("STAT6", P), ("Tbet", N)],
        &[&[2, 3], &[1, 3]],
    ),
    ("IFNbR", &[("IFNb", P)], &[&[1]]),
    // the printed function repeats the NFAT clause; the fifth regulator is STAT4
    (
        "IFNg",
        &[
            ("IRAK", P),
            ("NFAT", P),
            ("STAT3", N),
            ("STAT4", P),
            ("Tbet", P),
        ],
        &[&[2, 3], &[5, 3], &[1, 3], &[4, 3]],
    ),
    ("IFNgR", &[("IFNg", P)], &[&[1]]),
    ("IL10", &[("GATA3", P)], &[&[1]]),
    ("IL10R", &[("IL10", P)], &[&[1]]),
    ("IL12R", &[("STAT6", N), ("IL12", P)], &[&[1, 2]]),
    ("IL18R", &[("STAT6", N), ("IL18", P)], &[&[1, 2]]),
    ("IL4", &[("GATA3", P), ("STAT1", N)], &[&[1, 2]]),
    ("IL4R", &[("IL4", P), ("SOCS1", N)], &[&[1, 2]]),
    ("IRAK", &[("IL18R", P)], &[&[1]]),
    ("JAK1", &[("IFNgR", P), ("SOCS1", N)], &[&[1, 2]]),
    ("NFAT", &[("TCR", P)], &[&[1]]),
    ("SOCS1", &[("STAT1", P), ("Tbet", P)], &[&[1], &[2]]),
    ("STAT1", &[("IFNbR", P), ("JAK1", P)], &[&[1], &[2]]),
    ("STAT3", &[("IL10R", P)], &[&[1]]),
    ("STAT4", &[("GATA3", N), ("IL12R", P)], &[&[1, 2]]),
    ("STAT6", &[("IL4R", P)], &[&[1]]),
    (
        "Tbet",
        &[("GATA3", N), ("STAT1", P), ("Tbet", P)],
        &[&[1, 2], &[1, 3]],
    ),
];

fn index(name: &str) -> usize {
    TH_COMPONENTS
        .iter()
        .position(|n| *n == name)
        .expect("known component")
}

/// The 23-component network with its reference functions. Regulators of
/// each component are listed in component order.
pub fn th_model() -> BooleanNetwork {
    let mut components = Vec::with_capacity(TH_COMPONENTS.len());
    for (name, regs, clauses) in TABLE {
        let mut order: Vec<usize> = (0..regs.len()).collect();
        order.sort_by_key(|&k| index(regs[k].0));
        let mut to_new = vec![0; regs.len()];
        for (new, &old) in order.iter().enumerate() {
            to_new[old] = new + 1;
        }
        let sets: Vec<Vec<usize>> = clauses
            .iter()
            .map(|c| c.iter().map(|k| to_new[k - 1]).collect())
            .collect();
        let set_refs: Vec<&[usize]> = sets.iter().map(Vec::as_slice).collect();
        let shape = Shape::from_index_sets(regs.len(), &set_refs).expect("table shape");
        let regulators = order
            .iter()
            .map(|&k| (index(regs[k].0), regs[k].1))
            .collect();
        components.push(Component::regulated(name, regulators, shape).expect("table component"));
    }
    components.extend(INPUTS.iter().map(|name| Component::constant(*name, false)));
    BooleanNetwork::new(components).expect("table network")
}

/// Every component off except IFNg.
pub fn th_initial_state(bn: &BooleanNetwork) -> Result<State> {
    let i = bn
        .index_of("IFNg")
        .ok_or_else(|| Error::MissingMarker("IFNg".into()))?;
    Ok(State::zeros(bn.len()).with(i, true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborRow {
    pub component: String,
    pub regulators: usize,
    /// Number of consistent functions for this many regulators.
    pub function_count: u128,
    pub reference: Shape,
    pub parents: Vec<Shape>,
    pub children: Vec<Shape>,
    /// Shapes sharing a parent or a child; shown starred and included
    /// only when siblings are requested.
    pub siblings: Vec<Shape>,
}

impl NeighborRow {
    /// Parents and children, the unstarred neighbors.
    pub fn direct(&self) -> Vec<Shape> {
        self.parents.iter().chain(&self.children).cloned().collect()
    }
}

/// Neighbors of every regulated component's reference function, in
/// component order.
pub fn neighbor_table(bn: &BooleanNetwork) -> Vec<NeighborRow> {
    bn.components()
        .iter()
        .filter_map(|c| {
            let shape = c.shape()?;
            Some(NeighborRow {
                component: c.name().to_string(),
                regulators: shape.arity(),
                function_count: count_consistent(shape.arity()).unwrap_or(0),
                reference: shape.clone(),
                parents: parents(shape).into_iter().map(|s| s.target).collect(),
                children: children(shape).into_iter().map(|s| s.target).collect(),
                siblings: extended_siblings(shape),
            })
        })
        .collect()
}

pub fn th_neighbor_table() -> Vec<NeighborRow> {
    neighbor_table(&th_model())
}

/// Randomization schemes on the Th model; the reference keeps 0.8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Experiment {
    /// Every component with neighbors, parents and children.
    A,
    /// Every component with neighbors, siblings included.
    B,
    /// GATA3 only.
    C,
    /// Tbet only.
    D,
    /// IL4 only.
    E,
    /// IL4R only.
    F,
}

pub const REFERENCE_PROBABILITY: f64 = 0.8;

impl Experiment {
    pub const ALL: [Experiment; 6] = [
        Experiment::A,
        Experiment::B,
        Experiment::C,
        Experiment::D,
        Experiment::E,
        Experiment::F,
    ];

    pub fn target(self) -> Option<&'static str> {
        match self {
            Experiment::A | Experiment::B => None,
            Experiment::C => Some("GATA3"),
            Experiment::D => Some("Tbet"),
            Experiment::E => Some("IL4"),
            Experiment::F => Some("IL4R"),
        }
    }

    pub fn mode(self) -> NeighborMode {
        match self {
            Experiment::B => NeighborMode::WithSiblings,
            _ => NeighborMode::ParentsChildren,
        }
    }

    /// Applies the experiment's ensembles to `bn`.
    pub fn network(self, bn: &BooleanNetwork) -> Result<ProbabilisticNetwork> {
        let targets: Vec<usize> = match self.target() {
            Some(name) => vec![bn
                .index_of(name)
                .ok_or_else(|| Error::MissingMarker(name.to_string()))?],
            None => (0..bn.len())
                .filter(|&i| !bn.component(i).is_input())
                .collect(),
        };
        let mut pnet = ProbabilisticNetwork::deterministic(bn.clone());
        for i in targets {
            let ensemble = neighbor_ensemble(bn, i, self.mode(), REFERENCE_PROBABILITY)?;
            if !ensemble.is_singleton() {
                pnet = pnet.with_ensemble(ensemble)?;
            }
        }
        Ok(pnet)
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Experiment::A),
            "B" => Ok(Experiment::B),
            "C" => Ok(Experiment::C),
            "D" => Ok(Experiment::D),
            "E" => Ok(Experiment::E),
            "F" => Ok(Experiment::F),
            other => Err(Error::InvalidNetwork(format!(
                "unknown experiment {other:?}"
            ))),
        }
    }
}

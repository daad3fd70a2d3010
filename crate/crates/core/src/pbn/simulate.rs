use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::BooleanNetwork;
use crate::error::{Error, Result};
use crate::io::ResolvedComponent;
use crate::pbn::ensemble::FunctionEnsemble;
use crate::state::State;

pub const DEFAULT_MAX_STEPS: usize = 1000;

/// A network whose regulated components each draw their function from an
/// ensemble at every synchronous step.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilisticNetwork {
    base: BooleanNetwork,
    /// `None` for input components.
    ensembles: Vec<Option<FunctionEnsemble>>,
}

impl ProbabilisticNetwork {
    /// Every regulated component gets its own function with probability one.
    pub fn deterministic(base: BooleanNetwork) -> Self {
        let ensembles = base
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| c.shape().map(|s| FunctionEnsemble::singleton(i, s.clone())))
            .collect();
        ProbabilisticNetwork { base, ensembles }
    }

    pub fn with_ensemble(mut self, ensemble: FunctionEnsemble) -> Result<Self> {
        let i = ensemble.component();
        if i >= self.base.len() || self.ensembles[i].is_none() {
            return Err(Error::InvalidNetwork(format!("no regulated component {i}")));
        }
        self.ensembles[i] = Some(ensemble);
        Ok(self)
    }

    /// Builds a network from model-file components carrying alternatives.
    pub fn from_resolved(resolved: Vec<ResolvedComponent>) -> Result<Self> {
        let base = BooleanNetwork::new(resolved.iter().map(|r| r.component.clone()).collect())?;
        let mut pnet = ProbabilisticNetwork::deterministic(base);
        for (i, r) in resolved.into_iter().enumerate() {
            if r.alternatives.is_empty() {
                continue;
            }
            let ctx = r.component.context().ok_or_else(|| {
                Error::InvalidNetwork(format!("input {} has alternatives", r.component.name()))
            })?;
            let ensemble = FunctionEnsemble::new(i, r.alternatives, ctx)?;
            pnet = pnet.with_ensemble(ensemble)?;
        }
        Ok(pnet)
    }

    pub fn base(&self) -> &BooleanNetwork {
        &self.base
    }

    pub fn ensemble(&self, i: usize) -> Option<&FunctionEnsemble> {
        self.ensembles[i].as_ref()
    }

    /// Number of distinct deterministic networks, the product of the
    /// ensemble sizes.
    pub fn realization_count(&self) -> u128 {
        self.ensembles
            .iter()
            .flatten()
            .map(|e| e.len() as u128)
            .product()
    }

    /// The realization picking each ensemble's most probable entry.
    pub fn reference(&self) -> Result<BooleanNetwork> {
        let mut bn = self.base.clone();
        for e in self.ensembles.iter().flatten() {
            bn = bn.with_shape(e.component(), e.most_probable().clone())?;
        }
        Ok(bn)
    }

    /// One synchronous step with a fresh draw for every non-trivial ensemble.
    pub fn step<R: Rng + ?Sized>(&self, state: u64, rng: &mut R) -> u64 {
        let mut next = 0u64;
        for (i, c) in self.base.components().iter().enumerate() {
            let value = match &self.ensembles[i] {
                Some(e) if !e.is_singleton() => c.evaluate_shape(e.pick(rng.gen::<f64>()), state),
                Some(e) => c.evaluate_shape(&e.entries()[0].0, state),
                None => c.evaluate(state),
            };
            next |= (value as u64) << i;
        }
        next
    }

    /// Stable under every realization with nonzero probability.
    pub fn is_absorbing(&self, state: u64) -> bool {
        self.base.components().iter().enumerate().all(|(i, c)| {
            let current = state >> i & 1 == 1;
            match &self.ensembles[i] {
                Some(e) => e
                    .entries()
                    .iter()
                    .all(|(s, _)| c.evaluate_shape(s, state) == current),
                None => c.evaluate(state) == current,
            }
        })
    }

    /// Stable under the most probable realization.
    pub fn is_reference_fixed_point(&self, state: u64) -> bool {
        self.base.components().iter().enumerate().all(|(i, c)| {
            let current = state >> i & 1 == 1;
            match &self.ensembles[i] {
                Some(e) => c.evaluate_shape(e.most_probable(), state) == current,
                None => c.evaluate(state) == current,
            }
        })
    }
}

/// When a run stops before `max_steps`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TerminationPolicy {
    /// The state is stable under every realization with nonzero probability.
    Absorbing,
    /// The state is stable under the most probable realization.
    #[default]
    ReferenceFixedPoint,
    /// Always run `max_steps` steps.
    FixedSteps,
}

impl TerminationPolicy {
    fn stops(self, pnet: &ProbabilisticNetwork, state: u64) -> bool {
        match self {
            TerminationPolicy::Absorbing => pnet.is_absorbing(state),
            TerminationPolicy::ReferenceFixedPoint => pnet.is_reference_fixed_point(state),
            TerminationPolicy::FixedSteps => false,
        }
    }
}

impl fmt::Display for TerminationPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TerminationPolicy::Absorbing => "absorbing",
            TerminationPolicy::ReferenceFixedPoint => "reference-fixed-point",
            TerminationPolicy::FixedSteps => "fixed-steps",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phenotype {
    Th0,
    Th1,
    Th2,
    Other,
}

impl fmt::Display for Phenotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phenotype::Th0 => "Th0",
            Phenotype::Th1 => "Th1",
            Phenotype::Th2 => "Th2",
            Phenotype::Other => "Other",
        })
    }
}

/// Reads the Tbet and GATA3 markers.
pub fn classify_phenotype(state: State, bn: &BooleanNetwork) -> Result<Phenotype> {
    let marker = |name: &str| {
        bn.index_of(name)
            .map(|i| state.get(i))
            .ok_or_else(|| Error::MissingMarker(name.to_string()))
    };
    Ok(match (marker("Tbet")?, marker("GATA3")?) {
        (true, false) => Phenotype::Th1,
        (false, true) => Phenotype::Th2,
        (false, false) => Phenotype::Th0,
        (true, true) => Phenotype::Other,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunOutcome {
    pub seed: u64,
    pub steps: usize,
    pub final_state: State,
    /// `None` when the network lacks the marker components.
    pub phenotype: Option<Phenotype>,
    pub stopped: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimulationConfig {
    pub initial: State,
    pub max_steps: usize,
    pub runs: usize,
    pub master_seed: u64,
    pub policy: TerminationPolicy,
}

impl SimulationConfig {
    pub fn new(initial: State, runs: usize, master_seed: u64) -> Self {
        SimulationConfig {
            initial,
            max_steps: DEFAULT_MAX_STEPS,
            runs,
            master_seed,
            policy: TerminationPolicy::default(),
        }
    }
}

/// Seed of run `run`: the first word of stream `run` of the master
/// generator.
pub fn run_seed(master_seed: u64, run: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(run as u64);
    rng.next_u64()
}

pub fn simulate_run(
    pnet: &ProbabilisticNetwork,
    initial: State,
    max_steps: usize,
    policy: TerminationPolicy,
    seed: u64,
) -> RunOutcome {
    let n = pnet.base.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = initial.bits();
    let mut steps = 0;
    let mut stopped = policy.stops(pnet, state);
    while !stopped && steps < max_steps {
        state = pnet.step(state, &mut rng);
        steps += 1;
        stopped = policy.stops(pnet, state);
    }
    let final_state = State::new(state, n);
    RunOutcome {
        seed,
        steps,
        final_state,
        phenotype: classify_phenotype(final_state, &pnet.base).ok(),
        stopped,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationReport {
    pub master_seed: u64,
    pub policy: TerminationPolicy,
    pub max_steps: usize,
    pub outcomes: Vec<RunOutcome>,
}

/// Runs are independent and execute in parallel; the outcome list is in run
/// order regardless of scheduling.
pub fn simulate(
    pnet: &ProbabilisticNetwork,
    config: &SimulationConfig,
) -> Result<SimulationReport> {
    if config.runs == 0 || config.max_steps == 0 {
        return Err(Error::InvalidNetwork(
            "runs and max_steps must be positive".into(),
        ));
    }
    if config.initial.len() != pnet.base.len() {
        return Err(Error::InvalidState(format!(
            "initial state has {} components, network has {}",
            config.initial.len(),
            pnet.base.len()
        )));
    }
    let outcomes = (0..config.runs)
        .into_par_iter()
        .map(|run| {
            simulate_run(
                pnet,
                config.initial,
                config.max_steps,
                config.policy,
                run_seed(config.master_seed, run),
            )
        })
        .collect();
    Ok(SimulationReport {
        master_seed: config.master_seed,
        policy: config.policy,
        max_steps: config.max_steps,
        outcomes,
    })
}

impl SimulationReport {
    pub fn counts(&self) -> BTreeMap<Phenotype, usize> {
        let mut counts = BTreeMap::new();
        for o in &self.outcomes {
            if let Some(p) = o.phenotype {
                *counts.entry(p).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Share of runs per phenotype; Th0, Th1 and Th2 are always present.
    pub fn proportions(&self) -> BTreeMap<Phenotype, f64> {
        let mut out: BTreeMap<Phenotype, f64> = [Phenotype::Th0, Phenotype::Th1, Phenotype::Th2]
            .into_iter()
            .map(|p| (p, 0.0))
            .collect();
        let total = self.outcomes.len() as f64;
        for (p, c) in self.counts() {
            out.insert(p, c as f64 / total);
        }
        out
    }

    pub fn proportion(&self, phenotype: Phenotype) -> f64 {
        self.proportions().get(&phenotype).copied().unwrap_or(0.0)
    }

    /// CSV with columns `seed, steps, final_state, phenotype`.
    pub fn write_ledger<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let io = |e: csv::Error| Error::InvalidNetwork(format!("writing ledger: {e}"));
        w.write_record(["seed", "steps", "final_state", "phenotype"])
            .map_err(io)?;
        for o in &self.outcomes {
            let phenotype = o.phenotype.map_or_else(String::new, |p| p.to_string());
            w.write_record([
                o.seed.to_string(),
                o.steps.to_string(),
                o.final_state.to_string(),
                phenotype,
            ])
            .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::InvalidNetwork(format!("writing ledger: {e}")))?;
        Ok(())
    }

    /// `{"Th0": 0.137, "Th1": 0.863, "Th2": 0.0}`
    pub fn aggregate_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .proportions()
            .into_iter()
            .map(|(p, v)| (p.to_string(), serde_json::Value::from(v)))
            .collect();
        serde_json::Value::Object(map)
    }
}

//! Probabilistic Boolean networks: per-component function ensembles drawn
//! at every synchronous step.

mod ensemble;
mod simulate;
mod th;

pub use ensemble::{neighbor_ensemble, FunctionEnsemble, NeighborMode, PROBABILITY_TOLERANCE};
pub use simulate::{
    classify_phenotype, run_seed, simulate, simulate_run, Phenotype, ProbabilisticNetwork,
    RunOutcome, SimulationConfig, SimulationReport, TerminationPolicy, DEFAULT_MAX_STEPS,
};
pub use th::{
    neighbor_table, th_initial_state, th_model, th_neighbor_table, Experiment, NeighborRow,
    REFERENCE_PROBABILITY, TH_COMPONENTS,
};

//! Economic model of quantum key-recovery attacks against ideal ciphers.
//!
//! Everything reduces to one tradeoff: finishing a key search faster needs
//! more parallel search circuits, and parallel search pays a sqrt(k) work
//! penalty, so attack cost scales inversely with the allowed time. This
//! crate turns that tradeoff into numbers: required parallelism and cost
//! for a cipher circuit under a future-hardware scenario, the attacker's
//! profit-optimal strategy under several time-value-of-information models,
//! the hardware family capable of a profitable attack, batch (m-to-1)
//! variants, a classical brute-force baseline, and a small-scale search
//! simulator that verifies every query-count constant the model assumes.
//!
//! All operations are pure functions over immutable values and safe to call
//! concurrently; stochastic ones take explicit seeds and are reproducible
//! bit for bit.

pub mod batch;
pub mod classical;
pub mod cost;
pub mod feasibility;
pub mod grover;
pub mod lambert;
pub mod model;
pub mod presets;
pub mod reward;

pub use batch::{batch_attack_plan, batch_oracle_depth, batch_time_speedup, BatchSpec};
pub use classical::{classical_expected_cost, ClassicalRig};
pub use cost::{attack_plan, depth_improvement_factor, required_parallelism, sequential_time};
pub use feasibility::{family_coefficient, required_speed, tradeoff_curve, FeasibilityFamily};
pub use grover::{
    block_hit_probability, optimal_iterations, partitioned_search_trial, rotation_success_prob,
    statevector_grover, GroverInstance,
};
pub use lambert::{lambert_w, Branch, LambertWError};
pub use model::{
    years_to_layers, AttackDecision, AttackPlan, CipherSpec, ProfitOutcome, QuantumScenario,
    RewardModel, SECONDS_PER_YEAR,
};
pub use reward::{min_profitable_value, optimal_attack, profit, reward, LambdaConstant};

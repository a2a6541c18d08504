//! Attack parallelism and cost: how many independent searches a deadline
//! forces, what the attack costs, and the sequential-time floor.
//!
//! A search over N keys split into k buckets needs (pi/4) * sqrt(N/k)
//! sequential oracle calls per bucket. With t circuit layers available and
//! an oracle of depth d, at most t/d sequential calls fit, so
//! k >= pi^2 N / (16 (t/d)^2). Cost is minimized at equality, giving
//! C(T) = C_ccy * pi^2 N d^2 / (16 T s^2) until k reaches its floor of 1.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::model::{years_to_layers, AttackPlan, CipherSpec, QuantumScenario};

/// Minimum parallelism needed to finish a full key search within
/// `layer_budget` circuit layers, clamped below at one circuit.
pub fn required_parallelism(cipher: &CipherSpec, layer_budget: f64) -> f64 {
    assert!(layer_budget > 0.0, "layer budget must be positive");
    parallelism_for_space(cipher.search_space(), cipher.depth as f64, layer_budget)
}

/// Wall-clock years of the fully sequential (k = 1) attack:
/// (pi/4) * sqrt(N) * d / s.
pub fn sequential_time(cipher: &CipherSpec, scenario: &QuantumScenario) -> f64 {
    sequential_time_for_space(
        cipher.search_space(),
        cipher.depth as f64,
        scenario.layers_per_year(),
    )
}

/// Resolve the cheapest attack finishing within `time_years`.
///
/// Deadlines beyond the sequential time are capped there: once a single
/// circuit suffices, extra calendar time buys nothing, so the cost curve
/// flattens at C(T_seq).
pub fn attack_plan(cipher: &CipherSpec, scenario: &QuantumScenario, time_years: f64) -> AttackPlan {
    plan_for_space(
        cipher.search_space(),
        cipher.depth as f64,
        scenario,
        time_years,
    )
}

/// Parallelism after scaling the oracle depth by `beta`: k' = beta^2 * k.
///
/// Shrinking depth lets the same layer budget hold more sequential oracle
/// calls, so the payoff is quadratic. The result is not re-clamped at 1;
/// callers decide whether a fractional circuit makes sense.
pub fn depth_improvement_factor(parallelism: f64, beta: f64) -> f64 {
    assert!(
        beta > 0.0 && beta <= 1.0,
        "depth scaling factor must lie in (0, 1]"
    );
    assert!(parallelism >= 1.0, "parallelism must be at least 1");
    beta * beta * parallelism
}

pub(crate) fn parallelism_for_space(search_space: f64, depth: f64, layer_budget: f64) -> f64 {
    let oracle_calls = layer_budget / depth;
    let sequential_calls = FRAC_PI_4 * search_space.sqrt();
    if oracle_calls >= sequential_calls {
        return 1.0;
    }
    (PI * PI * search_space / (16.0 * oracle_calls * oracle_calls)).max(1.0)
}

pub(crate) fn sequential_time_for_space(
    search_space: f64,
    depth: f64,
    layers_per_year: f64,
) -> f64 {
    FRAC_PI_4 * search_space.sqrt() * depth / layers_per_year
}

pub(crate) fn plan_for_space(
    search_space: f64,
    depth: f64,
    scenario: &QuantumScenario,
    time_years: f64,
) -> AttackPlan {
    assert!(time_years > 0.0, "attack time must be positive");
    let t_seq = sequential_time_for_space(search_space, depth, scenario.layers_per_year());
    let effective_years = time_years.min(t_seq);
    let layer_budget = years_to_layers(effective_years, scenario);
    let parallelism = parallelism_for_space(search_space, depth, layer_budget);
    let cost_ccy = effective_years * parallelism;
    AttackPlan {
        time_years: effective_years,
        layer_budget,
        oracle_calls: layer_budget / depth,
        parallelism,
        ceil_parallelism: parallelism.ceil(),
        cost_ccy,
        cost_usd: cost_ccy * scenario.ccy_cost_usd,
    }
}

//! Property tests for the model's structural laws: the defining equation of
//! Lambert W, linearity of unit conversions, the cost-time product, the
//! sqrt(k) speedup-work exchange, reward monotonicity, and the batch
//! scaling laws.

use proptest::prelude::*;

use qkr_econ::batch::{batch_attack_plan, batch_oracle_depth, BatchSpec};
use qkr_econ::cost::{
    attack_plan, depth_improvement_factor, required_parallelism, sequential_time,
};
use qkr_econ::feasibility::FeasibilityFamily;
use qkr_econ::lambert::{lambert_w, Branch, NEG_INV_E};
use qkr_econ::model::{years_to_layers, CandidateKind, CipherSpec, QuantumScenario, RewardModel};
use qkr_econ::reward::{min_profitable_value, optimize_compressed, reward, LambdaConstant};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// Arguments covering the whole principal-branch domain, dense near the
/// branch point and spread over many decades elsewhere.
fn principal_arg() -> impl Strategy<Value = f64> {
    prop_oneof![
        (0.0f64..0.4).prop_map(|eps| NEG_INV_E + eps * 0.3678),
        (-690.0f64..18.0).prop_map(|u| u.exp()),
        Just(0.0),
        Just(NEG_INV_E),
    ]
}

/// Arguments covering the minus-one branch domain [-1/e, 0).
fn minus_one_arg() -> impl Strategy<Value = f64> {
    prop_oneof![
        (-690.0f64..=-1.0).prop_map(|u| -u.exp()),
        (0.0f64..1.0).prop_map(|f| NEG_INV_E * (1.0 - f * 0.999_999)),
        Just(NEG_INV_E),
    ]
}

fn scenario_strategy() -> impl Strategy<Value = QuantumScenario> {
    ((1e3f64..1e12), (1e-2f64..1e7))
        .prop_map(|(hz, ccy)| QuantumScenario::new("s", hz, ccy).unwrap())
}

fn cipher_strategy() -> impl Strategy<Value = CipherSpec> {
    ((8u32..=256), (1u64..200_000), (1u64..5_000))
        .prop_map(|(n, d, w)| CipherSpec::new("c", n, d, w).unwrap())
}

proptest! {
    #[test]
    fn lambert_w_inverts_w_exp_w_principal(x in principal_arg()) {
        let w = lambert_w(Branch::Principal, x).unwrap();
        prop_assert!(w >= -1.0);
        let resid = (w * w.exp() - x).abs();
        prop_assert!(resid <= 1e-12 * x.abs().max(1.0), "x={x}, w={w}, resid={resid}");
    }

    #[test]
    fn lambert_w_inverts_w_exp_w_minus_one(x in minus_one_arg()) {
        let w = lambert_w(Branch::MinusOne, x).unwrap();
        prop_assert!(w <= -1.0);
        let resid = (w * w.exp() - x).abs();
        prop_assert!(resid <= 1e-12 * x.abs().max(1.0), "x={x}, w={w}, resid={resid}");
    }

    #[test]
    fn layer_conversion_is_linear(
        scenario in scenario_strategy(),
        t in 1e-6f64..1e4,
        a in 1e-3f64..1e3,
    ) {
        let scaled = years_to_layers(a * t, &scenario);
        let reference = a * years_to_layers(t, &scenario);
        prop_assert!(rel(scaled, reference) <= 1e-15);
    }

    #[test]
    fn unit_decay_matches_constant_reward(v0 in 0.0f64..1e12, t in 0.0f64..1e4) {
        let constant = RewardModel::constant(v0).unwrap();
        let unit_delta = RewardModel::delta(v0, 1.0, f64::INFINITY).unwrap();
        prop_assert_eq!(reward(&constant, t, None), reward(&unit_delta, t, None));
    }

    #[test]
    fn cost_time_product_is_constant(
        cipher in cipher_strategy(),
        scenario in scenario_strategy(),
        f1 in 1e-6f64..1.0,
        f2 in 1e-6f64..1.0,
    ) {
        // Stay below the sequential time so the 1/T regime applies.
        let t_seq = sequential_time(&cipher, &scenario);
        let (t1, t2) = (f1 * t_seq, f2 * t_seq);
        prop_assume!(t1 > 0.0 && t2 > 0.0);
        let p1 = attack_plan(&cipher, &scenario, t1);
        let p2 = attack_plan(&cipher, &scenario, t2);
        prop_assume!(p1.parallelism > 1.0 && p2.parallelism > 1.0);
        prop_assert!(rel(p1.cost_usd * t1, p2.cost_usd * t2) <= 1e-9);
    }

    #[test]
    fn sqrt_speedup_costs_sqrt_work(
        cipher in cipher_strategy(),
        budget_exp in 3.0f64..18.0,
        c in 1e-4f64..1e4,
    ) {
        let budget = 10f64.powf(budget_exp);
        let k1 = required_parallelism(&cipher, budget);
        let k2 = required_parallelism(&cipher, budget / c.sqrt());
        prop_assume!(k1 > 1.0 && k2 > 1.0);
        prop_assert!(rel(k2, c * k1) <= 1e-12, "k1={k1}, k2={k2}, c={c}");
    }

    #[test]
    fn cost_is_monotone_in_time_and_speed(
        cipher in cipher_strategy(),
        scenario in scenario_strategy(),
        t1 in 1e-6f64..1e8,
        factor in 1.0f64..1e6,
    ) {
        let slower = attack_plan(&cipher, &scenario, t1).cost_usd;
        let faster = attack_plan(&cipher, &scenario, t1 * factor).cost_usd;
        prop_assert!(faster <= slower * (1.0 + 1e-12));

        let quick = QuantumScenario::new(
            "quick",
            scenario.gate_speed_hz * factor,
            scenario.ccy_cost_usd,
        )
        .unwrap();
        let on_quick = attack_plan(&cipher, &quick, t1).cost_usd;
        prop_assert!(on_quick <= slower * (1.0 + 1e-12));
    }

    #[test]
    fn constructive_cost_matches_closed_form(
        cipher in cipher_strategy(),
        scenario in scenario_strategy(),
        f in 1e-6f64..0.999,
    ) {
        // The 1/T closed form only holds below the sequential time.
        let t = f * sequential_time(&cipher, &scenario);
        prop_assume!(t > 0.0);
        let plan = attack_plan(&cipher, &scenario, t);
        prop_assume!(plan.parallelism > 1.0);
        let s_y = scenario.layers_per_year();
        let d = cipher.depth as f64;
        let closed = scenario.ccy_cost_usd * std::f64::consts::PI.powi(2)
            * cipher.search_space() * d * d
            / (16.0 * t * s_y * s_y);
        prop_assert!(rel(plan.cost_usd, closed) <= 1e-12);
    }

    #[test]
    fn depth_improvements_compose(
        k in 1.0f64..1e18,
        b1 in 0.01f64..1.0,
        b2 in 0.01f64..1.0,
    ) {
        let chained = depth_improvement_factor(depth_improvement_factor(k, b1).max(1.0), b2);
        let direct = depth_improvement_factor(k, b1 * b2);
        prop_assume!(depth_improvement_factor(k, b1) >= 1.0);
        prop_assert!(rel(chained, direct) <= 1e-12);
    }

    #[test]
    fn reward_never_increases_with_time(
        v0 in 0.0f64..1e12,
        delta in 0.01f64..1.0,
        horizon in 0.1f64..200.0,
        t1 in 0.0f64..300.0,
        dt in 0.0f64..300.0,
        which in 0usize..3,
    ) {
        let model = match which {
            0 => RewardModel::constant(v0).unwrap(),
            1 => RewardModel::threshold(v0, horizon).unwrap(),
            _ => RewardModel::delta(v0, delta, horizon).unwrap(),
        };
        prop_assert!(reward(&model, t1 + dt, None) <= reward(&model, t1, None));
    }

    #[test]
    fn min_value_scales_back_to_cost(
        cipher in cipher_strategy(),
        scenario in scenario_strategy(),
        t in 1e-3f64..1e4,
        delta_pow in 1e-6f64..1.0,
    ) {
        let v = min_profitable_value(&cipher, &scenario, t, delta_pow);
        let cost = attack_plan(&cipher, &scenario, t).cost_usd;
        prop_assert!(rel(v * delta_pow, cost) <= 1e-12);
    }

    #[test]
    fn interior_candidates_are_stationary(
        lambda in 1e-4f64..1e4,
        v0 in 1e-2f64..1e6,
        delta in 0.01f64..0.999,
    ) {
        let lam = LambdaConstant::new(lambda).unwrap();
        let outcome = optimize_compressed(&lam, v0, delta, f64::INFINITY, f64::INFINITY);
        for cand in &outcome.candidates {
            let interior = matches!(
                cand.kind,
                CandidateKind::InteriorW0 | CandidateKind::InteriorWMinus1
            );
            if interior {
                let t = cand.time_years;
                let derivative = v0 * delta.powf(t) * delta.ln() + lambda / (t * t);
                let scale = lambda / (t * t);
                prop_assert!(
                    derivative.abs() <= 1e-6 * scale,
                    "residual {derivative} at T={t} (lambda={lambda}, v0={v0}, delta={delta})"
                );
            }
        }
    }

    #[test]
    fn batch_cost_scaling_isolates_space_reduction(
        scenario in scenario_strategy(),
        t in 0.1f64..100.0,
        m1_bits in 1u32..12,
        m2_bits in 1u32..12,
    ) {
        let cipher = CipherSpec::new("aes128", 128, 57894, 1000).unwrap();
        let d = cipher.depth as f64;
        let q = |m_bits: u32| {
            let spec = BatchSpec::new(1u64 << m_bits, cipher.clone()).unwrap();
            let plan = batch_attack_plan(&spec, &scenario, t);
            let ratio = batch_oracle_depth(&spec) / d;
            (plan.parallelism, plan.cost_usd * (1u64 << m_bits) as f64 / (ratio * ratio))
        };
        let (k1, q1) = q(m1_bits);
        let (k2, q2) = q(m2_bits);
        prop_assume!(k1 > 1.0 && k2 > 1.0);
        prop_assert!(rel(q1, q2) <= 1e-9);
    }

    #[test]
    fn batch_sequential_time_scales_inverse_sqrt_m(
        scenario in scenario_strategy(),
        n in 64u32..=256,
        m_bits in 1u32..=16,
        depth in 1u64..200_000,
    ) {
        // Same oracle depth, search space shrunk by M = 2^m_bits.
        let full = CipherSpec::new("full", n, depth, 1000).unwrap();
        let reduced = CipherSpec::new("reduced", n - m_bits, depth, 1000).unwrap();
        let ratio = sequential_time(&full, &scenario) / sequential_time(&reduced, &scenario);
        let sqrt_m = ((1u64 << m_bits) as f64).sqrt();
        prop_assert!(rel(ratio, sqrt_m) <= 1e-12);
    }

    #[test]
    fn machines_on_the_frontier_cost_the_budget(
        budget in 1e3f64..1e12,
        t in 1.0f64..100.0,
        n in 128u32..=256,
        depth in 1_000u64..100_000,
        hz in 1e6f64..1e12,
    ) {
        let family = FeasibilityFamily::new(budget, t, n, depth).unwrap();
        let ccy = family.max_ccy_at(hz);
        prop_assume!(ccy > 0.0 && ccy.is_finite());
        let scenario = QuantumScenario::new("frontier", hz, ccy).unwrap();
        let cipher = CipherSpec::new("c", n, depth, 1000).unwrap();
        let plan = attack_plan(&cipher, &scenario, t);
        prop_assume!(plan.parallelism > 1.0);
        prop_assert!(rel(plan.cost_usd, budget) <= 1e-9);
    }
}

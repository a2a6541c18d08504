//! Reward evaluation and the attacker's profit-maximizing strategy.
//!
//! Profit at attack time T is P(T) = R(T) - C(T). Compressing the cost curve
//! to C(T) = Lambda / T (valid while more than one circuit is needed), the
//! geometric-discounting case has stationary points where
//! v * delta^T * ln(delta) + Lambda / T^2 = 0, solved in closed form by
//! T* = 2 W(sqrt(c) * ln(delta) / 2) / ln(delta) with
//! c = Lambda / (v * ln(1/delta)). Both real W branches yield candidates;
//! the boundary (finish exactly at the deadline, or run sequentially) and
//! the do-nothing option complete the candidate set.

use crate::cost::{attack_plan, sequential_time};
use crate::lambert::{lambert_w, Branch};
use crate::model::{
    AttackDecision, CandidateKind, CipherSpec, InvalidField, ProfitCandidate, ProfitOutcome,
    QuantumScenario, RewardModel,
};
use std::f64::consts::PI;

/// The cost-curve constant Lambda = C_ccy * pi^2 * N * d^2 / (16 s_y^2),
/// in USD-years, so that C(T) = Lambda / T while k > 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaConstant(f64);

impl LambdaConstant {
    pub fn new(lambda_usd_years: f64) -> Result<Self, InvalidField> {
        if lambda_usd_years > 0.0 && lambda_usd_years.is_finite() {
            Ok(Self(lambda_usd_years))
        } else {
            Err(InvalidField {
                field: "lambda_usd_years",
                reason: "must be a positive finite number",
            })
        }
    }

    /// Compress a cipher/scenario pair into its cost constant.
    pub fn from_attack(cipher: &CipherSpec, scenario: &QuantumScenario) -> Self {
        let s_year = scenario.layers_per_year();
        let depth = cipher.depth as f64;
        Self(
            scenario.ccy_cost_usd * PI * PI * cipher.search_space() * depth * depth
                / (16.0 * s_year * s_year),
        )
    }

    pub fn get(&self) -> f64 {
        self.0
    }
}

/// Value of the information when recovered at time `time_years`.
///
/// `value_override` substitutes the model's initial value v0 without
/// rebuilding the model (used by minimum-value scans).
pub fn reward(model: &RewardModel, time_years: f64, value_override: Option<f64>) -> f64 {
    assert!(time_years >= 0.0, "reward time must be non-negative");
    let v0 = value_override.unwrap_or_else(|| model.value_usd());
    match *model {
        RewardModel::Constant { .. } => v0,
        RewardModel::Threshold { horizon_years, .. } => {
            if time_years <= horizon_years {
                v0
            } else {
                0.0
            }
        }
        RewardModel::Delta {
            delta,
            horizon_years,
            ..
        } => {
            // The deadline itself still pays the (discounted) value.
            if time_years <= horizon_years {
                v0 * delta.powf(time_years)
            } else {
                0.0
            }
        }
    }
}

/// Attacker profit for an attack finishing at `time_years`; T = 0 encodes
/// not attacking and is exactly zero.
pub fn profit(
    cipher: &CipherSpec,
    scenario: &QuantumScenario,
    model: &RewardModel,
    time_years: f64,
) -> f64 {
    assert!(time_years >= 0.0, "attack time must be non-negative");
    if time_years == 0.0 {
        return 0.0;
    }
    reward(model, time_years, None) - attack_plan(cipher, scenario, time_years).cost_usd
}

/// Find the attack time maximizing profit, or decide not to attack.
///
/// Zero or negative best profit resolves to `NoAttack`: an attacker with
/// nothing to gain is modeled as staying out.
pub fn optimal_attack(
    cipher: &CipherSpec,
    scenario: &QuantumScenario,
    model: &RewardModel,
) -> ProfitOutcome {
    let lambda = LambdaConstant::from_attack(cipher, scenario);
    optimize_compressed(
        &lambda,
        model.value_usd(),
        model.decay(),
        sequential_time(cipher, scenario),
        model.horizon_years(),
    )
}

/// Profit maximization over the compressed cost curve C(T) = Lambda / T
/// (flat at Lambda / T_seq beyond the sequential time).
///
/// Candidates: T = 0; the binding boundary min(T_seq, horizon); and, for
/// decay < 1, any real-branch stationary points that fall inside
/// (0, min(T_seq, horizon)]. Exposed separately from [`optimal_attack`] so
/// synthetic cost curves can be optimized directly.
pub fn optimize_compressed(
    lambda: &LambdaConstant,
    value_usd: f64,
    decay: f64,
    sequential_years: f64,
    horizon_years: f64,
) -> ProfitOutcome {
    assert!(value_usd >= 0.0, "information value must be non-negative");
    assert!(decay > 0.0 && decay <= 1.0, "decay rate must lie in (0, 1]");
    assert!(sequential_years > 0.0, "sequential time must be positive");
    assert!(horizon_years > 0.0, "horizon must be positive");

    let lam = lambda.get();
    let cost_at = |t: f64| lam / t.min(sequential_years);
    let reward_at = |t: f64| {
        if t <= horizon_years {
            value_usd * decay.powf(t)
        } else {
            0.0
        }
    };
    let latest = sequential_years.min(horizon_years);

    let mut candidates = vec![ProfitCandidate {
        time_years: 0.0,
        profit_usd: 0.0,
        kind: CandidateKind::NoAttack,
    }];

    if latest.is_finite() {
        let kind = if sequential_years <= horizon_years {
            CandidateKind::Sequential
        } else {
            CandidateKind::Boundary
        };
        candidates.push(ProfitCandidate {
            time_years: latest,
            profit_usd: reward_at(latest) - cost_at(latest),
            kind,
        });
    }

    if decay < 1.0 && value_usd > 0.0 {
        let log_decay = decay.ln();
        let c = lam / (value_usd * -log_decay);
        let arg = 0.5 * c.sqrt() * log_decay;
        let branches = [
            (Branch::Principal, CandidateKind::InteriorW0),
            (Branch::MinusOne, CandidateKind::InteriorWMinus1),
        ];
        for (branch, kind) in branches {
            // A domain error just means this branch contributes no
            // stationary point.
            if let Ok(w) = lambert_w(branch, arg) {
                let t_star = 2.0 * w / log_decay;
                if t_star > 0.0 && t_star <= latest {
                    candidates.push(ProfitCandidate {
                        time_years: t_star,
                        profit_usd: reward_at(t_star) - cost_at(t_star),
                        kind,
                    });
                }
            }
        }
    }

    let best = candidates
        .iter()
        .copied()
        .max_by(|a, b| a.profit_usd.total_cmp(&b.profit_usd))
        .expect("candidate list is never empty");

    if best.profit_usd > 0.0 {
        ProfitOutcome {
            decision: AttackDecision::Attack {
                time_years: best.time_years,
            },
            profit_usd: best.profit_usd,
            candidates,
        }
    } else {
        ProfitOutcome {
            decision: AttackDecision::NoAttack,
            profit_usd: 0.0,
            candidates,
        }
    }
}

/// Minimum initial value making an attack of length `time_years` profitable,
/// given the fraction `delta_pow` of the value remaining when it finishes.
pub fn min_profitable_value(
    cipher: &CipherSpec,
    scenario: &QuantumScenario,
    time_years: f64,
    delta_pow: f64,
) -> f64 {
    assert!(time_years > 0.0, "attack time must be positive");
    assert!(
        delta_pow > 0.0 && delta_pow <= 1.0,
        "remaining-value fraction must lie in (0, 1]"
    );
    attack_plan(cipher, scenario, time_years).cost_usd / delta_pow
}

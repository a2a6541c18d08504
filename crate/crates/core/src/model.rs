//! Shared domain types: cipher circuit descriptions, future-hardware
//! scenarios, reward models, and resolved attack plans.
//!
//! All quantities are carried in 64-bit floating point. The largest value the
//! model produces (a classical brute-force cost near 1e30, or a search space
//! of 2^256 ≈ 1.2e77) is far below the f64 overflow threshold, and every
//! reported figure is only meaningful to about four significant digits.

use std::fmt;

/// Seconds in a year as used by every layer/year conversion.
///
/// This is deliberately the rounded calendar constant rather than
/// 365.25 * 86400; the golden tables are calibrated against it.
pub const SECONDS_PER_YEAR: f64 = 3.154e7;

/// A field-level validation failure raised by the domain-type constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidField {
    pub field: &'static str,
    pub reason: &'static str,
}

impl fmt::Display for InvalidField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid {}: {}", self.field, self.reason)
    }
}

impl std::error::Error for InvalidField {}

/// Quantum-circuit view of an ideal cipher: key size plus the depth and
/// width of one circuit evaluating the cipher.
#[derive(Debug, Clone, PartialEq)]
pub struct CipherSpec {
    pub name: String,
    /// Key length n in bits; the search space is 2^n.
    pub key_bits: u32,
    /// Circuit layers per cipher evaluation.
    pub depth: u64,
    /// Qubits per cipher circuit.
    pub width: u64,
}

impl CipherSpec {
    pub fn new(
        name: impl Into<String>,
        key_bits: u32,
        depth: u64,
        width: u64,
    ) -> Result<Self, InvalidField> {
        if key_bits < 1 {
            return Err(InvalidField {
                field: "key_bits",
                reason: "must be at least 1",
            });
        }
        if key_bits > 1023 {
            return Err(InvalidField {
                field: "key_bits",
                reason: "search space exceeds double-precision range",
            });
        }
        if depth < 1 {
            return Err(InvalidField {
                field: "depth",
                reason: "must be at least 1",
            });
        }
        if width < 1 {
            return Err(InvalidField {
                field: "width",
                reason: "must be at least 1",
            });
        }
        Ok(Self {
            name: name.into(),
            key_bits,
            depth,
            width,
        })
    }

    /// Search space size N = 2^key_bits.
    pub fn search_space(&self) -> f64 {
        2f64.powi(self.key_bits as i32)
    }
}

/// Calibration of a hypothetical future quantum computer: gate propagation
/// speed and the annual rental cost of one cipher circuit (CCY).
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumScenario {
    pub name: String,
    /// Circuit layers advanced per second.
    pub gate_speed_hz: f64,
    /// USD per cipher-circuit-year.
    pub ccy_cost_usd: f64,
}

impl QuantumScenario {
    pub fn new(
        name: impl Into<String>,
        gate_speed_hz: f64,
        ccy_cost_usd: f64,
    ) -> Result<Self, InvalidField> {
        if gate_speed_hz <= 0.0 || !gate_speed_hz.is_finite() {
            return Err(InvalidField {
                field: "gate_speed_hz",
                reason: "must be a positive finite number",
            });
        }
        if ccy_cost_usd <= 0.0 || !ccy_cost_usd.is_finite() {
            return Err(InvalidField {
                field: "ccy_cost_usd",
                reason: "must be a positive finite number",
            });
        }
        Ok(Self {
            name: name.into(),
            gate_speed_hz,
            ccy_cost_usd,
        })
    }

    /// Circuit layers processable per year at this gate speed.
    pub fn layers_per_year(&self) -> f64 {
        self.gate_speed_hz * SECONDS_PER_YEAR
    }
}

/// Total circuit layers executable within `time_years` under `scenario`.
pub fn years_to_layers(time_years: f64, scenario: &QuantumScenario) -> f64 {
    time_years * scenario.layers_per_year()
}

/// Time-value of the encrypted information.
///
/// `Constant` never decays, `Threshold` pays full value up to a deadline and
/// nothing after, and `Delta` decays geometrically (value_usd * delta^T) up
/// to an optional deadline. `Constant` is exactly `Delta` with delta = 1 and
/// an infinite horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RewardModel {
    Constant {
        value_usd: f64,
    },
    Threshold {
        value_usd: f64,
        horizon_years: f64,
    },
    Delta {
        value_usd: f64,
        delta: f64,
        horizon_years: f64,
    },
}

impl RewardModel {
    pub fn constant(value_usd: f64) -> Result<Self, InvalidField> {
        check_value(value_usd)?;
        Ok(Self::Constant { value_usd })
    }

    pub fn threshold(value_usd: f64, horizon_years: f64) -> Result<Self, InvalidField> {
        check_value(value_usd)?;
        check_horizon(horizon_years)?;
        Ok(Self::Threshold {
            value_usd,
            horizon_years,
        })
    }

    pub fn delta(value_usd: f64, delta: f64, horizon_years: f64) -> Result<Self, InvalidField> {
        check_value(value_usd)?;
        check_horizon(horizon_years)?;
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(InvalidField {
                field: "delta",
                reason: "must lie in (0, 1]",
            });
        }
        Ok(Self::Delta {
            value_usd,
            delta,
            horizon_years,
        })
    }

    /// Initial value v0 of the information.
    pub fn value_usd(&self) -> f64 {
        match *self {
            Self::Constant { value_usd }
            | Self::Threshold { value_usd, .. }
            | Self::Delta { value_usd, .. } => value_usd,
        }
    }

    /// Deadline past which the information is worthless (infinite for
    /// `Constant`).
    pub fn horizon_years(&self) -> f64 {
        match *self {
            Self::Constant { .. } => f64::INFINITY,
            Self::Threshold { horizon_years, .. } | Self::Delta { horizon_years, .. } => {
                horizon_years
            }
        }
    }

    /// Geometric decay rate (1 for non-discounting models).
    pub fn decay(&self) -> f64 {
        match *self {
            Self::Delta { delta, .. } => delta,
            _ => 1.0,
        }
    }
}

fn check_value(value_usd: f64) -> Result<(), InvalidField> {
    if value_usd >= 0.0 && value_usd.is_finite() {
        Ok(())
    } else {
        Err(InvalidField {
            field: "value_usd",
            reason: "must be finite and non-negative",
        })
    }
}

fn check_horizon(horizon_years: f64) -> Result<(), InvalidField> {
    // Infinity is a legal horizon (no deadline).
    if horizon_years > 0.0 && !horizon_years.is_nan() {
        Ok(())
    } else {
        Err(InvalidField {
            field: "horizon_years",
            reason: "must be positive",
        })
    }
}

/// A fully resolved attack: its effective running time, layer budget,
/// required parallelism, and cost.
///
/// `time_years` is the effective running time of the attack. Requesting a
/// deadline beyond the sequential (k = 1) running time caps the plan at the
/// sequential time: extra calendar time cannot lower the cost further, so the
/// attack simply finishes early.
#[derive(Debug, Clone, PartialEq)]
pub struct AttackPlan {
    /// Effective attack duration in years (capped at the sequential time).
    pub time_years: f64,
    /// Total circuit layers executed within `time_years`.
    pub layer_budget: f64,
    /// Sequential cipher-oracle calls available: layer_budget / depth.
    pub oracle_calls: f64,
    /// Number of independent searches run in parallel (continuous).
    pub parallelism: f64,
    /// Smallest whole number of circuits covering `parallelism`.
    ///
    /// Kept in floating point: realistic values can exceed any integer
    /// width, and above 2^53 the ceiling is the value itself.
    pub ceil_parallelism: f64,
    /// Cost in cipher-circuit-years: time_years * parallelism.
    pub cost_ccy: f64,
    /// cost_ccy priced at the scenario's CCY rate.
    pub cost_usd: f64,
}

/// The attacker's optimal move.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AttackDecision {
    /// Run the attack, finishing at `time_years`.
    Attack { time_years: f64 },
    /// Stay out; profit is exactly zero.
    NoAttack,
}

/// How a profit candidate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    /// T = 0, the do-nothing option.
    NoAttack,
    /// Sequential attack (k = 1) finishing at the sequential time.
    Sequential,
    /// Deadline-bound attack finishing exactly at the reward horizon.
    Boundary,
    /// Interior stationary point from the principal Lambert-W branch.
    InteriorW0,
    /// Interior stationary point from the minus-one Lambert-W branch.
    InteriorWMinus1,
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::NoAttack => "no-attack",
            Self::Sequential => "sequential",
            Self::Boundary => "boundary",
            Self::InteriorW0 => "interior-W0",
            Self::InteriorWMinus1 => "interior-W-1",
        };
        f.write_str(s)
    }
}

/// One evaluated attack time with its profit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfitCandidate {
    pub time_years: f64,
    pub profit_usd: f64,
    pub kind: CandidateKind,
}

/// Result of profit maximization: the chosen strategy and every candidate
/// that was considered.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfitOutcome {
    pub decision: AttackDecision,
    pub profit_usd: f64,
    pub candidates: Vec<ProfitCandidate>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cipher_validation() {
        assert!(CipherSpec::new("x", 0, 1, 1).is_err());
        assert!(CipherSpec::new("x", 1, 0, 1).is_err());
        assert!(CipherSpec::new("x", 1, 1, 0).is_err());
        assert!(CipherSpec::new("x", 1024, 1, 1).is_err());
        let c = CipherSpec::new("aes", 128, 57894, 1000).unwrap();
        assert_eq!(c.search_space(), 2f64.powi(128));
    }

    #[test]
    fn scenario_validation() {
        assert!(QuantumScenario::new("s", 0.0, 50.0).is_err());
        assert!(QuantumScenario::new("s", -1.0, 50.0).is_err());
        assert!(QuantumScenario::new("s", 1e9, 0.0).is_err());
        assert!(QuantumScenario::new("s", f64::INFINITY, 50.0).is_err());
        let s = QuantumScenario::new("s", 6e10, 50.0).unwrap();
        assert_eq!(s.layers_per_year(), 6e10 * 3.154e7);
    }

    #[test]
    fn layer_budget_conversion() {
        let mania = QuantumScenario::new("mania", 6e10, 50.0).unwrap();
        let rel = |a: f64, b: f64| (a - b).abs() / b.abs();
        // Published layer budgets for the 100/10/1-year horizons.
        assert!(rel(years_to_layers(100.0, &mania), 1.892e20) < 5e-3);
        assert!(rel(years_to_layers(10.0, &mania), 1.89e19) < 5e-3);
        let steady = QuantumScenario::new("steady", 1e8, 50_000.0).unwrap();
        assert!(rel(years_to_layers(1.0, &steady), 3.154e15) < 1e-12);
    }

    #[test]
    fn reward_model_validation() {
        assert!(RewardModel::constant(-1.0).is_err());
        assert!(RewardModel::threshold(1.0, 0.0).is_err());
        assert!(RewardModel::delta(1.0, 0.0, 1.0).is_err());
        assert!(RewardModel::delta(1.0, 1.1, 1.0).is_err());
        // delta = 1 and an infinite horizon are both legal.
        assert!(RewardModel::delta(1.0, 1.0, f64::INFINITY).is_ok());
        let m = RewardModel::constant(5.0).unwrap();
        assert_eq!(m.horizon_years(), f64::INFINITY);
        assert_eq!(m.decay(), 1.0);
    }
}

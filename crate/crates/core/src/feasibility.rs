//! Which quantum computers could run a profitable attack: for a budget b,
//! deadline T_y, and key length n, the family of machines whose annual
//! circuit cost satisfies C_ccy <= alpha * s_total^2, where s_total is the
//! total number of circuit layers the machine gets through within T_y and
//! alpha = 16 b / (pi^2 2^n T_y d^2).

use std::f64::consts::PI;

use crate::model::{InvalidField, SECONDS_PER_YEAR};

/// A budget/deadline/key-length family of capable quantum computers,
/// reduced to its quadratic speed-cost coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityFamily {
    pub budget_usd: f64,
    pub time_years: f64,
    pub key_bits: u32,
    pub depth: u64,
    /// Membership coefficient: a machine belongs iff
    /// C_ccy <= coefficient * s_total^2.
    pub coefficient: f64,
}

impl FeasibilityFamily {
    pub fn new(
        budget_usd: f64,
        time_years: f64,
        key_bits: u32,
        depth: u64,
    ) -> Result<Self, InvalidField> {
        if budget_usd <= 0.0 || !budget_usd.is_finite() {
            return Err(InvalidField {
                field: "budget_usd",
                reason: "must be a positive finite number",
            });
        }
        if time_years <= 0.0 || !time_years.is_finite() {
            return Err(InvalidField {
                field: "time_years",
                reason: "must be a positive finite number",
            });
        }
        if !(1..=1023).contains(&key_bits) {
            return Err(InvalidField {
                field: "key_bits",
                reason: "must lie in 1..=1023",
            });
        }
        if depth < 1 {
            return Err(InvalidField {
                field: "depth",
                reason: "must be at least 1",
            });
        }
        Ok(Self {
            budget_usd,
            time_years,
            key_bits,
            depth,
            coefficient: family_coefficient(budget_usd, time_years, key_bits, depth),
        })
    }

    /// Highest affordable C_ccy for a machine running at `gate_hz`.
    pub fn max_ccy_at(&self, gate_hz: f64) -> f64 {
        let s_total = gate_hz * self.time_years * SECONDS_PER_YEAR;
        self.coefficient * s_total * s_total
    }

    /// Does a machine with this speed and annual cost belong to the family?
    pub fn contains(&self, gate_hz: f64, ccy_cost_usd: f64) -> bool {
        ccy_cost_usd <= self.max_ccy_at(gate_hz)
    }
}

/// The family coefficient alpha = 16 b / (pi^2 2^n T_y d^2).
pub fn family_coefficient(budget_usd: f64, time_years: f64, key_bits: u32, depth: u64) -> f64 {
    let depth = depth as f64;
    16.0 * budget_usd / (PI * PI * 2f64.powi(key_bits as i32) * time_years * depth * depth)
}

/// Invert the membership bound: the total layer count (and implied gate
/// speed) needed to stay inside the family at annual cost `ccy_target_usd`.
pub fn required_speed(alpha: f64, ccy_target_usd: f64, time_years: f64) -> (f64, f64) {
    assert!(alpha > 0.0, "family coefficient must be positive");
    assert!(ccy_target_usd > 0.0, "target CCY cost must be positive");
    assert!(time_years > 0.0, "time limit must be positive");
    let s_total = (ccy_target_usd / alpha).sqrt();
    (s_total, s_total / (time_years * SECONDS_PER_YEAR))
}

/// Sample the speed/cost tradeoff frontier at log-spaced gate speeds.
/// Returns (gate_hz, max_ccy_usd) pairs.
pub fn tradeoff_curve(
    family: &FeasibilityFamily,
    gate_hz_range: (f64, f64),
    points: usize,
) -> Vec<(f64, f64)> {
    let (lo, hi) = gate_hz_range;
    assert!(lo > 0.0 && hi > lo, "need 0 < lo < hi");
    assert!(points >= 2, "need at least two sample points");
    let log_lo = lo.ln();
    let step = (hi.ln() - log_lo) / (points - 1) as f64;
    (0..points)
        .map(|i| {
            let hz = if i == 0 {
                lo
            } else if i + 1 == points {
                hi
            } else {
                (log_lo + step * i as f64).exp()
            };
            (hz, family.max_ccy_at(hz))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn family() -> FeasibilityFamily {
        FeasibilityFamily::new(1e8, 100.0, 128, 57854).unwrap()
    }

    #[test]
    fn coefficient_golden_point() {
        assert!(rel(family_coefficient(1e8, 100.0, 128, 57854), 1.423e-42) < 5e-3);
        // Linear in budget, halves per extra key bit.
        assert!(rel(family_coefficient(2e8, 100.0, 128, 57854), 2.846e-42) < 5e-3);
        assert!(rel(family_coefficient(1e8, 100.0, 129, 57854), 7.116e-43) < 5e-3);
    }

    #[test]
    fn required_speed_golden_point() {
        let (s_total, gate_hz) = required_speed(family().coefficient, 1000.0, 100.0);
        assert!(rel(s_total, 2.65e22) < 1e-2);
        assert!(rel(gate_hz, 8.403e12) < 1e-2);

        // Second cost target, cross-checked against the coefficient.
        let (_, hz50) = required_speed(family().coefficient, 50.0, 100.0);
        assert!(rel(hz50, 1.88e12) < 1e-2);
        assert!(rel(family().max_ccy_at(hz50), 50.0) < 1e-9);

        // Degenerate target equal to alpha pins s_total at one layer.
        let alpha = family().coefficient;
        let (one, _) = required_speed(alpha, alpha, 100.0);
        assert!(rel(one, 1.0) < 1e-12);
    }

    #[test]
    fn curve_hits_worked_point_and_quadratic_law() {
        let fam = family();
        assert!(rel(fam.max_ccy_at(8.403908e12), 1000.0) < 1e-2);
        assert!(rel(fam.max_ccy_at(2e10), 4.0 * fam.max_ccy_at(1e10)) < 1e-12);
        // At a 60 GHz cap the affordable circuit cost is a few cents a year.
        assert!(rel(fam.max_ccy_at(6e10), 5.097e-2) < 1e-3);
    }

    #[test]
    fn curve_sampling() {
        let fam = family();
        let pts = tradeoff_curve(&fam, (1e10, 1e14), 9);
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0].0, 1e10);
        assert_eq!(pts[8].0, 1e14);
        // Log-spaced: constant ratio between consecutive speeds.
        let r0 = pts[1].0 / pts[0].0;
        for w in pts.windows(2) {
            assert!(rel(w[1].0 / w[0].0, r0) < 1e-9);
        }
        for (hz, ccy) in &pts {
            assert!(rel(*ccy, fam.max_ccy_at(*hz)) < 1e-12);
        }
    }

    #[test]
    fn membership_is_monotone() {
        let fam = family();
        let hz = 1e12;
        let ccy = fam.max_ccy_at(hz);
        assert!(fam.contains(hz, ccy));
        assert!(fam.contains(hz * 2.0, ccy));
        assert!(fam.contains(hz, ccy * 0.5));
        assert!(!fam.contains(hz / 2.0, ccy));
    }
}

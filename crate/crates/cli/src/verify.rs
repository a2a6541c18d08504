//! The search-constant verification suite behind `qkr grover-verify`: checks
//! that the query-count constants the cost model assumes actually fall out
//! of the underlying search dynamics at desk scale.

use std::f64::consts::FRAC_PI_4;

use qkr_econ::grover::{
    block_hit_probability, optimal_iterations, rotation_success_prob, run_partitioned_trials,
    statevector_grover, GroverInstance,
};

/// One verification outcome.
#[derive(Debug, Clone)]
pub struct VerifyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: String) -> VerifyCheck {
    VerifyCheck {
        name: name.to_string(),
        passed,
        detail,
    }
}

/// Statevector simulation against the rotation closed form over the full
/// small grid: n <= 12, 1/2/4 targets, up to twice the optimal iterations.
pub fn statevector_rotation_grid() -> VerifyCheck {
    let mut worst = 0.0f64;
    let mut at = String::new();
    for bits in 2u32..=12 {
        let n = 1u64 << bits;
        for m in [1u64, 2, 4] {
            if m > n {
                continue;
            }
            let targets: Vec<u64> = (0..m).map(|i| i * (n / m)).collect();
            let j_max = 2 * optimal_iterations(n, m);
            for j in 0..=j_max {
                let inst =
                    GroverInstance::new(bits, targets.clone(), j as u32).expect("valid instance");
                let sv = statevector_grover(&inst).expect("within simulation limit");
                let rot = rotation_success_prob(n, m, j);
                let diff = (sv - rot).abs();
                if diff > worst {
                    worst = diff;
                    at = format!("n=2^{bits}, m={m}, j={j}");
                }
            }
        }
    }
    check(
        "statevector-rotation-grid",
        worst < 1e-9,
        format!("max |statevector - rotation| = {worst:.2e} at {at}"),
    )
}

/// Success probability at floor((pi/4) sqrt(N)) iterations stays above
/// 1 - 1/N for every space up to 2^24.
pub fn success_floor() -> VerifyCheck {
    let mut worst_margin = f64::INFINITY;
    let mut at = 0u32;
    for bits in 4u32..=24 {
        let n = 1u64 << bits;
        let p = rotation_success_prob(n, 1, optimal_iterations(n, 1));
        let margin = p - (1.0 - 1.0 / n as f64);
        if margin < worst_margin {
            worst_margin = margin;
            at = bits;
        }
    }
    check(
        "success-floor",
        worst_margin >= 0.0,
        format!("min margin over 1 - 1/N is {worst_margin:.2e} at n=2^{at}"),
    )
}

/// The 4-element single-target search succeeds with certainty after one
/// iteration, in both the closed form and the simulated amplitudes.
pub fn four_element_certainty() -> VerifyCheck {
    let rot = rotation_success_prob(4, 1, 1);
    let inst = GroverInstance::new(2, [3], 1).expect("valid instance");
    let sv = statevector_grover(&inst).expect("within simulation limit");
    check(
        "four-element-certainty",
        rot == 1.0 && sv == 1.0,
        format!("rotation = {rot}, statevector = {sv}"),
    )
}

/// Doubling the iteration count past the optimum strictly hurts.
pub fn over_rotation() -> VerifyCheck {
    let mut ok = true;
    let mut detail = String::new();
    for bits in 4u32..=24 {
        let n = 1u64 << bits;
        let j = optimal_iterations(n, 1);
        let at_opt = rotation_success_prob(n, 1, j);
        let over = rotation_success_prob(n, 1, 2 * j);
        if over >= at_opt {
            ok = false;
            detail = format!("n=2^{bits}: {over} >= {at_opt}");
            break;
        }
    }
    if ok {
        detail = "success at 2x iterations strictly below optimum for all n in 4..=24".into();
    }
    check("over-rotation", ok, detail)
}

/// The exact block-hit probability never drops below 1 - 1/e, and equals
/// 5/6 in the fully enumerable 4-element, 2-target case.
pub fn block_hit_floor() -> VerifyCheck {
    let floor = 1.0 - (-1.0f64).exp();
    let mut min_p = f64::INFINITY;
    for n_bits in 2u32..=20 {
        for m_bits in 1..n_bits {
            min_p = min_p.min(block_hit_probability(1 << n_bits, 1 << m_bits));
        }
    }
    let exact = block_hit_probability(4, 2);
    let passed = min_p >= floor && (exact - 5.0 / 6.0).abs() < 1e-12;
    check(
        "block-hit-floor",
        passed,
        format!("min probability {min_p:.6} vs floor {floor:.6}; p(4,2) = {exact:.6}"),
    )
}

/// Monte Carlo: total queries across k buckets track (pi/4) sqrt(N k)
/// within 5% for k in {1, 4, 16, 64} at N = 2^16.
pub fn total_query_scaling(seed: u64, trials: u64) -> VerifyCheck {
    let n = 1u64 << 16;
    let mut worst = 0.0f64;
    let mut at = 0u64;
    for k in [1u64, 4, 16, 64] {
        let stats = run_partitioned_trials(n, k, 1, seed, trials);
        let expect = FRAC_PI_4 * ((n * k) as f64).sqrt();
        let err = (stats.mean_total_queries - expect).abs() / expect;
        if err > worst {
            worst = err;
            at = k;
        }
    }
    check(
        "total-query-scaling",
        worst <= 0.05,
        format!(
            "worst deviation from (pi/4) sqrt(Nk) is {:.2}% at k={at}",
            worst * 100.0
        ),
    )
}

/// Monte Carlo: sequential queries shrink as 1/sqrt(M) within 10% for
/// M in {1, 4, 16} batched targets at N = 2^16, k = 16.
pub fn sequential_sqrt_m_scaling(seed: u64, trials: u64) -> VerifyCheck {
    let n = 1u64 << 16;
    let k = 16u64;
    let mut worst = 0.0f64;
    let mut at = 0u64;
    for m in [1u64, 4, 16] {
        let stats = run_partitioned_trials(n, k, m, seed, trials);
        let expect = FRAC_PI_4 * (n as f64 / (k * m) as f64).sqrt();
        let err = (stats.mean_sequential_queries - expect).abs() / expect;
        if err > worst {
            worst = err;
            at = m;
        }
    }
    check(
        "sequential-sqrt-m",
        worst <= 0.10,
        format!(
            "worst deviation from (pi/4) sqrt(N/(kM)) is {:.2}% at M={at}",
            worst * 100.0
        ),
    )
}

/// Run the full suite.
pub fn run_all(seed: u64, trials: u64) -> Vec<VerifyCheck> {
    vec![
        statevector_rotation_grid(),
        success_floor(),
        four_element_certainty(),
        over_rotation(),
        block_hit_floor(),
        total_query_scaling(seed, trials),
        sequential_sqrt_m_scaling(seed, trials),
    ]
}

//! Desk-scale verification of the search constants the cost model rests on:
//! the exact rotation model, a full statevector simulation at small sizes,
//! partitioned (bucketed) parallel search, and multi-target block statistics.
//!
//! One Grover iteration applies the phase oracle (negate target amplitudes)
//! followed by inversion about the mean. Both operators preserve the real
//! span of the uniform and target states, so amplitudes stay real and the
//! dynamics reduce exactly to a rotation by 2 * theta per iteration with
//! theta = arcsin(sqrt(M / N)).

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest exponent the rotation-model helpers are meant for.
pub const MAX_ROTATION_BITS: u32 = 24;
/// Largest exponent the dense statevector simulation accepts.
pub const MAX_STATEVECTOR_BITS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroverError {
    /// The requested statevector would be too large to simulate densely.
    SpaceTooLarge { space_bits: u32, limit: u32 },
    /// Instance parameters are inconsistent (empty or out-of-range targets).
    InvalidInstance(&'static str),
}

impl fmt::Display for GroverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SpaceTooLarge { space_bits, limit } => write!(
                f,
                "statevector over {space_bits} bits exceeds the {limit}-bit simulation limit"
            ),
            Self::InvalidInstance(reason) => write!(f, "invalid search instance: {reason}"),
        }
    }
}

impl std::error::Error for GroverError {}

/// A small search instance: space size 2^space_bits, target set, iteration
/// count, and the bucket count used when the search is partitioned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverInstance {
    pub space_bits: u32,
    pub targets: BTreeSet<u64>,
    pub iterations: u32,
    pub buckets: u64,
}

impl GroverInstance {
    pub fn new(
        space_bits: u32,
        targets: impl IntoIterator<Item = u64>,
        iterations: u32,
    ) -> Result<Self, GroverError> {
        Self::with_buckets(space_bits, targets, iterations, 1)
    }

    pub fn with_buckets(
        space_bits: u32,
        targets: impl IntoIterator<Item = u64>,
        iterations: u32,
        buckets: u64,
    ) -> Result<Self, GroverError> {
        if space_bits == 0 || space_bits > MAX_ROTATION_BITS {
            return Err(GroverError::InvalidInstance(
                "space_bits must lie in 1..=24",
            ));
        }
        if buckets == 0 {
            return Err(GroverError::InvalidInstance("buckets must be at least 1"));
        }
        let targets: BTreeSet<u64> = targets.into_iter().collect();
        if targets.is_empty() {
            return Err(GroverError::InvalidInstance("target set is empty"));
        }
        let space = 1u64 << space_bits;
        if targets.iter().any(|&t| t >= space) {
            return Err(GroverError::InvalidInstance(
                "target index outside the search space",
            ));
        }
        Ok(Self {
            space_bits,
            targets,
            iterations,
            buckets,
        })
    }

    pub fn space_size(&self) -> u64 {
        1u64 << self.space_bits
    }
}

/// Exact success probability of measuring a target after `iterations`
/// Grover iterations: sin^2((2j + 1) * theta), theta = arcsin(sqrt(M / N)).
pub fn rotation_success_prob(space_size: u64, num_targets: u64, iterations: u64) -> f64 {
    assert!(
        num_targets >= 1 && num_targets <= space_size,
        "need 1 <= targets <= space size"
    );
    let theta = (num_targets as f64 / space_size as f64).sqrt().asin();
    let s = ((2 * iterations + 1) as f64 * theta).sin();
    s * s
}

/// Iteration count maximizing the success probability for a known target
/// count: floor((pi/4) * sqrt(N / M)).
pub fn optimal_iterations(space_size: u64, num_targets: u64) -> u64 {
    assert!(
        num_targets >= 1 && num_targets <= space_size,
        "need 1 <= targets <= space size"
    );
    (FRAC_PI_4 * (space_size as f64 / num_targets as f64).sqrt()) as u64
}

/// Simulate the full amplitude vector and return the probability mass on
/// the target set after the instance's iteration count.
pub fn statevector_grover(instance: &GroverInstance) -> Result<f64, GroverError> {
    if instance.space_bits > MAX_STATEVECTOR_BITS {
        return Err(GroverError::SpaceTooLarge {
            space_bits: instance.space_bits,
            limit: MAX_STATEVECTOR_BITS,
        });
    }
    let n = instance.space_size() as usize;
    let mut amp = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..instance.iterations {
        // Phase oracle: negate target amplitudes.
        for &t in &instance.targets {
            amp[t as usize] = -amp[t as usize];
        }
        // Inversion about the mean: a -> 2 * mean - a.
        let mean = amp.iter().sum::<f64>() / n as f64;
        for a in amp.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    Ok(instance
        .targets
        .iter()
        .map(|&t| amp[t as usize] * amp[t as usize])
        .sum())
}

/// Outcome of one partitioned search trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionedTrial {
    pub success: bool,
    /// Oracle queries summed over all buckets.
    pub total_queries: u64,
    /// Oracle queries on the critical path (the longest bucket).
    pub sequential_queries: u64,
}

/// Aggregate statistics over repeated partitioned trials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialStats {
    pub trials: u64,
    pub mean_total_queries: f64,
    pub mean_sequential_queries: f64,
    pub success_rate: f64,
}

/// One trial of the partitioned multi-target search.
///
/// The space is split into `num_targets` equal blocks, one block is chosen
/// uniformly at random, and a `buckets`-way parallel search runs on that
/// block, each bucket sized for a single expected target. Targets are placed
/// uniformly without replacement; each bucket's success is sampled from its
/// exact rotation-model probability given the targets that actually landed
/// in it. With one target the block partition is trivial and this is plain
/// bucketed search over the whole space.
pub fn partitioned_search_trial(
    space_size: u64,
    buckets: u64,
    num_targets: u64,
    rng_seed: u64,
) -> PartitionedTrial {
    partitioned_search_trial_stream(space_size, buckets, num_targets, rng_seed, 0)
}

/// Same as [`partitioned_search_trial`] but drawing from the ChaCha stream
/// `stream`, so concurrent trials stay reproducible and order-independent.
pub fn partitioned_search_trial_stream(
    space_size: u64,
    buckets: u64,
    num_targets: u64,
    rng_seed: u64,
    stream: u64,
) -> PartitionedTrial {
    assert!(space_size >= 1, "space must be non-empty");
    assert!(
        num_targets >= 1 && num_targets <= space_size,
        "need 1 <= targets <= space size"
    );
    assert!(buckets >= 1, "need at least one bucket");

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(stream);

    let block_size = space_size.div_ceil(num_targets);
    let bucket_size = block_size.div_ceil(buckets);
    let iterations = optimal_iterations(bucket_size, 1);

    // Place targets uniformly without replacement.
    let targets = rand::seq::index::sample(&mut rng, space_size as usize, num_targets as usize);
    // Pick the block to attack.
    let block = rng.gen_range(0..num_targets);
    let block_start = block * block_size;
    let block_end = (block_start + block_size).min(space_size);

    let mut per_bucket = vec![0u64; buckets as usize];
    for t in targets.iter() {
        let t = t as u64;
        if t >= block_start && t < block_end {
            per_bucket[((t - block_start) / bucket_size) as usize] += 1;
        }
    }

    let mut success = false;
    for &hits in &per_bucket {
        if hits == 0 {
            continue;
        }
        let p = rotation_success_prob(bucket_size, hits.min(bucket_size), iterations);
        if rng.gen_bool(p.clamp(0.0, 1.0)) {
            success = true;
        }
    }

    PartitionedTrial {
        success,
        total_queries: buckets * iterations,
        sequential_queries: iterations,
    }
}

/// Run `trials` independent partitioned trials (streams 0..trials) and
/// aggregate their statistics.
pub fn run_partitioned_trials(
    space_size: u64,
    buckets: u64,
    num_targets: u64,
    rng_seed: u64,
    trials: u64,
) -> TrialStats {
    assert!(trials >= 1, "need at least one trial");
    let mut total = 0u128;
    let mut sequential = 0u128;
    let mut successes = 0u64;
    for stream in 0..trials {
        let t = partitioned_search_trial_stream(space_size, buckets, num_targets, rng_seed, stream);
        total += t.total_queries as u128;
        sequential += t.sequential_queries as u128;
        successes += t.success as u64;
    }
    TrialStats {
        trials,
        mean_total_queries: total as f64 / trials as f64,
        mean_sequential_queries: sequential as f64 / trials as f64,
        success_rate: successes as f64 / trials as f64,
    }
}

/// Exact probability that a fixed block of size N / M contains at least one
/// of M uniformly placed targets: 1 - C(N - N/M, M) / C(N, M), evaluated in
/// log space.
pub fn block_hit_probability(space_size: u64, num_targets: u64) -> f64 {
    assert!(
        num_targets >= 1 && num_targets <= space_size,
        "need 1 <= targets <= space size"
    );
    assert!(
        space_size.is_multiple_of(num_targets),
        "block count must divide the space size"
    );
    let block = space_size / num_targets;
    // Miss ratio: prod_{i=0}^{M-1} (N - B - i) / (N - i).
    if space_size - block < num_targets {
        return 1.0;
    }
    let mut log_miss = 0.0f64;
    for i in 0..num_targets {
        log_miss += (-((block as f64) / ((space_size - i) as f64))).ln_1p();
    }
    -log_miss.exp_m1()
}

//! Multi-threaded Monte Carlo runs.

use b23_core::combinatorics::{
    check_inputs, run_trials, DistributionError, McAccumulator, McSummary, TritDistribution,
};
use rayon::prelude::*;

const CHUNK: u64 = 4096;

/// Same result as [`b23_core::combinatorics::pair_frequency_monte_carlo`],
/// with trials spread over the current rayon pool.
pub fn pair_frequency_monte_carlo_par(
    dist: &TritDistribution,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<McSummary, DistributionError> {
    check_inputs(dist, n, trials)?;
    let chunks = trials.div_ceil(CHUNK);
    let acc = (0..chunks)
        .into_par_iter()
        .map(|c| run_trials(dist, n, seed, c * CHUNK..((c + 1) * CHUNK).min(trials)))
        .reduce(McAccumulator::default, McAccumulator::merge);
    Ok(acc.summary(n, seed))
}

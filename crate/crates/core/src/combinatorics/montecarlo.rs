//! Seeded Monte Carlo estimates of how many `1,2` pairs random trit strings
//! contain under different source distributions.
//!
//! Seed contract: trial `i` of a run with seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i`. Trials are
//! therefore independent of each other and of how they are scheduled, and
//! the accumulated sums are integers, so any partition of the trial range
//! merged in any order gives a bit-identical [`McSummary`].

use crate::b23::{count_12_pairs, count_12_substrings};
use crate::trit::Trit;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SUM_TOLERANCE: f64 = 1e-12;

/// Source of random trit strings.
#[derive(Clone, Debug, PartialEq)]
pub enum TritDistribution {
    /// Independent trits with probabilities `[p0, p1, p2]`.
    Iid([f64; 3]),
    /// First-order Markov chain: `initial` for the first trit, then row
    /// `transition[prev]` for each following one.
    Markov {
        initial: [f64; 3],
        transition: [[f64; 3]; 3],
    },
    /// Windows of length `n` taken at uniformly random offsets from an
    /// observed trit sequence (for example a text mapped through the table).
    Empirical(Vec<Trit>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum DistributionError {
    NegativeProbability { row: usize, value: f64 },
    RowSum { row: usize, sum: f64 },
    EmptySample,
    SampleTooShort { available: usize, needed: usize },
    NoTrials,
    ZeroLength,
}

impl fmt::Display for DistributionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistributionError::NegativeProbability { row, value } => {
                write!(
                    f,
                    "row {row} has a negative or non-finite probability {value}"
                )
            }
            DistributionError::RowSum { row, sum } => {
                write!(f, "row {row} sums to {sum}, expected 1")
            }
            DistributionError::EmptySample => f.write_str("empirical sample is empty"),
            DistributionError::SampleTooShort { available, needed } => write!(
                f,
                "empirical sample has {available} trits, windows need {needed}"
            ),
            DistributionError::NoTrials => f.write_str("at least one trial is required"),
            DistributionError::ZeroLength => f.write_str("string length must be at least 1"),
        }
    }
}

impl core::error::Error for DistributionError {}

fn check_row(row: usize, p: &[f64; 3]) -> Result<(), DistributionError> {
    if let Some(&value) = p.iter().find(|v| !(**v >= 0.0 && v.is_finite())) {
        return Err(DistributionError::NegativeProbability { row, value });
    }
    let sum: f64 = p.iter().sum();
    if libm::fabs(sum - 1.0) > SUM_TOLERANCE {
        return Err(DistributionError::RowSum { row, sum });
    }
    Ok(())
}

fn sample(p: &[f64; 3], rng: &mut ChaCha8Rng) -> Trit {
    let u: f64 = rng.gen();
    let mut acc = 0.0;
    for (k, &pk) in p.iter().enumerate() {
        acc += pk;
        if u < acc {
            return Trit::new(k as u8).unwrap();
        }
    }
    // rounding left u above the cumulative sum; take the last possible trit
    let last = p.iter().rposition(|&v| v > 0.0).unwrap_or(2);
    Trit::new(last as u8).unwrap()
}

impl TritDistribution {
    pub fn uniform() -> TritDistribution {
        TritDistribution::Iid([1.0 / 3.0; 3])
    }

    /// Rows are numbered `0` for the iid vector or the Markov initial
    /// vector and `1..=3` for the transition rows.
    pub fn validate(&self) -> Result<(), DistributionError> {
        match self {
            TritDistribution::Iid(p) => check_row(0, p),
            TritDistribution::Markov {
                initial,
                transition,
            } => {
                check_row(0, initial)?;
                transition
                    .iter()
                    .enumerate()
                    .try_for_each(|(i, row)| check_row(i + 1, row))
            }
            TritDistribution::Empirical(trits) if trits.is_empty() => {
                Err(DistributionError::EmptySample)
            }
            TritDistribution::Empirical(_) => Ok(()),
        }
    }

    fn check_length(&self, n: usize) -> Result<(), DistributionError> {
        if n == 0 {
            return Err(DistributionError::ZeroLength);
        }
        match self {
            TritDistribution::Empirical(t) if t.len() < n => {
                Err(DistributionError::SampleTooShort {
                    available: t.len(),
                    needed: n,
                })
            }
            _ => Ok(()),
        }
    }

    /// Replaces `buf` with a fresh length-`n` string.
    pub fn fill(&self, rng: &mut ChaCha8Rng, n: usize, buf: &mut Vec<Trit>) {
        buf.clear();
        match self {
            TritDistribution::Iid(p) => buf.extend((0..n).map(|_| sample(p, rng))),
            TritDistribution::Markov {
                initial,
                transition,
            } => {
                let mut prev = sample(initial, rng);
                buf.push(prev);
                for _ in 1..n {
                    prev = sample(&transition[usize::from(prev.value())], rng);
                    buf.push(prev);
                }
            }
            TritDistribution::Empirical(trits) => {
                let start = rng.gen_range(0..=trits.len() - n);
                buf.extend_from_slice(&trits[start..start + n]);
            }
        }
    }
}

/// RNG for one trial; see the module docs.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Integer sums over a set of trials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct McAccumulator {
    pub trials: u64,
    pub sum_pairs: u64,
    pub sum_pairs_sq: u128,
    pub sum_substrings: u64,
}

impl McAccumulator {
    pub fn add(&mut self, pairs: usize, substrings: usize) {
        self.trials += 1;
        self.sum_pairs += pairs as u64;
        self.sum_pairs_sq += (pairs as u128) * (pairs as u128);
        self.sum_substrings += substrings as u64;
    }

    pub fn merge(self, other: McAccumulator) -> McAccumulator {
        McAccumulator {
            trials: self.trials + other.trials,
            sum_pairs: self.sum_pairs + other.sum_pairs,
            sum_pairs_sq: self.sum_pairs_sq + other.sum_pairs_sq,
            sum_substrings: self.sum_substrings + other.sum_substrings,
        }
    }

    pub fn summary(&self, n: usize, seed: u64) -> McSummary {
        let t = self.trials as f64;
        let mean = self.sum_pairs as f64 / t;
        let variance = if self.trials > 1 {
            // (sum x^2 - (sum x)^2 / t) / (t - 1), numerator kept exact
            let s = u128::from(self.sum_pairs);
            let num = self.sum_pairs_sq * u128::from(self.trials) - s * s;
            num as f64 / (t * (t - 1.0))
        } else {
            0.0
        };
        McSummary {
            n,
            trials: self.trials,
            seed,
            mean_pairs: mean,
            variance,
            std_error: libm::sqrt(variance / t),
            mean_bits_saved: 2.0 * mean,
            mean_substring_pairs: self.sum_substrings as f64 / t,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McSummary {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    /// Mean number of pairs fused by the greedy encoder.
    pub mean_pairs: f64,
    /// Unbiased sample variance of the pair count.
    pub variance: f64,
    /// Standard error of `mean_pairs`.
    pub std_error: f64,
    /// Mean bits saved by fusion, `2 * mean_pairs`.
    pub mean_bits_saved: f64,
    /// Mean count of `1,2` substrings.
    pub mean_substring_pairs: f64,
}

/// Runs the trials with indices in `trials`. The distribution must already
/// be valid for length `n`.
pub fn run_trials(
    dist: &TritDistribution,
    n: usize,
    seed: u64,
    trials: Range<u64>,
) -> McAccumulator {
    let mut acc = McAccumulator::default();
    let mut buf = Vec::with_capacity(n);
    for trial in trials {
        let mut rng = trial_rng(seed, trial);
        dist.fill(&mut rng, n, &mut buf);
        acc.add(count_12_pairs(&buf), count_12_substrings(&buf));
    }
    acc
}

/// Validates the inputs, then runs `trials` trials sequentially.
pub fn pair_frequency_monte_carlo(
    dist: &TritDistribution,
    n: usize,
    trials: u64,
    seed: u64,
) -> Result<McSummary, DistributionError> {
    check_inputs(dist, n, trials)?;
    Ok(run_trials(dist, n, seed, 0..trials).summary(n, seed))
}

/// Shared input checks for callers that schedule [`run_trials`] themselves.
pub fn check_inputs(
    dist: &TritDistribution,
    n: usize,
    trials: u64,
) -> Result<(), DistributionError> {
    dist.validate()?;
    dist.check_length(n)?;
    if trials == 0 {
        return Err(DistributionError::NoTrials);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn no_ones_no_pairs() {
        let s = pair_frequency_monte_carlo(&TritDistribution::Iid([1.0, 0.0, 0.0]), 50, 1000, 3)
            .unwrap();
        assert_eq!(s.mean_pairs, 0.0);
        assert_eq!(s.variance, 0.0);
    }

    #[test]
    fn half_ones_half_twos() {
        let s = pair_frequency_monte_carlo(&TritDistribution::Iid([0.0, 0.5, 0.5]), 2, 20_000, 11)
            .unwrap();
        assert!(
            (s.mean_pairs - 0.25).abs() < 3.0 * s.std_error + 1e-12,
            "{s:?}"
        );
        assert_eq!(s.mean_bits_saved, 2.0 * s.mean_pairs);
    }

    #[test]
    fn deterministic_and_partition_independent() {
        let d = TritDistribution::uniform();
        let a = pair_frequency_monte_carlo(&d, 10, 3000, 42).unwrap();
        let b = pair_frequency_monte_carlo(&d, 10, 3000, 42).unwrap();
        assert_eq!(a, b);
        let parts = run_trials(&d, 10, 42, 2000..3000)
            .merge(run_trials(&d, 10, 42, 0..700))
            .merge(run_trials(&d, 10, 42, 700..2000));
        assert_eq!(parts.summary(10, 42), a);
        let c = pair_frequency_monte_carlo(&d, 10, 3000, 43).unwrap();
        assert_ne!(a.mean_pairs, c.mean_pairs);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            TritDistribution::Iid([0.5, 0.5, 0.1]).validate(),
            Err(DistributionError::RowSum { row: 0, .. })
        ));
        assert!(matches!(
            TritDistribution::Iid([1.5, -0.5, 0.0]).validate(),
            Err(DistributionError::NegativeProbability { .. })
        ));
        let bad_markov = TritDistribution::Markov {
            initial: [1.0, 0.0, 0.0],
            transition: [[1.0, 0.0, 0.0], [0.2, 0.2, 0.2], [0.0, 0.0, 1.0]],
        };
        assert!(matches!(
            bad_markov.validate(),
            Err(DistributionError::RowSum { row: 2, .. })
        ));
        assert_eq!(
            TritDistribution::Empirical(vec![]).validate(),
            Err(DistributionError::EmptySample)
        );
        assert_eq!(
            pair_frequency_monte_carlo(&TritDistribution::Empirical(vec![Trit::ONE]), 2, 1, 0),
            Err(DistributionError::SampleTooShort {
                available: 1,
                needed: 2
            })
        );
        assert_eq!(
            pair_frequency_monte_carlo(&TritDistribution::uniform(), 2, 0, 0),
            Err(DistributionError::NoTrials)
        );
        assert_eq!(
            pair_frequency_monte_carlo(&TritDistribution::uniform(), 0, 1, 0),
            Err(DistributionError::ZeroLength)
        );
    }

    #[test]
    fn markov_always_alternating() {
        // 1 -> 2 -> 1 -> 2 ... starting from 1: every string of length 2k has k pairs
        let d = TritDistribution::Markov {
            initial: [0.0, 1.0, 0.0],
            transition: [[1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]],
        };
        let s = pair_frequency_monte_carlo(&d, 8, 100, 1).unwrap();
        assert_eq!((s.mean_pairs, s.variance), (4.0, 0.0));
    }

    #[test]
    fn empirical_windows() {
        let trits: Vec<Trit> = "1212000000"
            .chars()
            .map(|c| Trit::from_char(c).unwrap())
            .collect();
        let s = pair_frequency_monte_carlo(&TritDistribution::Empirical(trits.clone()), 10, 5, 9)
            .unwrap();
        assert_eq!(s.mean_pairs, 2.0);
        let s =
            pair_frequency_monte_carlo(&TritDistribution::Empirical(trits), 2, 4000, 9).unwrap();
        // windows at offsets 0 and 2 of the 9 possible contain a pair
        assert!((s.mean_pairs - 2.0 / 9.0).abs() < 3.0 * s.std_error);
    }

    #[test]
    fn single_trial_has_zero_variance() {
        let s = pair_frequency_monte_carlo(&TritDistribution::uniform(), 5, 1, 0).unwrap();
        assert_eq!(s.variance, 0.0);
        assert_eq!(s.trials, 1);
    }
}

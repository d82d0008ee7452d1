//! Combinatorics of the `1,2` pair.

mod counting;
mod ddouble;
mod montecarlo;

pub use counting::{
    count_no12_bruteforce, count_no12_closed_form, count_no12_closed_form_f64,
    count_no12_recurrence, diagram_sum_check, fibonacci_identity_check, recurrence_sequence,
    ClosedForm, CountingReport, BRUTE_FORCE_MAX_N, CLOSED_FORM_EXACT_MAX_N,
};
pub use montecarlo::{
    check_inputs, pair_frequency_monte_carlo, run_trials, trial_rng, DistributionError,
    McAccumulator, McSummary, TritDistribution,
};

use crate::table::{FrequencyTable, SymbolTable};
use core::fmt;
use core::ops::RangeInclusive;
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountError {
    OutOfRange { n: u32, min: u32, max: u32 },
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::OutOfRange { n, min, max } => {
                write!(f, "n = {n} is outside the supported range {min}..={max}")
            }
        }
    }
}

impl core::error::Error for CountError {}

/// `a / b` as `f64` for arbitrarily large integers.
fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    if b.is_zero() {
        return f64::NAN;
    }
    let shift_a = a.bits().saturating_sub(64);
    let shift_b = b.bits().saturating_sub(64);
    let mantissa_a = (a >> shift_a).to_f64().unwrap_or(f64::INFINITY);
    let mantissa_b = (b >> shift_b).to_f64().unwrap_or(f64::INFINITY);
    libm::scalbn(mantissa_a / mantissa_b, shift_a as i32 - shift_b as i32)
}

fn p_from_count(n: u32, s: &BigUint) -> f64 {
    let total = BigUint::from(3u32).pow(n);
    1.0 - ratio(s, &total)
}

/// `P(n)` as the exact fraction `(3^n - S(n)) / 3^n`, unreduced.
pub fn p_at_least_one_12_exact(n: u32) -> (BigUint, BigUint) {
    let total = BigUint::from(3u32).pow(n);
    let s = count_no12_recurrence(n);
    (&total - s, total)
}

/// Probability that a uniformly random trit string of length `n` contains
/// at least one `1,2` pair.
pub fn p_at_least_one_12(n: u32) -> f64 {
    let (num, den) = p_at_least_one_12_exact(n);
    ratio(&num, &den)
}

/// `1 - P(n) = S(n) / 3^n`, computed directly so it keeps full relative
/// precision when `P(n)` is close to one.
pub fn p_no_12(n: u32) -> f64 {
    ratio(&count_no12_recurrence(n), &BigUint::from(3u32).pow(n))
}

/// `phi^2 / 3 = (3 + sqrt 5) / 6`, the asymptotic ratio of `1 - P(n+1)` to `1 - P(n)`.
pub fn golden_decay_ratio() -> f64 {
    (3.0 + libm::sqrt(5.0)) / 6.0
}

/// Least-squares slope of `ln(1 - P(n))` against `n`, returned as the
/// per-step ratio `exp(slope)`.
pub fn fit_geometric_decay(ns: RangeInclusive<u32>) -> f64 {
    let points: alloc::vec::Vec<(f64, f64)> =
        ns.map(|n| (f64::from(n), libm::log(p_no_12(n)))).collect();
    let m = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    libm::exp(sxy / sxx)
}

/// Upper bound on the compression ratio for running English text.
///
/// Assumes the space makes up half of all characters and the letters share
/// the other half in proportion to `freqs`; every character would otherwise
/// take 8 bits. Letter costs come from the table's fused code lengths.
pub fn compression_ratio_bound(freqs: &FrequencyTable, table: &SymbolTable) -> f64 {
    let bits = |c: char| {
        table
            .index_of(c)
            .map_or(8, |i| table.entry(i).b23_bit_length())
    };
    compression_ratio_bound_with(freqs, bits(' '), bits)
}

/// [`compression_ratio_bound`] with caller-supplied code lengths:
/// `(space_bits * 100 + sum(bits(c) * f(c))) / (8 * 200)`.
pub fn compression_ratio_bound_with(
    freqs: &FrequencyTable,
    space_bits: usize,
    letter_bits: impl Fn(char) -> usize,
) -> f64 {
    let letters: f64 = freqs
        .letters()
        .iter()
        .map(|&(c, f)| letter_bits(c) as f64 * f)
        .sum();
    (space_bits as f64 * 100.0 + letters) / (8.0 * 200.0)
}

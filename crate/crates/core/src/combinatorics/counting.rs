//! Counting trit strings that contain no `1,2` pair.
//!
//! `S(n)` is computed three independent ways: exhaustive enumeration for
//! small `n`, the exact recurrence `S(n) = 3 S(n-1) - S(n-2)` with
//! `S(1) = 3, S(2) = 8`, and the golden-ratio closed form
//! `(phi^(2n+2) - phi^(-2n-2)) / sqrt(5)`.

use super::ddouble::DDouble;
use super::CountError;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Largest `n` accepted by [`count_no12_bruteforce`] (3^14 is about 4.8M strings).
pub const BRUTE_FORCE_MAX_N: u32 = 14;

/// Largest `n` for which the closed form is promised to round to `S(n)`:
/// `phi^(2n+2) / sqrt(5)` stays below 2^53.
pub const CLOSED_FORM_EXACT_MAX_N: u32 = 35;

/// Enumerates all `3^n` strings.
pub fn count_no12_bruteforce(n: u32) -> Result<u64, CountError> {
    if !(1..=BRUTE_FORCE_MAX_N).contains(&n) {
        return Err(CountError::OutOfRange {
            n,
            min: 1,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let total = 3u64.pow(n);
    let mut count = 0;
    'strings: for index in 0..total {
        let mut rest = index;
        let mut next = u64::MAX;
        // digits come out least significant first, so compare with the one after
        for _ in 0..n {
            let digit = rest % 3;
            rest /= 3;
            if digit == 1 && next == 2 {
                continue 'strings;
            }
            next = digit;
        }
        count += 1;
    }
    Ok(count)
}

/// `S(n)` for `n >= 0`; `S(0) = 1` counts the empty string.
pub fn count_no12_recurrence(n: u32) -> BigUint {
    let mut prev = BigUint::one(); // S(0)
    let mut cur = BigUint::from(3u32); // S(1)
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * 3u32 - &prev;
        prev = core::mem::replace(&mut cur, next);
    }
    cur
}

/// `[S(1), ..., S(n_max)]`.
pub fn recurrence_sequence(n_max: u32) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let next = match n {
            1 => BigUint::from(3u32),
            2 => BigUint::from(8u32),
            _ => &out[n as usize - 2] * 3u32 - &out[n as usize - 3],
        };
        out.push(next);
    }
    out
}

/// Closed-form value of `S(n)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub value: f64,
    /// Nearest integer to the extended-precision value; `None` past `i128`.
    pub nearest: Option<i128>,
    /// False past [`CLOSED_FORM_EXACT_MAX_N`]; the value is then approximate.
    pub exact: bool,
}

/// Evaluates the golden-ratio expression in double-double precision.
///
/// Plain `f64` powers of `phi` lose the last unit by `n = 35`; the extended
/// evaluation keeps the rounded result exact over the whole window.
pub fn count_no12_closed_form(n: u32) -> ClosedForm {
    let sqrt5 = DDouble::sqrt(5.0);
    let phi = (DDouble::ONE + sqrt5).scale(0.5);
    let up = phi.powu(2 * n + 2);
    let down = DDouble::ONE / up;
    let v = (up - down) / sqrt5;
    ClosedForm {
        value: v.to_f64(),
        nearest: v.round_i128(),
        exact: n <= CLOSED_FORM_EXACT_MAX_N,
    }
}

/// The same expression in plain `f64`, for comparison.
pub fn count_no12_closed_form_f64(n: u32) -> f64 {
    let sqrt5 = libm::sqrt(5.0);
    let phi = (1.0 + sqrt5) / 2.0;
    let e = f64::from(2 * n + 2);
    (libm::pow(phi, e) - libm::pow(phi, -e)) / sqrt5
}

/// Checks `S(n) = G(2n)` for `n = 1..=n_max`, where `G(1) = 2, G(2) = 3,
/// G(k) = G(k-1) + G(k-2)`.
pub fn fibonacci_identity_check(n_max: u32) -> bool {
    let s = recurrence_sequence(n_max);
    let mut g: Vec<BigUint> = Vec::with_capacity(2 * n_max as usize + 1);
    g.push(BigUint::from(0u32)); // unused G(0) slot keeps indices 1-based
    g.push(BigUint::from(2u32));
    g.push(BigUint::from(3u32));
    while g.len() <= 2 * n_max as usize {
        let k = g.len();
        let next = &g[k - 1] + &g[k - 2];
        g.push(next);
    }
    (1..=n_max as usize).all(|n| s[n - 1] == g[2 * n])
}

/// Checks `S(n) = 2 S(n-1) + S(n-2) + ... + S(1) + 2` for `n = 3..=n_max`.
pub fn diagram_sum_check(n_max: u32) -> bool {
    let s = recurrence_sequence(n_max);
    let mut prefix = BigUint::from(0u32); // S(1) + ... + S(n-2)
    for n in 3..=n_max as usize {
        prefix += &s[n - 3];
        let rhs = &s[n - 2] * 2u32 + &prefix + 2u32;
        if s[n - 1] != rhs {
            return false;
        }
    }
    true
}

/// `S(n)` from all available routes side by side, with `P(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountingReport {
    pub n: u32,
    pub s_bruteforce: Option<u64>,
    pub s_recurrence: BigUint,
    pub s_closed_form: ClosedForm,
    pub p_n: f64,
}

impl CountingReport {
    /// Brute force is included only for `n <= brute_force_cap`.
    pub fn new(n: u32, brute_force_cap: u32) -> Result<CountingReport, CountError> {
        if n == 0 {
            return Err(CountError::OutOfRange {
                n,
                min: 1,
                max: u32::MAX,
            });
        }
        let s_bruteforce = if n <= brute_force_cap.min(BRUTE_FORCE_MAX_N) {
            Some(count_no12_bruteforce(n)?)
        } else {
            None
        };
        let s_recurrence = count_no12_recurrence(n);
        let p_n = super::p_from_count(n, &s_recurrence);
        Ok(CountingReport {
            n,
            s_bruteforce,
            s_recurrence,
            s_closed_form: count_no12_closed_form(n),
            p_n,
        })
    }

    /// True when every present route agrees, with the closed form only
    /// counted inside its exactness window.
    pub fn consistent(&self) -> bool {
        let brute_ok = self
            .s_bruteforce
            .is_none_or(|b| BigUint::from(b) == self.s_recurrence);
        let closed_ok = !self.s_closed_form.exact
            || self
                .s_closed_form
                .nearest
                .and_then(|v| u128::try_from(v).ok())
                .is_some_and(|v| Some(v) == self.s_recurrence.to_u128());
        brute_ok && closed_ok
    }
}

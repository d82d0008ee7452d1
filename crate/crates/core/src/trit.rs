//! Trits and trit strings.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

/// A single base-3 digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// Builds a trit, rejecting anything outside `0..=2`.
    pub const fn new(value: u8) -> Result<Trit, TritError> {
        if value < 3 {
            Ok(Trit(value))
        } else {
            Err(TritError::OutOfRange(value))
        }
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    /// Parses one of the characters `'0'`, `'1'`, `'2'`.
    pub const fn from_char(c: char) -> Option<Trit> {
        match c {
            '0' => Some(Trit::ZERO),
            '1' => Some(Trit::ONE),
            '2' => Some(Trit::TWO),
            _ => None,
        }
    }

    #[inline]
    pub const fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl TryFrom<u8> for Trit {
    type Error = TritError;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        Trit::new(value)
    }
}

impl From<Trit> for u8 {
    fn from(t: Trit) -> u8 {
        t.0
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TritError {
    /// An integer outside `0..=2` was offered as a trit.
    OutOfRange(u8),
    /// A character other than `'0'`, `'1'`, `'2'` at the given character index.
    InvalidDigit { position: usize, found: char },
}

impl fmt::Display for TritError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TritError::OutOfRange(v) => write!(f, "{v} is not a trit (expected 0, 1 or 2)"),
            TritError::InvalidDigit { position, found } => {
                write!(f, "invalid trit {found:?} at position {position}")
            }
        }
    }
}

impl core::error::Error for TritError {}

/// An ordered, possibly empty sequence of trits, most significant first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TritString(Vec<Trit>);

impl TritString {
    pub const fn new() -> TritString {
        TritString(Vec::new())
    }

    pub fn with_capacity(capacity: usize) -> TritString {
        TritString(Vec::with_capacity(capacity))
    }

    pub fn push(&mut self, t: Trit) {
        self.0.push(t);
    }

    pub fn extend_from_slice(&mut self, trits: &[Trit]) {
        self.0.extend_from_slice(trits);
    }

    pub fn as_slice(&self) -> &[Trit] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Trit> {
        self.0
    }

    /// Positional base-3 value. Returns `None` on `u128` overflow.
    pub fn value(&self) -> Option<u128> {
        self.0.iter().try_fold(0u128, |acc, t| {
            acc.checked_mul(3)?.checked_add(u128::from(t.value()))
        })
    }

    /// Base-3 representation of `n` left-padded with zeros to at least `width` trits.
    pub fn from_value_padded(n: u64, width: usize) -> TritString {
        let mut digits = to_ternary(n).0;
        if digits.len() < width {
            let pad = width - digits.len();
            digits.splice(0..0, core::iter::repeat_n(Trit::ZERO, pad));
        }
        TritString(digits)
    }
}

/// Most-significant-first base-3 representation without leading zeros;
/// zero is the single trit `0`.
pub fn to_ternary(mut n: u64) -> TritString {
    if n == 0 {
        return TritString(alloc::vec![Trit::ZERO]);
    }
    let mut digits = Vec::with_capacity(41);
    while n > 0 {
        digits.push(Trit((n % 3) as u8));
        n /= 3;
    }
    digits.reverse();
    TritString(digits)
}

/// Parses a string of `'0'`/`'1'`/`'2'` characters.
pub fn parse_trits(text: &str) -> Result<TritString, TritError> {
    text.chars()
        .enumerate()
        .map(|(position, found)| {
            Trit::from_char(found).ok_or(TritError::InvalidDigit { position, found })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(TritString)
}

/// Storage needed for a number written in binary and in ternary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepresentationSizes {
    pub binary_digits: u32,
    pub ternary_digits: u32,
    /// `ternary_digits * log2(3)`: the ternary digits measured in bits.
    pub ternary_information_bits: f64,
}

/// Digit counts of `n` in base 2 and base 3.
///
/// Comparing `binary_digits` with `ternary_digits` counts symbols, not
/// information; `ternary_information_bits` puts both on the same scale.
pub fn representation_sizes(n: u64) -> RepresentationSizes {
    let binary_digits = if n == 0 { 1 } else { 64 - n.leading_zeros() };
    let ternary_digits = to_ternary(n).len() as u32;
    RepresentationSizes {
        binary_digits,
        ternary_digits,
        ternary_information_bits: f64::from(ternary_digits) * libm::log2(3.0),
    }
}

impl Deref for TritString {
    type Target = [Trit];

    fn deref(&self) -> &[Trit] {
        &self.0
    }
}

impl From<Vec<Trit>> for TritString {
    fn from(v: Vec<Trit>) -> Self {
        TritString(v)
    }
}

impl From<&[Trit]> for TritString {
    fn from(v: &[Trit]) -> Self {
        TritString(v.to_vec())
    }
}

impl FromIterator<Trit> for TritString {
    fn from_iter<I: IntoIterator<Item = Trit>>(iter: I) -> Self {
        TritString(iter.into_iter().collect())
    }
}

impl Extend<Trit> for TritString {
    fn extend<I: IntoIterator<Item = Trit>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a TritString {
    type Item = &'a Trit;
    type IntoIter = core::slice::Iter<'a, Trit>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromStr for TritString {
    type Err = TritError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_trits(s)
    }
}

impl fmt::Display for TritString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|t| t.to_char()).collect();
        f.pad(&s)
    }
}

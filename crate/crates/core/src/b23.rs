//! Trit to bit maps.
//!
//! The fixed-width map writes every trit as a 2-bit group (`0 -> 00`,
//! `1 -> 01`, `2 -> 10`) and never produces the group `11`. The fusing map
//! scans left to right and, whenever a `1` is directly followed by a `2`,
//! writes the pair as the single group `11`. Longest match wins, so
//! `1,2,1,2` becomes `11 11` and decoding is a stateless group lookup.

use crate::bits::Bitstream;
use crate::trit::{Trit, TritString};
use core::fmt;

const GROUP_FUSED: u8 = 0b11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum B23Error {
    /// Bitstreams made of 2-bit groups must have an even length.
    OddLength(usize),
    /// The fixed-width map never emits `11`; found at this group index.
    InvalidA23Group { group: usize },
}

impl fmt::Display for B23Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            B23Error::OddLength(n) => write!(f, "bitstream length {n} is odd"),
            B23Error::InvalidA23Group { group } => {
                write!(f, "invalid A23 group 11 at group {group}")
            }
        }
    }
}

impl core::error::Error for B23Error {}

/// Fixed-width encoding: two bits per trit.
pub fn encode_a23(trits: &[Trit]) -> Bitstream {
    let mut out = Bitstream::with_capacity(2 * trits.len());
    for t in trits {
        out.push_bits(u32::from(t.value()), 2);
    }
    out
}

pub fn decode_a23(bits: &Bitstream) -> Result<TritString, B23Error> {
    if !bits.len().is_multiple_of(2) {
        return Err(B23Error::OddLength(bits.len()));
    }
    bits.groups()
        .enumerate()
        .map(|(group, g)| Trit::new(g).map_err(|_| B23Error::InvalidA23Group { group }))
        .collect()
}

/// Greedy fusing encoder. See the module docs for the scan rule.
pub fn encode_b23(trits: &[Trit]) -> Bitstream {
    let mut out = Bitstream::with_capacity(2 * trits.len());
    encode_b23_into(trits, &mut out);
    out
}

/// Appends the fused encoding of `trits` to `out` and returns the number of
/// pairs fused.
pub fn encode_b23_into(trits: &[Trit], out: &mut Bitstream) -> usize {
    let mut fused = 0;
    let mut i = 0;
    while i < trits.len() {
        if trits[i] == Trit::ONE && trits.get(i + 1) == Some(&Trit::TWO) {
            out.push_bits(u32::from(GROUP_FUSED), 2);
            fused += 1;
            i += 2;
        } else {
            out.push_bits(u32::from(trits[i].value()), 2);
            i += 1;
        }
    }
    fused
}

/// Inverse of [`encode_b23`]. Every 2-bit group is meaningful, so only the
/// length can be wrong.
pub fn decode_b23(bits: &Bitstream) -> Result<TritString, B23Error> {
    let mut out = TritString::with_capacity(bits.len());
    decode_b23_into(bits, &mut out)?;
    Ok(out)
}

pub fn decode_b23_into(bits: &Bitstream, out: &mut TritString) -> Result<(), B23Error> {
    if !bits.len().is_multiple_of(2) {
        return Err(B23Error::OddLength(bits.len()));
    }
    for g in bits.groups() {
        match g {
            0 => out.push(Trit::ZERO),
            1 => out.push(Trit::ONE),
            2 => out.push(Trit::TWO),
            _ => out.extend_from_slice(&[Trit::ONE, Trit::TWO]),
        }
    }
    Ok(())
}

/// Number of `1,2` pairs the greedy encoder fuses.
pub fn count_12_pairs(trits: &[Trit]) -> usize {
    let mut count = 0;
    let mut i = 0;
    while i + 1 < trits.len() {
        if trits[i] == Trit::ONE && trits[i + 1] == Trit::TWO {
            count += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    count
}

/// Number of positions `i` with `trits[i..i + 2] == [1, 2]`.
///
/// Two occurrences of `1,2` can never overlap, so this always equals
/// [`count_12_pairs`]; it is kept as the substring-count reading of a pair.
pub fn count_12_substrings(trits: &[Trit]) -> usize {
    trits
        .windows(2)
        .filter(|w| w[0] == Trit::ONE && w[1] == Trit::TWO)
        .count()
}

/// Bit length of the fused encoding without building it.
pub fn b23_bit_length(trits: &[Trit]) -> usize {
    2 * (trits.len() - count_12_pairs(trits))
}

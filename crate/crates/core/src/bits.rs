//! MSB-first bitstreams with an explicit bit length.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A growable sequence of bits packed most-significant-bit first.
///
/// Bits past `len` in the last byte are always zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bitstream {
    bytes: Vec<u8>,
    len: usize,
}

impl Bitstream {
    pub const fn new() -> Bitstream {
        Bitstream {
            bytes: Vec::new(),
            len: 0,
        }
    }

    pub fn with_capacity(bits: usize) -> Bitstream {
        Bitstream {
            bytes: Vec::with_capacity(bits.div_ceil(8)),
            len: 0,
        }
    }

    /// Wraps packed bytes. Returns `None` when `bytes` is not exactly
    /// `ceil(len / 8)` long or a pad bit is set.
    pub fn from_packed(bytes: Vec<u8>, len: usize) -> Option<Bitstream> {
        if bytes.len() != len.div_ceil(8) {
            return None;
        }
        let used = len % 8;
        if used != 0 && bytes[bytes.len() - 1] & (0xFF >> used) != 0 {
            return None;
        }
        Some(Bitstream { bytes, len })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn push(&mut self, bit: bool) {
        let offset = self.len % 8;
        if offset == 0 {
            self.bytes.push(0);
        }
        if bit {
            let last = self.bytes.len() - 1;
            self.bytes[last] |= 0x80 >> offset;
        }
        self.len += 1;
    }

    /// Appends the low `width` bits of `value`, high bit first.
    pub fn push_bits(&mut self, value: u32, width: u32) {
        debug_assert!(width <= 32);
        for shift in (0..width).rev() {
            self.push((value >> shift) & 1 == 1);
        }
    }

    pub fn extend_from(&mut self, other: &Bitstream) {
        if self.len.is_multiple_of(8) {
            self.bytes.extend_from_slice(&other.bytes);
            self.len += other.len;
        } else {
            for bit in other.iter() {
                self.push(bit);
            }
        }
    }

    #[inline]
    pub fn get(&self, index: usize) -> Option<bool> {
        (index < self.len).then(|| self.bytes[index / 8] & (0x80 >> (index % 8)) != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.bytes[i / 8] & (0x80 >> (i % 8)) != 0)
    }

    /// Consecutive 2-bit groups as values `0..=3`. A trailing odd bit is ignored.
    pub fn groups(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len / 2).map(move |g| {
            let i = 2 * g;
            // groups never straddle a byte since i is even
            (self.bytes[i / 8] >> (6 - (i % 8))) & 0b11
        })
    }
}

impl fmt::Display for Bitstream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.pad(&s)
    }
}

impl fmt::Debug for Bitstream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstream({}; \"{}\")", self.len, self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseBitsError {
    pub position: usize,
    pub found: char,
}

impl fmt::Display for ParseBitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid bit {:?} at position {}",
            self.found, self.position
        )
    }
}

impl core::error::Error for ParseBitsError {}

impl FromStr for Bitstream {
    type Err = ParseBitsError;

    /// Parses `'0'`/`'1'` characters; ASCII whitespace is skipped so that
    /// wrapped fixture lines can be pasted as is.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Bitstream::with_capacity(s.len());
        for (position, found) in s.chars().enumerate() {
            match found {
                '0' => out.push(false),
                '1' => out.push(true),
                c if c.is_ascii_whitespace() => {}
                _ => return Err(ParseBitsError { position, found }),
            }
        }
        Ok(out)
    }
}

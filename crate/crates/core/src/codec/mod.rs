//! Text compression pipeline.
//!
//! Each character is replaced by the fused encoding of its own 4-trit code
//! and the results are concatenated. Pairs are never fused across a
//! character boundary, so every character costs 4, 6 or 8 bits exactly as
//! listed by [`crate::table::Entry::b23_bits`]. Decoding maps each 2-bit
//! group back to trits and reads the trits four at a time.

mod assign;
mod container;

pub use assign::{assign_codes, AssignError, CodeAssignment};
pub use container::{Container, ContainerError, HEADER_LEN, MAGIC, VERSION};

use crate::b23::{self, B23Error};
use crate::bits::Bitstream;
use crate::table::{SymbolTable, TableMode, UnsupportedChar, CODE_WIDTH};
use crate::trit::{Trit, TritString};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeError {
    Container(ContainerError),
    OddLength(usize),
    /// The decoded trits do not split into whole 4-trit codes.
    TruncatedPayload {
        trits: usize,
    },
    TableModeMismatch {
        container: TableMode,
        table: TableMode,
    },
}

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeError::Container(e) => write!(f, "malformed container: {e}"),
            DecodeError::OddLength(n) => write!(f, "bitstream length {n} is odd"),
            DecodeError::TruncatedPayload { trits } => write!(
                f,
                "corrupt or truncated payload: {trits} trits is not a multiple of {CODE_WIDTH}"
            ),
            DecodeError::TableModeMismatch { container, table } => write!(
                f,
                "container was written with the {container} table but decoding uses {table}"
            ),
        }
    }
}

impl core::error::Error for DecodeError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            DecodeError::Container(e) => Some(e),
            _ => None,
        }
    }
}

impl From<ContainerError> for DecodeError {
    fn from(e: ContainerError) -> Self {
        DecodeError::Container(e)
    }
}

impl From<B23Error> for DecodeError {
    fn from(e: B23Error) -> Self {
        match e {
            B23Error::OddLength(n) => DecodeError::OddLength(n),
            // decode_b23 accepts every group
            B23Error::InvalidA23Group { .. } => unreachable!(),
        }
    }
}

/// Maps `text` to the concatenation of its characters' 4-trit codes.
pub fn text_to_trits(text: &str, table: &SymbolTable) -> Result<TritString, UnsupportedChar> {
    let mut out = TritString::with_capacity(CODE_WIDTH * text.len());
    for (position, character) in text.chars().enumerate() {
        let code = table.code_of(character).ok_or(UnsupportedChar {
            position,
            character,
        })?;
        out.extend_from_slice(code);
    }
    Ok(out)
}

/// Encodes `text` as a bare bitstream, fusing within each character only.
pub fn encode_bits(text: &str, table: &SymbolTable) -> Result<Bitstream, UnsupportedChar> {
    let mut bits = Bitstream::with_capacity(8 * text.len());
    for (position, character) in text.chars().enumerate() {
        let code = table.code_of(character).ok_or(UnsupportedChar {
            position,
            character,
        })?;
        b23::encode_b23_into(code, &mut bits);
    }
    Ok(bits)
}

/// Inverse of [`encode_bits`].
pub fn decode_bits(bits: &Bitstream, table: &SymbolTable) -> Result<String, DecodeError> {
    let trits = b23::decode_b23(bits)?;
    trits_to_text(&trits, table)
}

pub fn trits_to_text(trits: &[Trit], table: &SymbolTable) -> Result<String, DecodeError> {
    if !trits.len().is_multiple_of(CODE_WIDTH) {
        return Err(DecodeError::TruncatedPayload { trits: trits.len() });
    }
    Ok(trits
        .chunks_exact(CODE_WIDTH)
        .map(|code| table.trits_to_symbol(code).expect("chunk has code width"))
        .collect())
}

pub fn compress(text: &str, table: &SymbolTable) -> Result<Container, UnsupportedChar> {
    let bits = encode_bits(text, table)?;
    Ok(Container::new(table.mode(), bits).expect("per-character encodings have even length"))
}

/// Decodes a container. Its recorded table mode must match `table`.
pub fn decompress(container: &Container, table: &SymbolTable) -> Result<String, DecodeError> {
    if container.table_mode() != table.mode() {
        return Err(DecodeError::TableModeMismatch {
            container: container.table_mode(),
            table: table.mode(),
        });
    }
    decode_bits(container.payload(), table)
}

/// Parses container bytes and decodes them with the table they name.
pub fn decompress_bytes(bytes: &[u8]) -> Result<String, DecodeError> {
    let container = Container::from_bytes(bytes)?;
    decompress(&container, &SymbolTable::new(container.table_mode()))
}

/// Exact bit counts for one text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompressionStats {
    pub input_chars: usize,
    /// Bits produced by [`compress`].
    pub b23_bits: usize,
    /// Bits for the same codes without fusion: 8 per character.
    pub a23_bits: usize,
    /// Bits at one byte per character.
    pub baseline_bits: usize,
    /// Pairs fused by [`compress`].
    pub pairs_fused: usize,
    /// Additional pairs a single scan over the whole trit string would fuse
    /// across character boundaries. Diagnostic only.
    pub cross_boundary_pairs: usize,
}

impl CompressionStats {
    /// `b23_bits / baseline_bits`; zero for empty input.
    pub fn ratio_vs_baseline(&self) -> f64 {
        if self.baseline_bits == 0 {
            0.0
        } else {
            self.b23_bits as f64 / self.baseline_bits as f64
        }
    }

    /// How much larger the baseline is than the compressed form:
    /// `baseline_bits / b23_bits - 1`. Zero when nothing was compressed.
    pub fn baseline_overhead(&self) -> f64 {
        if self.b23_bits == 0 {
            0.0
        } else {
            self.baseline_bits as f64 / self.b23_bits as f64 - 1.0
        }
    }
}

pub fn stats(text: &str, table: &SymbolTable) -> Result<CompressionStats, UnsupportedChar> {
    let mut s = CompressionStats::default();
    for (position, character) in text.chars().enumerate() {
        let code = table.code_of(character).ok_or(UnsupportedChar {
            position,
            character,
        })?;
        let pairs = b23::count_12_pairs(code);
        s.input_chars += 1;
        s.pairs_fused += pairs;
        s.b23_bits += 2 * (CODE_WIDTH - pairs);
    }
    s.a23_bits = 2 * CODE_WIDTH * s.input_chars;
    s.baseline_bits = 8 * s.input_chars;
    let global = b23::count_12_pairs(&text_to_trits(text, table)?);
    s.cross_boundary_pairs = global - s.pairs_fused;
    Ok(s)
}

/// Fused bit length of every table row, indexed by table index.
pub fn code_lengths(table: &SymbolTable) -> Vec<(char, usize)> {
    table
        .entries()
        .map(|e| (e.character, e.b23_bit_length()))
        .collect()
}

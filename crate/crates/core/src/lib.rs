//! Ternary text compression with 12-pair fusion.
//!
//! Text is mapped character by character onto 4-trit codewords through a
//! fixed 81-entry [`SymbolTable`]. The trits are then written as 2-bit groups
//! (`0 -> 00`, `1 -> 01`, `2 -> 10`), and every adjacent `1,2` pair is fused
//! into the otherwise unused group `11`. Frequent characters sit on codewords
//! that contain such a pair, so they cost 6 bits (the space costs 4) instead
//! of 8.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`trit`]: trits, trit strings and base-3 conversion.
//! - [`table`]: the character table and the English letter frequencies.
//! - [`bits`] and [`b23`]: bitstreams and the fixed-width / fusing maps.
//! - [`codec`]: the text pipeline, the container format, statistics and
//!   frequency-driven codeword assignment.
//! - [`combinatorics`]: counting of strings without a `1,2` pair, the
//!   probability that a random string contains one, the compression-ratio
//!   bound and a seeded Monte Carlo explorer.
//!
//! ```
//! use b23_core::{codec, SymbolTable};
//!
//! let table = SymbolTable::corrected();
//! let container = codec::compress("This is the test message.", &table).unwrap();
//! assert_eq!(container.payload_bit_length(), 146);
//! assert_eq!(codec::decompress(&container, &table).unwrap(), "This is the test message.");
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod b23;
pub mod bits;
pub mod codec;
pub mod combinatorics;
pub mod table;
pub mod trit;

pub use b23::{count_12_pairs, decode_a23, decode_b23, encode_a23, encode_b23, B23Error};
pub use bits::{Bitstream, ParseBitsError};
pub use table::{FrequencyTable, SymbolTable, TableMode, UnsupportedChar};
pub use trit::{to_ternary, Trit, TritError, TritString};

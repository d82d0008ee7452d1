//! Byte layout of a compressed document.
//!
//! ```text
//! offset  size  field
//!      0     4  magic  42 32 33 01 ("B23", 0x01)
//!      4     1  version (1)
//!      5     1  table mode (0 = corrected, 1 = strict-paper)
//!      6     8  payload bit length, big-endian u64, always even
//!     14     n  payload, n = ceil(bit length / 8), MSB-first, zero padded
//! ```

use crate::bits::Bitstream;
use crate::table::TableMode;
use alloc::vec::Vec;
use core::fmt;

pub const MAGIC: [u8; 4] = [0x42, 0x32, 0x33, 0x01];
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Container {
    version: u8,
    table_mode: TableMode,
    payload: Bitstream,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContainerError {
    Truncated { len: usize },
    BadMagic([u8; 4]),
    UnsupportedVersion(u8),
    UnknownTableMode(u8),
    OddBitLength(u64),
    BitLengthExceedsPayload { declared: u64, available: u64 },
    TrailingBytes { expected: usize, found: usize },
    NonZeroPadding,
}

impl fmt::Display for ContainerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContainerError::Truncated { len } => {
                write!(
                    f,
                    "container truncated: {len} bytes, header needs {HEADER_LEN}"
                )
            }
            ContainerError::BadMagic(m) => write!(f, "bad magic {m:02x?}"),
            ContainerError::UnsupportedVersion(v) => write!(f, "unsupported container version {v}"),
            ContainerError::UnknownTableMode(m) => write!(f, "unknown table mode flag {m}"),
            ContainerError::OddBitLength(n) => write!(f, "declared payload bit length {n} is odd"),
            ContainerError::BitLengthExceedsPayload {
                declared,
                available,
            } => write!(
                f,
                "declared payload bit length {declared} exceeds the {available} bits present"
            ),
            ContainerError::TrailingBytes { expected, found } => {
                write!(f, "payload has {found} bytes, expected {expected}")
            }
            ContainerError::NonZeroPadding => f.write_str("payload pad bits are not zero"),
        }
    }
}

impl core::error::Error for ContainerError {}

impl Container {
    /// Wraps an even-length payload.
    pub fn new(table_mode: TableMode, payload: Bitstream) -> Result<Container, ContainerError> {
        if !payload.len().is_multiple_of(2) {
            return Err(ContainerError::OddBitLength(payload.len() as u64));
        }
        Ok(Container {
            version: VERSION,
            table_mode,
            payload,
        })
    }

    pub fn version(&self) -> u8 {
        self.version
    }

    pub fn table_mode(&self) -> TableMode {
        self.table_mode
    }

    pub fn payload(&self) -> &Bitstream {
        &self.payload
    }

    pub fn into_payload(self) -> Bitstream {
        self.payload
    }

    pub fn payload_bit_length(&self) -> usize {
        self.payload.len()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.as_bytes().len());
        out.extend_from_slice(&MAGIC);
        out.push(self.version);
        out.push(self.table_mode.flag());
        out.extend_from_slice(&(self.payload.len() as u64).to_be_bytes());
        out.extend_from_slice(self.payload.as_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Container, ContainerError> {
        if bytes.len() < HEADER_LEN {
            return Err(ContainerError::Truncated { len: bytes.len() });
        }
        let (header, body) = bytes.split_at(HEADER_LEN);
        let magic: [u8; 4] = header[0..4].try_into().unwrap();
        if magic != MAGIC {
            return Err(ContainerError::BadMagic(magic));
        }
        let version = header[4];
        if version != VERSION {
            return Err(ContainerError::UnsupportedVersion(version));
        }
        let table_mode =
            TableMode::from_flag(header[5]).ok_or(ContainerError::UnknownTableMode(header[5]))?;
        let declared = u64::from_be_bytes(header[6..14].try_into().unwrap());
        if declared % 2 != 0 {
            return Err(ContainerError::OddBitLength(declared));
        }
        let available = (body.len() as u64).saturating_mul(8);
        if declared > available {
            return Err(ContainerError::BitLengthExceedsPayload {
                declared,
                available,
            });
        }
        // declared <= available, so this fits in usize
        let bit_len = declared as usize;
        let expected = bit_len.div_ceil(8);
        if body.len() != expected {
            return Err(ContainerError::TrailingBytes {
                expected,
                found: body.len(),
            });
        }
        let payload =
            Bitstream::from_packed(body.to_vec(), bit_len).ok_or(ContainerError::NonZeroPadding)?;
        Ok(Container {
            version,
            table_mode,
            payload,
        })
    }
}

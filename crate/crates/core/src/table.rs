//! The 81-entry character table and English letter frequencies.
//!
//! Entry `i` maps a character to the 4-trit base-3 representation of `i`.
//! The characters are arranged so that frequent ones land on codewords
//! containing a `1,2` pair: the thirteen most common lowercase letters and
//! the space get 6- and 4-bit encodings, everything else 8 bits.

use crate::b23;
use crate::bits::Bitstream;
use crate::trit::{Trit, TritString};
use core::fmt;

pub const TABLE_SIZE: usize = 81;
pub const CODE_WIDTH: usize = 4;

/// Index 20 holds `'T'` in the original layout, duplicating index 5, and
/// uppercase `'E'` is missing. The corrected layout puts `'E'` there.
const DUPLICATE_SLOT: usize = 20;

#[rustfmt::skip]
const CORRECTED: [char; TABLE_SIZE] = [
    'W', 'N', 'B', 'C', 'D', 'T', 'F', 'G', 'H',
    'P', 'J', 'K', 'L', 'M', 'A', 'O', 'I', 'S',
    'R', 'Q', 'E', 'U', 'V', '.', 'X', 'Y', 'Z',
    'z', 'p', 'b', 'w', 'x', 'e', 'f', 'g', 'v',
    'q', 'j', 'k', 'y', 'm', 'n', 'o', 'a', 'i',
    'r', 's', 't', 'u', 'h', ' ', 'd', 'l', 'c',
    '!', '$', '^', '%', '\u{221A}', ',', '*', '/', '=',
    '<', '>', '@', '&', '\'', '"', '?', '(', ')',
    '{', '}', '[', ']', '\\', ';', ':', '+', '-',
];

const fn strict_chars() -> [char; TABLE_SIZE] {
    let mut chars = CORRECTED;
    chars[DUPLICATE_SLOT] = 'T';
    chars
}

const STRICT: [char; TABLE_SIZE] = strict_chars();

const NO_ENTRY: u8 = u8::MAX;

/// ASCII lookup; the only non-ASCII entry (the square root sign) is matched
/// separately.
const fn ascii_index(chars: &[char; TABLE_SIZE]) -> [u8; 128] {
    let mut lookup = [NO_ENTRY; 128];
    let mut i = TABLE_SIZE;
    // walk backwards so the lower index wins for the duplicated 'T'
    while i > 0 {
        i -= 1;
        let c = chars[i] as u32;
        if c < 128 {
            lookup[c as usize] = i as u8;
        }
    }
    lookup
}

const CORRECTED_LOOKUP: [u8; 128] = ascii_index(&CORRECTED);
const STRICT_LOOKUP: [u8; 128] = ascii_index(&STRICT);
const SQRT_INDEX: u8 = 58;

const fn code_for(index: usize) -> [Trit; CODE_WIDTH] {
    let mut code = [Trit::ZERO; CODE_WIDTH];
    let mut n = index;
    let mut k = CODE_WIDTH;
    while k > 0 {
        k -= 1;
        code[k] = match n % 3 {
            0 => Trit::ZERO,
            1 => Trit::ONE,
            _ => Trit::TWO,
        };
        n /= 3;
    }
    code
}

const fn all_codes() -> [[Trit; CODE_WIDTH]; TABLE_SIZE] {
    let mut codes = [[Trit::ZERO; CODE_WIDTH]; TABLE_SIZE];
    let mut i = 0;
    while i < TABLE_SIZE {
        codes[i] = code_for(i);
        i += 1;
    }
    codes
}

static CODES: [[Trit; CODE_WIDTH]; TABLE_SIZE] = all_codes();

/// Which character layout a table uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TableMode {
    /// Bijective layout with `'E'` at index 20.
    #[default]
    Corrected,
    /// The original layout with `'T'` at both index 5 and index 20.
    /// Encoding picks index 5; both codes decode to `'T'`.
    StrictPaper,
}

impl TableMode {
    pub const fn flag(self) -> u8 {
        match self {
            TableMode::Corrected => 0,
            TableMode::StrictPaper => 1,
        }
    }

    pub const fn from_flag(flag: u8) -> Option<TableMode> {
        match flag {
            0 => Some(TableMode::Corrected),
            1 => Some(TableMode::StrictPaper),
            _ => None,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            TableMode::Corrected => "corrected",
            TableMode::StrictPaper => "strict-paper",
        }
    }
}

impl core::str::FromStr for TableMode {
    type Err = UnknownTableMode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "corrected" => Ok(TableMode::Corrected),
            "strict-paper" => Ok(TableMode::StrictPaper),
            _ => Err(UnknownTableMode),
        }
    }
}

impl fmt::Display for TableMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownTableMode;

impl fmt::Display for UnknownTableMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("table mode must be `corrected` or `strict-paper`")
    }
}

impl core::error::Error for UnknownTableMode {}

/// A character outside the table, with its character index in the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnsupportedChar {
    pub position: usize,
    pub character: char,
}

impl fmt::Display for UnsupportedChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unsupported character {:?} (U+{:04X}) at offset {}",
            self.character, self.character as u32, self.position
        )
    }
}

impl core::error::Error for UnsupportedChar {}

/// One table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: usize,
    pub character: char,
    pub code: [Trit; CODE_WIDTH],
}

impl Entry {
    /// Fused encoding of this row's code on its own.
    pub fn b23_bits(&self) -> Bitstream {
        b23::encode_b23(&self.code)
    }

    pub fn b23_bit_length(&self) -> usize {
        b23::b23_bit_length(&self.code)
    }
}

/// Bidirectional map between the 81 table characters and their 4-trit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolTable {
    mode: TableMode,
    chars: &'static [char; TABLE_SIZE],
    lookup: &'static [u8; 128],
}

impl SymbolTable {
    pub const fn new(mode: TableMode) -> SymbolTable {
        match mode {
            TableMode::Corrected => SymbolTable {
                mode,
                chars: &CORRECTED,
                lookup: &CORRECTED_LOOKUP,
            },
            TableMode::StrictPaper => SymbolTable {
                mode,
                chars: &STRICT,
                lookup: &STRICT_LOOKUP,
            },
        }
    }

    pub const fn corrected() -> SymbolTable {
        SymbolTable::new(TableMode::Corrected)
    }

    pub const fn strict_paper() -> SymbolTable {
        SymbolTable::new(TableMode::StrictPaper)
    }

    pub const fn mode(&self) -> TableMode {
        self.mode
    }

    pub fn entries(&self) -> impl ExactSizeIterator<Item = Entry> + '_ {
        (0..TABLE_SIZE).map(move |index| self.entry(index))
    }

    /// Row `index`, for `index < 81`.
    pub fn entry(&self, index: usize) -> Entry {
        Entry {
            index,
            character: self.chars[index],
            code: CODES[index],
        }
    }

    /// Table index of `ch`; the lower index for the duplicated `'T'`.
    #[inline]
    pub fn index_of(&self, ch: char) -> Option<usize> {
        let idx = match ch {
            c if c.is_ascii() => self.lookup[c as usize],
            '\u{221A}' => SQRT_INDEX,
            _ => NO_ENTRY,
        };
        (idx != NO_ENTRY).then_some(usize::from(idx))
    }

    pub fn contains(&self, ch: char) -> bool {
        self.index_of(ch).is_some()
    }

    #[inline]
    pub fn code_of(&self, ch: char) -> Option<&'static [Trit; CODE_WIDTH]> {
        self.index_of(ch).map(|i| &CODES[i])
    }

    /// The 4-trit code of `ch`. The error reports position 0; callers that
    /// scan text fill in the real offset.
    pub fn symbol_to_trits(&self, ch: char) -> Result<TritString, UnsupportedChar> {
        self.code_of(ch)
            .map(|c| TritString::from(&c[..]))
            .ok_or(UnsupportedChar {
                position: 0,
                character: ch,
            })
    }

    /// Character for a 4-trit code. Every such code is assigned, so this only
    /// fails on a wrong length.
    pub fn trits_to_symbol(&self, code: &[Trit]) -> Option<char> {
        if code.len() != CODE_WIDTH {
            return None;
        }
        let index = code
            .iter()
            .fold(0usize, |acc, t| acc * 3 + usize::from(t.value()));
        Some(self.chars[index])
    }
}

impl Default for SymbolTable {
    fn default() -> Self {
        SymbolTable::corrected()
    }
}

/// English letter frequencies in percent.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencyTable {
    letters: &'static [(char, f64)],
    first_letters: &'static [(char, f64)],
}

#[rustfmt::skip]
static LETTER_FREQUENCIES: [(char, f64); 26] = [
    ('a', 8.167), ('b', 1.492), ('c', 2.782), ('d', 4.253), ('e', 12.702),
    ('f', 2.228), ('g', 2.015), ('h', 6.094), ('i', 6.966), ('j', 0.153),
    ('k', 0.772), ('l', 4.025), ('m', 2.406), ('n', 6.749), ('o', 7.507),
    ('p', 1.929), ('q', 0.095), ('r', 5.987), ('s', 6.327), ('t', 9.056),
    ('u', 2.758), ('v', 0.978), ('w', 2.360), ('x', 0.150), ('y', 1.974),
    ('z', 0.074),
];

// Only the ten most common word-initial letters are known.
#[rustfmt::skip]
static FIRST_LETTER_FREQUENCIES: [(char, f64); 10] = [
    ('T', 15.94), ('A', 15.5), ('I', 8.23), ('S', 7.75), ('O', 7.12),
    ('C', 5.97), ('M', 4.26), ('F', 4.08), ('P', 4.0), ('W', 3.82),
];

impl FrequencyTable {
    pub fn english() -> FrequencyTable {
        FrequencyTable {
            letters: &LETTER_FREQUENCIES,
            first_letters: &FIRST_LETTER_FREQUENCIES,
        }
    }

    /// Lowercase letter frequencies, alphabetical.
    pub fn letters(&self) -> &[(char, f64)] {
        self.letters
    }

    /// Frequencies of uppercase letters as the first letter of a word.
    pub fn first_letters(&self) -> &[(char, f64)] {
        self.first_letters
    }

    pub fn letter(&self, c: char) -> Option<f64> {
        self.letters.iter().find(|(l, _)| *l == c).map(|&(_, f)| f)
    }
}

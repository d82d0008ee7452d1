//! Frequency-driven codeword assignment.
//!
//! Symbols sorted by descending probability are paired index-wise with
//! codewords sorted by descending pair count, so the most probable symbols
//! receive the codewords that shrink the most under fusion. Both sorts are
//! stable: ties keep their input order.

use crate::b23::count_12_pairs;
use crate::trit::TritString;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum AssignError {
    TooFewCodewords { symbols: usize, codewords: usize },
    InvalidProbability { index: usize, value: f64 },
    DuplicateCodeword { index: usize },
    DuplicateSymbol { index: usize },
}

impl fmt::Display for AssignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssignError::TooFewCodewords { symbols, codewords } => {
                write!(f, "{symbols} symbols but only {codewords} codewords")
            }
            AssignError::InvalidProbability { index, value } => {
                write!(f, "symbol {index} has invalid probability {value}")
            }
            AssignError::DuplicateCodeword { index } => write!(f, "codeword {index} is repeated"),
            AssignError::DuplicateSymbol { index } => write!(f, "symbol {index} is repeated"),
        }
    }
}

impl core::error::Error for AssignError {}

#[derive(Clone, Debug, PartialEq)]
pub struct CodeAssignment<S> {
    /// `(symbol, probability, codeword)` in descending probability order.
    pairs: Vec<(S, f64, TritString)>,
}

impl<S: PartialEq> CodeAssignment<S> {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&S, &TritString)> {
        self.pairs.iter().map(|(s, _, c)| (s, c))
    }

    pub fn codeword(&self, symbol: &S) -> Option<&TritString> {
        self.pairs
            .iter()
            .find(|(s, _, _)| s == symbol)
            .map(|(_, _, c)| c)
    }

    /// True when no pair of symbols has probability order and pair-count
    /// order inverted.
    pub fn is_monotone(&self) -> bool {
        let keyed: Vec<(f64, usize)> = self
            .pairs
            .iter()
            .map(|(_, p, c)| (*p, count_12_pairs(c)))
            .collect();
        keyed.iter().enumerate().all(|(i, &(pi, di))| {
            keyed[i + 1..]
                .iter()
                .all(|&(pj, dj)| !(pi > pj && di < dj) && !(pj > pi && dj < di))
        })
    }
}

pub fn assign_codes<S: Clone + PartialEq>(
    alphabet: &[(S, f64)],
    codewords: &[TritString],
) -> Result<CodeAssignment<S>, AssignError> {
    if alphabet.len() > codewords.len() {
        return Err(AssignError::TooFewCodewords {
            symbols: alphabet.len(),
            codewords: codewords.len(),
        });
    }
    for (index, (sym, p)) in alphabet.iter().enumerate() {
        if !(*p >= 0.0 && p.is_finite()) {
            return Err(AssignError::InvalidProbability { index, value: *p });
        }
        if alphabet[..index].iter().any(|(s, _)| s == sym) {
            return Err(AssignError::DuplicateSymbol { index });
        }
    }
    for (index, c) in codewords.iter().enumerate() {
        if codewords[..index].contains(c) {
            return Err(AssignError::DuplicateCodeword { index });
        }
    }

    let mut by_probability: Vec<usize> = (0..alphabet.len()).collect();
    by_probability.sort_by(|&a, &b| alphabet[b].1.total_cmp(&alphabet[a].1));

    let mut by_pairs: Vec<(usize, &TritString)> =
        codewords.iter().map(|c| (count_12_pairs(c), c)).collect();
    by_pairs.sort_by_key(|p| core::cmp::Reverse(p.0));

    let pairs = by_probability
        .into_iter()
        .zip(by_pairs)
        .map(|(i, (_, c))| (alphabet[i].0.clone(), alphabet[i].1, c.clone()))
        .collect();
    Ok(CodeAssignment { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn tw(s: &str) -> TritString {
        s.parse().unwrap()
    }

    #[test]
    fn two_symbols() {
        let a = assign_codes(&[('x', 0.9), ('y', 0.1)], &[tw("00"), tw("12")]).unwrap();
        assert_eq!(a.codeword(&'x'), Some(&tw("12")));
        assert_eq!(a.codeword(&'y'), Some(&tw("00")));
        assert!(a.is_monotone());
    }

    #[test]
    fn ties_keep_input_order() {
        let words = [tw("00"), tw("01"), tw("02")];
        let a = assign_codes(&[('a', 0.25), ('b', 0.25), ('c', 0.25)], &words).unwrap();
        let got: Vec<_> = a.pairs().map(|(s, c)| (*s, c.clone())).collect();
        assert_eq!(
            got,
            vec![
                ('a', words[0].clone()),
                ('b', words[1].clone()),
                ('c', words[2].clone())
            ]
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            assign_codes(&[('a', 0.5), ('b', 0.5)], &[tw("0")]),
            Err(AssignError::TooFewCodewords {
                symbols: 2,
                codewords: 1
            })
        );
        assert!(matches!(
            assign_codes(&[('a', -0.1)], &[tw("0")]),
            Err(AssignError::InvalidProbability { index: 0, .. })
        ));
        assert!(matches!(
            assign_codes(&[('a', f64::NAN)], &[tw("0")]),
            Err(AssignError::InvalidProbability { .. })
        ));
        assert_eq!(
            assign_codes(&[('a', 0.5)], &[tw("0"), tw("0")]),
            Err(AssignError::DuplicateCodeword { index: 1 })
        );
        assert_eq!(
            assign_codes(&[('a', 0.5), ('a', 0.1)], &[tw("0"), tw("1")]),
            Err(AssignError::DuplicateSymbol { index: 1 })
        );
    }

    #[test]
    fn more_codewords_than_symbols() {
        let a = assign_codes(&[('a', 1.0)], &[tw("00"), tw("1212"), tw("12")]).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.codeword(&'a'), Some(&tw("1212")));
    }

    proptest! {
        #[test]
        fn monotone_and_distinct(
            probs in proptest::collection::vec(0u32..20, 1..40),
            extra in 0usize..10,
        ) {
            let alphabet: Vec<(usize, f64)> =
                probs.iter().enumerate().map(|(i, &p)| (i, f64::from(p))).collect();
            let words: Vec<TritString> = (0..(alphabet.len() + extra) as u64)
                .map(|n| TritString::from_value_padded(n, 5))
                .collect();
            let a = assign_codes(&alphabet, &words).unwrap();
            prop_assert!(a.is_monotone());
            prop_assert_eq!(a.len(), alphabet.len());
            let mut seen: Vec<&TritString> = a.pairs().map(|(_, c)| c).collect();
            seen.sort_by_key(|c| c.value());
            seen.dedup();
            prop_assert_eq!(seen.len(), alphabet.len());
        }
    }
}

use b23_core::codec::assign_codes;
use b23_core::{count_12_pairs, FrequencyTable, SymbolTable, TritString};

fn all_codewords() -> Vec<TritString> {
    (0..81)
        .map(|n| TritString::from_value_padded(n, 4))
        .collect()
}

/// Letters weighted by their English frequency, every other table symbol at zero.
fn english_alphabet(space_share: Option<f64>) -> Vec<(char, f64)> {
    let freqs = FrequencyTable::english();
    let letter_scale = if space_share.is_some() { 0.5 } else { 1.0 };
    SymbolTable::corrected()
        .entries()
        .map(|e| {
            let p = match (e.character, space_share) {
                (' ', Some(s)) => s,
                (c, _) => freqs.letter(c).map_or(0.0, |f| f * letter_scale),
            };
            (e.character, p)
        })
        .collect()
}

#[test]
fn e_gets_a_maximal_codeword() {
    let words = all_codewords();
    let a = assign_codes(&english_alphabet(None), &words).unwrap();
    assert!(a.is_monotone());
    let max_pairs = words.iter().map(|w| count_12_pairs(w)).max().unwrap();
    assert_eq!(max_pairs, 2);
    assert_eq!(count_12_pairs(a.codeword(&'e').unwrap()), max_pairs);
}

#[test]
fn with_dominant_space_e_gets_a_single_pair_codeword() {
    let a = assign_codes(&english_alphabet(Some(50.0)), &all_codewords()).unwrap();
    assert_eq!(a.codeword(&' ').unwrap().to_string(), "1212");
    assert_eq!(count_12_pairs(a.codeword(&'e').unwrap()), 1);
    // the 25 single-pair codewords go to the 25 most frequent letters
    let freqs = FrequencyTable::english();
    let mut letters: Vec<(char, f64)> = freqs.letters().to_vec();
    letters.sort_by(|a, b| b.1.total_cmp(&a.1));
    for (c, _) in &letters[..25] {
        assert_eq!(count_12_pairs(a.codeword(c).unwrap()), 1, "{c}");
    }
    assert_eq!(count_12_pairs(a.codeword(&letters[25].0).unwrap()), 0);
}

#[test]
fn generated_assignment_differs_from_fixed_table() {
    // the fixed table is data, not the output of the assignment procedure
    let a = assign_codes(&english_alphabet(Some(50.0)), &all_codewords()).unwrap();
    let table = SymbolTable::corrected();
    let same = table
        .entries()
        .filter(|e| a.codeword(&e.character).map(|c| c.as_slice()) == Some(&e.code[..]))
        .count();
    assert!(same < 81);
}

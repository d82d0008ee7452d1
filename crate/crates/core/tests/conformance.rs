//! Checks the embedded table against a transcribed copy of the reference
//! coding table (decimal, character, ternary code, fused bits).

use b23_core::codec::{compress, decompress};
use b23_core::{encode_b23, SymbolTable, TableMode, TritString};

const FIXTURE: &str = include_str!("fixtures/code_table.tsv");

struct Row {
    decimal: usize,
    character: char,
    ternary: String,
    bits: String,
}

fn fixture() -> Vec<Row> {
    FIXTURE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 4, "{l:?}");
            Row {
                decimal: f[0].parse().unwrap(),
                character: f[1].chars().next().unwrap(),
                ternary: f[2].to_owned(),
                bits: f[3].to_owned(),
            }
        })
        .collect()
}

#[test]
fn strict_table_matches_fixture_row_by_row() {
    let rows = fixture();
    assert_eq!(rows.len(), 81);
    let table = SymbolTable::strict_paper();
    for (row, entry) in rows.iter().zip(table.entries()) {
        assert_eq!(row.decimal, entry.index);
        assert_eq!(row.character, entry.character, "row {}", row.decimal);
        assert_eq!(row.ternary, TritString::from(&entry.code[..]).to_string());
        assert_eq!(
            row.bits,
            entry.b23_bits().to_string(),
            "row {}",
            row.decimal
        );
    }
}

#[test]
fn corrected_table_differs_only_at_duplicate() {
    let strict = SymbolTable::strict_paper();
    let corrected = SymbolTable::corrected();
    let diffs: Vec<(usize, char, char)> = strict
        .entries()
        .zip(corrected.entries())
        .filter(|(a, b)| a.character != b.character)
        .map(|(a, b)| (a.index, a.character, b.character))
        .collect();
    assert_eq!(diffs, vec![(20, 'T', 'E')]);
}

#[test]
fn every_character_compresses_to_its_row() {
    for (mode, skip) in [
        (TableMode::Corrected, None),
        (TableMode::StrictPaper, Some(20)),
    ] {
        let table = SymbolTable::new(mode);
        for row in fixture() {
            if Some(row.decimal) == skip {
                // the duplicate 'T' encodes through its first row
                continue;
            }
            let c = if mode == TableMode::Corrected {
                table.entry(row.decimal).character
            } else {
                row.character
            };
            let container = compress(&c.to_string(), &table).unwrap();
            assert_eq!(container.payload().to_string(), row.bits, "{c:?}");
            assert_eq!(decompress(&container, &table).unwrap(), c.to_string());
        }
    }
}

#[test]
fn fixture_bits_are_fused_ternary() {
    for row in fixture() {
        let trits: TritString = row.ternary.parse().unwrap();
        assert_eq!(encode_b23(&trits).to_string(), row.bits);
    }
}

#[test]
fn bold_rows() {
    let rows = fixture();
    let short_lower: String = rows
        .iter()
        .filter(|r| r.bits.len() == 6 && r.character.is_ascii_lowercase())
        .map(|r| r.character)
        .collect();
    assert_eq!(short_lower.len(), 13);
    let space = rows.iter().find(|r| r.character == ' ').unwrap();
    assert_eq!(space.bits, "1111");
    let e = rows.iter().find(|r| r.character == 'e').unwrap();
    assert_eq!(e.bits, "010011");
}

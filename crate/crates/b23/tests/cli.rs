use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_b23");
const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus");

fn b23(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn corpus(name: &str) -> Vec<u8> {
    std::fs::read(Path::new(CORPUS).join(name)).unwrap()
}

/// Container built by hand from a bitstring: magic, version, mode, length, packed bits.
fn container_from_bits(bits: &str, mode: u8) -> Vec<u8> {
    let mut out = vec![0x42, 0x32, 0x33, 0x01, 1, mode];
    out.extend_from_slice(&(bits.len() as u64).to_be_bytes());
    for chunk in bits.as_bytes().chunks(8) {
        let mut byte = 0u8;
        for (i, b) in chunk.iter().enumerate() {
            if *b == b'1' {
                byte |= 0x80 >> i;
            }
        }
        out.push(byte);
    }
    out
}

#[test]
fn roundtrip_corpus() {
    for name in ["message.txt", "pangram.txt", "symbols.txt"] {
        let text = corpus(name);
        for mode in ["corrected", "strict-paper"] {
            if mode == "strict-paper" && text.contains(&b'E') {
                // the strict layout has no 'E'
                assert_eq!(
                    b23(&["encode", "--table-mode", mode], &text).status.code(),
                    Some(1)
                );
                continue;
            }
            let enc = b23(&["encode", "--table-mode", mode], &text);
            assert!(
                enc.status.success(),
                "{name}: {}",
                String::from_utf8_lossy(&enc.stderr)
            );
            let dec = b23(&["decode"], &enc.stdout);
            assert!(dec.status.success());
            assert_eq!(dec.stdout, text, "{name} {mode}");
        }
    }
}

#[test]
fn message_matches_golden_bits() {
    let bits = String::from_utf8(corpus("message.bits")).unwrap();
    assert_eq!(bits.len(), 146);
    let enc = b23(&["encode", "--bits-text"], &corpus("message.txt"));
    assert_eq!(String::from_utf8(enc.stdout).unwrap().trim_end(), bits);
    let enc = b23(&["encode"], &corpus("message.txt"));
    assert_eq!(enc.stdout, container_from_bits(&bits, 0));
    let dec = b23(&["decode"], &container_from_bits(&bits, 0));
    assert_eq!(dec.stdout, corpus("message.txt"));
}

#[test]
fn files_and_output_flag() {
    let dir = tempfile::tempdir().unwrap();
    let packed = dir.path().join("p.b23");
    let input = Path::new(CORPUS).join("pangram.txt");
    let enc = b23(
        &[
            "encode",
            input.to_str().unwrap(),
            "-o",
            packed.to_str().unwrap(),
        ],
        b"",
    );
    assert!(enc.status.success());
    assert!(enc.stdout.is_empty());
    let dec = b23(&["decode", packed.to_str().unwrap()], b"");
    assert_eq!(dec.stdout, corpus("pangram.txt"));
}

#[test]
fn unsupported_character_exits_one() {
    let out = b23(&["encode"], b"Room 7");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("'7'"), "{err}");
    assert!(err.contains("offset 5"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_containers_exit_two() {
    let good = b23(&["encode"], &corpus("message.txt")).stdout;
    let mut bad_magic = good.clone();
    bad_magic[0] = b'X';
    let mut odd = good.clone();
    odd[13] = 145;
    for (what, bytes) in [
        ("truncated", good[..good.len() - 3].to_vec()),
        ("header only", good[..10].to_vec()),
        ("magic", bad_magic),
        ("odd length", odd),
        ("partial symbol", container_from_bits("00", 0)),
        ("two trits", container_from_bits("0000", 0)),
        ("six trits", container_from_bits("0000000011", 0)),
        ("version", {
            let mut v = good.clone();
            v[4] = 9;
            v
        }),
    ] {
        let out = b23(&["decode"], &bytes);
        assert_eq!(out.status.code(), Some(2), "{what}");
        assert!(!out.stderr.is_empty());
    }
    let w = b23(&["decode"], &container_from_bits("00000000", 0));
    assert_eq!((w.status.code(), w.stdout), (Some(0), b"W".to_vec()));
    assert_eq!(
        b23(&["--bits-text", "decode"], b"0101x").status.code(),
        Some(2)
    );
}

#[test]
fn analyze_counts() {
    let out = b23(&["analyze", "--n", "1..5", "--csv"], b"");
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    let rec: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(rec, ["3", "8", "21", "55", "144"]);
    let text = String::from_utf8(b23(&["analyze", "--n", "1..40"], b"").stdout).unwrap();
    assert!(text.contains("routes_agree             true"));
    assert!(text.contains("~"));
}

#[test]
fn table_dump() {
    let out = b23(&["table", "--table-mode", "strict-paper"], b"");
    let text = String::from_utf8(out.stdout).unwrap();
    let fixture = include_str!("../../core/tests/fixtures/code_table.tsv");
    let expected: Vec<&str> = fixture.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(text.lines().collect::<Vec<_>>(), expected);
    let parsed = b23::format::parse_table_dump(&text).unwrap();
    assert_eq!(parsed.len(), 81);
}

#[test]
fn mc_reports() {
    let out = b23(
        &["mc", "--n", "10", "--trials", "20000", "--seed", "3"],
        b"",
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("trials                20000"));
    let bad = b23(&["mc", "--n", "10", "--dist", "iid:0.5,0.5,0.5"], b"");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn mc_distribution_files() {
    let dir = tempfile::tempdir().unwrap();
    let markov = dir.path().join("chain.txt");
    std::fs::write(&markov, "# start\n1 0 0\n0.2 0.8 0\n0 0 1\n0 0 1\n").unwrap();
    let spec = format!("markov:{}", markov.display());
    let out = b23(&["mc", "--n", "3", "--trials", "500", "--dist", &spec], b"");
    let text = String::from_utf8(out.stdout).unwrap();
    // 0 -> 1 -> 2 happens with probability 0.8 and is the only way to pair
    let mean: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("mean_pairs"))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!((0.7..0.9).contains(&mean), "{mean}");

    let sample = Path::new(CORPUS).join("pangram.txt");
    let spec = format!("empirical:{}", sample.display());
    assert!(b23(
        &["mc", "--n", "40", "--trials", "500", "--dist", &spec],
        b""
    )
    .status
    .success());
    let short = b23(
        &["mc", "--n", "100000", "--trials", "5", "--dist", &spec],
        b"",
    );
    assert_eq!(short.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(b23(&["frobnicate"], b"").status.code(), Some(1));
    assert_eq!(b23(&["analyze", "--n", "5..1"], b"").status.code(), Some(1));
    assert_eq!(b23(&["--help"], b"").status.code(), Some(0));
}

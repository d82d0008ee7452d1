//! Parsing of `--dist` specifications.
//!
//! - `uniform` or `iid:p0,p1,p2`
//! - `markov:FILE`: four rows of three numbers (initial distribution, then
//!   the transition rows for a previous trit of 0, 1 and 2), separated by
//!   commas or whitespace; `#` starts a comment
//! - `empirical:FILE`: a text file mapped to trits through the symbol table

use crate::error::CliError;
use b23_core::codec::text_to_trits;
use b23_core::combinatorics::TritDistribution;
use b23_core::SymbolTable;
use std::path::Path;

pub fn parse_dist(spec: &str, table: &SymbolTable) -> Result<TritDistribution, CliError> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "uniform" if arg.is_empty() => Ok(TritDistribution::uniform()),
        "iid" => {
            let p = parse_row(arg).map_err(|m| CliError::Usage(format!("--dist iid: {m}")))?;
            Ok(TritDistribution::Iid(p))
        }
        "markov" => read_markov(Path::new(arg)),
        "empirical" => read_empirical(Path::new(arg), table),
        _ => Err(CliError::Usage(format!(
            "unknown distribution {spec:?}; expected iid:p0,p1,p2, markov:FILE or empirical:FILE"
        ))),
    }
}

fn parse_row(s: &str) -> Result<[f64; 3], String> {
    let values: Vec<f64> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 3 probabilities, found {}", v.len()))
}

pub fn parse_markov(text: &str) -> Result<TritDistribution, String> {
    let rows: Vec<[f64; 3]> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_row)
        .collect::<Result<_, _>>()?;
    let [initial, t0, t1, t2] = rows[..] else {
        return Err(format!(
            "expected 4 rows (initial + 3 transitions), found {}",
            rows.len()
        ));
    };
    Ok(TritDistribution::Markov {
        initial,
        transition: [t0, t1, t2],
    })
}

fn read_markov(path: &Path) -> Result<TritDistribution, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
    parse_markov(&text).map_err(|message| CliError::DistributionFile {
        path: path.to_owned(),
        message,
    })
}

fn read_empirical(path: &Path, table: &SymbolTable) -> Result<TritDistribution, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
    let trits = text_to_trits(&text, table)?;
    Ok(TritDistribution::Empirical(trits.into_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iid_and_uniform() {
        let t = SymbolTable::corrected();
        assert_eq!(
            parse_dist("iid:0,0.5,0.5", &t).unwrap(),
            TritDistribution::Iid([0.0, 0.5, 0.5])
        );
        assert_eq!(
            parse_dist("uniform", &t).unwrap(),
            TritDistribution::uniform()
        );
        assert!(parse_dist("iid:0.5,0.5", &t).is_err());
        assert!(parse_dist("iid:a,b,c", &t).is_err());
        assert!(parse_dist("gauss:1", &t).is_err());
    }

    #[test]
    fn markov_text() {
        let d = parse_markov("# start\n1 0 0\n0.5,0.5,0\n0 0 1 # from 1\n\n0.2 0.3 0.5\n").unwrap();
        assert_eq!(
            d,
            TritDistribution::Markov {
                initial: [1.0, 0.0, 0.0],
                transition: [[0.5, 0.5, 0.0], [0.0, 0.0, 1.0], [0.2, 0.3, 0.5]],
            }
        );
        assert!(parse_markov("1 0 0\n").unwrap_err().contains("found 1"));
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let m = dir.path().join("chain.txt");
        std::fs::write(&m, "1 0 0\n1 0 0\n1 0 0\n1 0 0\n").unwrap();
        let t = SymbolTable::corrected();
        assert!(matches!(
            parse_dist(&format!("markov:{}", m.display()), &t),
            Ok(TritDistribution::Markov { .. })
        ));

        let e = dir.path().join("sample.txt");
        std::fs::write(&e, "ab").unwrap();
        let d = parse_dist(&format!("empirical:{}", e.display()), &t).unwrap();
        let TritDistribution::Empirical(trits) = d else {
            panic!()
        };
        assert_eq!(trits.len(), 8);

        std::fs::write(&e, "a1").unwrap();
        assert!(matches!(
            parse_dist(&format!("empirical:{}", e.display()), &t),
            Err(CliError::Unsupported(_))
        ));
        assert!(matches!(
            parse_dist("markov:/nonexistent/x", &t),
            Err(CliError::Io { .. })
        ));
    }
}

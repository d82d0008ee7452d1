//! Command-line interface.

use crate::dist::parse_dist;
use crate::error::CliError;
use crate::format;
use crate::parallel::pair_frequency_monte_carlo_par;
use b23_core::codec::{self, Container, DecodeError};
use b23_core::combinatorics::{
    compression_ratio_bound, diagram_sum_check, fibonacci_identity_check, fit_geometric_decay,
    golden_decay_ratio, CountingReport, BRUTE_FORCE_MAX_N,
};
use b23_core::{Bitstream, FrequencyTable, SymbolTable, TableMode};
use clap::{Parser, Subcommand};
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "b23",
    version,
    about = "Ternary text codec with 1,2-pair fusion"
)]
pub struct Cli {
    /// Character table layout.
    #[arg(long, global = true, value_name = "corrected|strict-paper")]
    pub table_mode: Option<TableMode>,

    /// Read or write the payload as a '0'/'1' bitstring instead of a container.
    #[arg(long, global = true)]
    pub bits_text: bool,

    /// Write data here instead of stdout.
    #[arg(long, short, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compress text (file or stdin) into a container.
    Encode { input: Option<PathBuf> },
    /// Decompress a container back into text.
    Decode { input: Option<PathBuf> },
    /// Print bit counts for a text.
    Stats { input: Option<PathBuf> },
    /// Dump the character table as decimal, character, ternary, bits.
    Table,
    /// Count strings without a 1,2 pair for a range of lengths.
    Analyze {
        /// Inclusive range of string lengths, `A..B` or a single `N`.
        #[arg(long, default_value = "1..20", value_parser = parse_range)]
        n: RangeInclusive<u32>,
        /// Emit CSV instead of an aligned table.
        #[arg(long)]
        csv: bool,
        /// Largest length to enumerate exhaustively.
        #[arg(long, default_value_t = BRUTE_FORCE_MAX_N)]
        brute_force_cap: u32,
    },
    /// Monte Carlo estimate of 1,2-pair counts.
    Mc {
        /// String length.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// `uniform`, `iid:p0,p1,p2`, `markov:FILE` or `empirical:FILE`.
        #[arg(long, default_value = "uniform")]
        dist: String,
        /// Worker threads (results do not depend on this).
        #[arg(long)]
        threads: Option<usize>,
    },
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a == 0 || a > b {
        return Err(format!("range {s:?} must satisfy 1 <= A <= B"));
    }
    Ok(a..=b)
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read(p).map_err(|e| CliError::io(format!("reading {}", p.display()), e))
        }
        _ => {
            let mut buf = Vec::new();
            stdin
                .read_to_end(&mut buf)
                .map_err(|e| CliError::io("reading stdin", e))?;
            Ok(buf)
        }
    }
}

fn read_text(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, CliError> {
    String::from_utf8(read_input(path, stdin)?).map_err(|e| CliError::InvalidUtf8 {
        offset: e.utf8_error().valid_up_to(),
    })
}

impl Cli {
    fn table(&self) -> SymbolTable {
        SymbolTable::new(self.table_mode.unwrap_or_default())
    }

    /// Runs the command. Data goes to `--output` if given, else to `stdout`.
    pub fn run(&self, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), CliError> {
        let data = self.produce(stdin)?;
        match &self.output {
            Some(path) => std::fs::write(path, &data)
                .map_err(|e| CliError::io(format!("writing {}", path.display()), e)),
            None => stdout
                .write_all(&data)
                .map_err(|e| CliError::io("writing stdout", e)),
        }
    }

    fn produce(&self, stdin: &mut dyn Read) -> Result<Vec<u8>, CliError> {
        match &self.command {
            Command::Encode { input } => {
                let text = read_text(input.as_deref(), stdin)?;
                let container = codec::compress(&text, &self.table())?;
                if self.bits_text {
                    Ok(format!("{}\n", container.payload()).into_bytes())
                } else {
                    Ok(container.to_bytes())
                }
            }
            Command::Decode { input } => {
                let bytes = read_input(input.as_deref(), stdin)?;
                let text = if self.bits_text {
                    let s = String::from_utf8(bytes).map_err(|e| CliError::InvalidUtf8 {
                        offset: e.utf8_error().valid_up_to(),
                    })?;
                    let bits: Bitstream = s.parse()?;
                    codec::decode_bits(&bits, &self.table())?
                } else {
                    let container = Container::from_bytes(&bytes)?;
                    let mode = self.table_mode.unwrap_or(container.table_mode());
                    if mode != container.table_mode() {
                        return Err(DecodeError::TableModeMismatch {
                            container: container.table_mode(),
                            table: mode,
                        }
                        .into());
                    }
                    codec::decompress(&container, &SymbolTable::new(mode))?
                };
                Ok(text.into_bytes())
            }
            Command::Stats { input } => {
                let text = read_text(input.as_deref(), stdin)?;
                let s = codec::stats(&text, &self.table())?;
                Ok(format::render_stats(&s).into_bytes())
            }
            Command::Table => {
                let mut buf = Vec::new();
                format::write_table_dump(&self.table(), &mut buf)
                    .map_err(|e| CliError::io("formatting table", e))?;
                Ok(buf)
            }
            Command::Analyze {
                n,
                csv,
                brute_force_cap,
            } => {
                let reports = n
                    .clone()
                    .map(|k| CountingReport::new(k, *brute_force_cap))
                    .collect::<Result<Vec<_>, _>>()?;
                if *csv {
                    let mut buf = Vec::new();
                    format::write_reports_csv(&reports, &mut buf)?;
                    return Ok(buf);
                }
                let mut out = format::render_reports(&reports);
                let table = self.table();
                let bound = compression_ratio_bound(&FrequencyTable::english(), &table);
                let _ = writeln!(out);
                let _ = writeln!(out, "compression_ratio_bound  {bound:.6}");
                if n.end() > n.start() {
                    let _ = writeln!(
                        out,
                        "decay_ratio_fit          {:.6}  (phi^2/3 = {:.6})",
                        fit_geometric_decay(n.clone()),
                        golden_decay_ratio()
                    );
                }
                let _ = writeln!(
                    out,
                    "fibonacci_identity       {}",
                    fibonacci_identity_check(*n.end())
                );
                let _ = writeln!(
                    out,
                    "diagram_sum              {}",
                    diagram_sum_check(*n.end())
                );
                let consistent = reports.iter().all(CountingReport::consistent);
                let _ = writeln!(out, "routes_agree             {consistent}");
                Ok(out.into_bytes())
            }
            Command::Mc {
                n,
                trials,
                seed,
                dist,
                threads,
            } => {
                let d = parse_dist(dist, &self.table())?;
                let summary = match threads {
                    Some(t) => rayon::ThreadPoolBuilder::new()
                        .num_threads(*t)
                        .build()
                        .map_err(|e| CliError::Usage(e.to_string()))?
                        .install(|| pair_frequency_monte_carlo_par(&d, *n, *trials, *seed))?,
                    None => pair_frequency_monte_carlo_par(&d, *n, *trials, *seed)?,
                };
                Ok(format::render_mc(&summary, dist).into_bytes())
            }
        }
    }
}

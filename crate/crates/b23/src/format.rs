//! Text formats: the table dump, counting reports and statistics.

use b23_core::codec::CompressionStats;
use b23_core::combinatorics::{CountingReport, McSummary};
use b23_core::table::{SymbolTable, CODE_WIDTH};
use b23_core::{Bitstream, TritString};
use std::fmt::Write as _;
use std::io::Write;

/// One row of the tab-separated table dump:
/// `decimal<TAB>character<TAB>ternary<TAB>b23bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub decimal: usize,
    pub character: char,
    pub ternary: TritString,
    pub bits: Bitstream,
}

pub fn table_rows(table: &SymbolTable) -> Vec<TableRow> {
    table
        .entries()
        .map(|e| TableRow {
            decimal: e.index,
            character: e.character,
            ternary: TritString::from(&e.code[..]),
            bits: e.b23_bits(),
        })
        .collect()
}

pub fn write_table_dump(table: &SymbolTable, out: &mut impl Write) -> std::io::Result<()> {
    for row in table_rows(table) {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            row.decimal, row.character, row.ternary, row.bits
        )?;
    }
    Ok(())
}

/// Parses a table dump. Blank lines and lines starting with `#` are skipped.
/// Errors carry the 1-based line number.
pub fn parse_table_dump(text: &str) -> Result<Vec<TableRow>, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [decimal, character, ternary, bits] = fields[..] else {
            return Err(format!("line {lineno}: expected 4 tab-separated fields"));
        };
        let decimal = decimal
            .parse()
            .map_err(|e| format!("line {lineno}: decimal: {e}"))?;
        let mut chars = character.chars();
        let (Some(character), None) = (chars.next(), chars.next()) else {
            return Err(format!(
                "line {lineno}: character field must be one character"
            ));
        };
        let ternary: TritString = ternary.parse().map_err(|e| format!("line {lineno}: {e}"))?;
        if ternary.len() != CODE_WIDTH {
            return Err(format!(
                "line {lineno}: ternary code must have {CODE_WIDTH} trits"
            ));
        }
        let bits: Bitstream = bits.parse().map_err(|e| format!("line {lineno}: {e}"))?;
        rows.push(TableRow {
            decimal,
            character,
            ternary,
            bits,
        });
    }
    Ok(rows)
}

pub const REPORT_CSV_HEADER: [&str; 5] = ["n", "s_bruteforce", "s_recurrence", "s_closed", "p_n"];

fn closed_cell(r: &CountingReport) -> String {
    match r.s_closed_form.nearest {
        Some(v) => v.to_string(),
        None => format!("{:e}", r.s_closed_form.value),
    }
}

pub fn write_reports_csv(reports: &[CountingReport], out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(REPORT_CSV_HEADER)?;
    for r in reports {
        w.write_record([
            r.n.to_string(),
            r.s_bruteforce.map(|v| v.to_string()).unwrap_or_default(),
            r.s_recurrence.to_string(),
            closed_cell(r),
            format!("{:.17}", r.p_n),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aligned plain-text table. Closed-form values outside the exactness window
/// are marked with `~`; missing brute-force counts with `-`.
pub fn render_reports(reports: &[CountingReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            let closed = if r.s_closed_form.exact {
                closed_cell(r)
            } else {
                format!("~{}", closed_cell(r))
            };
            [
                r.n.to_string(),
                r.s_bruteforce
                    .map_or_else(|| "-".to_owned(), |v| v.to_string()),
                r.s_recurrence.to_string(),
                closed,
                format!("{:.12}", r.p_n),
            ]
        })
        .collect();
    let mut widths = REPORT_CSV_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: [&str; 5]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(REPORT_CSV_HEADER);
    for row in &rows {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    out
}

pub fn render_stats(s: &CompressionStats) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input_chars           {}", s.input_chars);
    let _ = writeln!(out, "b23_bits              {}", s.b23_bits);
    let _ = writeln!(out, "a23_bits              {}", s.a23_bits);
    let _ = writeln!(out, "baseline_bits         {}", s.baseline_bits);
    let _ = writeln!(out, "ratio_vs_baseline     {:.6}", s.ratio_vs_baseline());
    let _ = writeln!(
        out,
        "baseline_overhead     {:.2}%",
        100.0 * s.baseline_overhead()
    );
    let _ = writeln!(out, "pairs_fused           {}", s.pairs_fused);
    let _ = writeln!(out, "cross_boundary_pairs  {}", s.cross_boundary_pairs);
    out
}

pub fn render_mc(s: &McSummary, dist: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "distribution          {dist}");
    let _ = writeln!(out, "n                     {}", s.n);
    let _ = writeln!(out, "trials                {}", s.trials);
    let _ = writeln!(out, "seed                  {}", s.seed);
    let _ = writeln!(out, "mean_pairs            {:.9}", s.mean_pairs);
    let _ = writeln!(out, "variance              {:.9}", s.variance);
    let _ = writeln!(out, "std_error             {:.9}", s.std_error);
    let _ = writeln!(out, "mean_bits_saved       {:.9}", s.mean_bits_saved);
    let _ = writeln!(out, "mean_substring_pairs  {:.9}", s.mean_substring_pairs);
    out
}

//! Decimal serialization shared by every CSV and table emitter.
//!
//! Numbers print with 17 significant digits so the exact 53-bit value
//! round-trips through text; identical inputs therefore produce
//! byte-identical reports.

use crate::interval::Interval;

/// 17-significant-digit decimal form of `x`; parses back to the same bits.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Interval as the pair "lo,hi" used inside report rows.
pub fn fmt_interval(iv: Interval) -> String {
    format!("{},{}", fmt_f64(iv.lo()), fmt_f64(iv.hi()))
}

/// A plain-markdown table with padded columns; values identical to the CSV
/// form so the two formats never disagree.
pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String], widths: &[usize]| {
        let mut line = String::from("|");
        for (cell, w) in cells.iter().zip(widths) {
            line.push(' ');
            line.push_str(cell);
            line.push_str(&" ".repeat(w - cell.len() + 1));
            line.push('|');
        }
        line.push('\n');
        line
    };
    let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    out.push_str(&fmt_row(&header_cells, &widths));
    out.push('|');
    for w in &widths {
        out.push_str(&"-".repeat(w + 2));
        out.push('|');
    }
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), cols);
        out.push_str(&fmt_row(row, &widths));
    }
    out
}

/// One CSV line, LF-terminated.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

#[cfg(test)]
#[allow(clippy::approx_constant)] // round-trip fixtures
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[
            0.1,
            1.0 / 3.0,
            3.141592653589793,
            1e-300,
            -2.5e15,
            f64::MIN_POSITIVE,
            0.0,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s} did not round-trip");
        }
    }

    #[test]
    fn interval_pair_format() {
        let iv = Interval::new(1.0, 2.0).unwrap();
        assert_eq!(
            fmt_interval(iv),
            "1.0000000000000000e0,2.0000000000000000e0"
        );
    }

    #[test]
    fn markdown_alignment_is_stable() {
        let t = markdown_table(
            &["a", "bb"],
            &[vec!["1".into(), "2".into()], vec!["333".into(), "4".into()]],
        );
        let expect = "| a   | bb |\n|-----|----|\n| 1   | 2  |\n| 333 | 4  |\n";
        assert_eq!(t, expect);
    }
}

//! Output formatting: locale-independent scientific notation, simple aligned
//! tables, and CSV emission.
//!
//! CSV output always uses `.` decimals, `,` separators, `\n` line endings,
//! and lowercase `e` exponents.

/// Scientific notation with five significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.4e}")
}

/// Log-spaced samples from `lo` to `hi` inclusive.
pub fn log_space(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo, "need 0 < lo < hi");
    assert!(points >= 2, "need at least two sample points");
    let log_lo = lo.ln();
    let step = (hi.ln() - log_lo) / (points - 1) as f64;
    (0..points)
        .map(|i| {
            if i == 0 {
                lo
            } else if i + 1 == points {
                hi
            } else {
                (log_lo + step * i as f64).exp()
            }
        })
        .collect()
}

/// Render rows under a header, left-aligning each column to its widest cell.
pub fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[String]| {
        let line: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    push_row(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        push_row(row);
    }
    out
}

/// Render rows as CSV under a header.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

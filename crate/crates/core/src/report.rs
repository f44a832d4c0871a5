//! Text and CSV renderings shared by the CLI.
//!
//! Reals are printed with 4 decimals, indexes as plain integers.

use std::fmt::Write as _;

use crate::alpha::AlphaCurve;
use crate::analytics::{AuthorIndexRow, CorrelationMatrix};
use crate::indexes::IndexReport;

/// `h = 8 nu.bar = 8 nu = 85 g = 8 g.star = 85`
pub fn index_line(r: &IndexReport) -> String {
    format!(
        "h = {} nu.bar = {} nu = {} g = {} g.star = {}",
        r.h, r.nu_bar, r.nu, r.g, r.g_star
    )
}

pub fn real(v: f64) -> String {
    if v.is_nan() {
        "NA".to_string()
    } else {
        format!("{v:.4}")
    }
}

pub fn alpha_csv(curve: &AlphaCurve) -> String {
    let mut out = String::from("alpha,nu_alpha,nu_inf\n");
    for (a, v) in curve.samples() {
        let _ = writeln!(out, "{},{v},{}", real(a), curve.nu_infinity);
    }
    out
}

fn csv_table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn row_fields(r: &AuthorIndexRow) -> Vec<String> {
    vec![
        r.author_id.clone(),
        r.m.to_string(),
        r.total_citations.to_string(),
        r.h.to_string(),
        r.nu.to_string(),
        r.nu_bar.to_string(),
        r.g.to_string(),
        r.g_star.to_string(),
        real(r.h_m),
        real(r.nu_m),
        real(r.nu_bar_m),
        real(r.g_m),
        real(r.g_star_m),
        r.normalized.to_string(),
    ]
}

const ROW_HEADER: [&str; 14] = [
    "author_id",
    "m",
    "citations",
    "h",
    "nu",
    "nu_bar",
    "g",
    "g_star",
    "h_m",
    "nu_m",
    "nu_bar_m",
    "g_m",
    "g_star_m",
    "normalized",
];

pub fn rows_csv(rows: &[AuthorIndexRow]) -> String {
    csv_table(&ROW_HEADER, rows.iter().map(row_fields))
}

/// Rows prefixed with their 1-based rank.
pub fn ranking_csv(ranked: &[AuthorIndexRow]) -> String {
    let header: Vec<&str> = std::iter::once("rank").chain(ROW_HEADER).collect();
    csv_table(
        &header,
        ranked.iter().enumerate().map(|(i, r)| {
            let mut f = vec![(i + 1).to_string()];
            f.extend(row_fields(r));
            f
        }),
    )
}

/// Labeled square matrix, right-aligned columns.
pub fn matrix_text(cm: &CorrelationMatrix) -> String {
    const W: usize = 8;
    let mut out = format!("{:<W$}", "index");
    for l in &cm.labels {
        let _ = write!(out, " {:>W$}", l.label());
    }
    out.push('\n');
    for (l, row) in cm.labels.iter().zip(&cm.values) {
        let _ = write!(out, "{:<W$}", l.label());
        for &v in row {
            let _ = write!(out, " {:>W$}", real(v));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{correlation_matrix, CorrelationMethod};
    use crate::indexes::full_report;
    use crate::vector::CitationVector;

    #[test]
    fn nash_line() {
        let x = CitationVector::from_counts(vec![2000, 2000, 1500, 1000, 400, 250, 100, 100]);
        assert_eq!(
            index_line(&full_report(&x)),
            "h = 8 nu.bar = 8 nu = 85 g = 8 g.star = 85"
        );
    }

    #[test]
    fn reals() {
        assert_eq!(real(0.80444), "0.8044");
        assert_eq!(real(1.0), "1.0000");
        assert_eq!(real(f64::NAN), "NA");
    }

    #[test]
    fn quoting_in_tables() {
        let r = AuthorIndexRow::from_vector("Doe, J.", &CitationVector::from_counts(vec![3, 1]));
        let csv = rows_csv(&[r]);
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("\"Doe, J.\",2,4,1,"));
    }

    #[test]
    fn matrix_layout() {
        let rows: Vec<_> = [&[1u64][..], &[2, 2], &[3, 3, 3]]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                AuthorIndexRow::from_vector(
                    &i.to_string(),
                    &CitationVector::from_counts(c.to_vec()),
                )
            })
            .collect();
        let text = matrix_text(&correlation_matrix(&rows, CorrelationMethod::Pearson).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        assert!(lines[0].starts_with("index"));
        assert!(lines[1].starts_with("h          1.0000"));
        assert!(lines[1].ends_with("1.0000"));
    }
}

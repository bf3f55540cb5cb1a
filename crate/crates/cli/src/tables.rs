//! Assembles the four summary tables — Hilbert series, generator series,
//! free-generator leading terms, invariant-basis leading terms — from
//! scratch, and renders them to text, CSV, and JSON payloads.

use crate::render::{
    coeff_strings, csv_field, display_sign, displayed_fraction, frac_string, rat_string, word_list,
};
use ncinv_core::gens::{basis_leading_terms, free_generators};
use ncinv_core::hilbert::{generator_series, hilbert_series};
use ncinv_core::QRatFunc;
use serde::Serialize;

#[derive(Serialize)]
pub struct SeriesJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Serialize)]
pub struct RecurrenceJson {
    pub order: usize,
    pub coeffs: Vec<String>,
    pub initial: Vec<String>,
    pub threshold: usize,
    pub display: String,
}

#[derive(Serialize)]
pub struct SeriesRowJson {
    pub n: usize,
    pub order: usize,
    pub display: String,
    pub series: SeriesJson,
    pub recurrence: RecurrenceJson,
}

#[derive(Serialize)]
pub struct LeadingRowJson {
    pub degree: usize,
    pub count: usize,
    pub leading_terms: Vec<String>,
}

#[derive(Serialize)]
pub struct TablesJson {
    pub table1: Vec<SeriesRowJson>,
    pub table2: Vec<SeriesRowJson>,
    pub table3: Vec<LeadingRowJson>,
    pub table4: Vec<LeadingRowJson>,
}

/// One table row for a series: displayed fraction (published sign convention
/// unless `canonical`), exact coefficients, and the extracted recurrence.
pub fn series_row(n: usize, f: &QRatFunc, canonical: bool) -> SeriesRowJson {
    let sign = if canonical { 1 } else { display_sign(n) };
    let (num, den) = displayed_fraction(f, sign);
    let rec = f.recurrence().expect("series denominator is non-constant for n >= 3");
    SeriesRowJson {
        n,
        order: 2 * n,
        display: frac_string(&num, &den),
        series: SeriesJson {
            num: coeff_strings(&num),
            den: coeff_strings(&den),
        },
        recurrence: RecurrenceJson {
            order: rec.order(),
            coeffs: rec.coeffs().iter().map(rat_string).collect(),
            initial: rec.initial().iter().map(rat_string).collect(),
            threshold: rec.threshold(),
            display: rec.to_string(),
        },
    }
}

/// Recomputes all four tables. Tables 3 and 4 are for group order 6; their
/// final row prints the computed leading terms (the count column matches the
/// published table, which abbreviates that row with a pattern expression).
pub fn build_tables(canonical: bool) -> TablesJson {
    let table1 = (3..=10)
        .map(|n| series_row(n, &hilbert_series(n), canonical))
        .collect();
    let table2 = (3..=10)
        .map(|n| series_row(n, &generator_series(n), canonical))
        .collect();
    let gen_table = free_generators(3, 6);
    let table3 = (1..=6)
        .map(|d| {
            let row = gen_table.row(d);
            LeadingRowJson {
                degree: d,
                count: row.count,
                leading_terms: row.leading_terms.iter().map(|w| w.to_string()).collect(),
            }
        })
        .collect();
    let table4 = (0..=6)
        .map(|d| {
            // degree 0 is the scalars: no leading word, recorded as zero
            let words = if d == 0 { Vec::new() } else { basis_leading_terms(3, d) };
            LeadingRowJson {
                degree: d,
                count: words.len(),
                leading_terms: words.iter().map(|w| w.to_string()).collect(),
            }
        })
        .collect();
    TablesJson { table1, table2, table3, table4 }
}

pub fn series_csv(rows: &[SeriesRowJson], value_header: &str) -> String {
    let mut out = format!("n,{value_header},recurrence\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            row.n,
            csv_field(&row.display),
            csv_field(&row.recurrence.display)
        ));
    }
    out
}

pub fn leading_csv(rows: &[LeadingRowJson]) -> String {
    let mut out = "degree,count,leading_terms\n".to_string();
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            row.degree,
            row.count,
            csv_field(&word_list(&row.leading_terms))
        ));
    }
    out
}

pub fn tables_text(t: &TablesJson) -> String {
    let mut out = String::new();
    out.push_str("Table 1: Hilbert series of the dihedral invariants (group order 2n)\n");
    out.push_str("n | series | recurrence\n");
    for row in &t.table1 {
        out.push_str(&format!("{} | {} | {}\n", row.n, row.display, row.recurrence.display));
    }
    out.push('\n');
    out.push_str("Table 2: generating functions of the free generators\n");
    out.push_str("n | series | recurrence\n");
    for row in &t.table2 {
        out.push_str(&format!("{} | {} | {}\n", row.n, row.display, row.recurrence.display));
    }
    out.push('\n');
    out.push_str("Table 3: leading terms of the free generators (group order 6)\n");
    out.push_str("degree | count | leading terms\n");
    for row in &t.table3 {
        out.push_str(&format!(
            "{} | {} | {}\n",
            row.degree,
            row.count,
            word_list(&row.leading_terms)
        ));
    }
    out.push('\n');
    out.push_str("Table 4: leading terms of the invariant basis (group order 6)\n");
    out.push_str("degree | count | leading terms\n");
    for row in &t.table4 {
        out.push_str(&format!(
            "{} | {} | {}\n",
            row.degree,
            row.count,
            word_list(&row.leading_terms)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_sign_rows() {
        let t = build_tables(false);
        assert_eq!(t.table1[0].display, "(t^2 + t - 1)/(2t^2 + t - 1)");
        assert_eq!(t.table1[1].display, "(-3t^2 + 1)/(-4t^2 + 1)");
        assert_eq!(t.table2[0].display, "(-t^2)/(t^2 + t - 1)");
        assert_eq!(t.table1[0].recurrence.display, "a(m+2) = a(m+1) + 2a(m)");
        assert_eq!(t.table2[0].recurrence.display, "a(m+2) = a(m+1) + a(m)");
    }

    #[test]
    fn canonical_rows_differ_only_by_sign() {
        let def = build_tables(false);
        let canon = build_tables(true);
        assert_eq!(canon.table1[0].display, "(-t^2 - t + 1)/(-2t^2 - t + 1)");
        for (a, b) in def.table1.iter().zip(&canon.table1) {
            assert_eq!(a.recurrence.display, b.recurrence.display);
        }
    }

    #[test]
    fn leading_term_rows() {
        let t = build_tables(false);
        assert_eq!(t.table3[0].count, 0);
        assert_eq!(t.table3[1].leading_terms, vec!["uv"]);
        assert_eq!(t.table3[3].leading_terms, vec!["u^2v^2", "uv^2u"]);
        assert_eq!(t.table3[5].count, 5);
        assert_eq!(t.table4[0].count, 0);
        assert_eq!(
            t.table4[5].leading_terms,
            vec!["u^4v", "u^3vu", "u^2vu^2", "uvu^3", "uv^4"]
        );
        assert_eq!(t.table4[6].count, 11);
    }

    #[test]
    fn csv_shapes() {
        let t = build_tables(false);
        let csv = leading_csv(&t.table3);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("degree,count,leading_terms"));
        assert_eq!(lines.next(), Some("1,0,-"));
        assert_eq!(lines.next(), Some("2,1,uv"));
        assert_eq!(lines.next(), Some("3,1,u^3"));
        assert_eq!(lines.next(), Some("4,2,\"u^2v^2, uv^2u\""));
        let csv1 = series_csv(&t.table1, "hilbert_series");
        assert!(csv1.starts_with("n,hilbert_series,recurrence\n"));
        assert!(csv1.contains("3,(t^2 + t - 1)/(2t^2 + t - 1),a(m+2) = a(m+1) + 2a(m)\n"));
    }
}

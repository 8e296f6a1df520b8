//! CSV and JSON coefficient tables.
//!
//! Numerators and denominators are written as decimal integers; JSON carries them as
//! strings so that arbitrarily large values survive any consumer.

use serde::Serialize;

use super::{BiSeries, TruncSeries};

#[derive(Serialize)]
struct UniRow {
    degree: usize,
    numerator: String,
    denominator: String,
}

#[derive(Serialize)]
struct UniTable {
    order: usize,
    coefficients: Vec<UniRow>,
}

#[derive(Serialize)]
struct BiRow {
    degree_x: u32,
    degree_y: u32,
    numerator: String,
    denominator: String,
}

#[derive(Serialize)]
struct BiTable {
    order: usize,
    coefficients: Vec<BiRow>,
}

fn uni_rows(s: &TruncSeries) -> Vec<UniRow> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(degree, c)| UniRow { degree, numerator: c.numer().to_string(), denominator: c.denom().to_string() })
        .collect()
}

/// Nonzero terms ordered by total degree, then by the power of `x`.
fn bi_rows(f: &BiSeries) -> Vec<BiRow> {
    let mut rows: Vec<BiRow> = f
        .terms()
        .map(|([a, b], c)| BiRow {
            degree_x: *a,
            degree_y: *b,
            numerator: c.numer().to_string(),
            denominator: c.denom().to_string(),
        })
        .collect();
    rows.sort_by_key(|r| (r.degree_x + r.degree_y, r.degree_x));
    rows
}

/// `degree,numerator,denominator`, one row per degree `0..=order`.
pub fn univariate_csv(s: &TruncSeries) -> String {
    let mut out = String::from("degree,numerator,denominator\n");
    for r in uni_rows(s) {
        out.push_str(&format!("{},{},{}\n", r.degree, r.numerator, r.denominator));
    }
    out
}

/// `degree_x,degree_y,numerator,denominator`, one row per nonzero coefficient.
pub fn bivariate_csv(f: &BiSeries) -> String {
    let mut out = String::from("degree_x,degree_y,numerator,denominator\n");
    for r in bi_rows(f) {
        out.push_str(&format!("{},{},{},{}\n", r.degree_x, r.degree_y, r.numerator, r.denominator));
    }
    out
}

pub fn univariate_json(s: &TruncSeries) -> String {
    let table = UniTable { order: s.order(), coefficients: uni_rows(s) };
    serde_json::to_string_pretty(&table).expect("plain data serializes")
}

pub fn bivariate_json(f: &BiSeries) -> String {
    let table = BiTable { order: f.order(), coefficients: bi_rows(f) };
    serde_json::to_string_pretty(&table).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{arctan_series, fgl_rational};

    #[test]
    fn csv_layout() {
        let csv = univariate_csv(&arctan_series(3));
        assert_eq!(csv, "degree,numerator,denominator\n0,0,1\n1,1,1\n2,0,1\n3,-1,3\n");
        let csv = bivariate_csv(&fgl_rational(3));
        assert_eq!(
            csv,
            "degree_x,degree_y,numerator,denominator\n0,1,1,1\n1,0,1,1\n1,2,1,1\n2,1,1,1\n"
        );
    }

    #[test]
    fn json_is_parseable() {
        let v: serde_json::Value = serde_json::from_str(&bivariate_json(&fgl_rational(5))).unwrap();
        assert_eq!(v["order"], 5);
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 6);
        assert_eq!(v["coefficients"][0]["numerator"], "1");
    }
}

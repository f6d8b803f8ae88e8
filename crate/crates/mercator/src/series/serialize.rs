//! Wire formats for series and integer sequences.
//!
//! JSON layout: `{"order": N, "coefficients": [...]}` with one entry per
//! nonzero coefficient, rationals as canonical `p/q` strings (the `/q`
//! dropped when the denominator is 1). Univariate entries carry the
//! degree as `n`, bivariate entries the exponent pair `i`, `j`.
//! Coefficients are sorted by degree, then by `i`. CSV mirrors the same
//! rows with a header line, LF endings.

use num_traits::Zero;
use serde::Serialize;

use super::{BivariateSeries, EulerSequence, UnivariateSeries};
use crate::rational::format_ratio;

#[derive(Serialize)]
struct UnivariateEntry {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct UnivariateDoc {
    order: usize,
    coefficients: Vec<UnivariateEntry>,
}

#[derive(Serialize)]
struct BivariateEntry {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct BivariateDoc {
    order: usize,
    coefficients: Vec<BivariateEntry>,
}

pub fn univariate_to_json(s: &UnivariateSeries) -> String {
    let doc = UnivariateDoc {
        order: s.order(),
        coefficients: univariate_entries(s),
    };
    serde_json::to_string(&doc).expect("series documents always serialize")
}

pub fn bivariate_to_json(s: &BivariateSeries) -> String {
    let doc = BivariateDoc {
        order: s.order(),
        coefficients: s
            .nonzero_terms()
            .into_iter()
            .map(|(i, j, c)| BivariateEntry {
                i,
                j,
                value: format_ratio(c),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("series documents always serialize")
}

pub fn univariate_to_csv(s: &UnivariateSeries) -> String {
    let mut out = String::from("n,value\n");
    for e in univariate_entries(s) {
        out.push_str(&format!("{},{}\n", e.n, e.value));
    }
    out
}

pub fn bivariate_to_csv(s: &BivariateSeries) -> String {
    let mut out = String::from("i,j,value\n");
    for (i, j, c) in s.nonzero_terms() {
        out.push_str(&format!("{},{},{}\n", i, j, format_ratio(c)));
    }
    out
}

/// Secant numbers as a JSON array of decimal strings.
pub fn euler_to_json(seq: &EulerSequence) -> String {
    let strings: Vec<String> = seq.values().iter().map(|v| v.to_string()).collect();
    serde_json::to_string(&strings).expect("string arrays always serialize")
}

fn univariate_entries(s: &UnivariateSeries) -> Vec<UnivariateEntry> {
    s.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| UnivariateEntry {
            n,
            value: format_ratio(c),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{euler_numbers, gudermann_exp_series, gudermann_log_series};
    use crate::series::mercator_group_law;

    #[test]
    fn univariate_json_shape() {
        let s = gudermann_log_series(5);
        assert_eq!(
            univariate_to_json(&s),
            r#"{"order":5,"coefficients":[{"n":1,"value":"1"},{"n":3,"value":"1/6"},{"n":5,"value":"1/24"}]}"#
        );
    }

    #[test]
    fn negative_coefficients_carry_their_sign() {
        let s = gudermann_exp_series(3);
        assert_eq!(
            univariate_to_json(&s),
            r#"{"order":3,"coefficients":[{"n":1,"value":"1"},{"n":3,"value":"-1/6"}]}"#
        );
    }

    #[test]
    fn bivariate_json_orders_entries_by_degree_then_i() {
        let f = mercator_group_law(3);
        assert_eq!(
            bivariate_to_json(&f),
            r#"{"order":3,"coefficients":[{"i":0,"j":1,"value":"1"},{"i":1,"j":0,"value":"1"},{"i":1,"j":2,"value":"-1/2"},{"i":2,"j":1,"value":"-1/2"}]}"#
        );
    }

    #[test]
    fn csv_mirrors_json_rows() {
        let s = gudermann_log_series(5);
        assert_eq!(univariate_to_csv(&s), "n,value\n1,1\n3,1/6\n5,1/24\n");
        let f = mercator_group_law(3);
        assert_eq!(
            bivariate_to_csv(&f),
            "i,j,value\n0,1,1\n1,0,1\n1,2,-1/2\n2,1,-1/2\n"
        );
    }

    #[test]
    fn euler_json_is_an_array_of_decimal_strings() {
        assert_eq!(
            euler_to_json(&euler_numbers(4)),
            r#"["1","1","5","61","1385"]"#
        );
    }
}

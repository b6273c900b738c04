//! Counting projective indecomposable characters by Harish-Chandra series.

use std::collections::BTreeMap;

use crate::BlockTable;

const FIXED_ORDER: [&str; 11] = ["ps", "2D2", "B2", "C2", "A3", "D3", "D4", ".2^2", ".1^2", ".1^4", "A3D3"];

/// Number of columns of the table carrying each census label.
pub fn series_census(table: &BlockTable) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for c in &table.columns {
        *out.entry(c.census_label().to_string()).or_insert(0) += 1;
    }
    out
}

/// Sort key for census labels: principal series first, then the usual
/// Levi types by rank, other labels alphabetically, and cuspidal `c` last.
pub fn census_order(label: &str) -> (usize, String) {
    match FIXED_ORDER.iter().position(|&l| l == label) {
        Some(i) => (i, String::new()),
        None if label == "c" => (FIXED_ORDER.len() + 1, String::new()),
        None => (FIXED_ORDER.len(), label.to_string()),
    }
}

/// Formats a census as `ps:7 A3:1 D3:2`.
pub fn format_census(census: &BTreeMap<String, usize>) -> String {
    let mut items: Vec<(&String, &usize)> = census.iter().collect();
    items.sort_by_key(|(l, _)| census_order(l));
    items.iter().map(|(l, n)| format!("{l}:{n}")).collect::<Vec<_>>().join(" ")
}

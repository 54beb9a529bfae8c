//! Scan the a(n, i) triangle for the conjectured shape: entries never
//! strictly decrease down a column, and every row is unimodal (rises to a
//! single peak, falls after it, never rises again). Plateaus are reported
//! separately because two are real: a(1, 2) = a(2, 2) = 1 and
//! a(3, 3) = a(3, 4) = 6.

use stirling_bernoulli::conjecture_check;

fn main() {
    let n_max = 40;
    let report = conjecture_check(n_max);

    println!("scanned a(n, i) for n <= {n_max}");
    println!("  strict column decreases : {}", report.monotonicity_violations.len());
    println!("  non-unimodal rows       : {}", report.non_unimodal_rows.len());
    println!("  column plateaus         : {:?}", report.column_plateaus);
    println!("  row plateaus            : {:?}", report.row_plateaus);
    println!("  clean                   : {}", report.is_clean());

    println!("\nas JSON:");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}

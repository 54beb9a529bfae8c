//! Build the signed Stirling triangle of the first kind four independent
//! ways and show they agree: the two-term recursion, expanding the falling
//! factorial, a nested harmonic sum, and power-series extraction.

use num_traits::Signed;
use stirling_bernoulli::{
    factorial, stirling_from_nested, stirling_from_product, stirling_from_series, Int,
    StirlingTriangle,
};

fn main() {
    let n_max = 12;
    let st = StirlingTriangle::new(n_max);

    println!("signed Stirling numbers s(n, k), rows 0..=8:");
    for n in 0..=8 {
        let row: Vec<String> = st.row(n).iter().map(|v| v.to_string()).collect();
        println!("  n={n}: {}", row.join(" "));
    }

    let n = 9;
    println!("\nrow n={n} by four routes:");
    let recursion = st.row(n).to_vec();
    let product = stirling_from_product(n);
    let nested: Vec<Int> = (1..=n).map(|i| stirling_from_nested(n, i)).collect();
    let series: Vec<Int> = (0..=n).map(|m| stirling_from_series(n, m)).collect();
    assert_eq!(recursion, product);
    assert_eq!(recursion[1..], nested[..]);
    assert_eq!(recursion, series);
    println!("  recursion == product == nested == series");

    println!("\nrow sums up to n={n_max}:");
    for n in [2, 5, n_max] {
        let signed: Int = st.row(n).iter().sum();
        let unsigned: Int = st.row(n).iter().map(|v| v.abs()).sum();
        assert_eq!(unsigned, factorial(n));
        println!("  n={n}: signed {signed}, unsigned {unsigned} = {n}!");
    }
}

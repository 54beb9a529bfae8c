//! 1/n! written without any multiplication: the nested harmonic sum
//!
//!   H(j, m) = Σ_{m >= k_1 > k_2 > ... > k_j >= 1} 1/(k_1 k_2 ... k_j)
//!
//! satisfies H(n, n) = 1/n!. H(j, m) is the elementary symmetric polynomial
//! e_j(1, 1/2, ..., 1/m), and the library builds it by dynamic programming.

use stirling_bernoulli::{arith::format_rat, factorial, reciprocal_factorial, HarmonicNest};

fn main() {
    let nest = HarmonicNest::new(6, 6);

    println!("H(j, m) table, j down, m across:");
    for j in 0..=6 {
        let row: Vec<String> = (0..=6).map(|m| format_rat(nest.get(j, m))).collect();
        println!("  j={j}: {}", row.join("  "));
    }

    println!("\nfull-depth diagonal H(n, n) = 1/n!:");
    for n in 0..=12 {
        let h = reciprocal_factorial(n);
        assert_eq!(h * factorial(n), num_traits::One::one());
        println!("  H({n:>2}, {n:>2}) = 1/{}", factorial(n));
    }

    // depth 1 recovers the ordinary harmonic numbers
    println!("\ndepth 1 is the harmonic series: H(1, 6) = {}", format_rat(nest.get(1, 6)));
}

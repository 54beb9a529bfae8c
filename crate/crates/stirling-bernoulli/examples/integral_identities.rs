//! The weighted Stirling sum S(n, k) = Σ_i (-1)^(n+i) i! (i+1)! s(n, i) / (i-k+1)!
//! evaluated three ways: directly, as a gamma-kernel integral done termwise
//! exactly and by Gauss-Laguerre quadrature, and through a Stieltjes-type
//! representation (boundary jet plus an integral against 1/(ln²(u-1) + π²)).

use stirling_bernoulli::arith::int_to_f64;
use stirling_bernoulli::integral::{
    gamma_kernel_integral_exact, gamma_kernel_integral_quad, stieltjes_rhs, stirling_factorial_sum,
};
use stirling_bernoulli::quadrature::GaussLaguerre;
use stirling_bernoulli::{QuadratureConfig, StirlingTriangle};

fn main() {
    let st = StirlingTriangle::new(8);

    println!("S(n, k) exactly, n <= 5:");
    for n in 1..=5 {
        let row: Vec<String> =
            (1..=n + 1).map(|k| stirling_factorial_sum(&st, n, k).to_string()).collect();
        println!("  n={n}: {}", row.join(" "));
    }

    println!("\ntermwise gamma-kernel integral reproduces every entry exactly:");
    for n in 1..=8 {
        for k in 1..=n + 1 {
            assert_eq!(stirling_factorial_sum(&st, n, k), gamma_kernel_integral_exact(n, k));
        }
    }
    println!("  checked n <= 8, all k");

    let rule = GaussLaguerre::new(40);
    println!("\n40-node Gauss-Laguerre on the same kernel:");
    for (n, k) in [(3, 2), (5, 3), (8, 9)] {
        let exact = int_to_f64(&stirling_factorial_sum(&st, n, k));
        let quad = gamma_kernel_integral_quad(n, k, &rule);
        println!("  S({n}, {k}) = {exact:.6e}, quadrature off by {:.2e}", ((quad - exact) / exact).abs());
    }

    let cfg = QuadratureConfig::default();
    println!("\nStieltjes representation (boundary term + weighted integral):");
    for (m, k) in [(1, 1), (2, 2), (3, 1), (5, 3)] {
        let exact = int_to_f64(&stirling_factorial_sum(&st, m, k));
        let eval = stieltjes_rhs(m, k, &cfg).unwrap();
        println!(
            "  S({m}, {k}): boundary {:.6e} + integral {:.6e} -> off by {:.2e}",
            eval.boundary,
            eval.integral,
            ((eval.value - exact) / exact).abs()
        );
    }
}

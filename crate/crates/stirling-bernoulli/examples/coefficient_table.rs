//! The coefficient triangle a(n, i) of the n-th derivative of 1/ln x:
//!
//!   (1/ln x)^(n) = (-1)^n x^(-n) Σ_{i=2}^{n+1} a(n, i) / (ln x)^i
//!
//! built from its own two-term recursion, then cross-checked against the
//! closed link a(n, i) = (-1)^(n+i-1) (i-1)! s(n, i-1).

use stirling_bernoulli::{coeffs::a_from_stirling, factorial, CoeffTable, StirlingTriangle};

fn main() {
    let n_max = 11;
    let table = CoeffTable::new(n_max);

    println!("a(n, i) for i = 2..=n+1:");
    for n in 1..=n_max {
        let row: Vec<String> = table.row(n).iter().map(|v| v.to_string()).collect();
        println!("  n={n:<2} {}", row.join(" "));
    }

    println!("\nboundary columns are factorials:");
    for n in [5, 8, n_max] {
        assert_eq!(table.get(n, 2), factorial(n - 1));
        assert_eq!(table.get(n, n + 1), factorial(n));
        println!("  a({n}, 2) = {}! = {}", n - 1, table.get(n, 2));
        println!("  a({n}, {}) = {n}! = {}", n + 1, table.get(n, n + 1));
    }

    let st = StirlingTriangle::new(n_max);
    for n in 1..=n_max {
        for i in 2..=n + 1 {
            assert_eq!(table.get(n, i), a_from_stirling(&st, n, i));
        }
    }
    println!("\nevery entry matches (-1)^(n+i-1) (i-1)! s(n, i-1) for n <= {n_max}");
}

//! Bernoulli numbers of the second kind b_n, the Taylor coefficients of
//! x/ln(1+x), computed by three unrelated routes, plus the Cauchy numbers
//! C_n = n! b_n.

use stirling_bernoulli::{
    arith::format_rat, bernoulli2_from_coeffs, bernoulli2_from_series, bernoulli2_from_stirling,
    cauchy_number,
};

fn main() {
    let n_max = 15;
    let series = bernoulli2_from_series(n_max);

    println!("{:>3}  {:>24}  route agreement", "n", "b_n");
    for n in 0..=n_max {
        let coeff = bernoulli2_from_coeffs(n);
        let stirling = bernoulli2_from_stirling(n);
        assert_eq!(coeff, stirling);
        assert_eq!(coeff, series[n]);
        println!("{n:>3}  {:>24}  coeff = stirling = series", format_rat(&coeff));
    }

    println!("\nCauchy numbers C_n = n! b_n:");
    for n in 0..=6 {
        println!("  C_{n} = {}", format_rat(&cauchy_number(n)));
    }

    // From n = 2 on the signs alternate: sign(b_n) = (-1)^(n-1).
    let alternating = (2..=n_max).all(|n| {
        let expect_negative = n % 2 == 0;
        (series[n] < num_traits::Zero::zero()) == expect_negative
    });
    println!("\nsigns alternate from n=2 on: {alternating}");
}

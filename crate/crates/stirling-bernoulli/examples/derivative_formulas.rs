//! Higher derivatives of 1/ln x, x/ln(1+x), and e^(-1/t) via exact closed
//! forms over the coefficient triangles, checked against truncated-Taylor
//! jets that know nothing about the formulas.

use stirling_bernoulli::deriv::{
    exp_recip_deriv, exp_recip_deriv_jet, inv_log_deriv_coeffs, inv_log_deriv_jet,
    inv_log_deriv_stirling, x_over_log_deriv_coeffs, x_over_log_deriv_jet,
};
use stirling_bernoulli::{CoeffTable, StirlingTriangle};

fn rel(a: f64, b: f64) -> f64 {
    if a == b { 0.0 } else { (a - b).abs() / b.abs() }
}

fn main() {
    let order = 10;
    let table = CoeffTable::new(order);
    let st = StirlingTriangle::new(order);

    let x = 2.0;
    println!("(1/ln x)^(n) at x = {x}:");
    println!("{:>3}  {:>22}  {:>9}  {:>9}", "n", "closed form", "vs jet", "vs shift");
    for n in 1..=order {
        let closed = inv_log_deriv_coeffs(&table, n, x).unwrap();
        let jet = inv_log_deriv_jet(n, x).unwrap();
        let shifted = inv_log_deriv_stirling(&st, n, x - 1.0).unwrap();
        println!("{n:>3}  {closed:>22.12e}  {:>9.2e}  {:>9.2e}", rel(closed, jet), rel(closed, shifted));
    }

    println!("\n(x/ln(1+x))^(i) at x = 1:");
    for i in 1..=6 {
        let closed = x_over_log_deriv_coeffs(&table, i, 1.0).unwrap();
        let jet = x_over_log_deriv_jet(i, 1.0).unwrap();
        println!("  i={i}: {closed:>18.12e}   vs jet {:.2e}", rel(closed, jet));
    }

    println!("\n(e^(-1/t))^(i) at t = 1 (all rational multiples of 1/e):");
    for i in 1..=6 {
        let closed = exp_recip_deriv(i, 1.0).unwrap();
        let jet = exp_recip_deriv_jet(i, 1.0).unwrap();
        println!("  i={i}: {:>14.9} * e^(-1)   vs jet {:.2e}", closed * std::f64::consts::E, rel(closed, jet));
    }
}

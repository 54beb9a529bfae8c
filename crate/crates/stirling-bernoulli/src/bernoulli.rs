//! Bernoulli numbers of the second kind: the coefficients `b_n` of the
//! generating function `x/ln(1+x) = Σ b_n x^n`.
//!
//! Two exact closed-form routes live here. The third route, direct
//! reciprocation of the `ln(1+x)/x` series, is
//! [`crate::series::bernoulli2_from_series`]; suite checks require all three
//! to coincide.

use crate::arith::{factorial, ratio, Int, Rat};
use crate::coeffs::CoeffTable;
use crate::stirling::StirlingTriangle;
use num_traits::Zero;

/// `b_n` from the derivative-coefficient triangle:
///
/// ```text
/// b_n = (-1)^n/n! · (1/(n+1) + Σ_{k=2}^{n} (a(n, k) - n·a(n-1, k))/k!),  n >= 2,
/// ```
///
/// with `b_0 = 1`, `b_1 = 1/2` directly from the series.
pub fn bernoulli2_from_coeffs(n: usize) -> Rat {
    match n {
        0 => return ratio(1, 1),
        1 => return ratio(1, 2),
        _ => {}
    }
    let table = CoeffTable::new(n);
    let mut sum = Rat::new(Int::from(1), Int::from(n + 1));
    for k in 2..=n {
        let diff = table.get(n, k) - Int::from(n) * table.get(n - 1, k);
        sum += Rat::new(diff, factorial(k));
    }
    let b = sum / Rat::from_integer(factorial(n));
    if n % 2 == 0 {
        b
    } else {
        -b
    }
}

/// `b_n` as the weighted Stirling row sum `(1/n!) Σ_k s(n, k)/(k+1)`.
pub fn bernoulli2_from_stirling(n: usize) -> Rat {
    let st = StirlingTriangle::new(n);
    let mut sum = Rat::zero();
    for k in 0..=n {
        sum += Rat::new(st.get(n, k), Int::from(k + 1));
    }
    sum / Rat::from_integer(factorial(n))
}

/// Cauchy number of the first kind, `C_n = n! b_n` (the integral
/// `∫_0^1 x(x-1)···(x-n+1) dx`).
pub fn cauchy_number(n: usize) -> Rat {
    Rat::from_integer(factorial(n)) * bernoulli2_from_stirling(n)
}

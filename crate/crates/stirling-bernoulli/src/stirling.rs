//! Stirling numbers of the first kind, signed convention:
//! `x(x-1)(x-2)···(x-n+1) = Σ_k s(n, k) x^k`.
//!
//! Three independent exact routes live here (triangular recursion, direct
//! product expansion, nested harmonic sum); a fourth, extraction from powers
//! of the `ln(1+x)` series, lives in [`crate::series`]. Agreement of all four
//! is part of the verification suites.

use crate::arith::{factorial, Int, Rat};
use crate::harmonic::HarmonicNest;
use num_traits::{One, Signed, Zero};

/// Rows `0..=n_max` of the signed triangle, built from
/// `s(n+1, k) = s(n, k-1) - n·s(n, k)` with `s(0, 0) = 1`.
#[derive(Debug, Clone)]
pub struct StirlingTriangle {
    rows: Vec<Vec<Int>>,
}

impl StirlingTriangle {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Int::one()]);
        for n in 0..n_max {
            let prev = &rows[n];
            let mut next = vec![Int::zero(); n + 2];
            for k in 0..=n + 1 {
                let carry = if k > 0 { prev[k - 1].clone() } else { Int::zero() };
                let drop = if k <= n { &prev[k] * Int::from(n) } else { Int::zero() };
                next[k] = carry - drop;
            }
            rows.push(next);
        }
        StirlingTriangle { rows }
    }

    /// `s(n, k)`; zero outside `0 <= k <= n`.
    pub fn get(&self, n: usize, k: usize) -> Int {
        assert!(n < self.rows.len(), "row {n} beyond table");
        if k > n {
            Int::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// Row `n` as coefficients of `x^0..x^n`.
    pub fn row(&self, n: usize) -> &[Int] {
        &self.rows[n]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `|s(n, k)| = (-1)^(n-k) s(n, k)`.
    pub fn unsigned(&self, n: usize, k: usize) -> Int {
        self.get(n, k).abs()
    }
}

/// Expands `x(x-1)···(x-n+1)` by schoolbook polynomial multiplication and
/// returns the coefficient row `s(n, 0..=n)`. Deliberately naive: this is
/// the definition itself, kept free of the recursion it cross-checks.
pub fn stirling_from_product(n: usize) -> Vec<Int> {
    let mut poly = vec![Int::one()];
    for k in 0..n {
        // multiply by (x - k)
        let mut next = vec![Int::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * Int::from(k);
        }
        poly = next;
    }
    poly
}

/// `s(n, i)` from the nested harmonic sum
/// `s(n, i) = (-1)^(n+i) (n-1)! H(i-1, n-1)` for `1 <= i <= n`.
///
/// The sum is rational term by term but the total must land on an integer;
/// a fractional result would mean the identity itself broke, so it panics.
pub fn stirling_from_nested(n: usize, i: usize) -> Int {
    assert!(n >= 1 && (1..=n).contains(&i), "need 1 <= i <= n");
    let nest = HarmonicNest::new(i - 1, n - 1);
    let value = Rat::from_integer(factorial(n - 1)) * nest.get(i - 1, n - 1);
    assert!(
        value.denom().is_one(),
        "nested sum for s({n}, {i}) is not an integer: {value}"
    );
    let sign = if (n + i) % 2 == 0 { Int::one() } else { -Int::one() };
    sign * value.numer()
}

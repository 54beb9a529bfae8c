//! Truncated formal power series over exact rationals, and the series routes
//! to Stirling and Bernoulli-of-the-second-kind numbers.
//!
//! A series of order `N` stores coefficients of `x^0..x^N`; every operation
//! is exact on that window, so two computations at different orders agree on
//! their common prefix.

use crate::arith::{factorial, Int, Rat};
use crate::error::Error;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// `ln(1+x)` truncated at `order`: coefficients `(-1)^(k-1)/k`.
    pub fn log1p(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in 1..=order {
            let num = if k % 2 == 1 { Int::one() } else { -Int::one() };
            s.coeffs[k] = Rat::new(num, Int::from(k));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(self.order(), other.order(), "series orders must match");
        let n = self.order();
        let mut out = PowerSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    /// `self^m` by repeated multiplication (`m = 0` gives the unit series).
    pub fn pow(&self, m: usize) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        for _ in 0..m {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse: `c_0 = 1/a_0`,
    /// `c_n = -(1/a_0) Σ_{j=1}^{n} a_j c_{n-j}`.
    pub fn reciprocal(&self) -> Result<PowerSeries, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = PowerSeries::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out.coeffs[k - j];
                }
            }
            out.coeffs[k] = -(&inv0 * acc);
        }
        Ok(out)
    }

    /// Divides by `x^k`, which must divide exactly (the low coefficients
    /// must vanish); the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> PowerSeries {
        assert!(k <= self.order(), "shift exceeds order");
        assert!(
            self.coeffs[..k].iter().all(Rat::is_zero),
            "series not divisible by x^{k}"
        );
        PowerSeries { coeffs: self.coeffs[k..].to_vec() }
    }
}

/// `s(n, m)` read off `[ln(1+x)]^m / m! = Σ_k s(k, m) x^k / k!`:
/// the coefficient of `x^n` in the `m`-th power, rescaled by `n!/m!`.
/// A non-integer result would falsify the identity, so it panics.
pub fn stirling_from_series(n: usize, m: usize) -> Int {
    assert!(m <= n, "s({n}, {m}) needs m <= n");
    let p = PowerSeries::log1p(n).pow(m);
    let value = p.coeff(n) * Rat::new(factorial(n), factorial(m));
    assert!(
        value.denom().is_one(),
        "series route for s({n}, {m}) gave non-integer {value}"
    );
    value.numer().clone()
}

/// `b_0..=b_n_max` from the generating function: the reciprocal of
/// `ln(1+x)/x` (the zero constant term of `ln(1+x)` shifts out first).
pub fn bernoulli2_from_series(n_max: usize) -> Vec<Rat> {
    let base = PowerSeries::log1p(n_max + 1).shift_down(1);
    let recip = base.reciprocal().expect("ln(1+x)/x starts at 1");
    (0..=n_max).map(|k| recip.coeff(k).clone()).collect()
}

//! Closed-form higher derivatives of `1/ln x`, `x/ln(1+x)`, and `e^(-1/t)`,
//! each paired with a jet-differentiation route for cross-checking.
//!
//! The exact tables supply the integer coefficients; these functions fold
//! them with float powers of `ln` at a point. Every formula here has a
//! companion `*_jet` evaluator that knows nothing about the closed forms.

use crate::arith::{binomial, factorial, int_to_f64, Int};
use crate::coeffs::CoeffTable;
use crate::error::Error;
use crate::jet::Jet;
use crate::stirling::StirlingTriangle;

/// The weights `c(k, l) = C(k, l) C(k-1, l) l!` appearing in the closed form
/// of `(e^(-1/t))^(k)` and in the gamma-kernel integrand. Row `k` holds
/// `l = 0..k` (the top one is zero since `C(k-1, k) = 0`).
#[derive(Debug, Clone)]
pub struct CWeights {
    k: usize,
    values: Vec<Int>,
}

impl CWeights {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "weights start at k = 1");
        let values = (0..k)
            .map(|l| binomial(k, l) * binomial(k - 1, l) * factorial(l))
            .collect();
        CWeights { k, values }
    }

    /// `c(k, l)` for `0 <= l <= k-1`.
    pub fn get(&self, l: usize) -> &Int {
        assert!(l < self.k, "c({}, {l}) out of range", self.k);
        &self.values[l]
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}

/// `d^n/dx^n (1/ln x)` from the coefficient triangle:
/// `(-1)^n x^(-n) Σ_{i=2}^{n+1} a(n, i)/(ln x)^i`.
pub fn inv_log_deriv_coeffs(table: &CoeffTable, n: usize, x: f64) -> Result<f64, Error> {
    require(n >= 1, "derivative order must be at least 1")?;
    require(n <= table.n_max(), "order beyond precomputed table")?;
    require(x > 0.0 && x != 1.0, "need x > 0 and x != 1")?;
    let ln = x.ln();
    let mut sum = 0.0;
    for i in 2..=n + 1 {
        sum += int_to_f64(&table.get(n, i)) / ln.powi(i as i32);
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * sum / x.powi(n as i32))
}

/// `d^m/dt^m (1/ln(1+t))` from the Stirling row:
/// `(1+t)^(-m) Σ_{i=0}^{m} (-1)^i i! s(m, i)/(ln(1+t))^(i+1)`.
///
/// Shifting by one (`t = x - 1`) turns this into the same derivative as
/// [`inv_log_deriv_coeffs`], which is how the suites compare them. `m = 0`
/// is allowed and gives `1/ln(1+t)` itself.
pub fn inv_log_deriv_stirling(st: &StirlingTriangle, m: usize, t: f64) -> Result<f64, Error> {
    require(m <= st.n_max(), "order beyond precomputed triangle")?;
    require(t > -1.0 && t != 0.0, "need t > -1 and t != 0")?;
    let ln = t.ln_1p();
    let mut sum = 0.0;
    let mut fac = 1.0;
    for i in 0..=m {
        if i > 1 {
            fac *= i as f64;
        }
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * fac * int_to_f64(&st.get(m, i)) / ln.powi(i as i32 + 1);
    }
    Ok(sum / (1.0 + t).powi(m as i32))
}

/// `d^n/dx^n (1/ln x)` by jet arithmetic alone.
pub fn inv_log_deriv_jet(n: usize, x: f64) -> Result<f64, Error> {
    require(x > 0.0 && x != 1.0, "need x > 0 and x != 1")?;
    let jet = Jet::variable(x, n).ln().recip();
    Ok(jet.derivative(n))
}

/// `d^i/dx^i (x/ln(1+x))` through the coefficient triangle, split by the
/// Leibniz rule as `x·D^i(1/ln(1+x)) + i·D^(i-1)(1/ln(1+x))`; the order-zero
/// factor in the second term is `1/ln(1+x)` itself.
pub fn x_over_log_deriv_coeffs(table: &CoeffTable, i: usize, x: f64) -> Result<f64, Error> {
    require(i >= 1, "derivative order must be at least 1")?;
    require(i <= table.n_max(), "order beyond precomputed table")?;
    require(x > -1.0 && x != 0.0, "need x > -1 and x != 0")?;
    let ln = x.ln_1p();
    let shifted_deriv = |j: usize| -> f64 {
        if j == 0 {
            return 1.0 / ln;
        }
        let mut sum = 0.0;
        for k in 2..=j + 1 {
            sum += int_to_f64(&table.get(j, k)) / ln.powi(k as i32);
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sign * sum / (1.0 + x).powi(j as i32)
    };
    Ok(x * shifted_deriv(i) + (i as f64) * shifted_deriv(i - 1))
}

/// `d^i/dx^i (x/ln(1+x))` through Stirling numbers:
///
/// ```text
/// (-1)^i (1+x)^(-i) Σ_{k=0}^{i} (-1)^(i+k) k! (x s(i,k) + i(1+x) s(i-1,k)) / ln(1+x)^(k+1)
/// ```
///
/// with `s(i-1, k) = 0` for `k > i-1`. The `k = 0` term only fires at
/// `i = 1`, where it carries the underived `1/ln(1+x)` factor.
pub fn x_over_log_deriv_stirling(st: &StirlingTriangle, i: usize, x: f64) -> Result<f64, Error> {
    require(i >= 1, "derivative order must be at least 1")?;
    require(i <= st.n_max(), "order beyond precomputed triangle")?;
    require(x > -1.0 && x != 0.0, "need x > -1 and x != 0")?;
    let ln = x.ln_1p();
    let mut sum = 0.0;
    let mut fac = 1.0;
    for k in 0..=i {
        if k > 1 {
            fac *= k as f64;
        }
        let s_i = int_to_f64(&st.get(i, k));
        let s_prev = if k <= i - 1 { int_to_f64(&st.get(i - 1, k)) } else { 0.0 };
        let term = x * s_i + (i as f64) * (1.0 + x) * s_prev;
        let sign = if (i + k) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * fac * term / ln.powi(k as i32 + 1);
    }
    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * sum / (1.0 + x).powi(i as i32))
}

/// `d^i/dx^i (x/ln(1+x))` by jet arithmetic alone.
pub fn x_over_log_deriv_jet(i: usize, x: f64) -> Result<f64, Error> {
    require(x > -1.0 && x != 0.0, "need x > -1 and x != 0")?;
    let xj = Jet::variable(x, i);
    let jet = xj.div(&xj.add_scalar(1.0).ln());
    Ok(jet.derivative(i))
}

/// `d^i/dt^i e^(-1/t) = e^(-1/t) t^(-2i) Σ_{l=0}^{i-1} (-1)^l c(i, l) t^l`.
/// Any `t != 0` works, negative included.
pub fn exp_recip_deriv(i: usize, t: f64) -> Result<f64, Error> {
    require(i >= 1, "derivative order must be at least 1")?;
    require(t != 0.0, "need t != 0")?;
    let w = CWeights::new(i);
    let mut sum = 0.0;
    for l in 0..i {
        let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * int_to_f64(w.get(l)) * t.powi(l as i32);
    }
    Ok(sum * (-1.0 / t).exp() / t.powi(2 * i as i32))
}

/// `d^i/dt^i e^(-1/t)` by jet arithmetic alone.
pub fn exp_recip_deriv_jet(i: usize, t: f64) -> Result<f64, Error> {
    require(t != 0.0, "need t != 0")?;
    let jet = Jet::variable(t, i).recip().neg().exp();
    Ok(jet.derivative(i))
}

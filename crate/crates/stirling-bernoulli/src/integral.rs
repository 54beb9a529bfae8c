//! Integral representations of the Stirling-weighted factorial sums, checked
//! both exactly (termwise integration) and numerically (quadrature).
//!
//! The central quantity is, for `n >= 1` and `1 <= k <= n+1`,
//!
//! ```text
//! S(n, k) = Σ_{i=k-1}^{n} (-1)^(n+i) i! (i+1)! s(n, i) / (i-k+1)!
//! ```
//!
//! which equals both a gamma-kernel integral
//! `∫_0^∞ (Γ(u+n)/Γ(u)) [Σ_l (-1)^l c(k,l) u^(k-l)] e^(-u) du`
//! and a boundary-term-plus-Stieltjes-weight representation built on the
//! function `e^(m/t)/(e^(1/t) - 1)^(m+1)`. Both right-hand sides are
//! recomputed here with no reference to `S` itself.

use crate::arith::{factorial, int_to_f64, Int};
use crate::deriv::CWeights;
use crate::error::Error;
use crate::jet::Jet;
use crate::quadrature::{adaptive_quadrature, GaussLaguerre, QuadratureConfig};
use crate::stirling::StirlingTriangle;
use num_traits::One;

/// Coefficients of the rising factorial `u(u+1)···(u+n-1) = Γ(u+n)/Γ(u)`,
/// expanded by direct polynomial multiplication. The coefficient of `u^j`
/// is `|s(n, j)|`, which the tests pin against the triangle.
#[derive(Debug, Clone)]
pub struct RisingFactorialPoly {
    coeffs: Vec<Int>,
}

impl RisingFactorialPoly {
    pub fn new(n: usize) -> Self {
        let mut coeffs = vec![Int::one()];
        for k in 0..n {
            let mut next = vec![Int::from(0); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] += c * Int::from(k);
            }
            coeffs = next;
        }
        RisingFactorialPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * u + int_to_f64(c);
        }
        acc
    }
}

/// The exact left-hand side `S(n, k)` straight from the Stirling row.
pub fn stirling_factorial_sum(st: &StirlingTriangle, n: usize, k: usize) -> Int {
    assert!(n >= 1 && (1..=n + 1).contains(&k), "need 1 <= k <= n+1");
    let mut total = Int::from(0);
    for i in k - 1..=n {
        // i!/(i-k+1)! = (i-k+2)(i-k+3)···i, the falling block of length k-1
        let mut falling = Int::one();
        for v in (i + 2 - k)..=i {
            falling *= Int::from(v);
        }
        let term = factorial(i + 1) * falling * st.get(n, i);
        if (n + i) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Termwise-exact evaluation of the gamma-kernel integral: expand the
/// rising factorial, multiply by the `c(k, l)` bracket, and integrate each
/// monomial with `∫_0^∞ u^m e^(-u) du = m!`.
pub fn gamma_kernel_integral_exact(n: usize, k: usize) -> Int {
    assert!(n >= 1 && (1..=n + 1).contains(&k));
    let rising = RisingFactorialPoly::new(n);
    let weights = CWeights::new(k);
    let mut total = Int::from(0);
    for l in 0..k {
        let mut inner = Int::from(0);
        for (j, c) in rising.coeffs().iter().enumerate() {
            inner += c * factorial(j + k - l);
        }
        let term = weights.get(l) * inner;
        if l % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The same integral by Gauss–Laguerre quadrature. The integrand without
/// the `e^(-u)` weight is a polynomial of degree `n + k`, so any rule with
/// more than `(n+k)/2` nodes is exact up to roundoff; 40 nodes cover every
/// range the suites use.
pub fn gamma_kernel_integral_quad(n: usize, k: usize, rule: &GaussLaguerre) -> f64 {
    assert!(n >= 1 && (1..=n + 1).contains(&k));
    let rising = RisingFactorialPoly::new(n);
    let weights = CWeights::new(k);
    let wf: Vec<f64> = (0..k).map(|l| int_to_f64(weights.get(l))).collect();
    rule.integrate(|u| {
        let mut bracket = 0.0;
        for (l, w) in wf.iter().enumerate() {
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            bracket += sign * w * u.powi((k - l) as i32);
        }
        rising.eval_f64(u) * bracket
    })
}

/// Coefficientwise comparison of `∫_0^∞ (Γ(u+m)/Γ(u)) e^(-u/t) du`, done two
/// ways as a polynomial in `t`: termwise integration of the rising factorial
/// (`|s(m, j)| j!` at `t^(j+1)`) against the signed Stirling form
/// (`(-1)^(m+i) i! s(m, i)` at `t^(i+1)`).
#[derive(Debug, Clone)]
pub struct LaplaceCheck {
    pub m: usize,
    /// `(termwise, signed)` coefficient pairs for `t^(j+1)`, `j = 0..=m`.
    pub pairs: Vec<(Int, Int)>,
    pub all_equal: bool,
}

pub fn laplace_transform_check(st: &StirlingTriangle, m: usize) -> LaplaceCheck {
    let rising = RisingFactorialPoly::new(m);
    let mut pairs = Vec::with_capacity(m + 1);
    let mut all_equal = true;
    for j in 0..=m {
        let termwise = rising.coeffs()[j].clone() * factorial(j);
        let mut signed = factorial(j) * st.get(m, j);
        if (m + j) % 2 != 0 {
            signed = -signed;
        }
        all_equal &= termwise == signed;
        pairs.push((termwise, signed));
    }
    LaplaceCheck { m, pairs, all_equal }
}

/// Pieces of the Stieltjes-weight representation of `S(m, k)`.
#[derive(Debug, Clone)]
pub struct StieltjesEval {
    pub value: f64,
    pub boundary: f64,
    pub integral: f64,
    /// Bound on what the window truncation discarded.
    pub truncation_bound: f64,
    pub window: (f64, f64),
}

/// `k`-th `t`-derivative at `t = 1` of `e^(m/t)/(e^(1/t) - 1 + shift)^(m+1)`,
/// by jet arithmetic (`shift = 0` is the boundary term's function).
fn exp_kernel_deriv(m: usize, k: usize, shift: f64) -> f64 {
    let t = Jet::variable(1.0, k);
    let inv_t = t.recip();
    let num = inv_t.scale(m as f64).exp();
    let den = inv_t.exp().add_scalar(shift - 1.0).powi(m as u32 + 1);
    num.div(&den).derivative(k)
}

/// Evaluates the representation
///
/// ```text
/// S(m, k) = m! [ d^k/dt^k e^(m/t)/(e^(1/t)-1)^(m+1) |_{t=1}
///              + ∫_1^∞ (d^k/dt^k e^(m/t)/(e^(1/t)-1+u)^(m+1) |_{t=1})
///                      du / (ln^2(u-1) + π^2) ]
/// ```
///
/// The integral is computed after the substitution `u = 1 + e^v`, which
/// removes the logarithmic singularity (the weight becomes `1/(v^2 + π^2)`)
/// and exposes the exponential decay at both ends: like `e^v` as `v -> -∞`
/// and like `e^(-mv)` as `v -> +∞`. The default window is `[-30, w]` with
/// `w` sized so `e^(-mw)` sits below `abs_tol`.
pub fn stieltjes_rhs(m: usize, k: usize, cfg: &QuadratureConfig) -> Result<StieltjesEval, Error> {
    if m < 1 {
        return Err(Error::Domain("need m >= 1".into()));
    }
    if !(1..=m + 1).contains(&k) {
        return Err(Error::Domain("need 1 <= k <= m+1".into()));
    }
    cfg.validate()?;

    let boundary = exp_kernel_deriv(m, k, 0.0);

    let integrand = |v: f64| {
        let u = 1.0 + v.exp();
        exp_kernel_deriv(m, k, u) * v.exp() / (v * v + std::f64::consts::PI.powi(2))
    };

    let (v_lo, v_hi) = cfg.window.unwrap_or_else(|| {
        let hi = ((1.0 / cfg.abs_tol).ln() / m as f64 + 5.0).max(30.0);
        (-30.0, hi)
    });
    // decay rates: e^v below, e^(-mv) above
    let truncation_bound = integrand(v_lo).abs() + integrand(v_hi).abs() / m as f64;

    let integral = adaptive_quadrature(&integrand, v_lo, v_hi, cfg)?;
    let m_fact = int_to_f64(&factorial(m));
    let value = m_fact * (boundary + integral);

    if truncation_bound * m_fact > cfg.abs_tol.max(cfg.rel_tol * value.abs()) {
        return Err(Error::Truncation {
            bound: truncation_bound * m_fact,
            tol: cfg.abs_tol,
        });
    }

    Ok(StieltjesEval {
        value,
        boundary: m_fact * boundary,
        integral: m_fact * integral,
        truncation_bound: truncation_bound * m_fact,
        window: (v_lo, v_hi),
    })
}

/// Smoke test for the machinery: `∫_0^∞ (1+x)^(-u) du = 1/ln(1+x)` for
/// `x > 0`, integrated on a window sized from the known exponential decay.
pub fn inv_log_integral(x: f64, cfg: &QuadratureConfig) -> Result<f64, Error> {
    if !(x > 0.0) {
        return Err(Error::Domain("need x > 0".into()));
    }
    cfg.validate()?;
    let rate = x.ln_1p();
    let upper = ((1.0 / cfg.abs_tol).ln() + 5.0) / rate;
    adaptive_quadrature(&|u: f64| (-u * rate).exp(), 0.0, upper, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use num_traits::Signed;

    #[test]
    fn rising_factorial_matches_unsigned_stirling() {
        let st = StirlingTriangle::new(12);
        for n in 0..=12 {
            let poly = RisingFactorialPoly::new(n);
            for (j, c) in poly.coeffs().iter().enumerate() {
                assert_eq!(c, &st.get(n, j).abs(), "|s({n}, {j})|");
            }
        }
    }

    #[test]
    fn rising_factorial_eval() {
        let poly = RisingFactorialPoly::new(3); // u(u+1)(u+2)
        assert_relative_eq!(poly.eval_f64(2.0), 24.0);
        assert_relative_eq!(poly.eval_f64(0.5), 0.5 * 1.5 * 2.5);
    }

    #[test]
    fn factorial_sum_hand_values() {
        let st = StirlingTriangle::new(8);
        assert_eq!(stirling_factorial_sum(&st, 1, 1), Int::from(2));
        assert_eq!(stirling_factorial_sum(&st, 2, 1), Int::from(8));
        assert_eq!(stirling_factorial_sum(&st, 2, 3), Int::from(12));
        assert_eq!(stirling_factorial_sum(&st, 3, 2), Int::from(112));
        assert_eq!(stirling_factorial_sum(&st, 5, 3), Int::from(34440));
        assert_eq!(stirling_factorial_sum(&st, 8, 9), Int::from(14631321600u64));
    }

    #[test]
    fn exact_identity_through_twelve() {
        let st = StirlingTriangle::new(12);
        for n in 1..=12 {
            for k in 1..=n + 1 {
                assert_eq!(
                    stirling_factorial_sum(&st, n, k),
                    gamma_kernel_integral_exact(n, k),
                    "S({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn quadrature_matches_exact() {
        let st = StirlingTriangle::new(8);
        let rule = GaussLaguerre::new(40);
        for n in 1..=8 {
            for k in 1..=n + 1 {
                let exact = int_to_f64(&stirling_factorial_sum(&st, n, k));
                let quad = gamma_kernel_integral_quad(n, k, &rule);
                assert_relative_eq!(quad, exact, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn laplace_coefficients_match() {
        let st = StirlingTriangle::new(15);
        for m in 0..=15 {
            let check = laplace_transform_check(&st, m);
            assert!(check.all_equal, "m = {m}: {:?}", check.pairs);
        }
    }

    #[test]
    fn stieltjes_small_cases() {
        let st = StirlingTriangle::new(3);
        let cfg = QuadratureConfig::default();
        for m in 1..=3 {
            for k in 1..=m + 1 {
                let lhs = int_to_f64(&stirling_factorial_sum(&st, m, k));
                let eval = stieltjes_rhs(m, k, &cfg).unwrap();
                assert_relative_eq!(eval.value, lhs, max_relative = 1e-6);
            }
        }
    }

    #[test]
    fn stieltjes_window_consistency() {
        let cfg_small = QuadratureConfig { window: Some((-30.0, 30.0)), ..Default::default() };
        let cfg_large = QuadratureConfig { window: Some((-40.0, 40.0)), ..Default::default() };
        let small = stieltjes_rhs(2, 2, &cfg_small).unwrap();
        let large = stieltjes_rhs(2, 2, &cfg_large).unwrap();
        let allowance = small.truncation_bound + 2.0 * cfg_small.abs_tol;
        assert!(
            (small.value - large.value).abs() <= allowance,
            "windows differ by {} > {}",
            (small.value - large.value).abs(),
            allowance
        );
    }

    #[test]
    fn stieltjes_domain_checks() {
        let cfg = QuadratureConfig::default();
        assert!(stieltjes_rhs(0, 1, &cfg).is_err());
        assert!(stieltjes_rhs(2, 4, &cfg).is_err());
        assert!(stieltjes_rhs(2, 0, &cfg).is_err());
    }

    #[test]
    fn smoke_integral_1_over_log() {
        let cfg = QuadratureConfig::default();
        for &x in &[1.0, std::f64::consts::E - 1.0, 9.0] {
            let got = inv_log_integral(x, &cfg).unwrap();
            assert_relative_eq!(got, 1.0 / x.ln_1p(), max_relative = 1e-8);
        }
        assert!(inv_log_integral(0.0, &cfg).is_err());
        assert!(inv_log_integral(-0.5, &cfg).is_err());
    }
}

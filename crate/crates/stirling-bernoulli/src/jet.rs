//! Truncated Taylor arithmetic over f64: the numeric differentiation oracle.
//!
//! A [`Jet`] of order `K` carries the Taylor coefficients `c_0..c_K` of a
//! function around an expansion point, so the `k`-th derivative is
//! `k! c_k`. Propagating entire coefficient vectors through arithmetic
//! sidesteps the step-size dilemma of finite differences; the recurrences
//! below are the standard truncated power-series ones.

/// Taylor coefficients `coeffs[k] = f^(k)(x0)/k!` up to order `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// The identity function `x` expanded at `x0`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = x0;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Jet { coeffs }
    }

    pub fn constant(c: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty());
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    /// `f^(k)(x0) = k! c_k`.
    pub fn derivative(&self, k: usize) -> f64 {
        assert!(k <= self.order(), "derivative order {k} beyond jet order");
        let mut fac = 1.0;
        for j in 2..=k {
            fac *= j as f64;
        }
        self.coeffs[k] * fac
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    fn same_order(&self, other: &Jet) -> usize {
        assert_eq!(self.order(), other.order(), "jet orders must match");
        self.order()
    }

    pub fn add(&self, other: &Jet) -> Jet {
        self.same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Jet { coeffs }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        self.same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Jet { coeffs }
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add_scalar(&self, s: f64) -> Jet {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] += s;
        Jet { coeffs }
    }

    pub fn neg(&self) -> Jet {
        self.scale(-1.0)
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        let n = self.same_order(other);
        let mut coeffs = vec![0.0; n + 1];
        for i in 0..=n {
            if self.coeffs[i] == 0.0 {
                continue;
            }
            for j in 0..=n - i {
                coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
            }
        }
        Jet { coeffs }
    }

    /// Long division: `c_k = (a_k - Σ_{j=1}^{k} b_j c_{k-j}) / b_0`.
    pub fn div(&self, other: &Jet) -> Jet {
        let n = self.same_order(other);
        assert!(other.coeffs[0] != 0.0, "division by jet with zero value");
        let mut coeffs = vec![0.0; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / other.coeffs[0];
        }
        Jet { coeffs }
    }

    pub fn recip(&self) -> Jet {
        Jet::constant(1.0, self.order()).div(self)
    }

    /// `exp(f)` via `g' = f' g`:
    /// `g_k = (1/k) Σ_{j=1}^{k} j f_j g_{k-j}`.
    pub fn exp(&self) -> Jet {
        let n = self.order();
        let mut coeffs = vec![0.0; n + 1];
        coeffs[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let mut acc = 0.0;
            for j in 1..=k {
                acc += (j as f64) * self.coeffs[j] * coeffs[k - j];
            }
            coeffs[k] = acc / k as f64;
        }
        Jet { coeffs }
    }

    /// `ln(f)` for `f(x0) > 0`, via `f g' = f'`:
    /// `g_k = (f_k - (1/k) Σ_{j=1}^{k-1} j g_j f_{k-j}) / f_0`.
    pub fn ln(&self) -> Jet {
        let n = self.order();
        assert!(self.coeffs[0] > 0.0, "ln of jet with non-positive value");
        let mut coeffs = vec![0.0; n + 1];
        coeffs[0] = self.coeffs[0].ln();
        for k in 1..=n {
            let mut acc = self.coeffs[k];
            for j in 1..k {
                acc -= (j as f64) * coeffs[j] * self.coeffs[k - j] / k as f64;
            }
            coeffs[k] = acc / self.coeffs[0];
        }
        Jet { coeffs }
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, mut e: u32) -> Jet {
        let mut base = self.clone();
        let mut acc = Jet::constant(1.0, self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exp_coefficients() {
        let j = Jet::variable(0.0, 6).exp();
        let mut fac = 1.0;
        for k in 0..=6 {
            if k > 0 {
                fac *= k as f64;
            }
            assert_relative_eq!(j.coeff(k), 1.0 / fac, epsilon = 1e-15);
        }
    }

    #[test]
    fn ln_one_plus_x_coefficients() {
        let j = Jet::variable(0.0, 5).add_scalar(1.0).ln();
        let expect = [0.0, 1.0, -0.5, 1.0 / 3.0, -0.25, 0.2];
        for (k, e) in expect.iter().enumerate() {
            assert_relative_eq!(j.coeff(k), *e, epsilon = 1e-15);
        }
    }

    #[test]
    fn ln_derivatives_closed_form() {
        // (ln x)^(k) = (-1)^(k-1) (k-1)!/x^k
        for &x in &[0.5, 2.0, 10.0] {
            let j = Jet::variable(x, 10).ln();
            let mut fac = 1.0;
            for k in 1..=10 {
                if k > 1 {
                    fac *= (k - 1) as f64;
                }
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                let expect = sign * fac / x.powi(k as i32);
                assert_relative_eq!(j.derivative(k), expect, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn exp_ln_round_trip() {
        let f = Jet::from_coeffs(vec![2.0, -1.5, 0.25, 3.0, -0.5]);
        let back = f.ln().exp();
        for k in 0..=4 {
            assert_relative_eq!(back.coeff(k), f.coeff(k), max_relative = 1e-13);
        }
    }

    #[test]
    fn div_mul_round_trip() {
        let a = Jet::from_coeffs(vec![1.0, 2.0, 3.0, 4.0]);
        let b = Jet::from_coeffs(vec![2.0, -1.0, 0.5, 1.0]);
        let q = a.div(&b);
        let back = q.mul(&b);
        for k in 0..=3 {
            assert_relative_eq!(back.coeff(k), a.coeff(k), max_relative = 1e-14);
        }
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let f = Jet::from_coeffs(vec![1.5, -0.5, 2.0, 1.0, 0.25]);
        let by_pow = f.powi(5);
        let mut by_mul = f.clone();
        for _ in 1..5 {
            by_mul = by_mul.mul(&f);
        }
        for k in 0..=4 {
            assert_relative_eq!(by_pow.coeff(k), by_mul.coeff(k), max_relative = 1e-13);
        }
        assert_eq!(f.powi(0), Jet::constant(1.0, 4));
    }

    #[test]
    fn quotient_rule_spot_check() {
        // d/dx [x / ln x] at x = 2: (ln x - 1)/ln^2 x
        let x = Jet::variable(2.0, 1);
        let f = x.div(&x.ln());
        let l = 2.0f64.ln();
        assert_relative_eq!(f.derivative(1), (l - 1.0) / (l * l), max_relative = 1e-14);
    }

    #[test]
    #[should_panic(expected = "non-positive")]
    fn ln_rejects_negative_value() {
        Jet::variable(-1.0, 3).ln();
    }

    #[test]
    #[should_panic(expected = "zero value")]
    fn div_rejects_zero_constant() {
        let a = Jet::variable(1.0, 3);
        let b = Jet::variable(0.0, 3);
        a.div(&b);
    }
}

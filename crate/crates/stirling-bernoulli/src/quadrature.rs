//! Numeric integration used by the integral verification layer: a
//! Gauss–Laguerre rule for `∫_0^∞ f(u) e^(-u) du` with polynomial `f`, and
//! an adaptive Gauss–Kronrod 7/15 scheme for finite windows.

use crate::error::Error;

/// Tolerances and window for the adaptive routes.
///
/// `window = None` lets each integral pick its own truncation of an infinite
/// range (and compute the matching tail bound); setting it pins the range,
/// which the consistency checks use to compare two truncations.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub window: Option<(f64, f64)>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 4000,
            window: None,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol >= 0.0) {
            return Err(Error::Config("tolerances must be positive".into()));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::Config("need at least one subdivision".into()));
        }
        if let Some((lo, hi)) = self.window {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Config(format!("bad window [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

/// Gauss–Laguerre rule: nodes and weights for `∫_0^∞ f(u) e^(-u) du`,
/// exact for polynomial `f` of degree `<= 2n - 1`.
///
/// Nodes are the roots of the Laguerre polynomial `L_n`, found by Newton
/// iteration on the three-term recurrence; the weight at a root `x` is
/// `x / ((n+1) L_{n+1}(x))^2`.
#[derive(Debug, Clone)]
pub struct GaussLaguerre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// `(L_n(x), L_{n-1}(x))` by upward recurrence.
fn laguerre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0; // L_0
    if n == 0 {
        return (prev, 0.0);
    }
    let mut cur = 1.0 - x; // L_1
    for k in 1..n {
        let next = ((2.0 * k as f64 + 1.0 - x) * cur - k as f64 * prev) / (k as f64 + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

impl GaussLaguerre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        let mut z = 0.0;
        for i in 0..n {
            // initial guesses (Stroud-Secrest style spacing)
            z = match i {
                0 => 3.0 / (1.0 + 2.4 * nf),
                1 => z + 15.0 / (1.0 + 2.5 * nf),
                _ => {
                    let ai = (i - 1) as f64;
                    z + ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - nodes[i - 2])
                }
            };
            for _ in 0..120 {
                let (p, pm1) = laguerre_pair(n, z);
                let dp = nf * (p - pm1) / z;
                let step = p / dp;
                z -= step;
                if step.abs() <= 1e-15 * z.abs().max(1.0) {
                    break;
                }
            }
            nodes[i] = z;
            let (lnp1, _) = laguerre_pair(n + 1, z);
            let scaled = (nf + 1.0) * lnp1;
            weights[i] = z / (scaled * scaled);
        }
        GaussLaguerre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_0^∞ f(u) e^(-u) du ≈ Σ w_i f(x_i)` (the weight is implicit).
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

// Gauss-Kronrod 7/15 constants (positive abscissae; even indices are the
// Kronrod extension, odd ones the embedded Gauss points).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Kronrod-15 panel: returns the K15 value and `|K15 - G7|` as the
/// error proxy.
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        resk += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    (resk * half, ((resk - resg) * half).abs())
}

/// Adaptive bisection over `[a, b]`: splits the worst panel until the summed
/// error proxy satisfies `max(abs_tol, rel_tol·|I|)` or the panel budget runs
/// out.
pub fn adaptive_quadrature<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<f64, Error> {
    cfg.validate()?;
    let mut panels = vec![{
        let (v, e) = qk15(f, a, b);
        (a, b, v, e)
    }];
    for _ in 0..cfg.max_subdivisions {
        let total: f64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        if err <= cfg.abs_tol.max(cfg.rel_tol * total.abs()) {
            return Ok(total);
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let (pa, pb, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (pa + pb);
        let (v1, e1) = qk15(f, pa, mid);
        let (v2, e2) = qk15(f, mid, pb);
        panels.push((pa, mid, v1, e1));
        panels.push((mid, pb, v2, e2));
    }
    let estimate: f64 = panels.iter().map(|p| p.3).sum();
    Err(Error::QuadratureNonConvergence {
        subdivisions: cfg.max_subdivisions,
        estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn laguerre_moments_are_factorials() {
        // degree <= 2n-1 integrates exactly: moments m! for m <= 15 at n = 20
        let rule = GaussLaguerre::new(20);
        let mut fact = 1.0;
        for m in 0..=15 {
            if m > 0 {
                fact *= m as f64;
            }
            let got = rule.integrate(|u| u.powi(m));
            assert_relative_eq!(got, fact, max_relative = 1e-12);
        }
    }

    #[test]
    fn laguerre_weights_sum_to_one() {
        for n in [1, 2, 5, 40] {
            let rule = GaussLaguerre::new(n);
            assert_eq!(rule.len(), n);
            let total: f64 = rule.weights.iter().sum();
            assert_relative_eq!(total, 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn laguerre_nodes_sorted_positive() {
        let rule = GaussLaguerre::new(40);
        assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(rule.nodes[0] > 0.0);
    }

    #[test]
    fn kronrod_panel_exact_on_cubic() {
        let (v, _) = qk15(&|x: f64| x * x * x - 2.0 * x + 1.0, 0.0, 2.0);
        // antiderivative x^4/4 - x^2 + x
        assert_relative_eq!(v, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn adaptive_known_integrals() {
        let cfg = QuadratureConfig::default();
        let sin = adaptive_quadrature(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, &cfg).unwrap();
        assert_relative_eq!(sin, 2.0, max_relative = 1e-12);
        let gauss = adaptive_quadrature(&|x: f64| (-x * x).exp(), -10.0, 10.0, &cfg).unwrap();
        assert_relative_eq!(gauss, std::f64::consts::PI.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let cfg = QuadratureConfig::default();
        // narrow Lorentzian: ∫ dx / (x^2 + eps^2) over [-1, 1] = 2 atan(1/eps)/eps
        let eps = 1e-3;
        let got =
            adaptive_quadrature(&|x: f64| 1.0 / (x * x + eps * eps), -1.0, 1.0, &cfg).unwrap();
        let expect = 2.0 * (1.0 / eps).atan() / eps;
        assert_relative_eq!(got, expect, max_relative = 1e-9);
    }

    #[test]
    fn adaptive_reports_non_convergence() {
        let cfg = QuadratureConfig {
            max_subdivisions: 3,
            abs_tol: 1e-300,
            rel_tol: 0.0,
            window: None,
        };
        let err = adaptive_quadrature(&|x: f64| (x * 50.0).sin(), 0.0, 1.0, &cfg);
        assert!(matches!(err, Err(Error::QuadratureNonConvergence { .. })));
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::default().validate().is_ok());
        let bad = QuadratureConfig { abs_tol: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = QuadratureConfig { window: Some((3.0, -3.0)), ..Default::default() };
        assert!(bad.validate().is_err());
    }
}

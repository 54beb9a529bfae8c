//! Named cross-validation suites. Each check pits independent routes to the
//! same quantity against each other and reports the worst residual; the CLI
//! `verify` subcommand and the acceptance tests both run these.

use crate::arith::{factorial, int_to_f64, rat_to_f64, Int, Rat};
use crate::bernoulli::{bernoulli2_from_coeffs, bernoulli2_from_stirling};
use crate::coeffs::{a_from_stirling, conjecture_check, CoeffTable};
use crate::deriv;
use crate::harmonic::{nest_by_enumeration, reciprocal_factorial, HarmonicNest};
use crate::integral;
use crate::quadrature::{GaussLaguerre, QuadratureConfig};
use crate::series::{bernoulli2_from_series, PowerSeries};
use crate::stirling::{stirling_from_nested, stirling_from_product, StirlingTriangle};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Outcome of one named check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub range: String,
    /// Worst relative residual seen; exactly 0 for integer/rational checks.
    pub max_residual: f64,
    pub passed: bool,
    /// Set on failure: the first offending case.
    pub detail: Option<String>,
}

impl CheckResult {
    fn exact(name: &str, range: String, failure: Option<String>) -> Self {
        CheckResult {
            name: name.into(),
            range,
            max_residual: 0.0,
            passed: failure.is_none(),
            detail: failure,
        }
    }

    fn float(name: &str, range: String, max_residual: f64, tol: f64, worst: Option<String>) -> Self {
        let passed = max_residual <= tol;
        CheckResult {
            name: name.into(),
            range,
            max_residual,
            passed,
            detail: if passed { None } else { worst },
        }
    }

    /// One aligned text line: name, range, residual, verdict.
    pub fn render(&self) -> String {
        let residual = if self.max_residual == 0.0 {
            "exact".to_string()
        } else {
            format!("{:.2e}", self.max_residual)
        };
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!("{:<34} {:<22} {:>9}  {}", self.name, self.range, residual, verdict);
        if let Some(d) = &self.detail {
            line.push_str(&format!("  [{d}]"));
        }
        line
    }
}

fn rel_err(got: f64, expect: f64) -> f64 {
    if got == expect {
        0.0
    } else if expect == 0.0 {
        got.abs()
    } else {
        (got - expect).abs() / expect.abs()
    }
}

/// Tracks the worst case of a float comparison sweep.
struct Worst {
    residual: f64,
    case: Option<String>,
}

impl Worst {
    fn new() -> Self {
        Worst { residual: 0.0, case: None }
    }

    fn update(&mut self, residual: f64, case: impl FnOnce() -> String) {
        if residual > self.residual || self.case.is_none() {
            self.residual = residual;
            self.case = Some(case());
        }
    }
}

// ---------------------------------------------------------------------------
// core: exact cross-route equalities
// ---------------------------------------------------------------------------

pub fn core_suite(n_max: usize) -> Vec<CheckResult> {
    let n_max = n_max.max(2);
    let st = StirlingTriangle::new(n_max);
    let coeffs = CoeffTable::new(n_max);
    let mut out = Vec::new();

    // recursion vs product expansion
    let mut failure = None;
    for n in 0..=n_max {
        let product = stirling_from_product(n);
        if product != st.row(n) {
            failure = Some(format!("row {n} differs"));
            break;
        }
    }
    out.push(CheckResult::exact(
        "stirling-recursion-vs-product",
        format!("n <= {n_max}"),
        failure,
    ));

    // recursion vs nested harmonic sum
    let mut failure = None;
    'nested: for n in 1..=n_max {
        for i in 1..=n {
            if stirling_from_nested(n, i) != st.get(n, i) {
                failure = Some(format!("s({n}, {i}) differs"));
                break 'nested;
            }
        }
    }
    out.push(CheckResult::exact(
        "stirling-recursion-vs-nested",
        format!("1 <= i <= n <= {n_max}"),
        failure,
    ));

    // recursion vs series extraction, sharing one set of incremental powers
    let mut failure = None;
    let log1p = PowerSeries::log1p(n_max);
    let mut power = PowerSeries::one(n_max);
    'series: for m in 0..=n_max {
        for n in m..=n_max {
            let value = power.coeff(n) * Rat::new(factorial(n), factorial(m));
            if !value.denom().is_one() || value.numer() != &st.get(n, m) {
                failure = Some(format!("s({n}, {m}) differs"));
                break 'series;
            }
        }
        power = power.mul(&log1p);
    }
    out.push(CheckResult::exact(
        "stirling-recursion-vs-series",
        format!("0 <= k <= n <= {n_max}"),
        failure,
    ));

    // coefficient triangle vs its Stirling link
    let mut failure = None;
    'link: for n in 1..=n_max {
        for i in 2..=n + 1 {
            if coeffs.get(n, i) != a_from_stirling(&st, n, i) {
                failure = Some(format!("a({n}, {i}) differs"));
                break 'link;
            }
        }
    }
    out.push(CheckResult::exact(
        "coeff-recursion-vs-stirling-link",
        format!("n <= {n_max}"),
        failure,
    ));

    // bernoulli2 by three routes
    let b_max = n_max.min(30);
    let series = bernoulli2_from_series(b_max);
    let mut failure = None;
    for n in 0..=b_max {
        let c = bernoulli2_from_coeffs(n);
        let s = bernoulli2_from_stirling(n);
        if c != s || c != series[n] {
            failure = Some(format!("b_{n} differs across routes"));
            break;
        }
    }
    out.push(CheckResult::exact(
        "bernoulli2-three-routes",
        format!("n <= {b_max}"),
        failure,
    ));

    // 1/n! as the full-depth harmonic chain
    let f_max = n_max.min(20);
    let mut failure = None;
    for n in 0..=f_max {
        if reciprocal_factorial(n) != Rat::new(Int::one(), factorial(n)) {
            failure = Some(format!("H({n}, {n}) != 1/{n}!"));
            break;
        }
    }
    out.push(CheckResult::exact(
        "reciprocal-factorial-chain",
        format!("n <= {f_max}"),
        failure,
    ));

    // harmonic DP vs brute-force chain enumeration
    let h_max = n_max.min(8);
    let nest = HarmonicNest::new(h_max, h_max);
    let mut failure = None;
    'nest: for m in 0..=h_max {
        for j in 0..=h_max {
            if nest.get(j, m) != &nest_by_enumeration(j, m) {
                failure = Some(format!("H({j}, {m}) differs"));
                break 'nest;
            }
        }
    }
    out.push(CheckResult::exact(
        "harmonic-dp-vs-enumeration",
        format!("j, m <= {h_max}"),
        failure,
    ));

    // row sums: signed rows vanish, unsigned rows hit n!
    let mut failure = None;
    for n in 0..=n_max {
        let signed: Int = st.row(n).iter().sum();
        let unsigned: Int = st.row(n).iter().map(|v| v.abs()).sum();
        if n >= 2 && !signed.is_zero() {
            failure = Some(format!("signed row sum n={n} is {signed}"));
            break;
        }
        if unsigned != factorial(n) {
            failure = Some(format!("unsigned row sum n={n}"));
            break;
        }
    }
    out.push(CheckResult::exact(
        "stirling-row-sums",
        format!("n <= {n_max}"),
        failure,
    ));

    out
}

// ---------------------------------------------------------------------------
// derivatives: closed forms vs jets
// ---------------------------------------------------------------------------

const INV_LOG_POINTS: [f64; 3] = [0.5, 2.0, 10.0];
const EXP_RECIP_POINTS: [f64; 3] = [0.5, 1.0, 3.0];

pub fn derivatives_suite(order_max: usize, tol_override: Option<f64>) -> Vec<CheckResult> {
    let order_max = order_max.clamp(2, 40);
    let jet_tol = tol_override.unwrap_or(1e-9);
    let cross_tol = tol_override.unwrap_or(1e-12);
    let table = CoeffTable::new(order_max);
    let st = StirlingTriangle::new(order_max);
    let mut out = Vec::new();

    // jet sanity: derivatives of ln x against the elementary closed form
    let mut worst = Worst::new();
    for &x in &INV_LOG_POINTS {
        let jet = crate::jet::Jet::variable(x, order_max).ln();
        let mut fac = 1.0;
        for k in 1..=order_max {
            if k > 1 {
                fac *= (k - 1) as f64;
            }
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let expect = sign * fac / x.powi(k as i32);
            worst.update(rel_err(jet.derivative(k), expect), || format!("k={k}, x={x}"));
        }
    }
    out.push(CheckResult::float(
        "jet-ln-vs-closed-form",
        format!("k <= {order_max}, x in {INV_LOG_POINTS:?}"),
        worst.residual,
        cross_tol.max(1e-12),
        worst.case,
    ));

    // coefficient-table closed form vs jets
    let mut worst = Worst::new();
    for &x in &INV_LOG_POINTS {
        for n in 1..=order_max {
            let closed = deriv::inv_log_deriv_coeffs(&table, n, x).unwrap();
            let jet = deriv::inv_log_deriv_jet(n, x).unwrap();
            worst.update(rel_err(closed, jet), || format!("n={n}, x={x}"));
        }
    }
    out.push(CheckResult::float(
        "inv-log-coeff-vs-jet",
        format!("n <= {order_max}, x in {INV_LOG_POINTS:?}"),
        worst.residual,
        jet_tol,
        worst.case,
    ));

    // Stirling-row closed form vs the coefficient-table one (shifted argument)
    let mut worst = Worst::new();
    for &x in &INV_LOG_POINTS {
        for m in 1..=order_max {
            let a = deriv::inv_log_deriv_coeffs(&table, m, x).unwrap();
            let b = deriv::inv_log_deriv_stirling(&st, m, x - 1.0).unwrap();
            worst.update(rel_err(a, b), || format!("m={m}, x={x}"));
        }
    }
    out.push(CheckResult::float(
        "inv-log-stirling-vs-coeff",
        format!("m <= {order_max}, x in {INV_LOG_POINTS:?}"),
        worst.residual,
        cross_tol,
        worst.case,
    ));

    // the two x/ln(1+x) variants against each other; the closed forms are
    // algebraically identical, so any gap is cancellation noise, which only
    // stays below 1e-12 at abscissae where the summed terms do not dwarf the
    // result (small x at high order is covered by the jet comparison below)
    let i_max = order_max.min(8);
    const VARIANT_POINTS: [f64; 3] = [2.0, 5.0, 10.0];
    let mut worst = Worst::new();
    for &x in &VARIANT_POINTS {
        for i in 1..=i_max {
            let a = deriv::x_over_log_deriv_coeffs(&table, i, x).unwrap();
            let b = deriv::x_over_log_deriv_stirling(&st, i, x).unwrap();
            worst.update(rel_err(a, b), || format!("i={i}, x={x}"));
        }
    }
    {
        let a = deriv::x_over_log_deriv_coeffs(&table, 4, 0.7).unwrap();
        let b = deriv::x_over_log_deriv_stirling(&st, 4, 0.7).unwrap();
        worst.update(rel_err(a, b), || "i=4, x=0.7".to_string());
    }
    out.push(CheckResult::float(
        "x-over-log-variants-agree",
        format!("i <= {i_max}, x in {VARIANT_POINTS:?} + (4, 0.7)"),
        worst.residual,
        cross_tol,
        worst.case,
    ));

    // ... and against the jet route
    let mut worst = Worst::new();
    for &x in &INV_LOG_POINTS {
        for i in 1..=i_max {
            let a = deriv::x_over_log_deriv_coeffs(&table, i, x).unwrap();
            let j = deriv::x_over_log_deriv_jet(i, x).unwrap();
            worst.update(rel_err(a, j), || format!("i={i}, x={x}"));
        }
    }
    out.push(CheckResult::float(
        "x-over-log-vs-jet",
        format!("i <= {i_max}, x in {INV_LOG_POINTS:?}"),
        worst.residual,
        jet_tol,
        worst.case,
    ));

    // e^(-1/t) closed form vs jets
    let mut worst = Worst::new();
    for &t in &EXP_RECIP_POINTS {
        for i in 1..=order_max.min(10) {
            let closed = deriv::exp_recip_deriv(i, t).unwrap();
            let jet = deriv::exp_recip_deriv_jet(i, t).unwrap();
            worst.update(rel_err(closed, jet), || format!("i={i}, t={t}"));
        }
    }
    out.push(CheckResult::float(
        "exp-recip-vs-jet",
        format!("i <= {}, t in {EXP_RECIP_POINTS:?}", order_max.min(10)),
        worst.residual,
        jet_tol,
        worst.case,
    ));

    // behavior toward x = 0: the i-th derivative approaches i! b_i
    let probe = deriv::x_over_log_deriv_coeffs(&table, 2, 1e-4).unwrap();
    let target = rat_to_f64(&bernoulli2_from_stirling(2)) * 2.0;
    let gap = (probe - target).abs();
    out.push(CheckResult::float(
        "x-over-log-limit-at-zero",
        "i = 2, x = 1e-4".into(),
        gap,
        1e-3,
        Some(format!("|probe - 2! b_2| = {gap:.2e}")),
    ));

    out
}

// ---------------------------------------------------------------------------
// gamma-integral: the factorial sum as a gamma-kernel integral
// ---------------------------------------------------------------------------

pub fn gamma_integral_suite(n_max: usize, tol_override: Option<f64>) -> Vec<CheckResult> {
    let n_max = n_max.clamp(1, 40);
    let quad_tol = tol_override.unwrap_or(1e-8);
    let st = StirlingTriangle::new(n_max);
    let mut out = Vec::new();

    let mut failure = None;
    'exact: for n in 1..=n_max {
        for k in 1..=n + 1 {
            if integral::stirling_factorial_sum(&st, n, k) != integral::gamma_kernel_integral_exact(n, k) {
                failure = Some(format!("S({n}, {k}) != integral"));
                break 'exact;
            }
        }
    }
    out.push(CheckResult::exact(
        "gamma-kernel-exact-identity",
        format!("1 <= k <= n+1, n <= {n_max}"),
        failure,
    ));

    let q_max = n_max.min(8);
    let rule = GaussLaguerre::new(40);
    let mut worst = Worst::new();
    for n in 1..=q_max {
        for k in 1..=n + 1 {
            let exact = int_to_f64(&integral::stirling_factorial_sum(&st, n, k));
            let quad = integral::gamma_kernel_integral_quad(n, k, &rule);
            worst.update(rel_err(quad, exact), || format!("n={n}, k={k}"));
        }
    }
    out.push(CheckResult::float(
        "gamma-kernel-quadrature",
        format!("1 <= k <= n+1, n <= {q_max}"),
        worst.residual,
        quad_tol,
        worst.case,
    ));

    let mut failure = None;
    for m in 0..=n_max {
        let check = integral::laplace_transform_check(&st, m);
        if !check.all_equal {
            failure = Some(format!("coefficients differ at m={m}"));
            break;
        }
    }
    out.push(CheckResult::exact(
        "laplace-transform-coefficients",
        format!("m <= {n_max}"),
        failure,
    ));

    out
}

// ---------------------------------------------------------------------------
// stieltjes-integral: boundary term + weighted integral representation
// ---------------------------------------------------------------------------

pub fn stieltjes_suite(m_max: usize, tol_override: Option<f64>) -> Vec<CheckResult> {
    let m_max = m_max.clamp(1, 8);
    let tol = tol_override.unwrap_or(1e-5);
    let cfg = QuadratureConfig::default();
    let st = StirlingTriangle::new(m_max);
    let mut out = Vec::new();

    let mut worst = Worst::new();
    let mut error: Option<String> = None;
    'rep: for m in 1..=m_max {
        for k in 1..=m + 1 {
            let lhs = int_to_f64(&integral::stirling_factorial_sum(&st, m, k));
            match integral::stieltjes_rhs(m, k, &cfg) {
                Ok(eval) => worst.update(rel_err(eval.value, lhs), || format!("m={m}, k={k}")),
                Err(e) => {
                    error = Some(format!("m={m}, k={k}: {e}"));
                    break 'rep;
                }
            }
        }
    }
    out.push(if let Some(msg) = error {
        CheckResult {
            name: "stieltjes-representation".into(),
            range: format!("1 <= k <= m+1, m <= {m_max}"),
            max_residual: f64::INFINITY,
            passed: false,
            detail: Some(msg),
        }
    } else {
        CheckResult::float(
            "stieltjes-representation",
            format!("1 <= k <= m+1, m <= {m_max}"),
            worst.residual,
            tol,
            worst.case,
        )
    });

    // truncation robustness: two windows must agree within the claimed bound
    let small_cfg = QuadratureConfig { window: Some((-30.0, 30.0)), ..Default::default() };
    let large_cfg = QuadratureConfig { window: Some((-40.0, 40.0)), ..Default::default() };
    let check = match (
        integral::stieltjes_rhs(2, 2, &small_cfg),
        integral::stieltjes_rhs(2, 2, &large_cfg),
    ) {
        (Ok(small), Ok(large)) => {
            let gap = (small.value - large.value).abs();
            let allowance = small.truncation_bound + 2.0 * small_cfg.abs_tol;
            CheckResult::float(
                "stieltjes-window-consistency",
                "m = 2, k = 2, [-30,30] vs [-40,40]".into(),
                gap,
                allowance,
                Some(format!("gap {gap:.2e} vs bound {allowance:.2e}")),
            )
        }
        (Err(e), _) | (_, Err(e)) => CheckResult {
            name: "stieltjes-window-consistency".into(),
            range: "m = 2, k = 2".into(),
            max_residual: f64::INFINITY,
            passed: false,
            detail: Some(e.to_string()),
        },
    };
    out.push(check);

    // smoke: ∫ (1+x)^(-u) du recovers 1/ln(1+x)
    let mut worst = Worst::new();
    for &x in &[1.0, std::f64::consts::E - 1.0, 9.0] {
        let got = integral::inv_log_integral(x, &cfg).unwrap();
        worst.update(rel_err(got, 1.0 / x.ln_1p()), || format!("x={x}"));
    }
    out.push(CheckResult::float(
        "inv-log-integral-smoke",
        "x in {1, e-1, 9}".into(),
        worst.residual,
        tol_override.unwrap_or(1e-8),
        worst.case,
    ));

    out
}

// ---------------------------------------------------------------------------
// conjecture: shape of the coefficient triangle
// ---------------------------------------------------------------------------

pub fn conjecture_suite(n_max: usize) -> Vec<CheckResult> {
    let n_max = n_max.max(2);
    let report = conjecture_check(n_max);
    vec![
        CheckResult::exact(
            "coeff-monotone-in-n",
            format!("n <= {n_max}"),
            if report.monotonicity_violations.is_empty() {
                None
            } else {
                Some(format!(
                    "{} strict decreases, first at {:?}",
                    report.monotonicity_violations.len(),
                    report.monotonicity_violations[0]
                ))
            },
        ),
        CheckResult::exact(
            "coeff-unimodal-rows",
            format!("n <= {n_max}"),
            if report.non_unimodal_rows.is_empty() {
                None
            } else {
                Some(format!("rows {:?}", report.non_unimodal_rows))
            },
        ),
    ]
}

/// Every suite back to back, with per-suite default ranges.
pub fn all_suites(n_max: Option<usize>, tol: Option<f64>) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(core_suite(n_max.unwrap_or(25)));
    out.extend(derivatives_suite(n_max.unwrap_or(10).min(12), tol));
    out.extend(gamma_integral_suite(n_max.unwrap_or(12).min(12), tol));
    out.extend(stieltjes_suite(5, tol));
    out.extend(conjecture_suite(n_max.unwrap_or(40)));
    out
}

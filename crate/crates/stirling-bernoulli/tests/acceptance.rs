//! Acceptance gate: eleven end-to-end criteria, one test each. Every test
//! prints a single `PASS name: detail` or `FAIL name: detail` line (visible
//! under `cargo test --test acceptance -- --nocapture`) and fails the target
//! if its criterion does not hold at the stated tolerance.

use num_traits::{One, Signed, Zero};
use stirling_bernoulli::arith::int_to_f64;
use stirling_bernoulli::coeffs::a_from_stirling;
use stirling_bernoulli::deriv;
use stirling_bernoulli::integral;
use stirling_bernoulli::quadrature::GaussLaguerre;
use stirling_bernoulli::series::stirling_from_series;
use stirling_bernoulli::{
    bernoulli2_from_coeffs, bernoulli2_from_series, bernoulli2_from_stirling, conjecture_check,
    factorial, reciprocal_factorial, stirling_from_nested, stirling_from_product, CoeffTable,
    Int, QuadratureConfig, Rat, StirlingTriangle,
};

fn criterion(name: &str, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(detail) => {
            println!("FAIL {name}: {detail}");
            panic!("criterion failed: {name}: {detail}");
        }
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

/// The 65 coefficient-table entries published for n <= 11 (the n = 11 row
/// stops at i = 11; a(11, 12) = 11! is implied by the boundary column).
const GOLDEN_COEFFS: [(usize, usize, u64); 65] = [
    (1, 2, 1),
    (2, 2, 1), (2, 3, 2),
    (3, 2, 2), (3, 3, 6), (3, 4, 6),
    (4, 2, 6), (4, 3, 22), (4, 4, 36), (4, 5, 24),
    (5, 2, 24), (5, 3, 100), (5, 4, 210), (5, 5, 240), (5, 6, 120),
    (6, 2, 120), (6, 3, 548), (6, 4, 1350), (6, 5, 2040), (6, 6, 1800), (6, 7, 720),
    (7, 2, 720), (7, 3, 3528), (7, 4, 9744), (7, 5, 17640), (7, 6, 21000), (7, 7, 15120),
    (7, 8, 5040),
    (8, 2, 5040), (8, 3, 26136), (8, 4, 78792), (8, 5, 162456), (8, 6, 235200),
    (8, 7, 231840), (8, 8, 141120), (8, 9, 40320),
    (9, 2, 40320), (9, 3, 219168), (9, 4, 708744), (9, 5, 1614816), (9, 6, 2693880),
    (9, 7, 3265920), (9, 8, 2751840), (9, 9, 1451520), (9, 10, 362880),
    (10, 2, 362880), (10, 3, 2053152), (10, 4, 7036200), (10, 5, 17368320),
    (10, 6, 32319000), (10, 7, 45556560), (10, 8, 47628000), (10, 9, 35078400),
    (10, 10, 16329600), (10, 11, 3628800),
    (11, 2, 3628800), (11, 3, 21257280), (11, 4, 76521456), (11, 5, 201828000),
    (11, 6, 410031600), (11, 7, 649479600), (11, 8, 795175920), (11, 9, 731808000),
    (11, 10, 479001600), (11, 11, 199584000),
];

#[test]
fn criterion_01_coefficient_table_golden() {
    criterion("coefficient-table-golden", || {
        let table = CoeffTable::new(11);
        for &(n, i, v) in &GOLDEN_COEFFS {
            if table.get(n, i) != Int::from(v) {
                return Err(format!("a({n}, {i}) = {}, published {v}", table.get(n, i)));
            }
        }
        Ok(format!("all {} published entries (n <= 11) match exactly", GOLDEN_COEFFS.len()))
    });
}

#[test]
fn criterion_02_bernoulli_first_six() {
    criterion("bernoulli2-first-six", || {
        let expect: [(i64, i64); 6] = [(1, 1), (1, 2), (-1, 12), (1, 24), (-19, 720), (3, 160)];
        let series = bernoulli2_from_series(5);
        for (n, (p, q)) in expect.into_iter().enumerate() {
            let want = Rat::new(Int::from(p), Int::from(q));
            for (route, got) in [
                ("coeff", bernoulli2_from_coeffs(n)),
                ("stirling", bernoulli2_from_stirling(n)),
                ("series", series[n].clone()),
            ] {
                if got != want {
                    return Err(format!("b_{n} via {route} = {got}, want {p}/{q}"));
                }
            }
        }
        Ok("b_0..b_5 = 1, 1/2, -1/12, 1/24, -19/720, 3/160 by all three methods".into())
    });
}

#[test]
fn criterion_03_bernoulli_routes_to_30() {
    criterion("bernoulli2-routes-agree", || {
        let series = bernoulli2_from_series(30);
        for n in 0..=30 {
            let coeff = bernoulli2_from_coeffs(n);
            let stirling = bernoulli2_from_stirling(n);
            if coeff != stirling || coeff != series[n] {
                return Err(format!("routes disagree at n = {n}"));
            }
        }
        Ok("coeff = stirling = series exactly for n <= 30".into())
    });
}

#[test]
fn criterion_04_stirling_four_routes() {
    criterion("stirling-four-routes", || {
        let n_max = 25;
        let st = StirlingTriangle::new(n_max);
        for n in 0..=n_max {
            let product = stirling_from_product(n);
            for k in 0..=n {
                let reference = st.get(n, k);
                if product[k] != reference {
                    return Err(format!("product route differs at s({n}, {k})"));
                }
                if stirling_from_series(n, k) != reference {
                    return Err(format!("series route differs at s({n}, {k})"));
                }
                if k >= 1 && stirling_from_nested(n, k) != reference {
                    return Err(format!("nested route differs at s({n}, {k})"));
                }
            }
        }
        Ok(format!(
            "recursion = product = series for 0 <= k <= n <= {n_max}, nested on 1 <= k <= n"
        ))
    });
}

#[test]
fn criterion_05_coefficient_stirling_link() {
    criterion("coefficient-stirling-link", || {
        let n_max = 60;
        let table = CoeffTable::new(n_max);
        let st = StirlingTriangle::new(n_max);
        for n in 1..=n_max {
            for i in 2..=n + 1 {
                if table.get(n, i) != a_from_stirling(&st, n, i) {
                    return Err(format!("link fails at a({n}, {i})"));
                }
            }
        }
        Ok(format!("a(n, i) = (-1)^(n+i-1) (i-1)! s(n, i-1) exactly for n <= {n_max}"))
    });
}

#[test]
fn criterion_06_factorial_as_nested_sum() {
    criterion("factorial-nested-sum", || {
        for n in 0..=20 {
            if reciprocal_factorial(n) != Rat::new(Int::one(), factorial(n)) {
                return Err(format!("H({n}, {n}) != 1/{n}!"));
            }
        }
        Ok("full-depth nested harmonic sum equals 1/n! exactly for n <= 20".into())
    });
}

#[test]
fn criterion_07_gamma_kernel_identity() {
    criterion("gamma-kernel-identity", || {
        let st = StirlingTriangle::new(12);
        for n in 1..=12 {
            for k in 1..=n + 1 {
                if integral::stirling_factorial_sum(&st, n, k)
                    != integral::gamma_kernel_integral_exact(n, k)
                {
                    return Err(format!("exact identity fails at (n, k) = ({n}, {k})"));
                }
            }
        }
        let rule = GaussLaguerre::new(40);
        let mut worst = 0.0f64;
        for n in 1..=8 {
            for k in 1..=n + 1 {
                let exact = int_to_f64(&integral::stirling_factorial_sum(&st, n, k));
                let quad = integral::gamma_kernel_integral_quad(n, k, &rule);
                let r = rel_err(quad, exact);
                if r > 1e-8 {
                    return Err(format!("quadrature off by {r:.2e} at (n, k) = ({n}, {k})"));
                }
                worst = worst.max(r);
            }
        }
        Ok(format!(
            "exact identity for n <= 12; quadrature within 1e-8 for n <= 8 (worst {worst:.2e})"
        ))
    });
}

#[test]
fn criterion_08_stieltjes_representation() {
    criterion("stieltjes-representation", || {
        let st = StirlingTriangle::new(5);
        let cfg = QuadratureConfig::default();
        let mut worst = 0.0f64;
        for m in 1..=5 {
            for k in 1..=m + 1 {
                let lhs = int_to_f64(&integral::stirling_factorial_sum(&st, m, k));
                let eval = integral::stieltjes_rhs(m, k, &cfg)
                    .map_err(|e| format!("(m, k) = ({m}, {k}): {e}"))?;
                let r = rel_err(eval.value, lhs);
                if r > 1e-5 {
                    return Err(format!("off by {r:.2e} at (m, k) = ({m}, {k})"));
                }
                worst = worst.max(r);
            }
        }
        Ok(format!("within 1e-5 for m <= 5, k <= m+1 (worst {worst:.2e})"))
    });
}

#[test]
fn criterion_09_derivative_formulas_vs_jets() {
    criterion("derivative-formulas-vs-jets", || {
        let order_max = 8;
        let tol = 1e-9;
        let table = CoeffTable::new(order_max);
        let st = StirlingTriangle::new(order_max);
        let mut worst = 0.0f64;
        let mut check = |name: &str, got: f64, want: f64, at: String| -> Result<(), String> {
            let r = rel_err(got, want);
            if r > tol {
                return Err(format!("{name} off by {r:.2e} at {at}"));
            }
            worst = worst.max(r);
            Ok(())
        };

        for &x in &[0.5, 2.0, 10.0] {
            for n in 1..=order_max {
                let jet = deriv::inv_log_deriv_jet(n, x).unwrap();
                check(
                    "coeff-form",
                    deriv::inv_log_deriv_coeffs(&table, n, x).unwrap(),
                    jet,
                    format!("n={n}, x={x}"),
                )?;
                check(
                    "stirling-form",
                    deriv::inv_log_deriv_stirling(&st, n, x - 1.0).unwrap(),
                    jet,
                    format!("n={n}, x={x}"),
                )?;
                let xj = deriv::x_over_log_deriv_jet(n, x).unwrap();
                check(
                    "x-over-log-coeff-form",
                    deriv::x_over_log_deriv_coeffs(&table, n, x).unwrap(),
                    xj,
                    format!("i={n}, x={x}"),
                )?;
                check(
                    "x-over-log-stirling-form",
                    deriv::x_over_log_deriv_stirling(&st, n, x).unwrap(),
                    xj,
                    format!("i={n}, x={x}"),
                )?;
            }
        }
        for &t in &[0.5, 1.0, 3.0] {
            for i in 1..=order_max {
                check(
                    "exp-recip-form",
                    deriv::exp_recip_deriv(i, t).unwrap(),
                    deriv::exp_recip_deriv_jet(i, t).unwrap(),
                    format!("i={i}, t={t}"),
                )?;
            }
        }
        Ok(format!(
            "five closed forms within 1e-9 of jets for orders <= {order_max} at three abscissae (worst {worst:.2e})"
        ))
    });
}

#[test]
fn criterion_10_conjecture_scan() {
    criterion("conjecture-scan", || {
        let report = conjecture_check(40);
        if !report.monotonicity_violations.is_empty() {
            return Err(format!(
                "strict column decreases: {:?}",
                report.monotonicity_violations
            ));
        }
        if !report.non_unimodal_rows.is_empty() {
            return Err(format!("non-unimodal rows: {:?}", report.non_unimodal_rows));
        }
        Ok(format!(
            "no violations for n <= 40 (plateaus: columns {:?}, rows {:?})",
            report.column_plateaus, report.row_plateaus
        ))
    });
}

#[test]
fn criterion_11_row_sums() {
    criterion("stirling-row-sums", || {
        let st = StirlingTriangle::new(40);
        for n in 0..=40 {
            let signed: Int = st.row(n).iter().sum();
            let unsigned: Int = st.row(n).iter().map(|v| v.abs()).sum();
            if n >= 2 && !signed.is_zero() {
                return Err(format!("signed row sum at n = {n} is {signed}"));
            }
            if unsigned != factorial(n) {
                return Err(format!("unsigned row sum at n = {n} is not {n}!"));
            }
        }
        Ok("signed sums vanish (n >= 2), unsigned sums equal n!, n <= 40".into())
    });
}

//! The positive integer triangle `a(n, i)` from the closed form
//!
//! ```text
//! d^n/dx^n (1/ln x) = (-1)^n/x^n · Σ_{i=2}^{n+1} a(n, i)/(ln x)^i,   n >= 1.
//! ```
//!
//! Row `n` has entries `i = 2..=n+1`. The row ends are factorials,
//! `a(n, 2) = (n-1)!` and `a(n, n+1) = n!`, and the interior obeys
//! `a(n+1, i) = (i-1) a(n, i-1) + n a(n, i)`. The whole triangle collapses
//! onto Stirling numbers of the first kind through
//! `a(n, i) = (-1)^(n+i-1) (i-1)! s(n, i-1)`.

use crate::arith::{factorial, Int};
use crate::stirling::StirlingTriangle;
use num_traits::One;
use serde::Serialize;

/// Rows `1..=n_max` of the derivative-coefficient triangle, built from the
/// recursion alone (no Stirling input, so the link stays a real check).
#[derive(Debug, Clone)]
pub struct CoeffTable {
    rows: Vec<Vec<Int>>, // rows[n-1][i-2] = a(n, i)
}

impl CoeffTable {
    pub fn new(n_max: usize) -> Self {
        assert!(n_max >= 1, "table needs at least row 1");
        let mut rows = Vec::with_capacity(n_max);
        rows.push(vec![Int::one()]);
        for n in 1..n_max {
            let prev = &rows[n - 1];
            let mut next = Vec::with_capacity(n + 1);
            for i in 2..=n + 2 {
                let left = if i >= 3 && i - 3 < prev.len() {
                    &prev[i - 3] * Int::from(i - 1)
                } else {
                    Int::from(0)
                };
                let right = if i - 2 < prev.len() {
                    &prev[i - 2] * Int::from(n)
                } else {
                    Int::from(0)
                };
                next.push(left + right);
            }
            rows.push(next);
        }
        CoeffTable { rows }
    }

    /// `a(n, i)` for `1 <= n`, `2 <= i <= n+1`.
    pub fn get(&self, n: usize, i: usize) -> Int {
        assert!(
            (1..=self.rows.len()).contains(&n),
            "row {n} outside table (n_max = {})",
            self.rows.len()
        );
        assert!((2..=n + 1).contains(&i), "a({n}, {i}): need 2 <= i <= n+1");
        self.rows[n - 1][i - 2].clone()
    }

    /// Row `n` as entries `a(n, 2..=n+1)`.
    pub fn row(&self, n: usize) -> &[Int] {
        &self.rows[n - 1]
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }
}

/// The Stirling-link route: `a(n, i) = (-1)^(n+i-1) (i-1)! s(n, i-1)`.
pub fn a_from_stirling(st: &StirlingTriangle, n: usize, i: usize) -> Int {
    assert!(n >= 1 && (2..=n + 1).contains(&i));
    let v = factorial(i - 1) * st.get(n, i - 1);
    if (n + i - 1) % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Scan result for the triangle's conjectured shape: strictly increasing
/// down each column, single-peaked along each row.
///
/// Order *violations* (a strict decrease in `n`, or a rise after a fall in
/// `i`) are what the conjecture forbids; adjacent *equalities* are tallied
/// separately since the triangle genuinely contains a few
/// (`a(1,2) = a(2,2) = 1`, and the row-3 peak `6, 6`).
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n_max: usize,
    /// `(n, i)` with `a(n+1, i) < a(n, i)`.
    pub monotonicity_violations: Vec<(usize, usize)>,
    /// Rows that rise again after having fallen.
    pub non_unimodal_rows: Vec<usize>,
    /// `(n, i)` with `a(n+1, i) = a(n, i)`.
    pub column_plateaus: Vec<(usize, usize)>,
    /// `(n, i)` with `a(n, i) = a(n, i+1)`.
    pub row_plateaus: Vec<(usize, usize)>,
}

impl ConjectureReport {
    pub fn is_clean(&self) -> bool {
        self.monotonicity_violations.is_empty() && self.non_unimodal_rows.is_empty()
    }
}

/// Checks every row and column of `CoeffTable::new(n_max)` against the
/// conjectured shape and reports all exceptions.
pub fn conjecture_check(n_max: usize) -> ConjectureReport {
    let table = CoeffTable::new(n_max);
    let mut report = ConjectureReport {
        n_max,
        monotonicity_violations: Vec::new(),
        non_unimodal_rows: Vec::new(),
        column_plateaus: Vec::new(),
        row_plateaus: Vec::new(),
    };

    for n in 1..n_max {
        // columns shared by rows n and n+1: i = 2..=n+1
        for i in 2..=n + 1 {
            let lo = table.get(n, i);
            let hi = table.get(n + 1, i);
            if hi < lo {
                report.monotonicity_violations.push((n, i));
            } else if hi == lo {
                report.column_plateaus.push((n, i));
            }
        }
    }

    for n in 1..=n_max {
        let row = table.row(n);
        let mut falling = false;
        let mut unimodal = true;
        for (idx, pair) in row.windows(2).enumerate() {
            let (prev, next) = (&pair[0], &pair[1]);
            if next == prev {
                report.row_plateaus.push((n, idx + 2));
            }
            if falling {
                if next > prev {
                    unimodal = false;
                }
            } else if next < prev {
                falling = true;
            }
        }
        if !unimodal {
            report.non_unimodal_rows.push(n);
        }
    }

    report
}

//! Nested harmonic sums: the elementary symmetric polynomials of
//! `1, 1/2, ..., 1/m`.
//!
//! `H(j, m) = Σ 1/(l_1 l_2 ··· l_j)` over all chains
//! `m >= l_1 > l_2 > ··· > l_j >= 1`, with `H(0, m) = 1`. These sums drive
//! the nested-sum route to Stirling numbers of the first kind and collapse
//! to `1/n!` on the diagonal.

use crate::arith::{Int, Rat};
use num_traits::{One, Zero};

/// Dense table of `H(j, m)` for `0 <= j <= depth`, `0 <= m <= m_max`.
///
/// Built by the two-term recursion `H(j, m) = H(j, m-1) + H(j-1, m-1)/m`
/// (a chain either avoids `m` or starts at it), so filling the table costs
/// one rational addition per cell.
#[derive(Debug, Clone)]
pub struct HarmonicNest {
    depth: usize,
    m_max: usize,
    table: Vec<Vec<Rat>>,
}

impl HarmonicNest {
    pub fn new(depth: usize, m_max: usize) -> Self {
        let mut table = vec![vec![Rat::zero(); m_max + 1]; depth + 1];
        for m in 0..=m_max {
            table[0][m] = Rat::one();
        }
        for j in 1..=depth {
            for m in 1..=m_max {
                let step = &table[j - 1][m - 1] / Rat::from_integer(Int::from(m));
                table[j][m] = &table[j][m - 1] + step;
            }
        }
        HarmonicNest { depth, m_max, table }
    }

    /// `H(j, m)`. Zero whenever `j > m`: no strictly decreasing chain of
    /// length `j` fits inside `{1, ..., m}`.
    pub fn get(&self, j: usize, m: usize) -> &Rat {
        assert!(
            j <= self.depth && m <= self.m_max,
            "H({j}, {m}) outside table ({}, {})",
            self.depth,
            self.m_max
        );
        &self.table[j][m]
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }
}

/// `1/n!` computed without any factorial or division by a product: the
/// full-depth chain sum `H(n, n)` collapses to the single chain
/// `n > n-1 > ··· > 1`.
pub fn reciprocal_factorial(n: usize) -> Rat {
    HarmonicNest::new(n, n).get(n, n).clone()
}

/// Direct exponential-time enumeration of the defining chains. Exists as an
/// independent oracle for the DP; keep `m` small.
pub(crate) fn nest_by_enumeration(j: usize, m: usize) -> Rat {
    fn walk(j: usize, top: usize, prod: Rat, acc: &mut Rat) {
        if j == 0 {
            *acc += prod;
            return;
        }
        for l in (1..=top).rev() {
            walk(j - 1, l - 1, &prod / Rat::from_integer(Int::from(l)), acc);
        }
    }
    let mut acc = Rat::zero();
    walk(j, m, Rat::one(), &mut acc);
    acc
}

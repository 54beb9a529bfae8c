//! Exact-arithmetic toolkit for the number triangles attached to the higher
//! derivatives of `1/ln x`, with independently implemented verification layers.
//!
//! The library computes three families exactly, over arbitrary-precision
//! rationals:
//!
//! * **Stirling numbers of the first kind** `s(n, k)`, by four independent
//!   routes: the triangular recursion, brute-force expansion of the falling
//!   product `x(x-1)···(x-n+1)`, a nested harmonic sum, and coefficient
//!   extraction from powers of the `ln(1+x)` series.
//! * **The coefficient triangle `a(n, i)`** appearing in the closed form
//!   `(1/ln x)^(n) = (-1)^n x^(-n) Σ_{i=2}^{n+1} a(n,i)/(ln x)^i`, built from
//!   its own recursion and cross-linked to `s(n, i-1)`.
//! * **Bernoulli numbers of the second kind** `b_n` (coefficients of
//!   `x/ln(1+x)`), by three routes: a closed form over the `a(n, i)` triangle,
//!   a weighted Stirling sum, and direct series reciprocation.
//!
//! Two float verification layers back the exact claims: truncated-Taylor
//! [`Jet`] arithmetic differentiates the underlying functions with no symbolic
//! input, and quadrature rules evaluate the integral representations of the
//! same quantities. The [`verify`] module packages all cross-checks as named
//! suites; the `stirling-bernoulli` binary exposes them on the command line.
//!
//! # Quick start
//!
//! ```
//! use stirling_bernoulli::{StirlingTriangle, CoeffTable, bernoulli2_from_series};
//!
//! let s = StirlingTriangle::new(4);
//! assert_eq!(s.get(4, 2).to_string(), "11");
//!
//! let a = CoeffTable::new(4);
//! assert_eq!(a.get(4, 3).to_string(), "22");
//!
//! let b = bernoulli2_from_series(4);
//! assert_eq!(b[4].to_string(), "-19/720");
//! ```
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example under `examples/`:
//!
//! * `cargo run --example stirling_triangle` — the four Stirling routes
//! * `cargo run --example coefficient_table` — the `a(n, i)` triangle and its
//!   Stirling link
//! * `cargo run --example bernoulli_numbers` — `b_n` by three routes, plus
//!   Cauchy numbers
//! * `cargo run --example factorial_identity` — `1/n!` as a nested harmonic sum
//! * `cargo run --example derivative_formulas` — closed forms vs. jet
//!   differentiation
//! * `cargo run --example integral_identities` — the gamma-kernel and
//!   Stieltjes-weight integral representations
//! * `cargo run --example conjecture_scan` — monotonicity/unimodality scan of
//!   the `a(n, i)` triangle

pub mod arith;
pub mod bernoulli;
pub mod cli;
pub mod coeffs;
pub mod deriv;
mod error;
pub mod fixture;
pub mod harmonic;
pub mod integral;
pub mod jet;
pub mod output;
pub mod quadrature;
pub mod series;
pub mod stirling;
pub mod verify;

pub use arith::{binomial, factorial, Int, Rat};
pub use bernoulli::{bernoulli2_from_coeffs, bernoulli2_from_stirling, cauchy_number};
pub use coeffs::{conjecture_check, CoeffTable, ConjectureReport};
pub use error::Error;
pub use harmonic::{reciprocal_factorial, HarmonicNest};
pub use jet::Jet;
pub use quadrature::QuadratureConfig;
pub use series::{bernoulli2_from_series, stirling_from_series, PowerSeries};
pub use stirling::{stirling_from_nested, stirling_from_product, StirlingTriangle};

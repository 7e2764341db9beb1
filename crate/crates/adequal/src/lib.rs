//! Exact monotonicity analysis and cubic root recovery over the rationals.
//!
//! The library is built around one algebraic identity: for a polynomial `f`
//! and distinct points `t1`, `t2`, the difference quotient
//! `(f(t1) - f(t2)) / (t1 - t2)` is itself a polynomial `phi(t1, t2)` with
//! rational coefficients. The sign of `phi` on a region decides strict
//! monotonicity of `f` there, and the diagonal `g(t) = phi(t, t)` marks the
//! boundaries where the direction can change. Everything downstream of that
//! observation is computed exactly:
//!
//! * [`rational::Rational`] and [`polynomial::Polynomial`] provide arbitrary
//!   precision arithmetic with no rounding anywhere in the decision path.
//! * [`quotient`] constructs `phi` and its diagonal from the coefficients.
//! * [`sturm`] counts and isolates real roots (Sturm chains, Cauchy bounds,
//!   bisection) and serves as an independent check on every other module.
//! * [`monotonicity`] decomposes the real line into maximal intervals of
//!   strict increase and decrease, with certified endpoints.
//! * [`cubic`] classifies `t^3 - a*t^2 + b*t - c` by the discriminant of its
//!   depressed form and recovers the full real root triple when it exists.
//! * [`cli`] exposes all of the above as the `adequal` binary.
//!
//! Approximate values appear only in the output layer, and every one of them
//! carries an exact bracket `[lo, hi]` that was verified by sign change or
//! direct evaluation. Nothing is ever decided by floating point.
//!
//! ```
//! use adequal::{monotonicity_intervals, parse_polynomial};
//!
//! let f = parse_polynomial("t^3 - 3*t")?;
//! let d = monotonicity_intervals(&f, 1e-12)?;
//! assert_eq!(
//!     adequal::cli::render_decomposition(&d),
//!     "(-inf,-1] increasing; [-1,1] decreasing; [1,+inf) increasing",
//! );
//! # Ok::<(), adequal::Error>(())
//! ```

pub mod cli;
pub mod cubic;
pub mod error;
pub mod monotonicity;
pub mod parse;
pub mod polynomial;
pub mod quotient;
pub mod rational;
pub mod sturm;

pub use cubic::{
    classify, depress, discriminant_value, sign_product_at_critical, solve_cubic,
    solve_quadratic_vieta, vieta_expand, Classification, Cubic, CubicSolution, DepressedCubic,
    QuadraticSolution, RootTriple,
};
pub use error::Error;
pub use monotonicity::{
    certify_direction, monotonicity_intervals, Direction, IntervalEndpoint,
    MonotonicityDecomposition, Segment,
};
pub use parse::{parse_polynomial, parse_polynomial_capped, parse_rational, ParseError};
pub use polynomial::Polynomial;
pub use quotient::{fermat_derivative, fermat_quotient, BivariateQuotient};
pub use rational::Rational;
pub use sturm::{
    bisect_refine, cauchy_bound, exact_tolerance, isolate_real_roots, rational_root_in,
    sturm_count, ExtendedRational, IsolatedRoot, IsolatingInterval, RootValue, SturmChain,
};

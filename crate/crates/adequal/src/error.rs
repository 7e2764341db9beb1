//! Crate-wide error type.

use crate::parse::ParseError;
use crate::rational::Rational;

/// Errors reported by the analysis and solving operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed polynomial or rational text.
    #[error(transparent)]
    Parse(#[from] ParseError),

    /// The operation needs a polynomial of degree at least 1.
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,

    /// `scale_arg` was called with k = 0.
    #[error("scale factor must be nonzero")]
    ZeroScaleFactor,

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    /// The operation requires a monic polynomial.
    #[error("polynomial must be monic")]
    NotMonic,

    /// The zero polynomial has no root structure to analyze.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// A Sturm count was requested with an endpoint that is a root.
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(Rational),

    /// An interval with lo >= hi was supplied.
    #[error("invalid interval: lower endpoint must be strictly below upper")]
    EmptyInterval,

    /// The supplied interval does not isolate a root.
    #[error("interval is not isolating: no sign change and no root endpoint")]
    NotIsolating,

    /// The diagonal polynomial changes sign inside the interval.
    #[error("not monotone: the diagonal polynomial changes sign inside the interval")]
    NotMonotone,

    /// Direction certification on a constant function.
    #[error("degenerate: the diagonal polynomial vanishes identically")]
    Degenerate,

    /// `sign_product_at_critical` requires p < 0.
    #[error("no critical point pair: requires p < 0")]
    NoCriticalPair,

    /// Tolerances must be positive finite numbers.
    #[error("tolerance must be a positive finite number")]
    InvalidTolerance,

    /// Bisection failed to converge within the iteration cap.
    #[error("bisection iteration cap exceeded after {0} iterations")]
    IterationCap(usize),

    /// An internal invariant was violated; always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

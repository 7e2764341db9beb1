//! Decomposition of the real line into maximal strict-monotonicity intervals
//! of a polynomial, driven by the sign of the diagonal quotient.
//!
//! The boundary points are the roots of g(t) = phi(t, t) at which g changes
//! sign; a root of even multiplicity (t^3 at 0 is the standard example) is
//! not a boundary. Segments are closed at finite endpoints, so consecutive
//! segments share their common boundary point, and rational boundaries are
//! reported exactly while irrational ones carry a certified bracket.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::quotient::{fermat_derivative, fermat_quotient};
use crate::rational::Rational;
use crate::sturm::{
    bisect_refine, exact_tolerance, isolate_real_roots, rational_root_in, IsolatingInterval,
    RootValue,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Sense of strict monotonicity: f(t1) > f(t2) for all t1 > t2 in the
/// interval (increasing), or the reverse (decreasing).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    StrictlyIncreasing,
    StrictlyDecreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::StrictlyIncreasing => write!(f, "increasing"),
            Direction::StrictlyDecreasing => write!(f, "decreasing"),
        }
    }
}

/// One endpoint of a monotonicity segment. An `Approx` endpoint carries its
/// decimal estimate together with the exact rational bracket [lo, hi] that
/// certifies it: the true boundary lies in the bracket (the diagonal
/// polynomial changes sign there), and hi - lo <= 2 * radius.
#[derive(Clone, Debug, PartialEq)]
pub enum IntervalEndpoint {
    NegInfinity,
    PosInfinity,
    Exact(Rational),
    Approx {
        value: f64,
        radius: f64,
        lo: Rational,
        hi: Rational,
    },
}

impl IntervalEndpoint {
    pub fn is_finite(&self) -> bool {
        !matches!(
            self,
            IntervalEndpoint::NegInfinity | IntervalEndpoint::PosInfinity
        )
    }

    /// Exact lower bound on the true endpoint (the value itself if exact).
    pub fn lower_bound(&self) -> Option<Rational> {
        match self {
            IntervalEndpoint::Exact(r) => Some(r.clone()),
            IntervalEndpoint::Approx { lo, .. } => Some(lo.clone()),
            _ => None,
        }
    }

    /// Exact upper bound on the true endpoint (the value itself if exact).
    pub fn upper_bound(&self) -> Option<Rational> {
        match self {
            IntervalEndpoint::Exact(r) => Some(r.clone()),
            IntervalEndpoint::Approx { hi, .. } => Some(hi.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for IntervalEndpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalEndpoint::NegInfinity => write!(f, "-inf"),
            IntervalEndpoint::PosInfinity => write!(f, "+inf"),
            IntervalEndpoint::Exact(r) => write!(f, "{}", r),
            IntervalEndpoint::Approx { value, .. } => write!(f, "~{}", value),
        }
    }
}

/// A maximal interval of strict monotonicity, closed at finite endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub left: IntervalEndpoint,
    pub right: IntervalEndpoint,
    pub direction: Direction,
}

impl fmt::Display for Segment {
    /// Interval notation with the direction word, e.g. `(-inf,-1] increasing`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.left.is_finite() { "[" } else { "(" };
        let close = if self.right.is_finite() { "]" } else { ")" };
        write!(
            f,
            "{}{},{}{} {}",
            open, self.left, self.right, close, self.direction
        )
    }
}

/// The full decomposition: segments cover the line from -inf to +inf,
/// consecutive segments share their boundary endpoint, and directions
/// alternate.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityDecomposition {
    pub segments: Vec<Segment>,
}

impl MonotonicityDecomposition {
    /// The finite boundary endpoints, in ascending order.
    pub fn boundaries(&self) -> Vec<&IntervalEndpoint> {
        self.segments
            .iter()
            .skip(1)
            .map(|s| &s.left)
            .collect()
    }
}

impl fmt::Display for MonotonicityDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for seg in &self.segments {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            write!(f, "{}", seg)?;
        }
        Ok(())
    }
}

/// Splits the real line at the sign-changing roots of the diagonal
/// g = phi(t, t) and labels every segment with its certified direction.
/// Rational boundaries come out Exact (complete rational-root test against
/// g); irrational ones are refined to brackets of radius at most tol.
pub fn monotonicity_intervals(
    f: &Polynomial,
    tol: f64,
) -> Result<MonotonicityDecomposition, Error> {
    exact_tolerance(tol)?;
    if f.degree().map_or(true, |d| d < 1) {
        return Err(Error::DegreeTooSmall);
    }
    let g = fermat_derivative(f)?;
    let mut endpoints = Vec::new();
    for root in isolate_real_roots(&g)? {
        if root.multiplicity % 2 == 0 {
            continue;
        }
        endpoints.push(resolve_endpoint(&g, &root.interval, tol)?);
    }
    let deg_g = g.degree().unwrap_or(0);

    let mut directions = Vec::with_capacity(endpoints.len() + 1);
    for i in 0..=endpoints.len() {
        let lower = if i == 0 {
            None
        } else {
            Some(endpoints[i - 1].upper_bound().unwrap())
        };
        let upper = if i == endpoints.len() {
            None
        } else {
            Some(endpoints[i].lower_bound().unwrap())
        };
        let sign = sample_sign(&g, deg_g, lower.as_ref(), upper.as_ref())?;
        directions.push(if sign > 0 {
            Direction::StrictlyIncreasing
        } else {
            Direction::StrictlyDecreasing
        });
    }
    for pair in directions.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::Invariant(
                "segment directions failed to alternate".into(),
            ));
        }
    }

    let mut segments = Vec::with_capacity(directions.len());
    let mut left = IntervalEndpoint::NegInfinity;
    for (i, direction) in directions.iter().enumerate() {
        let right = if i < endpoints.len() {
            endpoints[i].clone()
        } else {
            IntervalEndpoint::PosInfinity
        };
        segments.push(Segment {
            left,
            right: right.clone(),
            direction: *direction,
        });
        left = right;
    }
    Ok(MonotonicityDecomposition { segments })
}

/// Certifies that f is strictly monotone on [lo, hi] and returns the sense,
/// determined by the exact sign of the diagonal g at the midpoint. A
/// fixed-seed randomized companion check evaluates phi at rational pairs in
/// the interval and insists on the matching sign. Fails with `NotMonotone`
/// when g has a sign-changing root strictly inside (lo, hi).
pub fn certify_direction(
    f: &Polynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<Direction, Error> {
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    if f.degree().map_or(true, |d| d < 1) {
        return Err(Error::Degenerate);
    }
    let g = fermat_derivative(f)?;
    let sf = crate::sturm::squarefree_part(&g)?;
    for root in isolate_real_roots(&g)? {
        if root.multiplicity % 2 == 0 {
            continue;
        }
        if odd_root_strictly_inside(&sf, root.interval, lo, hi) {
            return Err(Error::NotMonotone);
        }
    }

    let deg_g = g.degree().unwrap_or(0);
    let sign = sample_sign(&g, deg_g, Some(lo), Some(hi))?;

    let phi = fermat_quotient(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ddc0ffee);
    let grid = 4096u32;
    let width = hi - lo;
    let mut checked = 0;
    while checked < 16 {
        let k1 = rng.gen_range(0..=grid);
        let k2 = rng.gen_range(0..=grid);
        if k1 == k2 {
            continue;
        }
        let t1 = lo + &(&width * &Rational::new(k1 as i64, grid as i64));
        let t2 = lo + &(&width * &Rational::new(k2 as i64, grid as i64));
        if phi.eval(&t1, &t2).signum() != sign {
            return Err(Error::Invariant(
                "quotient sign disagreed with the certified direction".into(),
            ));
        }
        checked += 1;
    }

    Ok(if sign > 0 {
        Direction::StrictlyIncreasing
    } else {
        Direction::StrictlyDecreasing
    })
}

/// Resolves one isolated sign-changing root of g to an endpoint: Exact when
/// the root is rational, otherwise a bracket refined to radius <= tol.
fn resolve_endpoint(
    g: &Polynomial,
    interval: &IsolatingInterval,
    tol: f64,
) -> Result<IntervalEndpoint, Error> {
    if let Some(r) = rational_root_in(g, interval)? {
        return Ok(IntervalEndpoint::Exact(r));
    }
    match bisect_refine(g, interval, tol / 2.0)? {
        RootValue::Exact(r) => Ok(IntervalEndpoint::Exact(r)),
        RootValue::Approx { value, lo, hi } => {
            let radius = (&hi - &lo).to_f64();
            Ok(IntervalEndpoint::Approx { value, radius, lo, hi })
        }
    }
}

/// True when the single root of sf inside `interval` lies strictly between
/// lo and hi. The interval is bisected until it stops straddling either
/// bound, which must happen because neither bound is that root unless it is
/// an exact endpoint hit.
fn odd_root_strictly_inside(
    sf: &Polynomial,
    mut interval: IsolatingInterval,
    lo: &Rational,
    hi: &Rational,
) -> bool {
    if let Some(r) = interval.endpoint_root(sf) {
        return *lo < r && r < *hi;
    }
    // if a bound is itself the root held by this interval, it is not
    // strictly inside, and bisection below would straddle it forever
    if sf.eval(lo).is_zero() && interval.contains(lo) {
        return false;
    }
    if sf.eval(hi).is_zero() && interval.contains(hi) {
        return false;
    }
    loop {
        if interval.hi <= *lo || interval.lo >= *hi {
            return false;
        }
        if interval.lo >= *lo && interval.hi <= *hi {
            return true;
        }
        let m = interval.midpoint();
        let sm = sf.eval(&m).signum();
        if sm == 0 {
            return *lo < m && m < *hi;
        }
        if sm == sf.eval(&interval.lo).signum() {
            interval = IsolatingInterval::new(m, interval.hi);
        } else {
            interval = IsolatingInterval::new(interval.lo, m);
        }
    }
}

/// Exact sign of g at a rational point of the open gap between two bounds
/// (either bound may be absent, meaning unbounded). Candidate points are
/// retried past the finitely many roots of g.
fn sample_sign(
    g: &Polynomial,
    deg_g: usize,
    lower: Option<&Rational>,
    upper: Option<&Rational>,
) -> Result<i32, Error> {
    let tries = deg_g + 1;
    for j in 1..=tries {
        let j_r = Rational::from_integer(j as i64);
        let candidate = match (lower, upper) {
            (Some(u), Some(v)) => {
                if u >= v {
                    return Err(Error::Invariant(
                        "empty gap between consecutive boundaries".into(),
                    ));
                }
                u + &(&(v - u) * &Rational::new(j as i64, (tries + 1) as i64))
            }
            (None, Some(v)) => v - &j_r,
            (Some(u), None) => u + &j_r,
            (None, None) => j_r - Rational::one(),
        };
        let s = g.eval(&candidate).signum();
        if s != 0 {
            return Ok(s);
        }
    }
    Err(Error::Invariant(
        "no root-free sample point found in segment".into(),
    ))
}

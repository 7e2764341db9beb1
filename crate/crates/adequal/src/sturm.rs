//! Independent real-root machinery: Sturm chains for exact root counting,
//! isolation of all real roots into disjoint rational intervals, Cauchy
//! bounds, and bisection refinement of a bracket down to a tolerance.
//!
//! Everything here works in exact rational arithmetic. The Sturm chain uses
//! plain rational remainder sequences with no pseudo-remainder optimization;
//! at the degrees this crate targets (usually 3 or 4, capped at 64) the
//! exactness is worth far more than the speed.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use num::bigint::BigInt;
use num::Integer;
use std::fmt;

/// A rational number extended with the two infinities, used as a root-count
/// endpoint. Ordered as expected: `-inf < every rational < +inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedRational {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::NegInfinity => write!(f, "-inf"),
            ExtendedRational::Finite(r) => write!(f, "{}", r),
            ExtendedRational::PosInfinity => write!(f, "+inf"),
        }
    }
}

/// The Sturm chain of a polynomial: `chain[0] = f`, `chain[1] = f'`, and
/// each later entry is the negated remainder of the two before it. The chain
/// stops at the last nonzero entry (a constant, or the gcd of f and f' up to
/// sign when f has repeated roots).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    /// Builds the chain. Rejects the zero polynomial.
    pub fn new(f: &Polynomial) -> Result<SturmChain, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![f.clone()];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let (_, rem) = chain[chain.len() - 2].div_rem(&chain[chain.len() - 1])?;
            if rem.is_zero() {
                break;
            }
            chain.push(-&rem);
        }
        Ok(SturmChain { chain })
    }

    /// The chain entries, starting with f itself.
    pub fn elements(&self) -> &[Polynomial] {
        &self.chain
    }

    /// Number of sign changes in the chain evaluated at x, skipping zeros.
    /// At the infinities the sign of each entry is read off its leading term.
    pub fn sign_variations(&self, x: &ExtendedRational) -> usize {
        let signs = self.chain.iter().map(|p| match x {
            ExtendedRational::Finite(v) => p.eval(v).signum(),
            ExtendedRational::PosInfinity => sign_at_infinity(p, false),
            ExtendedRational::NegInfinity => sign_at_infinity(p, true),
        });
        let mut count = 0;
        let mut prev = 0;
        for s in signs.filter(|&s| s != 0) {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }
}

fn sign_at_infinity(p: &Polynomial, negative: bool) -> i32 {
    let lc = p.leading_coeff().map(|c| c.signum()).unwrap_or(0);
    match p.degree() {
        Some(d) if negative && d % 2 == 1 => -lc,
        _ => lc,
    }
}

/// Number of DISTINCT real roots of f strictly between lo and hi, by the
/// sign-variation difference of the Sturm chain. Valid for non-squarefree f
/// as well, provided neither finite endpoint is a root of f (the chain then
/// ends at a nonconstant gcd whose sign is locked between consecutive roots,
/// so the variation count is unaffected).
pub fn sturm_count(
    f: &Polynomial,
    lo: &ExtendedRational,
    hi: &ExtendedRational,
) -> Result<usize, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    for e in [lo, hi] {
        if let ExtendedRational::Finite(v) = e {
            if f.eval(v).is_zero() {
                return Err(Error::EndpointIsRoot(v.clone()));
            }
        }
    }
    let chain = SturmChain::new(f)?;
    let (vl, vh) = (chain.sign_variations(lo), chain.sign_variations(hi));
    vl.checked_sub(vh)
        .ok_or_else(|| Error::Invariant("sign variations increased left to right".into()))
}

/// The Cauchy bound B = 1 + max |non-leading coefficient| of a monic
/// polynomial of degree >= 1. Every real root lies strictly inside (-B, B),
/// so in particular neither -B nor B is ever a root.
pub fn cauchy_bound(f: &Polynomial) -> Result<Rational, Error> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if deg < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let mut m = Rational::zero();
    for i in 0..deg {
        let a = f.coeff(i).abs();
        if a > m {
            m = a;
        }
    }
    Ok(Rational::one() + m)
}

/// A rational interval [lo, hi] certified to contain exactly one distinct
/// real root of the polynomial it was produced for. Either the squarefree
/// part changes sign between lo and hi (the root is interior), or an
/// endpoint is itself an exact root. `root_count` is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub root_count: usize,
}

impl IsolatingInterval {
    pub fn new(lo: Rational, hi: Rational) -> IsolatingInterval {
        IsolatingInterval { lo, hi, root_count: 1 }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// The endpoint that is an exact root of f, if there is one.
    pub fn endpoint_root(&self, f: &Polynomial) -> Option<Rational> {
        if f.eval(&self.lo).is_zero() {
            Some(self.lo.clone())
        } else if f.eval(&self.hi).is_zero() {
            Some(self.hi.clone())
        } else {
            None
        }
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// One isolated distinct real root: its interval and its multiplicity in f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: IsolatingInterval,
    pub multiplicity: usize,
}

/// A root located by refinement: exactly, or as a decimal estimate with the
/// certified exact bracket it was read from.
#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Exact(Rational),
    Approx {
        value: f64,
        lo: Rational,
        hi: Rational,
    },
}

impl RootValue {
    /// An exact rational standing in for the root: the value itself, or the
    /// bracket midpoint. Used for sorting and residual bounds.
    pub fn estimate(&self) -> Rational {
        match self {
            RootValue::Exact(r) => r.clone(),
            RootValue::Approx { lo, hi, .. } => (lo + hi) / Rational::from_integer(2),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RootValue::Exact(r) => r.to_f64(),
            RootValue::Approx { value, .. } => *value,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RootValue::Exact(_))
    }

    /// Translates the root by s (used to undo a depression shift).
    pub fn translate(&self, s: &Rational) -> RootValue {
        match self {
            RootValue::Exact(r) => RootValue::Exact(r + s),
            RootValue::Approx { lo, hi, .. } => {
                let (lo, hi) = (lo + s, hi + s);
                let value = ((&lo + &hi) / Rational::from_integer(2)).to_f64();
                RootValue::Approx { value, lo, hi }
            }
        }
    }
}

/// f divided by gcd(f, f'): same roots, all simple, made monic.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial, Error> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Polynomial::one());
    }
    let g = f.gcd(&f.derivative());
    let (q, _) = f.div_rem(&g)?;
    Ok(q.monic())
}

/// Isolates every distinct real root of f into pairwise disjoint rational
/// intervals (sorted ascending), each tagged with the root's multiplicity.
/// Internally works on the squarefree part; the search starts from the
/// Cauchy interval and splits by Sturm counts at dyadic subdivision points.
pub fn isolate_real_roots(f: &Polynomial) -> Result<Vec<IsolatedRoot>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = squarefree_part(f)?;
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let b = cauchy_bound(&sf)?;
    let chain = SturmChain::new(&sf)?;
    let lo = -&b;
    let v_lo = chain.sign_variations(&ExtendedRational::Finite(lo.clone()));
    let v_hi = chain.sign_variations(&ExtendedRational::Finite(b.clone()));
    let mut raw = Vec::new();
    split(&sf, &chain, lo, b, v_lo, v_hi, &mut raw)?;
    separate(&sf, &mut raw);

    let levels = gcd_levels(f);
    let mut out = Vec::with_capacity(raw.len());
    for (lo, hi) in raw {
        let interval = IsolatingInterval::new(lo, hi);
        let multiplicity = multiplicity_in(&levels, &sf, &interval)?;
        out.push(IsolatedRoot { interval, multiplicity });
    }
    Ok(out)
}

/// Recursive bisection on half-open intervals (lo, hi]. With zeros skipped,
/// the variation count of a squarefree chain is right-continuous, so
/// V(lo) - V(hi) counts the roots in (lo, hi] even when an endpoint is a
/// root; that is what lets subdivision points land on roots harmlessly.
fn split(
    sf: &Polynomial,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<(Rational, Rational)>,
) -> Result<(), Error> {
    let n = v_lo
        .checked_sub(v_hi)
        .ok_or_else(|| Error::Invariant("sign variations increased left to right".into()))?;
    match n {
        0 => Ok(()),
        1 => {
            out.push(narrow_to_root(sf, chain, lo, hi));
            Ok(())
        }
        _ => {
            let m = (&lo + &hi) / Rational::from_integer(2);
            let v_m = chain.sign_variations(&ExtendedRational::Finite(m.clone()));
            split(sf, chain, lo, m.clone(), v_lo, v_m, out)?;
            split(sf, chain, m, hi, v_m, v_hi, out)
        }
    }
}

/// Turns a half-open interval (lo, hi] holding exactly one root of sf into a
/// closed interval with non-root lo: either hi is the root itself, or the
/// sign of sf changes between lo and hi. When lo happens to be a root (it
/// belongs to the neighbouring interval), it is nudged right along
/// lo + width/2^k until the count recovers.
fn narrow_to_root(
    sf: &Polynomial,
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
) -> (Rational, Rational) {
    loop {
        if !sf.eval(&lo).is_zero() {
            return (lo, hi);
        }
        let w = &hi - &lo;
        let mut step = w / Rational::from_integer(2);
        loop {
            let c = &lo + &step;
            if sf.eval(&c).is_zero() {
                // landed exactly on the root; keep (lo, c] and retry
                hi = c;
                break;
            }
            let v_c = chain.sign_variations(&ExtendedRational::Finite(c.clone()));
            if v_c - chain.sign_variations(&ExtendedRational::Finite(hi.clone())) == 1 {
                lo = c;
                break;
            }
            step = step / Rational::from_integer(2);
        }
    }
}

/// Makes consecutive intervals strictly disjoint. Raw intervals from the
/// half-open partition can share a single former subdivision point; one-step
/// refinement of the left interval is repeated until the touch disappears.
fn separate(sf: &Polynomial, raw: &mut [(Rational, Rational)]) {
    for i in 0..raw.len().saturating_sub(1) {
        while raw[i].1 >= raw[i + 1].0 {
            let (lo, hi) = raw[i].clone();
            let m = (&lo + &hi) / Rational::from_integer(2);
            let sm = sf.eval(&m).signum();
            raw[i] = if sm == 0 {
                (((&lo + &m) / Rational::from_integer(2)), m)
            } else if sm == sf.eval(&lo).signum() {
                (m, hi)
            } else {
                (lo, m)
            };
        }
    }
}

/// The repeated-gcd ladder f, gcd(f, f'), gcd(gcd, gcd'), ... down to a
/// constant. A root of multiplicity m in f is a root of exactly the first m
/// rungs, which is how multiplicities are read off.
fn gcd_levels(f: &Polynomial) -> Vec<Polynomial> {
    let mut levels = vec![f.clone()];
    loop {
        let last = levels.last().unwrap();
        if last.degree().map_or(true, |d| d == 0) {
            break;
        }
        let next = last.gcd(&last.derivative());
        levels.push(next);
    }
    levels
}

fn multiplicity_in(
    levels: &[Polynomial],
    sf: &Polynomial,
    interval: &IsolatingInterval,
) -> Result<usize, Error> {
    let mut m = 0;
    if let Some(r) = interval.endpoint_root(sf) {
        for level in levels {
            if level.degree().map_or(true, |d| d == 0) {
                break;
            }
            if level.eval(&r).is_zero() {
                m += 1;
            }
        }
    } else {
        let lo = ExtendedRational::Finite(interval.lo.clone());
        let hi = ExtendedRational::Finite(interval.hi.clone());
        for level in levels {
            if level.degree().map_or(true, |d| d == 0) {
                break;
            }
            if sturm_count(level, &lo, &hi)? == 1 {
                m += 1;
            }
        }
    }
    if m == 0 {
        return Err(Error::Invariant("isolated root missing from its own interval".into()));
    }
    Ok(m)
}

/// Halves an isolating bracket, keeping the sign change of the squarefree
/// part, until its width is at most tol. An endpoint that is already an
/// exact root returns immediately, and every midpoint is tested for being an
/// exact rational root before its sign is used. The iteration cap only
/// trips when the interval was not actually isolating.
pub fn bisect_refine(
    f: &Polynomial,
    iv: &IsolatingInterval,
    tol: f64,
) -> Result<RootValue, Error> {
    let tol_r = exact_tolerance(tol)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if iv.lo >= iv.hi {
        return Err(Error::EmptyInterval);
    }
    if f.eval(&iv.lo).is_zero() {
        return Ok(RootValue::Exact(iv.lo.clone()));
    }
    if f.eval(&iv.hi).is_zero() {
        return Ok(RootValue::Exact(iv.hi.clone()));
    }
    let sf = squarefree_part(f)?;
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.eval(&lo).signum();
    if s_lo * sf.eval(&hi).signum() != -1 {
        return Err(Error::NotIsolating);
    }
    let cap = bisection_cap(&(&hi - &lo), &tol_r);
    let mut iterations = 0;
    while iv_width(&lo, &hi) > tol_r {
        if iterations >= cap {
            return Err(Error::IterationCap(cap));
        }
        iterations += 1;
        let m = (&lo + &hi) / Rational::from_integer(2);
        let sm = sf.eval(&m).signum();
        if sm == 0 {
            return Ok(RootValue::Exact(m));
        }
        if sm == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    let value = ((&lo + &hi) / Rational::from_integer(2)).to_f64();
    Ok(RootValue::Approx { value, lo, hi })
}

/// Exact test for a rational root inside an isolating interval, complete for
/// the bracketed root. The squarefree part is scaled to integer coefficients
/// with leading coefficient A; any rational root is then y/A for an integer
/// y, so once the bracket is narrower than 1/A at most one candidate is left
/// to check. Returns the root when the bracketed root is rational, None when
/// it is irrational.
pub fn rational_root_in(
    f: &Polynomial,
    iv: &IsolatingInterval,
) -> Result<Option<Rational>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if iv.lo >= iv.hi {
        return Err(Error::EmptyInterval);
    }
    if f.eval(&iv.lo).is_zero() {
        return Ok(Some(iv.lo.clone()));
    }
    if f.eval(&iv.hi).is_zero() {
        return Ok(Some(iv.hi.clone()));
    }
    let sf = squarefree_part(f)?;
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.eval(&lo).signum();
    if s_lo * sf.eval(&hi).signum() != -1 {
        return Err(Error::NotIsolating);
    }
    let a = denominator_lcm(&sf);
    let a_r = Rational::from_bigint(a.clone());
    let target = a_r.recip();
    let cap = bisection_cap(&(&hi - &lo), &target) + 8;
    let mut iterations = 0;
    while iv_width(&lo, &hi) >= target {
        if iterations >= cap {
            return Err(Error::Invariant("rational root scan failed to converge".into()));
        }
        iterations += 1;
        let m = (&lo + &hi) / Rational::from_integer(2);
        let sm = sf.eval(&m).signum();
        if sm == 0 {
            return Ok(Some(m));
        }
        if sm == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    let y_min = (&lo * &a_r).ceil();
    let y_max = (&hi * &a_r).floor();
    let mut y = y_min;
    while y <= y_max {
        let candidate = Rational::from_big(y.clone(), a.clone());
        if sf.eval(&candidate).is_zero() {
            return Ok(Some(candidate));
        }
        y += BigInt::from(1);
    }
    Ok(None)
}

fn iv_width(lo: &Rational, hi: &Rational) -> Rational {
    hi - lo
}

/// Validates a caller-supplied tolerance and converts it to the exact
/// rational it denotes as a double.
pub fn exact_tolerance(tol: f64) -> Result<Rational, Error> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance);
    }
    Rational::from_f64(tol).ok_or(Error::InvalidTolerance)
}

/// 10 * ceil(log2(range / tol)), the bisection iteration budget. Bisection
/// needs only the log2 term; the slack means the cap fires solely on broken
/// preconditions.
fn bisection_cap(range: &Rational, tol: &Rational) -> usize {
    let ratio = (range / tol).to_f64().max(2.0);
    10 * (ratio.log2().ceil() as usize).max(1)
}

fn denominator_lcm(f: &Polynomial) -> BigInt {
    let mut l = BigInt::from(1);
    for c in f.coeffs() {
        l = l.lcm(c.denominator());
    }
    l
}

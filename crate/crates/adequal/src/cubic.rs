//! The constructive three-real-roots criterion for a monic cubic: Vieta
//! expansion, depression to u^3 + pu - q, exact discriminant classification
//! by D = 4p^3 + 27q^2, and recovery of the real root triple, together with
//! the quadratic baseline.
//!
//! The classification never leaves rational arithmetic. In particular the
//! product of the cubic's values at its two critical points, which decides
//! whether a sign change happens between the local extrema, has the closed
//! form q^2 + 4p^3/27 = D/27 and needs no square roots.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::sturm::{
    bisect_refine, cauchy_bound, exact_tolerance, isolate_real_roots, rational_root_in,
    IsolatingInterval, RootValue,
};
use std::fmt;

/// The monic cubic t^3 - a*t^2 + b*t - c. With this sign convention the
/// coefficients are the elementary symmetric functions of the roots when a
/// real triple (x, y, z) exists: a = x+y+z, b = xy+yz+zx, c = xyz.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Cubic {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Cubic {
        Cubic { a, b, c }
    }

    /// The polynomial t^3 - a*t^2 + b*t - c.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![
            -&self.c,
            self.b.clone(),
            -&self.a,
            Rational::one(),
        ])
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

/// The depressed form u^3 + p*u - q reached from a `Cubic` by the
/// substitution t = u + shift with shift = a/3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedCubic {
    pub p: Rational,
    pub q: Rational,
    pub shift: Rational,
}

impl DepressedCubic {
    pub fn new(p: Rational, q: Rational, shift: Rational) -> DepressedCubic {
        DepressedCubic { p, q, shift }
    }

    /// The polynomial u^3 + p*u - q.
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![
            -&self.q,
            self.p.clone(),
            Rational::zero(),
            Rational::one(),
        ])
    }
}

impl fmt::Display for DepressedCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

/// Exact classification of a cubic by the sign of D = 4p^3 + 27q^2. Note
/// that D <= 0 with p >= 0 forces p = q = 0, so the four variants are
/// exhaustive and mutually exclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// p = q = 0: the depressed cubic is u^3, one real root of multiplicity 3.
    TripleRoot { discriminant: Rational },
    /// D = 0 with p < 0: a double root and a distinct single root.
    DoubleAndSingle { discriminant: Rational },
    /// D < 0: three distinct real roots.
    ThreeDistinct { discriminant: Rational },
    /// D > 0: exactly one real root; no real triple exists.
    OneRealRoot { discriminant: Rational },
}

impl Classification {
    pub fn discriminant(&self) -> &Rational {
        match self {
            Classification::TripleRoot { discriminant }
            | Classification::DoubleAndSingle { discriminant }
            | Classification::ThreeDistinct { discriminant }
            | Classification::OneRealRoot { discriminant } => discriminant,
        }
    }

    /// True when the cubic has three real roots counted with multiplicity,
    /// i.e. when D <= 0.
    pub fn has_real_triple(&self) -> bool {
        !matches!(self, Classification::OneRealRoot { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Classification::TripleRoot { .. } => "triple_root",
            Classification::DoubleAndSingle { .. } => "double_and_single",
            Classification::ThreeDistinct { .. } => "three_distinct",
            Classification::OneRealRoot { .. } => "one_real_root",
        }
    }
}

/// A real root triple sorted ascending, multiplicity shown by repetition.
#[derive(Clone, Debug, PartialEq)]
pub struct RootTriple {
    pub roots: [RootValue; 3],
}

impl RootTriple {
    /// Exact rational stand-ins for the three roots (bracket midpoints for
    /// approximate ones), in the stored ascending order.
    pub fn estimates(&self) -> [Rational; 3] {
        [
            self.roots[0].estimate(),
            self.roots[1].estimate(),
            self.roots[2].estimate(),
        ]
    }

    pub fn all_exact(&self) -> bool {
        self.roots.iter().all(RootValue::is_exact)
    }
}

/// Outcome of `solve_cubic`: the triple, or proof that none exists in the
/// form of the positive discriminant.
#[derive(Clone, Debug, PartialEq)]
pub enum CubicSolution {
    Triple(RootTriple),
    NoRealTriple { discriminant: Rational },
}

/// Outcome of `solve_quadratic_vieta`.
#[derive(Clone, Debug, PartialEq)]
pub enum QuadraticSolution {
    Pair { x: RootValue, y: RootValue },
    NoRealPair,
}

/// Expands the elementary symmetric functions of (x, y, z) into the cubic
/// with that root triple: a = x+y+z, b = xy+yz+zx, c = xyz.
pub fn vieta_expand(x: &Rational, y: &Rational, z: &Rational) -> Cubic {
    let a = x + y + z;
    let b = &(&(x * y) + &(y * z)) + &(z * x);
    let c = &(x * y) * z;
    Cubic::new(a, b, c)
}

/// Eliminates the quadratic term: t = u + a/3 turns t^3 - at^2 + bt - c
/// into u^3 + pu - q with p = b - a^2/3 and q = c - ab/3 + 2a^3/27.
pub fn depress(cub: &Cubic) -> DepressedCubic {
    let three = Rational::from_integer(3);
    let a2 = &cub.a * &cub.a;
    let p = &cub.b - &(&a2 / &three);
    let q = &(&cub.c - &(&(&cub.a * &cub.b) / &three))
        + &(&(&(&a2 * &cub.a) * &Rational::from_integer(2)) / &Rational::from_integer(27));
    DepressedCubic::new(p, q, &cub.a / &three)
}

/// D = 4p^3 + 27q^2, exactly.
pub fn discriminant_value(dep: &DepressedCubic) -> Rational {
    let p3 = dep.p.pow(3);
    let q2 = dep.q.pow(2);
    &(&p3 * &Rational::from_integer(4)) + &(&q2 * &Rational::from_integer(27))
}

/// The exact product f(-m) * f(m) of the depressed cubic's values at its
/// critical points +-m = +-sqrt(-p/3), computed without square roots via
/// f(+-m) = -+(2p/3)m - q, whose product collapses to q^2 + 4p^3/27 = D/27.
/// Requires p < 0 (otherwise there is no critical pair).
pub fn sign_product_at_critical(dep: &DepressedCubic) -> Result<Rational, Error> {
    if !dep.p.is_negative() {
        return Err(Error::NoCriticalPair);
    }
    let p3 = dep.p.pow(3);
    let q2 = dep.q.pow(2);
    Ok(&q2 + &(&(&p3 * &Rational::from_integer(4)) / &Rational::from_integer(27)))
}

/// Depresses and classifies by exact sign tests on p, q and D.
pub fn classify(cub: &Cubic) -> Classification {
    let dep = depress(cub);
    let discriminant = discriminant_value(&dep);
    if dep.p.is_zero() && dep.q.is_zero() {
        Classification::TripleRoot { discriminant }
    } else if discriminant.is_zero() {
        Classification::DoubleAndSingle { discriminant }
    } else if discriminant.is_negative() {
        Classification::ThreeDistinct { discriminant }
    } else {
        Classification::OneRealRoot { discriminant }
    }
}

/// Recovers the real root triple of the cubic, or reports `NoRealTriple`
/// with the positive discriminant. Rational roots are returned exactly;
/// irrational ones as certified brackets refined well inside tol.
pub fn solve_cubic(cub: &Cubic, tol: f64) -> Result<CubicSolution, Error> {
    exact_tolerance(tol)?;
    let dep = depress(cub);
    match classify(cub) {
        Classification::OneRealRoot { discriminant } => {
            Ok(CubicSolution::NoRealTriple { discriminant })
        }
        Classification::TripleRoot { .. } => {
            let r = RootValue::Exact(dep.shift.clone());
            Ok(CubicSolution::Triple(RootTriple {
                roots: [r.clone(), r.clone(), r],
            }))
        }
        Classification::DoubleAndSingle { .. } => {
            let double = double_root(&dep, tol)?;
            let single = scale_root(&double, -2);
            let mut roots = [double.clone(), double, single];
            sort_roots(&mut roots);
            Ok(CubicSolution::Triple(RootTriple {
                roots: roots.map(|r| r.translate(&dep.shift)),
            }))
        }
        Classification::ThreeDistinct { .. } => {
            let poly = dep.polynomial();
            let isolated = isolate_real_roots(&poly)?;
            if isolated.len() != 3 {
                return Err(Error::Invariant(
                    "D < 0 cubic did not isolate three real roots".into(),
                ));
            }
            let mut roots = Vec::with_capacity(3);
            for root in &isolated {
                roots.push(locate(&poly, &root.interval, tol)?);
            }
            let mut roots: [RootValue; 3] = roots.try_into().unwrap();
            sort_roots(&mut roots);
            Ok(CubicSolution::Triple(RootTriple {
                roots: roots.map(|r| r.translate(&dep.shift)),
            }))
        }
    }
}

/// The depressed double root -s*m, with s = sign(q) and m = (|q|/2)^(1/3) =
/// sqrt(-p/3), from the verified factorization (u + s*m)^2 (u - 2s*m) =
/// u^3 - 3m^2*u - 2s*m^3. With rational p and q the double root is in fact
/// always rational (m = m^3 / m^2), so the cube-root test is expected to
/// succeed; the bracketed fallback stays as a safety net.
fn double_root(dep: &DepressedCubic, tol: f64) -> Result<RootValue, Error> {
    let s = dep.q.signum() as i64;
    let half_abs_q = &dep.q.abs() / &Rational::from_integer(2);
    if let Some(m) = half_abs_q.cbrt_exact() {
        return Ok(RootValue::Exact(-&(&Rational::from_integer(s) * &m)));
    }
    let w = Polynomial::from_coeffs(vec![
        -&half_abs_q,
        Rational::zero(),
        Rational::zero(),
        Rational::one(),
    ]);
    let iv = IsolatingInterval::new(Rational::zero(), cauchy_bound(&w)?);
    let m = bisect_refine(&w, &iv, tol / 8.0)?;
    Ok(scale_root(&m, -s))
}

/// Multiplies a root value by a small integer, flipping the bracket when
/// negative.
fn scale_root(r: &RootValue, k: i64) -> RootValue {
    let k_r = Rational::from_integer(k);
    match r {
        RootValue::Exact(v) => RootValue::Exact(v * &k_r),
        RootValue::Approx { lo, hi, .. } => {
            let (a, b) = (lo * &k_r, hi * &k_r);
            let (lo, hi) = if k < 0 { (b, a) } else { (a, b) };
            let value = ((&lo + &hi) / Rational::from_integer(2)).to_f64();
            RootValue::Approx { value, lo, hi }
        }
    }
}

fn sort_roots(roots: &mut [RootValue; 3]) {
    roots.sort_by(|a, b| a.estimate().cmp(&b.estimate()));
}

/// Exact root when the bracketed root is rational, else a refined bracket.
fn locate(poly: &Polynomial, iv: &IsolatingInterval, tol: f64) -> Result<RootValue, Error> {
    if let Some(r) = rational_root_in(poly, iv)? {
        return Ok(RootValue::Exact(r));
    }
    bisect_refine(poly, iv, tol / 8.0)
}

/// Solves t^2 - at + b = 0 over the reals: the pair exists iff 4b - a^2 <= 0,
/// and then x = (a - sqrt(a^2 - 4b))/2 <= y = (a + sqrt(a^2 - 4b))/2,
/// exact whenever a^2 - 4b is a rational square.
pub fn solve_quadratic_vieta(
    a: &Rational,
    b: &Rational,
    tol: f64,
) -> Result<QuadraticSolution, Error> {
    exact_tolerance(tol)?;
    let disc = &(a * a) - &(b * &Rational::from_integer(4));
    if disc.is_negative() {
        return Ok(QuadraticSolution::NoRealPair);
    }
    let two = Rational::from_integer(2);
    if let Some(s) = disc.sqrt_exact() {
        let x = RootValue::Exact(&(a - &s) / &two);
        let y = RootValue::Exact(&(a + &s) / &two);
        return Ok(QuadraticSolution::Pair { x, y });
    }
    // sqrt(disc) is irrational: bracket it as the positive root of
    // t^2 - disc on [0, 1 + disc]
    let w = Polynomial::from_coeffs(vec![-&disc, Rational::zero(), Rational::one()]);
    let iv = IsolatingInterval::new(Rational::zero(), cauchy_bound(&w)?);
    let s = bisect_refine(&w, &iv, tol / 2.0)?;
    let (s_lo, s_hi) = match &s {
        RootValue::Approx { lo, hi, .. } => (lo.clone(), hi.clone()),
        RootValue::Exact(_) => {
            return Err(Error::Invariant(
                "exact square root found for a rational non-square".into(),
            ))
        }
    };
    let make = |lo: Rational, hi: Rational| {
        let value = ((&lo + &hi) / Rational::from_integer(2)).to_f64();
        RootValue::Approx { value, lo, hi }
    };
    let x = make(&(a - &s_hi) / &two, &(a - &s_lo) / &two);
    let y = make(&(a + &s_lo) / &two, &(a + &s_hi) / &two);
    Ok(QuadraticSolution::Pair { x, y })
}

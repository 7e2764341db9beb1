//! The difference quotient of a polynomial as a bivariate polynomial.
//!
//! For f of degree n >= 1, the quotient phi satisfies the polynomial identity
//! (t1 - t2) * phi(t1, t2) = f(t1) - f(t2). It exists because of the
//! telescoping identity t1^n - t2^n = (t1 - t2) * sum_{i+j=n-1} t1^i t2^j,
//! which also makes the construction exact: no division is performed.
//!
//! The diagonal phi(t, t) plays the role of the derivative of f without any
//! limit process; its agreement with the coefficient-rule derivative is a
//! tested property of the crate, not an assumption.

use crate::error::Error;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;

/// A symmetric bivariate polynomial phi(t1, t2) with rational coefficients,
/// stored as a sparse map from exponent pairs to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariateQuotient {
    terms: BTreeMap<(usize, usize), Rational>,
}

/// Builds the difference quotient phi of f with
/// (t1 - t2) * phi(t1, t2) = f(t1) - f(t2).
///
/// Each power c * t^n of f contributes c to every pair (i, j) with
/// i + j = n - 1, so the coefficient at (i, j) is simply the coefficient of
/// t^(i+j+1) in f; the constant term of f cancels. Rejects constants and the
/// zero polynomial, whose quotient is degenerate.
pub fn fermat_quotient(f: &Polynomial) -> Result<BivariateQuotient, Error> {
    let deg = f.degree().filter(|&d| d >= 1).ok_or(Error::DegreeTooSmall)?;
    let mut terms = BTreeMap::new();
    for n in 1..=deg {
        let c = f.coeff(n);
        if c.is_zero() {
            continue;
        }
        for i in 0..n {
            terms.insert((i, n - 1 - i), c.clone());
        }
    }
    Ok(BivariateQuotient { terms })
}

/// The diagonal phi(t, t) of the difference quotient of f: the
/// derivative-free derivative. Rejects constants and the zero polynomial.
pub fn fermat_derivative(f: &Polynomial) -> Result<Polynomial, Error> {
    Ok(fermat_quotient(f)?.diagonal())
}

impl BivariateQuotient {
    /// Coefficient of t1^i * t2^j (zero if absent).
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over (i, j, coefficient) for all nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Largest i + j over nonzero terms; equals deg f - 1.
    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// True when the coefficient table is symmetric in (i, j).
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }

    /// Exact evaluation at a pair of rationals.
    pub fn eval(&self, t1: &Rational, t2: &Rational) -> Rational {
        let n = self.total_degree();
        let p1 = powers(t1, n);
        let p2 = powers(t2, n);
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc + c * &p1[i] * &p2[j];
        }
        acc
    }

    /// The univariate polynomial phi(t, t).
    pub fn diagonal(&self) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); self.total_degree() + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[i + j] = &coeffs[i + j] + c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Terms in canonical order: graded by descending total degree, then by
    /// descending power of t1.
    fn ordered_terms(&self) -> Vec<((usize, usize), &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        v.sort_by(|((i1, j1), _), ((i2, j2), _)| {
            (i2 + j2).cmp(&(i1 + j1)).then(i2.cmp(i1))
        });
        v
    }
}

impl fmt::Display for BivariateQuotient {
    /// Canonical text form, e.g. `t1^2 + t1*t2 + t2^2 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.ordered_terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (name, e) in [("t1", i), ("t2", j)] {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(name);
                if e > 1 {
                    vars.push_str(&format!("^{}", e));
                }
            }
            if vars.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag == Rational::one() {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{}*{}", mag, vars)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariateQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn powers(x: &Rational, n: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(Rational::one());
    for _ in 0..n {
        v.push(v.last().unwrap() * x);
    }
    v
}

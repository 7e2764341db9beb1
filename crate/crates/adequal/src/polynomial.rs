//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` is the
//! coefficient of t^i. The representation is canonical: the vector is empty
//! for the zero polynomial and the last element is nonzero otherwise, so the
//! leading coefficient of a nonzero polynomial is never zero.

use crate::error::Error;
use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The zero polynomial (empty coefficient list, degree "-infinity").
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// A constant polynomial; the zero constant yields the zero polynomial.
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial c * t^deg.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// The identity polynomial t.
    pub fn var() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// Builds from ascending-order coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of t^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// All stored coefficients in ascending order.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| *c == Rational::one())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * t + c;
        }
        acc
    }

    /// Argument shift: returns g with g(u) = f(u + s). Degree is preserved.
    pub fn shift(&self, s: &Rational) -> Polynomial {
        // Horner in polynomial arithmetic: fold highest-first through (u + s).
        let linear = Polynomial::from_coeffs(vec![s.clone(), Rational::one()]);
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &linear + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Argument scaling: returns g with g(u) = f(k * u). Rejects k = 0.
    pub fn scale_arg(&self, k: &Rational) -> Result<Polynomial, Error> {
        if k.is_zero() {
            return Err(Error::ZeroScaleFactor);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut kpow = Rational::one();
        for c in &self.coeffs {
            coeffs.push(c * &kpow);
            kpow = &kpow * k;
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Coefficient-rule derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from_integer(i as i64))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, k: &Rational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.mul_scalar(&lc.recip()),
        }
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// `self = quotient * divisor + remainder` and deg rem < deg divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        let d_deg = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let d_lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d_deg + 1 {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d_deg];
        while rem.len() >= d_deg + 1 {
            let r_deg = rem.len() - 1;
            let c = rem.last().unwrap() / &d_lc;
            let k = r_deg - d_deg;
            for i in 0..d_deg {
                rem[k + i] = &rem[k + i] - &(&divisor.coeffs[i] * &c);
            }
            rem.pop();
            while rem.last().map_or(false, Rational::is_zero) {
                rem.pop();
            }
            quot[k] = c;
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// `gcd(0, 0) = 0`; otherwise the result is monic.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    /// Canonical text form matching the parser grammar, highest degree first:
    /// `t^3 - 3*t`, `1/2*t^2 + t`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let unit = mag == Rational::one();
            match deg {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !unit {
                        write!(f, "{}*", mag)?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", deg)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

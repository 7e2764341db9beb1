//! Exact arbitrary-precision rational scalars.
//!
//! `Rational` is the universal scalar of the crate: polynomial coefficients,
//! interval endpoints, discriminants and root values are all exact rationals.
//! Values are always stored normalized (positive denominator, reduced to
//! lowest terms), so equality and sign tests are bit-exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number with arbitrary-precision numerator and denominator.
///
/// Invariants: the denominator is positive and `gcd(|numerator|, denominator) = 1`.
/// Both are maintained by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// The value 0.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// The value 1.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Build `num/den` from machine integers. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Build `num/den` from big integers. Panics if `den` is zero.
    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Exact conversion from a finite `f64` (every finite double is a dyadic
    /// rational). Returns `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Exact square root, when one exists in the rationals.
    ///
    /// A normalized nonnegative rational is a square iff numerator and
    /// denominator are both perfect squares.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let sn = self.0.numer().sqrt();
        if &sn * &sn != *self.0.numer() {
            return None;
        }
        let sd = self.0.denom().sqrt();
        if &sd * &sd != *self.0.denom() {
            return None;
        }
        Some(Rational::from_big(sn, sd))
    }

    /// Exact real cube root, when one exists in the rationals. Works for
    /// negative values as well.
    pub fn cbrt_exact(&self) -> Option<Rational> {
        let cn = self.0.numer().cbrt();
        if &cn * &cn * &cn != *self.0.numer() {
            return None;
        }
        let cd = self.0.denom().cbrt();
        if &cd * &cd * &cd != *self.0.denom() {
            return None;
        }
        Some(Rational::from_big(cn, cd))
    }

    /// Nearest `f64`, accurate to the last bit or so even when numerator and
    /// denominator are far outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        let num = self.0.numer();
        let den = self.0.denom();
        if num.is_zero() {
            return 0.0;
        }
        // Scale so the integer quotient carries ~96 significant bits, convert
        // that, then undo the scaling by an exact power of two.
        let nbits = num.bits() as i64;
        let dbits = den.bits() as i64;
        let shift = 96 - (nbits - dbits);
        if shift > 4000 {
            return 0.0 * num.to_f64().unwrap_or(0.0).signum();
        }
        if shift < -4000 {
            return f64::INFINITY * if num.is_negative() { -1.0 } else { 1.0 };
        }
        let q = if shift >= 0 {
            (num << shift as u64) / den
        } else {
            num / (den << (-shift) as u64)
        };
        let qf = q.to_f64().unwrap_or(if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        });
        qf * 2f64.powi(-(shift as i32))
    }
}

impl fmt::Display for Rational {
    /// Canonical text form: `n` for integers, `n/d` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses `n` or `n/d` with an optional leading sign, e.g. `-3`, `1/2`.
impl FromStr for Rational {
    type Err = crate::parse::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::parse::parse_rational(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |a, b| a * b)
    }
}

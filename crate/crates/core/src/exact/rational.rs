use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::ZeroComplexDivisor);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// The non-negative rational square root, if one exists.
    pub fn exact_sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (&n * &n == *self.numer() && &d * &d == *self.denom()).then(|| Rational::new(n, d))
    }

    /// Parses `digits` or `digits.digits` into an exact value.
    pub fn from_decimal_str(s: &str) -> Option<Rational> {
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        if s.contains('.') && (frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit())) {
            return None;
        }
        let digits: BigInt = format!("{int}{frac}").parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        Some(Rational::new(digits, scale))
    }

    /// Recomputes lowest-terms form from scratch. Used to audit outputs.
    pub fn is_canonical(&self) -> bool {
        let (n, d) = (self.numer(), self.denom());
        d.is_positive() && n.abs().gcd(d).is_one()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
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
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_unique() {
        let z = Rational::new(0, -7);
        assert_eq!(z, Rational::zero());
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = Rational::new(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(r.is_canonical());
    }

    #[test]
    fn display() {
        assert_eq!(Rational::new(3, 1).to_string(), "3");
        assert_eq!(Rational::new(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn decimals_are_exact() {
        assert_eq!(Rational::from_decimal_str("2.5"), Some(Rational::new(5, 2)));
        assert_eq!(Rational::from_decimal_str("0.10"), Some(Rational::new(1, 10)));
        assert_eq!(Rational::from_decimal_str("17"), Some(Rational::from(17)));
        assert_eq!(Rational::from_decimal_str("2."), None);
        assert_eq!(Rational::from_decimal_str(".5"), None);
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(Rational::new(9, 4).exact_sqrt(), Some(Rational::new(3, 2)));
        assert_eq!(Rational::from(2).exact_sqrt(), None);
        assert_eq!(Rational::new(4, 3).exact_sqrt(), None);
        assert_eq!(Rational::from(-4).exact_sqrt(), None);
        assert_eq!(Rational::zero().exact_sqrt(), Some(Rational::zero()));
    }

    #[test]
    fn division_by_zero_is_refused() {
        assert_eq!(
            Rational::one().checked_div(&Rational::zero()),
            Err(Error::ZeroComplexDivisor)
        );
    }
}

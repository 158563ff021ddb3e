use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Radical, Rational};
use crate::error::{Error, Result};

/// An un-indexed complex number `C(re, im) = re + i·im` with exact parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: impl Into<Rational>, im: impl Into<Rational>) -> Self {
        Complex {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Complex::default()
    }

    pub fn one() -> Self {
        Complex::new(1, 0)
    }

    pub fn i() -> Self {
        Complex::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conjugate(&self) -> Complex {
        Complex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`, the squared modulus.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, rhs: &Complex) -> Result<Complex> {
        if rhs.is_zero() {
            return Err(Error::ZeroComplexDivisor);
        }
        let n = rhs.norm_sqr();
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        Ok(Complex {
            re: re.checked_div(&n)?,
            im: im.checked_div(&n)?,
        })
    }

    pub fn modulus(&self) -> Radical {
        Radical::new(self.norm_sqr()).expect("sum of squares is non-negative")
    }

    pub fn is_canonical(&self) -> bool {
        self.re.is_canonical() && self.im.is_canonical()
    }
}

impl From<Rational> for Complex {
    fn from(re: Rational) -> Self {
        Complex {
            re,
            im: Rational::zero(),
        }
    }
}

/// Renders `a+bi`. A fractional imaginary coefficient `p/q` is written
/// `pi/q` so the text parses back to the same value.
impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            if !self.im.is_negative() {
                f.write_str("+")?;
            }
        }
        if self.im.is_integer() {
            write!(f, "{}i", self.im.numer())
        } else {
            write!(f, "{}i/{}", self.im.numer(), self.im.denom())
        }
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

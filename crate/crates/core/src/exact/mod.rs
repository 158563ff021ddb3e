//! Exact scalar and complex arithmetic.
//!
//! Coefficients are arbitrary-precision rationals, so every law check is an
//! exact equality instead of a floating-point tolerance.

mod complex;
mod radical;
mod rational;

pub use complex::Complex;
pub use radical::Radical;
pub use rational::Rational;

use std::fmt;

use super::Rational;

/// An exact square root `√radicand`, produced by the modulus.
///
/// Radicals are results only; they never appear as operands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Radical {
    radicand: Rational,
    exact_root: Option<Rational>,
}

impl Radical {
    /// Returns `None` for a negative radicand.
    pub fn new(radicand: Rational) -> Option<Self> {
        if radicand.is_negative() {
            return None;
        }
        let exact_root = radicand.exact_sqrt();
        Some(Radical {
            radicand,
            exact_root,
        })
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn exact_root(&self) -> Option<&Rational> {
        self.exact_root.as_ref()
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact_root {
            Some(root) => write!(f, "{root}"),
            None => write!(f, "sqrt({})", self.radicand),
        }
    }
}

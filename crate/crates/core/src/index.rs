//! The two-valued index calculus.
//!
//! Every number carries one of two indices: the Vastavic index `↑`, which
//! tags ordinary complex numbers, and the Calpanic index `↓`, which tags the
//! numbers produced by dividing by an exact zero.
//!
//! Multiplication table (row × column):
//!
//! | ×   | ↑ | ↓ |
//! |-----|---|---|
//! | ↑   | ↑ (property 1) | ↓ (mixed, from properties 4 and 1) |
//! | ↓   | ↑ (mixed, from properties 8 and 5) | ↓ (property 5) |
//!
//! Every entry happens to equal the right operand, so multiplication is
//! associative but not commutative: `↓↑ ≠ ↑↓`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Index {
    /// `↑`, carried by every ordinary complex number.
    #[serde(rename = "up")]
    Vastavic,
    /// `↓`, the index of numbers beyond the complex plane.
    #[serde(rename = "down")]
    Calpanic,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::Vastavic, Index::Calpanic];

    /// Index product, looked up entry by entry.
    pub fn product(self, rhs: Index) -> Index {
        match (self, rhs) {
            (Index::Vastavic, Index::Vastavic) => Index::Vastavic,
            (Index::Vastavic, Index::Calpanic) => Index::Calpanic,
            (Index::Calpanic, Index::Vastavic) => Index::Vastavic,
            (Index::Calpanic, Index::Calpanic) => Index::Calpanic,
        }
    }

    /// Same-index quotient. Mixed quotients are only meaningful once payloads
    /// are attached, so they are refused here.
    pub fn checked_div(self, rhs: Index) -> Result<Index> {
        match (self, rhs) {
            (Index::Vastavic, Index::Vastavic) => Ok(Index::Vastavic),
            (Index::Calpanic, Index::Calpanic) => Ok(Index::Calpanic),
            _ => Err(Error::MixedIndexDivision),
        }
    }

    /// The modulus leaves the index untouched.
    pub fn abs(self) -> Index {
        self
    }

    pub fn symbol(self) -> char {
        match self {
            Index::Vastavic => '↑',
            Index::Calpanic => '↓',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Index::Vastavic => "up",
            Index::Calpanic => "down",
        }
    }
}

impl Mul for Index {
    type Output = Index;

    fn mul(self, rhs: Index) -> Index {
        self.product(rhs)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Index {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "up" | "↑" => Ok(Index::Vastavic),
            "down" | "↓" => Ok(Index::Calpanic),
            other => Err(format!("unknown index {other:?}")),
        }
    }
}

//! Exact arithmetic for indexed complex numbers and complete numbers.
//!
//! Ordinary complex numbers carry the Vastavic index `↑`. Dividing one by an
//! exact zero moves it to the Calpanic index `↓`, and a complete number
//! `Ψ = ↑A + ↓B` pairs one part of each. The crate provides the exact
//! scalar layer ([`exact`]), the index calculus ([`index`]), the number
//! system itself ([`algebra`]), a seeded law checker ([`laws`]) and a small
//! expression language ([`expr`]).
//!
//! ```
//! use complete_numbers::{expr::evaluate, Mode};
//!
//! let v = evaluate("1/0", Mode::Strict).unwrap();
//! assert_eq!(v.to_string(), "down(1)");
//! ```

pub mod algebra;
pub mod error;
pub mod exact;
pub mod expr;
pub mod index;
pub mod laws;

pub use algebra::{BinaryOp, CompleteNumber, EvalValue, IndexedComplex, Mode};
pub use error::{Error, Result};
pub use exact::{Complex, Radical, Rational};
pub use index::Index;

//! Indexed complex numbers, complete numbers and the division-by-zero
//! transitions between the two index tiers.
//!
//! Values live on two layers. A *pure* value is a single complex number with
//! an index (`↑z` or `↓z`); the zero-division rules only fire here, because
//! embedding into a complete number merges `↑0` and `↓0`. A *full* value is a
//! complete number `Ψ = ↑A + ↓B` and only ever divides through the part-sum.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Complex, Radical};
use crate::index::Index;

/// How `↑0 ÷ ↑z` (z ≠ 0) evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `↑0 ÷ ↑z` is a void quantity.
    #[default]
    Strict,
    /// `↑0 ÷ ↑z = ↑0`, keeping same-index division linear.
    Lenient,
}

impl Mode {
    pub fn toggled(self) -> Mode {
        match self {
            Mode::Strict => Mode::Lenient,
            Mode::Lenient => Mode::Strict,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Mode::Strict => "strict",
            Mode::Lenient => "lenient",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "lenient" => Ok(Mode::Lenient),
            other => Err(format!("unknown mode {other:?}, expected strict or lenient")),
        }
    }
}

/// A complex number carrying an index, `↑C(x,y)` or `↓C(x,y)`.
///
/// `↑0` and `↓0` are different values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedComplex {
    pub index: Index,
    pub value: Complex,
}

impl IndexedComplex {
    pub fn new(index: Index, value: Complex) -> Self {
        IndexedComplex { index, value }
    }

    pub fn up(value: Complex) -> Self {
        IndexedComplex::new(Index::Vastavic, value)
    }

    pub fn down(value: Complex) -> Self {
        IndexedComplex::new(Index::Calpanic, value)
    }

    /// Places the payload in the part matching its index. Loses the
    /// distinction between `↑0` and `↓0`.
    pub fn embed(&self) -> CompleteNumber {
        match self.index {
            Index::Vastavic => CompleteNumber::new(self.value.clone(), Complex::zero()),
            Index::Calpanic => CompleteNumber::new(Complex::zero(), self.value.clone()),
        }
    }

    pub fn retag(&self, index: Index) -> IndexedComplex {
        IndexedComplex::new(index, self.value.clone())
    }

    /// `|↑z| = ↑|z|`: the index survives the modulus.
    pub fn modulus(&self) -> (Index, Radical) {
        (self.index.abs(), self.value.modulus())
    }

    /// Same-index product; mixed-index products need the complete-number
    /// expansion and go through [`CompleteNumber`].
    fn same_index_mul(&self, rhs: &IndexedComplex) -> IndexedComplex {
        IndexedComplex::new(self.index * rhs.index, &self.value * &rhs.value)
    }

    /// Division between pure values of the same index, including the
    /// zero-division transitions.
    ///
    /// Dispatch order:
    /// 1. `↑z ÷ ↑0` with `z ≠ 0` demotes to `↓z`.
    /// 2. `↑0 ÷ ↑0` is void.
    /// 3. `↓z ÷ ↓0` is void for every `z`.
    /// 4. `↓0 ÷ ↓z` with `z ≠ 0` promotes to `↑(1/z)`.
    /// 5. `↑0 ÷ ↑z` with `z ≠ 0` is void in strict mode, `↑0` in lenient mode.
    /// 6. Otherwise the index divides by itself and the payloads divide.
    pub fn special_div(&self, rhs: &IndexedComplex, mode: Mode) -> Result<EvalValue> {
        use Index::{Calpanic, Vastavic};

        if self.index != rhs.index {
            return Err(Error::MixedIndexDivision);
        }
        let (n, d) = (&self.value, &rhs.value);
        let value = match (self.index, n.is_zero(), d.is_zero()) {
            (Vastavic, false, true) => EvalValue::Pure(IndexedComplex::down(n.clone())),
            (Vastavic, true, true) => EvalValue::Void,
            (Calpanic, _, true) => EvalValue::Void,
            (Calpanic, true, false) => {
                EvalValue::Pure(IndexedComplex::up(Complex::one().checked_div(d)?))
            }
            (Vastavic, true, false) => match mode {
                Mode::Strict => EvalValue::Void,
                Mode::Lenient => EvalValue::Pure(IndexedComplex::up(Complex::zero())),
            },
            (_, false, false) => EvalValue::Pure(IndexedComplex::new(
                self.index.checked_div(rhs.index)?,
                n.checked_div(d)?,
            )),
        };
        Ok(value)
    }
}

/// Same index stays pure; mixed indices form a complete number.
impl Add for &IndexedComplex {
    type Output = EvalValue;

    fn add(self, rhs: &IndexedComplex) -> EvalValue {
        if self.index == rhs.index {
            EvalValue::Pure(IndexedComplex::new(self.index, &self.value + &rhs.value))
        } else {
            EvalValue::Full(&self.embed() + &rhs.embed())
        }
    }
}

impl From<IndexedComplex> for CompleteNumber {
    fn from(v: IndexedComplex) -> Self {
        v.embed()
    }
}

impl fmt::Display for IndexedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.index, self.value)
    }
}

/// A complete number `Ψ = ↑vast + ↓calp`. Equality is part-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CompleteNumber {
    /// The Vastavic part.
    pub vast: Complex,
    /// The Calpanic part.
    pub calp: Complex,
}

impl CompleteNumber {
    pub fn new(vast: Complex, calp: Complex) -> Self {
        CompleteNumber { vast, calp }
    }

    pub fn zero() -> Self {
        CompleteNumber::default()
    }

    pub fn part(&self, index: Index) -> &Complex {
        match index {
            Index::Vastavic => &self.vast,
            Index::Calpanic => &self.calp,
        }
    }

    fn part_mut(&mut self, index: Index) -> &mut Complex {
        match index {
            Index::Vastavic => &mut self.vast,
            Index::Calpanic => &mut self.calp,
        }
    }

    /// The part-sum `vast + calp`.
    pub fn shadow(&self) -> Complex {
        &self.vast + &self.calp
    }

    /// The product written out as four index-tagged terms, each term's index
    /// taken from the index multiplication table. `Mul` computes the same
    /// value in factored form.
    pub fn expanded_mul(&self, rhs: &CompleteNumber) -> CompleteNumber {
        let mut out = CompleteNumber::zero();
        for left in Index::ALL {
            for right in Index::ALL {
                let term = self.part(left) * rhs.part(right);
                let slot = out.part_mut(left * right);
                *slot = &*slot + &term;
            }
        }
        out
    }

    /// `Ψ1 ÷ Ψ2`, the unique `Ψ3` with `Ψ2 × Ψ3 = Ψ1`: both parts of the
    /// dividend are divided by the divisor's part-sum.
    pub fn checked_div(&self, rhs: &CompleteNumber) -> Result<CompleteNumber> {
        let s = rhs.shadow();
        if s.is_zero() {
            return Err(Error::SingularDenominator);
        }
        Ok(CompleteNumber::new(
            self.vast.checked_div(&s)?,
            self.calp.checked_div(&s)?,
        ))
    }

    /// The single-index view of this number, if one part is zero. Prefers
    /// `↑` when both are zero. Display only.
    pub fn purify(&self) -> Option<IndexedComplex> {
        if self.calp.is_zero() {
            Some(IndexedComplex::up(self.vast.clone()))
        } else if self.vast.is_zero() {
            Some(IndexedComplex::down(self.calp.clone()))
        } else {
            None
        }
    }
}

impl Add for &CompleteNumber {
    type Output = CompleteNumber;
    fn add(self, rhs: &CompleteNumber) -> CompleteNumber {
        CompleteNumber::new(&self.vast + &rhs.vast, &self.calp + &rhs.calp)
    }
}

impl Sub for &CompleteNumber {
    type Output = CompleteNumber;
    fn sub(self, rhs: &CompleteNumber) -> CompleteNumber {
        CompleteNumber::new(&self.vast - &rhs.vast, &self.calp - &rhs.calp)
    }
}

/// `Ψ1 × Ψ2 = ↑(s1·A2) + ↓(s1·B2)` where `s1` is the left operand's part-sum.
impl Mul for &CompleteNumber {
    type Output = CompleteNumber;
    fn mul(self, rhs: &CompleteNumber) -> CompleteNumber {
        let s = self.shadow();
        CompleteNumber::new(&s * &rhs.vast, &s * &rhs.calp)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CompleteNumber {
            type Output = CompleteNumber;
            fn $method(self, rhs: CompleteNumber) -> CompleteNumber {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for CompleteNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "up({}) + down({})", self.vast, self.calp)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// The result of evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EvalValue {
    Pure(IndexedComplex),
    Full(CompleteNumber),
    /// A void quantity. Absorbs every operation it takes part in.
    Void,
}

impl EvalValue {
    pub fn is_void(&self) -> bool {
        matches!(self, EvalValue::Void)
    }

    /// Combines two values. Pure operands with a shared index use the
    /// indexed rules (including the zero-division transitions); anything
    /// else is embedded and handled as complete numbers.
    pub fn apply(&self, op: BinaryOp, rhs: &EvalValue, mode: Mode) -> Result<EvalValue> {
        let (a, b) = match (self, rhs) {
            (EvalValue::Void, _) | (_, EvalValue::Void) => return Ok(EvalValue::Void),
            (EvalValue::Pure(a), EvalValue::Pure(b)) if a.index == b.index => {
                return Ok(match op {
                    BinaryOp::Add => a + b,
                    BinaryOp::Sub => EvalValue::Pure(IndexedComplex::new(
                        a.index,
                        &a.value - &b.value,
                    )),
                    BinaryOp::Mul => EvalValue::Pure(a.same_index_mul(b)),
                    BinaryOp::Div => a.special_div(b, mode)?,
                });
            }
            (a, b) => (a.to_complete(), b.to_complete()),
        };
        let (a, b) = (a.expect("non-void"), b.expect("non-void"));
        Ok(EvalValue::Full(match op {
            BinaryOp::Add => &a + &b,
            BinaryOp::Sub => &a - &b,
            BinaryOp::Mul => &a * &b,
            BinaryOp::Div => a.checked_div(&b)?,
        }))
    }

    /// Embeds a pure value; `None` for void.
    pub fn to_complete(&self) -> Option<CompleteNumber> {
        match self {
            EvalValue::Pure(v) => Some(v.embed()),
            EvalValue::Full(v) => Some(v.clone()),
            EvalValue::Void => None,
        }
    }

    /// Index-preserving negation.
    pub fn negate(&self) -> EvalValue {
        match self {
            EvalValue::Pure(v) => EvalValue::Pure(IndexedComplex::new(v.index, -&v.value)),
            EvalValue::Full(v) => EvalValue::Full(CompleteNumber::new(-&v.vast, -&v.calp)),
            EvalValue::Void => EvalValue::Void,
        }
    }

    /// Display-only simplification of a full value with a zero part.
    pub fn purified(&self) -> EvalValue {
        match self {
            EvalValue::Full(v) => v.purify().map_or_else(|| self.clone(), EvalValue::Pure),
            other => other.clone(),
        }
    }
}

impl Neg for &EvalValue {
    type Output = EvalValue;
    fn neg(self) -> EvalValue {
        self.negate()
    }
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalValue::Pure(v) => v.fmt(f),
            EvalValue::Full(v) => v.fmt(f),
            EvalValue::Void => f.write_str("void"),
        }
    }
}

use crate::algebra::{BinaryOp, EvalValue, IndexedComplex, Mode};
use crate::error::{Error, Result};
use crate::exact::Complex;
use crate::index::Index;

use super::parse::Expr;

pub fn eval(expr: &Expr, mode: Mode) -> Result<EvalValue> {
    let binary = |op, l: &Expr, r: &Expr| -> Result<EvalValue> {
        let l = eval(l, mode)?;
        let r = eval(r, mode)?;
        l.apply(op, &r, mode)
    };

    match expr {
        Expr::Number(r) => Ok(EvalValue::Pure(IndexedComplex::up(Complex::from(r.clone())))),
        Expr::ImagUnit => Ok(EvalValue::Pure(IndexedComplex::up(Complex::i()))),
        Expr::Up(inner) => retag(eval(inner, mode)?, Index::Vastavic),
        Expr::Down(inner) => retag(eval(inner, mode)?, Index::Calpanic),
        Expr::Abs(inner) => match eval(inner, mode)? {
            EvalValue::Pure(v) => {
                let (index, radical) = v.modulus();
                let root = radical.exact_root().ok_or_else(|| Error::IrrationalModulus {
                    radicand: radical.radicand().to_string(),
                })?;
                Ok(EvalValue::Pure(IndexedComplex::new(index, root.clone().into())))
            }
            EvalValue::Full(_) => Err(Error::ModulusOfFull),
            EvalValue::Void => Ok(EvalValue::Void),
        },
        Expr::Neg(inner) => Ok(eval(inner, mode)?.negate()),
        Expr::Add(l, r) => binary(BinaryOp::Add, l, r),
        Expr::Sub(l, r) => binary(BinaryOp::Sub, l, r),
        Expr::Mul(l, r) => binary(BinaryOp::Mul, l, r),
        Expr::Div(l, r) => binary(BinaryOp::Div, l, r),
    }
}

fn retag(value: EvalValue, index: Index) -> Result<EvalValue> {
    match value {
        EvalValue::Pure(v) => Ok(EvalValue::Pure(v.retag(index))),
        EvalValue::Full(_) => Err(Error::RetagOfFull),
        EvalValue::Void => Ok(EvalValue::Void),
    }
}

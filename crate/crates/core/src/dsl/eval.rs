//! Evaluation of syntax trees to motivic expressions.

use num_traits::Signed;

use crate::lefschetz::LefschetzClass;
use crate::motive::{bg, bpin, bspin, class_g2, class_gl, class_sl, class_spin, MotiveExpr};

use super::ast::{ExprAst, Func};
use super::DslError;

/// Largest exponent magnitude accepted by `^`.
pub const MAX_EXPONENT: i64 = 4096;
/// Largest group index accepted by the class and tower functions.
pub const MAX_INDEX: i64 = 64;
/// Largest cyclotomic index.
pub const MAX_CYCLOTOMIC: i64 = 4096;
/// Bound on the estimated bit size of a power of a non-unit factor.
const MAX_POWER_SIZE: u64 = 1 << 22;

pub fn eval(ast: &ExprAst) -> Result<MotiveExpr, DslError> {
    match ast {
        ExprAst::Int(n) => Ok(MotiveExpr::scalar(LefschetzClass::from_bigint(n.clone()))),
        ExprAst::L => Ok(MotiveExpr::scalar(LefschetzClass::l())),
        ExprAst::Neg(a) => Ok(-&eval(a)?),
        ExprAst::Add(a, b) => Ok(&eval(a)? + &eval(b)?),
        ExprAst::Sub(a, b) => Ok(&eval(a)? - &eval(b)?),
        ExprAst::Mul(a, b) => Ok(eval(a)?.mul(&eval(b)?)?),
        ExprAst::Div(a, b) => {
            let num = eval(a)?;
            let den = eval(b)?;
            Ok(num.scale(&invert(&den)?))
        }
        ExprAst::Pow(base, k) => power(&eval(base)?, *k),
        ExprAst::Call(func, args) => call(*func, args),
    }
}

fn invert(e: &MotiveExpr) -> Result<LefschetzClass, DslError> {
    let c = e.as_scalar().ok_or_else(|| DslError::NotAUnit(e.to_string()))?;
    c.inv().map_err(|_| DslError::NotAUnit(c.to_string()))
}

fn power(base: &MotiveExpr, k: i64) -> Result<MotiveExpr, DslError> {
    if k.abs() > MAX_EXPONENT {
        return Err(DslError::Limit(format!("exponent {k} exceeds {MAX_EXPONENT} in magnitude")));
    }
    let Some(c) = base.as_scalar() else {
        return match k {
            0 => Ok(MotiveExpr::one()),
            1 => Ok(base.clone()),
            _ => Err(crate::motive::MotiveError::NonLinear.into()),
        };
    };
    let c = if k < 0 { invert(base)? } else { c.clone() };
    let core = c.core();
    let bits = core.coeffs().iter().map(|x| x.abs().bits()).max().unwrap_or(0);
    let k_abs = k.unsigned_abs();
    let size = (core.degree() as u64 * k_abs + 1) * (bits + 1) * k_abs;
    if !core.is_unit() && size > MAX_POWER_SIZE {
        return Err(DslError::Limit(format!("power of {c} to {k} is too large")));
    }
    Ok(MotiveExpr::scalar(c.pow(k.abs())?))
}

fn index(func: Func, n: i64, min: i64, max: i64) -> Result<u32, DslError> {
    if n < min {
        return Err(DslError::Motive(crate::motive::MotiveError::Domain(format!(
            "{}({n}) needs an argument >= {min}",
            func.name()
        ))));
    }
    if n > max {
        return Err(DslError::Limit(format!("{}({n}) exceeds the argument cap {max}", func.name())));
    }
    Ok(n as u32)
}

fn call(func: Func, args: &[i64]) -> Result<MotiveExpr, DslError> {
    let scalar = |c: LefschetzClass| Ok(MotiveExpr::scalar(c));
    match func {
        Func::Gl => scalar(class_gl(index(func, args[0], 1, MAX_INDEX)?)),
        Func::Sl => scalar(class_sl(index(func, args[0], 1, MAX_INDEX)?)),
        Func::Spin => scalar(class_spin(index(func, args[0], 2, MAX_INDEX)?)),
        Func::G2 => scalar(class_g2()),
        Func::BSpin => Ok(bspin(index(func, args[0], 1, MAX_INDEX)?)?),
        Func::BPin => Ok(bpin(index(func, args[0], 0, MAX_INDEX)?)?),
        Func::BDelta => Ok(MotiveExpr::atom(index(func, args[0], 1, MAX_INDEX)?)),
        Func::Cyclo => scalar(LefschetzClass::cyclotomic(index(func, args[0], 1, MAX_CYCLOTOMIC)? as u64)),
        Func::Bg => {
            let n = index(func, args[0], 1, MAX_INDEX)?;
            let r = index(func, args[1], 1, MAX_INDEX)?;
            Ok(bg(n, r)?)
        }
    }
}

//! A small expression language over Lefschetz classes and `BΔ` atoms.
//!
//! Expressions parse to an [`ExprAst`], evaluate to a [`MotiveExpr`], and
//! render back through `MotiveExpr`'s `Display`, whose output is again a
//! valid expression.
//!
//! ```
//! use bspin_core::dsl::{evaluate, render};
//!
//! let g2 = evaluate("G2() * L^-6 * (L^6-1)^-1 * (L^2-1)^-1").unwrap();
//! assert_eq!(render(&g2), "1");
//! ```

mod ast;
mod eval;
mod lexer;
mod parser;

use thiserror::Error;

use crate::lefschetz::RingError;
use crate::motive::{MotiveError, MotiveExpr};

pub use ast::{ExprAst, Func};
pub use eval::{eval, MAX_CYCLOTOMIC, MAX_EXPONENT, MAX_INDEX};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_bytes, MAX_DEPTH};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at byte {offset}: expected {}", .expected.join(" or "))]
    Parse { offset: usize, expected: Vec<String> },
    #[error("unknown identifier '{name}' at byte {offset}")]
    UnknownIdent { name: String, offset: usize },
    #[error("{name} takes {expected} argument(s), found {found} (byte {offset})")]
    Arity { name: String, expected: usize, found: usize, offset: usize },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

impl From<RingError> for DslError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::NotAUnit(s) => DslError::NotAUnit(s),
            other => DslError::Motive(MotiveError::Ring(other)),
        }
    }
}

/// Parse and evaluate.
pub fn evaluate(input: &str) -> Result<MotiveExpr, DslError> {
    eval(&parse(input)?)
}

pub fn render(e: &MotiveExpr) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::LefschetzClass;

    fn ev(s: &str) -> MotiveExpr {
        evaluate(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn g2_normalizes_to_one() {
        assert_eq!(ev("G2() * L^-6 * (L^6-1)^-1 * (L^2-1)^-1"), MotiveExpr::one());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(ev("2+3*L"), ev("2+(3*L)"));
        assert_eq!(ev("(L^2-1)/(L-1)"), ev("L+1"));
        assert_eq!(render(&ev("2*L^2+L-1")), "(2*L-1) * (L+1)");
        assert_eq!(ev("GL(1)"), ev("L-1"));
        assert_eq!(ev("SL(2) * (L-1)"), ev("GL(2)"));
        assert_eq!(ev("cyclo(6)"), ev("L^2-L+1"));
        assert_eq!(ev("L^0"), MotiveExpr::one());
    }

    #[test]
    fn atoms() {
        let e = ev("2*BDelta(3) - BDelta(3) + L");
        assert_eq!(e.coeff(3), LefschetzClass::one());
        assert_eq!(render(&e), "(L) + BDelta(3)");
        assert_eq!(ev("BDelta(2)^1"), ev("BDelta(2)"));
        assert_eq!(ev("BDelta(2)^0"), MotiveExpr::one());
        assert_eq!(evaluate("BDelta(2)*BDelta(3)"), Err(DslError::Motive(MotiveError::NonLinear)));
        assert_eq!(evaluate("BDelta(2)^2"), Err(DslError::Motive(MotiveError::NonLinear)));
    }

    #[test]
    fn non_units_are_rejected() {
        assert!(matches!(evaluate("1/(L+2)"), Err(DslError::NotAUnit(_))));
        assert!(matches!(evaluate("(L+2)^-1"), Err(DslError::NotAUnit(_))));
        assert!(matches!(evaluate("1/BDelta(2)"), Err(DslError::NotAUnit(_))));
        assert!(matches!(evaluate("1/0"), Err(DslError::NotAUnit(_))));
        assert!(matches!(evaluate("2^-1"), Err(DslError::NotAUnit(_))));
    }

    #[test]
    fn domains_and_limits() {
        assert!(matches!(evaluate("GL(0)"), Err(DslError::Motive(MotiveError::Domain(_)))));
        assert!(matches!(evaluate("Spin(1)"), Err(DslError::Motive(MotiveError::Domain(_)))));
        assert!(matches!(evaluate("BDelta(0)"), Err(DslError::Motive(MotiveError::Domain(_)))));
        assert!(matches!(evaluate("BSpin(0)"), Err(DslError::Motive(MotiveError::Domain(_)))));
        assert!(matches!(evaluate("BG(3, 4)"), Err(DslError::Motive(MotiveError::Domain(_)))));
        assert!(matches!(evaluate("GL(65)"), Err(DslError::Limit(_))));
        assert!(matches!(evaluate("L^5000"), Err(DslError::Limit(_))));
        assert!(matches!(evaluate("(L+2)^4096"), Err(DslError::Limit(_))));
        assert!(evaluate("L^4096").is_ok());
    }

    #[test]
    fn rendered_forms_parse_back() {
        for s in ["BSpin(7)", "BPin(5)", "G2()", "Spin(8)", "BG(6, 2)", "cyclo(7)", "(L+2)/(L+1)^2", "-L^-3"] {
            let e = ev(s);
            assert_eq!(ev(&render(&e)), e, "{s} renders as {}", render(&e));
        }
    }
}

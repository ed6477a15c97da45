//! The expression tree.

use std::fmt;

use num_bigint::BigInt;

/// Registered functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Gl,
    Sl,
    Spin,
    G2,
    BSpin,
    BPin,
    BDelta,
    Cyclo,
    Bg,
}

impl Func {
    pub const ALL: [Func; 9] =
        [Func::Gl, Func::Sl, Func::Spin, Func::G2, Func::BSpin, Func::BPin, Func::BDelta, Func::Cyclo, Func::Bg];

    pub fn lookup(name: &str) -> Option<Func> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Gl => "GL",
            Func::Sl => "SL",
            Func::Spin => "Spin",
            Func::G2 => "G2",
            Func::BSpin => "BSpin",
            Func::BPin => "BPin",
            Func::BDelta => "BDelta",
            Func::Cyclo => "cyclo",
            Func::Bg => "BG",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::G2 => 0,
            Func::Bg => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    L,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Call(Func, Vec<i64>),
}

/// Fully parenthesized form, mainly for diagnostics.
impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Int(n) => write!(f, "{n}"),
            ExprAst::L => write!(f, "L"),
            ExprAst::Neg(a) => write!(f, "(-{a})"),
            ExprAst::Add(a, b) => write!(f, "({a} + {b})"),
            ExprAst::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprAst::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprAst::Div(a, b) => write!(f, "({a} / {b})"),
            ExprAst::Pow(a, k) => write!(f, "({a}^{k})"),
            ExprAst::Call(func, args) => {
                let args: Vec<String> = args.iter().map(i64::to_string).collect();
                write!(f, "{}({})", func.name(), args.join(", "))
            }
        }
    }
}

//! Recursive-descent parser.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | factor
//! factor := atom ("^" signed_int)?
//! atom   := "L" | integer | "(" expr ")" | ident "(" int_args ")"
//! ```

use num_bigint::BigInt;

use super::ast::{ExprAst, Func};
use super::lexer::{tokenize, Token, TokenKind};
use super::DslError;

/// Maximum depth of the syntax tree. Parentheses, unary minus and every
/// operator in a left-associative chain each count one level.
pub const MAX_DEPTH: usize = 256;

const ATOM_START: &[&str] = &["integer", "L", "identifier", "\"(\"", "\"-\""];

pub fn parse(input: &str) -> Result<ExprAst, DslError> {
    let mut p = Parser { tokens: tokenize(input), pos: 0, depth: 0 };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse raw bytes; invalid UTF-8 is a parse error at the first bad byte.
pub fn parse_bytes(input: &[u8]) -> Result<ExprAst, DslError> {
    match std::str::from_utf8(input) {
        Ok(s) => parse(s),
        Err(e) => Err(DslError::Parse { offset: e.valid_up_to(), expected: vec!["valid UTF-8".into()] }),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

fn error(offset: usize, expected: &[&str]) -> DslError {
    DslError::Parse { offset, expected: expected.iter().map(|s| s.to_string()).collect() }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn enter(&mut self) -> Result<(), DslError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(error(self.peek().offset, &["nesting depth at most 256"]));
        }
        Ok(())
    }

    fn expect_end(&self) -> Result<(), DslError> {
        let t = self.peek();
        if t.kind == TokenKind::End {
            Ok(())
        } else {
            Err(error(t.offset, &["\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\"", "end of input"]))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, DslError> {
        let saved = self.depth;
        let result = self.expr_chain();
        self.depth = saved;
        result
    }

    fn expr_chain(&mut self) -> Result<ExprAst, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = self.peek().kind.clone();
            match op {
                TokenKind::Plus | TokenKind::Minus => {
                    self.bump();
                    self.enter()?;
                    let rhs = self.term()?;
                    lhs = if op == TokenKind::Plus {
                        ExprAst::Add(Box::new(lhs), Box::new(rhs))
                    } else {
                        ExprAst::Sub(Box::new(lhs), Box::new(rhs))
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, DslError> {
        let saved = self.depth;
        let result = self.term_chain();
        self.depth = saved;
        result
    }

    fn term_chain(&mut self) -> Result<ExprAst, DslError> {
        let mut lhs = self.unary()?;
        loop {
            let op = self.peek().kind.clone();
            match op {
                TokenKind::Star | TokenKind::Slash => {
                    self.bump();
                    self.enter()?;
                    let rhs = self.unary()?;
                    lhs = if op == TokenKind::Star {
                        ExprAst::Mul(Box::new(lhs), Box::new(rhs))
                    } else {
                        ExprAst::Div(Box::new(lhs), Box::new(rhs))
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<ExprAst, DslError> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            self.enter()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<ExprAst, DslError> {
        let base = self.atom()?;
        if self.peek().kind == TokenKind::Caret {
            self.bump();
            let k = self.signed_int(&["integer", "\"-\""])?;
            return Ok(ExprAst::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    /// An optionally negated integer literal that fits in an `i64`.
    fn signed_int(&mut self, expected: &[&str]) -> Result<i64, DslError> {
        let start = self.peek().offset;
        let negative = self.peek().kind == TokenKind::Minus;
        if negative {
            self.bump();
        }
        let t = self.bump();
        let TokenKind::Int(digits) = t.kind else {
            return Err(error(t.offset, if negative { &["integer"] } else { expected }));
        };
        let text = if negative { format!("-{digits}") } else { digits };
        text.parse::<i64>().map_err(|_| error(start, &["integer that fits in 64 bits"]))
    }

    fn atom(&mut self) -> Result<ExprAst, DslError> {
        let t = self.bump();
        match t.kind {
            TokenKind::Int(digits) => {
                Ok(ExprAst::Int(digits.parse::<BigInt>().expect("lexer yields decimal digits")))
            }
            TokenKind::LParen => {
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                let close = self.bump();
                if close.kind != TokenKind::RParen {
                    return Err(error(close.offset, &["\"+\"", "\"-\"", "\"*\"", "\"/\"", "\"^\"", "\")\""]));
                }
                Ok(inner)
            }
            TokenKind::Ident(name) if name == "L" => Ok(ExprAst::L),
            TokenKind::Ident(name) => {
                let func = Func::lookup(&name).ok_or(DslError::UnknownIdent { name, offset: t.offset })?;
                self.call(func, t.offset)
            }
            _ => Err(error(t.offset, ATOM_START)),
        }
    }

    fn call(&mut self, func: Func, offset: usize) -> Result<ExprAst, DslError> {
        let open = self.bump();
        if open.kind != TokenKind::LParen {
            return Err(error(open.offset, &["\"(\""]));
        }
        let arity = func.arity();
        let mut args = Vec::new();
        if self.peek().kind != TokenKind::RParen {
            loop {
                let expected: &[&str] = &["integer", "\"-\""];
                args.push(self.signed_int(expected)?);
                let t = self.bump();
                match t.kind {
                    TokenKind::Comma => continue,
                    TokenKind::RParen => break,
                    _ if args.len() < arity => return Err(error(t.offset, &["\",\""])),
                    _ => return Err(error(t.offset, &["\")\""])),
                }
            }
        } else {
            self.bump();
        }
        if args.len() != arity {
            return Err(DslError::Arity { name: func.name().into(), expected: arity, found: args.len(), offset });
        }
        Ok(ExprAst::Call(func, args))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(s: &str) -> (usize, Vec<String>) {
        match parse(s) {
            Err(DslError::Parse { offset, expected }) => (offset, expected),
            other => panic!("expected a parse error for {s:?}, got {other:?}"),
        }
    }

    #[test]
    fn unclosed_call_reports_offset_and_paren() {
        assert_eq!(parse_err("Spin(7"), (6, vec!["\")\"".to_string()]));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("2+3*L").unwrap(), parse("2+(3*L)").unwrap());
        assert_eq!(parse("-L^2").unwrap(), ExprAst::Neg(Box::new(ExprAst::Pow(Box::new(ExprAst::L), 2))));
        assert_eq!(parse("1-2-3").unwrap().to_string(), "((1 - 2) - 3)");
        assert_eq!(parse("L^-6").unwrap(), ExprAst::Pow(Box::new(ExprAst::L), -6));
    }

    #[test]
    fn calls_and_arity() {
        assert_eq!(parse("BG(4, 2)").unwrap(), ExprAst::Call(Func::Bg, vec![4, 2]));
        assert_eq!(parse("G2()").unwrap(), ExprAst::Call(Func::G2, vec![]));
        assert_eq!(parse("GL(-1)").unwrap(), ExprAst::Call(Func::Gl, vec![-1]));
        assert!(matches!(parse("BG(4)"), Err(DslError::Arity { expected: 2, found: 1, .. })));
        assert!(matches!(parse("G2(1)"), Err(DslError::Arity { expected: 0, found: 1, .. })));
        assert!(matches!(parse("Foo(1)"), Err(DslError::UnknownIdent { offset: 0, .. })));
        assert_eq!(parse_err("BG(4 2)"), (5, vec!["\",\"".to_string()]));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_err("").0, 0);
        assert_eq!(parse_err("1+").0, 2);
        assert_eq!(parse_err("(1").0, 2);
        assert_eq!(parse_err("1 2").0, 2);
        assert_eq!(parse_err("L^x").0, 2);
        assert_eq!(parse_err("2 # 3").0, 2);
        assert_eq!(parse_err("L^99999999999999999999").0, 2);
        assert_eq!(parse_bytes(b"1+\xff"), Err(DslError::Parse { offset: 2, expected: vec!["valid UTF-8".into()] }));
    }

    #[test]
    fn depth_is_capped() {
        let deep = format!("{}1{}", "(".repeat(300), ")".repeat(300));
        assert!(matches!(parse(&deep), Err(DslError::Parse { .. })));
        let ok = format!("{}1{}", "(".repeat(200), ")".repeat(200));
        assert!(parse(&ok).is_ok());
        assert!(parse(&"-".repeat(5000)).is_err());
        assert!(parse(&vec!["1"; 300].join("+")).is_err());
        assert!(parse(&vec!["L"; 200].join("*")).is_ok());
    }
}

//! Tokens with byte offsets.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Invalid(char),
    End,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Int(s) => format!("integer {s}"),
            TokenKind::Ident(s) => format!("identifier {s}"),
            TokenKind::Plus => "\"+\"".into(),
            TokenKind::Minus => "\"-\"".into(),
            TokenKind::Star => "\"*\"".into(),
            TokenKind::Slash => "\"/\"".into(),
            TokenKind::Caret => "\"^\"".into(),
            TokenKind::LParen => "\"(\"".into(),
            TokenKind::RParen => "\")\"".into(),
            TokenKind::Comma => "\",\"".into(),
            TokenKind::Invalid(c) => format!("character {c:?}"),
            TokenKind::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
}

/// Split `input` into tokens, ending with [`TokenKind::End`]. Characters
/// outside the grammar become [`TokenKind::Invalid`] so the parser can
/// report them with its expected set.
pub fn tokenize(input: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_ascii_whitespace() {
            chars.next();
            continue;
        }
        let kind = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
            }
            tokens.push(Token { kind: TokenKind::Int(s), offset });
            continue;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                chars.next();
            }
            tokens.push(Token { kind: TokenKind::Ident(s), offset });
            continue;
        } else {
            match c {
                '+' => TokenKind::Plus,
                '-' => TokenKind::Minus,
                '*' => TokenKind::Star,
                '/' => TokenKind::Slash,
                '^' => TokenKind::Caret,
                '(' => TokenKind::LParen,
                ')' => TokenKind::RParen,
                ',' => TokenKind::Comma,
                other => TokenKind::Invalid(other),
            }
        };
        chars.next();
        tokens.push(Token { kind, offset });
    }
    tokens.push(Token { kind: TokenKind::End, offset: input.len() });
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_are_bytes() {
        let toks = tokenize("Spin(7");
        assert_eq!(toks[0], Token { kind: TokenKind::Ident("Spin".into()), offset: 0 });
        assert_eq!(toks[2], Token { kind: TokenKind::Int("7".into()), offset: 5 });
        assert_eq!(toks[3], Token { kind: TokenKind::End, offset: 6 });
        let toks = tokenize("λ+1");
        assert_eq!(toks[0].kind, TokenKind::Invalid('λ'));
        assert_eq!(toks[1].offset, 2);
    }
}

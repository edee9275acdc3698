//! Expression lexer and parser.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! expr  := div (('+' | '-') div)*
//! div   := mul ('/' mul)*        division binds looser than any product
//! unary := '-' unary | pow
//! mul   := unary ('*'? unary)*   the '*' may be omitted before a number,
//!                                name, or '(' — adjacency is multiplication
//! pow   := atom ('^' '-'* pow)?  right-associative
//! atom  := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//! ```
//!
//! Multiplication, written or implied, binds tighter than division: `1/2e1`
//! is `1/(2 e1)` and `a/b*c` is `a/(b*c)`; chained divisions group left.
//!
//! Scientific notation requires a signed exponent: `1e-7` and `2.5e+3` are
//! single numbers, while `2e1` is the product `2 * e1` (the number 2 times
//! the basis vector). This keeps basis names unambiguous.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("malformed number at byte {pos}")]
    BadNumber { pos: usize },
    #[error("number literal at byte {pos} overflows to a non-finite value")]
    NonFiniteLiteral { pos: usize },
    #[error("unexpected {found} at byte {pos}")]
    UnexpectedToken { found: String, pos: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("trailing input at byte {pos}")]
    TrailingInput { pos: usize },
    #[error("expression nests deeper than {0} levels")]
    TooDeep(usize),
}

const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Num(x) => format!("number {x}"),
            Token::Ident(s) => format!("name {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Comma => "','".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Token::Num(_) | Token::Ident(_) | Token::LParen)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

pub fn lex(src: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                out.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Token::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Token::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Token::Comma, i));
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                // A signed exponent belongs to the number; `2e1` does not.
                if i + 2 < bytes.len()
                    && (bytes[i] == b'e' || bytes[i] == b'E')
                    && (bytes[i + 1] == b'+' || bytes[i + 1] == b'-')
                    && bytes[i + 2].is_ascii_digit()
                {
                    i += 2;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text = &src[start..i];
                let value: f64 = text
                    .parse()
                    .map_err(|_| ParseError::BadNumber { pos: start })?;
                if !value.is_finite() {
                    return Err(ParseError::NonFiniteLiteral { pos: start });
                }
                out.push((Token::Num(value), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Token::Ident(src[start..i].to_owned()), start));
            }
            _ => return Err(ParseError::UnexpectedChar { ch: c, pos: i }),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.at)
            .map(|(_, p)| *p)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Result<Token, ParseError> {
        let t = self
            .tokens
            .get(self.at)
            .map(|(t, _)| t.clone())
            .ok_or(ParseError::UnexpectedEnd)?;
        self.at += 1;
        Ok(t)
    }

    fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        let pos = self.pos();
        let t = self.next()?;
        if &t == want {
            Ok(())
        } else {
            Err(ParseError::UnexpectedToken {
                found: t.describe(),
                pos,
            })
        }
    }

    fn guard(depth: usize) -> Result<usize, ParseError> {
        if depth >= MAX_DEPTH {
            Err(ParseError::TooDeep(MAX_DEPTH))
        } else {
            Ok(depth + 1)
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        let mut lhs = self.div(depth)?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.at += 1;
                    let rhs = self.div(depth)?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.at += 1;
                    let rhs = self.div(depth)?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn div(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        let mut lhs = self.mul(depth)?;
        while self.peek() == Some(&Token::Slash) {
            self.at += 1;
            let rhs = self.mul(depth)?;
            lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn mul(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        let mut lhs = self.unary(depth)?;
        loop {
            if self.peek() == Some(&Token::Star) {
                self.at += 1;
            } else if !self.peek().is_some_and(Token::starts_atom) {
                return Ok(lhs);
            }
            let rhs = self.unary(depth)?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        if self.peek() == Some(&Token::Minus) {
            self.at += 1;
            Ok(Expr::Neg(Box::new(self.unary(depth)?)))
        } else {
            self.pow(depth)
        }
    }

    fn pow(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        let base = self.atom(depth)?;
        if self.peek() == Some(&Token::Caret) {
            self.at += 1;
            let mut negs = 0;
            while self.peek() == Some(&Token::Minus) {
                self.at += 1;
                negs += 1;
            }
            let mut exp = self.pow(depth)?;
            for _ in 0..negs {
                exp = Expr::Neg(Box::new(exp));
            }
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self, depth: usize) -> Result<Expr, ParseError> {
        let depth = Self::guard(depth)?;
        let pos = self.pos();
        match self.next()? {
            Token::Num(x) => Ok(Expr::Num(x)),
            Token::Ident(name) => {
                if self.peek() == Some(&Token::LParen) {
                    self.at += 1;
                    let mut args = vec![self.expr(depth)?];
                    while self.peek() == Some(&Token::Comma) {
                        self.at += 1;
                        args.push(self.expr(depth)?);
                    }
                    self.expect(&Token::RParen)?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            Token::LParen => {
                let inner = self.expr(depth)?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            t => Err(ParseError::UnexpectedToken {
                found: t.describe(),
                pos,
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, at: 0 };
    let e = p.expr(0)?;
    if p.at != p.tokens.len() {
        return Err(ParseError::TrailingInput { pos: p.pos() });
    }
    Ok(e)
}

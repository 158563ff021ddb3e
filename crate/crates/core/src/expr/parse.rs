use crate::error::{Error, Result};
use crate::exact::Rational;

use super::token::{Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    ImagUnit,
    Up(Box<Expr>),
    Down(Box<Expr>),
    Abs(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

/// Parses a complete token stream (as produced by [`super::tokenize`]).
pub fn parse(tokens: &[Token]) -> Result<Expr> {
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.sum()?;
    parser.expect(TokenKind::Eof, "an operator or end of input")?;
    Ok(expr)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        // A stream without EOF still terminates: reuse the last token.
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> &Token {
        let i = self.pos.min(self.tokens.len() - 1);
        self.pos += 1;
        &self.tokens[i]
    }

    fn error(&self, expected: &str) -> Error {
        let tok = self.peek();
        let found = match tok.kind {
            TokenKind::Eof => "end of input".to_owned(),
            _ => format!("{:?}", tok.lexeme),
        };
        Error::Parse {
            position: tok.position,
            expected: expected.to_owned(),
            found,
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<()> {
        if self.peek().kind == kind {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.prod()?;
        loop {
            let ctor = match self.peek().kind {
                TokenKind::Plus => Expr::Add,
                TokenKind::Minus => Expr::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.prod()?;
            lhs = ctor(Box::new(lhs), Box::new(rhs));
        }
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let ctor = match self.peek().kind {
                TokenKind::Star => Expr::Mul,
                TokenKind::Slash => Expr::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = ctor(Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        const EXPECTED: &str = "a number, 'i', 'up', 'down', '(', '|' or '-'";

        match self.peek().kind {
            TokenKind::Up | TokenKind::Down => {
                let up = self.bump().kind == TokenKind::Up;
                self.expect(TokenKind::LParen, "'(' after index")?;
                let inner = Box::new(self.sum()?);
                self.expect(TokenKind::RParen, "')'")?;
                Ok(if up { Expr::Up(inner) } else { Expr::Down(inner) })
            }
            TokenKind::Pipe => {
                self.bump();
                let inner = self.sum()?;
                self.expect(TokenKind::Pipe, "closing '|'")?;
                Ok(Expr::Abs(Box::new(inner)))
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            TokenKind::I => {
                self.bump();
                Ok(Expr::ImagUnit)
            }
            TokenKind::Number => {
                let tok = self.bump();
                let end = tok.end();
                let value = Rational::from_decimal_str(&tok.lexeme).ok_or(Error::Lex {
                    position: tok.position,
                    found: tok.lexeme.chars().next().unwrap_or(' '),
                })?;
                let number = Expr::Number(value);
                let next = self.peek();
                if next.kind == TokenKind::I && next.position == end {
                    self.bump();
                    return Ok(Expr::Mul(Box::new(number), Box::new(Expr::ImagUnit)));
                }
                Ok(number)
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}

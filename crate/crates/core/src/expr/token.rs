use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Number,
    I,
    Up,
    Down,
    Plus,
    Minus,
    Star,
    Slash,
    Pipe,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TokenKind::Number => "number",
            TokenKind::I => "'i'",
            TokenKind::Up => "'up'",
            TokenKind::Down => "'down'",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Pipe => "'|'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Eof => "end of input",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub position: usize,
}

impl Token {
    fn new(kind: TokenKind, lexeme: &str, position: usize) -> Self {
        Token {
            kind,
            lexeme: lexeme.to_owned(),
            position,
        }
    }

    pub fn end(&self) -> usize {
        self.position + self.lexeme.len()
    }
}

pub fn tokenize(source: &str) -> Result<Vec<Token>> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut chars = source.char_indices().peekable();

    while let Some(&(start, ch)) = chars.peek() {
        let single = match ch {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '|' => Some(TokenKind::Pipe),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '↑' => Some(TokenKind::Up),
            '↓' => Some(TokenKind::Down),
            _ => None,
        };
        if let Some(kind) = single {
            chars.next();
            let end = start + ch.len_utf8();
            tokens.push(Token::new(kind, &source[start..end], start));
            continue;
        }

        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end < bytes.len() && bytes[end] == b'.' {
                if !bytes.get(end + 1).is_some_and(u8::is_ascii_digit) {
                    return Err(Error::Lex {
                        position: end,
                        found: '.',
                    });
                }
                end += 1;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
            }
            tokens.push(Token::new(TokenKind::Number, &source[start..end], start));
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        } else if ch.is_ascii_alphabetic() {
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                end += 1;
            }
            let kind = match &source[start..end] {
                "up" => TokenKind::Up,
                "down" => TokenKind::Down,
                "i" => TokenKind::I,
                _ => {
                    return Err(Error::Lex {
                        position: start,
                        found: ch,
                    })
                }
            };
            tokens.push(Token::new(kind, &source[start..end], start));
            while chars.peek().is_some_and(|&(i, _)| i < end) {
                chars.next();
            }
        } else {
            return Err(Error::Lex {
                position: start,
                found: ch,
            });
        }
    }

    tokens.push(Token::new(TokenKind::Eof, "", source.len()));
    Ok(tokens)
}

// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;

use super::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Str(String),
    Int(BigInt),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Comma,
    Eq,
    Star,
    Plus,
    Minus,
    Slash,
    Colon,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Str(s) => format!("string {s:?}"),
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Semi => ";",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Star => "*",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Slash => "/",
            Tok::Colon => ":",
            Tok::Arrow => "->",
            _ => "",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\'' | '^')
}

/// Whether `s` lexes as a single identifier.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_continue)
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.src[self.pos..].chars();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn span_from(&self, start: (usize, usize, usize)) -> SourceSpan {
        SourceSpan { start: start.0, end: self.pos, line: start.1, column: start.2 }
    }
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut c = Cursor { src, pos: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    loop {
        // whitespace and comments
        while let Some(ch) = c.peek() {
            if ch.is_whitespace() {
                c.bump();
            } else if ch == '#' || (ch == '/' && c.peek2() == Some('/')) {
                while c.peek().is_some_and(|x| x != '\n') {
                    c.bump();
                }
            } else {
                break;
            }
        }
        let start = (c.pos, c.line, c.col);
        let Some(ch) = c.bump() else {
            out.push(Token { tok: Tok::Eof, span: c.span_from(start) });
            return Ok(out);
        };
        let tok = match ch {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '/' => Tok::Slash,
            ':' => Tok::Colon,
            '-' => {
                if c.peek() == Some('>') {
                    c.bump();
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            '"' => {
                let mut s = String::new();
                loop {
                    match c.bump() {
                        Some('"') => break,
                        Some('\n') | None => {
                            return Err(ParseError::new(
                                c.span_from(start),
                                "unterminated string",
                                vec!["`\"`".into()],
                            ))
                        }
                        Some(x) => s.push(x),
                    }
                }
                Tok::Str(s)
            }
            d if d.is_ascii_digit() => {
                let mut s = String::from(d);
                while let Some(x) = c.peek().filter(char::is_ascii_digit) {
                    s.push(x);
                    c.bump();
                }
                if c.peek().is_some_and(is_ident_start) {
                    let bad = c.peek().unwrap_or(' ');
                    c.bump();
                    return Err(ParseError::new(
                        c.span_from(start),
                        format!("unexpected `{bad}` after number"),
                        vec!["whitespace or punctuation".into()],
                    ));
                }
                Tok::Int(s.parse().expect("digits parse"))
            }
            a if is_ident_start(a) => {
                let mut s = String::from(a);
                while let Some(x) = c.peek().filter(|&x| is_ident_continue(x)) {
                    s.push(x);
                    c.bump();
                }
                Tok::Ident(s)
            }
            other => {
                return Err(ParseError::new(
                    c.span_from(start),
                    format!("unexpected character `{other}`"),
                    Vec::new(),
                ))
            }
        };
        out.push(Token { tok, span: c.span_from(start) });
    }
}

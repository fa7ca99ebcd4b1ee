use num::BigInt;

use super::{ParseError, SourceSpan};
use crate::algebra::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum TokenKind {
    Int(BigInt),
    Gen(Family, u32),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Apostrophe,
    LParen,
    RParen,
}

impl TokenKind {
    pub(super) fn starts_factor(&self) -> bool {
        matches!(
            self,
            TokenKind::Int(_) | TokenKind::Gen(..) | TokenKind::Q | TokenKind::LParen
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

pub(super) struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    pub(super) fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn digits_from(&self, start: usize) -> usize {
        self.text[start..]
            .find(|c: char| !c.is_ascii_digit())
            .map_or(self.text.len(), |k| start + k)
    }
}

impl Iterator for Lexer<'_> {
    type Item = Result<Token, ParseError>;

    fn next(&mut self) -> Option<Self::Item> {
        let rest = &self.text[self.pos..];
        let skipped = rest.len() - rest.trim_start().len();
        self.pos += skipped;
        let start = self.pos;
        let c = self.text[start..].chars().next()?;
        let single = |kind| Some(kind);
        let kind = match c {
            '+' => single(TokenKind::Plus),
            '-' => single(TokenKind::Minus),
            '*' => single(TokenKind::Star),
            '/' => single(TokenKind::Slash),
            '^' => single(TokenKind::Caret),
            '\'' => single(TokenKind::Apostrophe),
            '(' => single(TokenKind::LParen),
            ')' => single(TokenKind::RParen),
            'q' => single(TokenKind::Q),
            _ => None,
        };
        if let Some(kind) = kind {
            self.pos += 1;
            return Some(Ok(Token {
                kind,
                span: SourceSpan::new(start, self.pos),
            }));
        }
        if c.is_ascii_digit() {
            let end = self.digits_from(start);
            self.pos = end;
            let v: BigInt = self.text[start..end].parse().expect("digits");
            return Some(Ok(Token {
                kind: TokenKind::Int(v),
                span: SourceSpan::new(start, end),
            }));
        }
        if c == 'x' || c == 'y' {
            let family = if c == 'x' { Family::X } else { Family::Y };
            let end = self.digits_from(start + 1);
            let span = SourceSpan::new(start, end);
            self.pos = end.max(start + 1);
            if end == start + 1 {
                return Some(Err(ParseError::syntax(
                    format!("generator '{c}' needs an index"),
                    SourceSpan::new(start, start + 1),
                )));
            }
            return Some(match self.text[start + 1..end].parse::<u32>() {
                Ok(i) => Ok(Token {
                    kind: TokenKind::Gen(family, i),
                    span,
                }),
                Err(_) => Err(ParseError::syntax("generator index out of range", span)),
            });
        }
        let end = start + c.len_utf8();
        self.pos = end;
        Some(Err(ParseError::syntax(
            format!("unexpected character {c:?}"),
            SourceSpan::new(start, end),
        )))
    }
}

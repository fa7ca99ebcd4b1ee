//! Text syntax for algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := primary "'"*
//! primary:= rational | 'q' ['^' ['-'] int] | ('x'|'y') int | '(' expr ')'
//! ```
//!
//! Juxtaposition and `*` both multiply; a postfix apostrophe is the adjoint
//! and binds tighter than any product.

mod lexer;

use std::fmt;

use num::{BigInt, BigRational, ToPrimitive};
use thiserror::Error;

use crate::algebra::{Element, Family, Generator, Presentation};
use crate::scalar::LaurentPoly;
use lexer::{Lexer, Token, TokenKind};

/// Byte offsets `start..end` into the parsed text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Self { start, end }
    }

    /// The input line with a caret marker under the span.
    pub fn render(&self, text: &str) -> String {
        let width = (self.end - self.start).max(1);
        format!("{text}\n{}{}", " ".repeat(self.start), "^".repeat(width))
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{message}")]
    Syntax { message: String, span: SourceSpan },
    #[error("unknown generator {name} (valid: {valid})")]
    UnknownGenerator {
        name: String,
        valid: String,
        span: SourceSpan,
    },
}

impl ParseError {
    pub fn span(&self) -> SourceSpan {
        match self {
            ParseError::Syntax { span, .. } | ParseError::UnknownGenerator { span, .. } => *span,
        }
    }

    fn syntax(message: impl Into<String>, span: SourceSpan) -> Self {
        ParseError::Syntax {
            message: message.into(),
            span,
        }
    }
}

/// Parses `text` into an element over `p`'s generators. The result is not normalized.
pub fn parse(text: &str, p: &Presentation) -> Result<Element, ParseError> {
    Parser::new(text, Some(p))?.parse_all()
}

/// Parses a generator-free expression as a Laurent polynomial.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly, ParseError> {
    let e = Parser::new(text, None)?.parse_all()?;
    if e.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let scalar = match e.terms().next() {
        Some((w, c)) if e.num_terms() == 1 && w.is_empty() => Some(c.clone()),
        _ => None,
    };
    scalar.ok_or_else(|| {
        ParseError::syntax(
            "expected a scalar expression",
            SourceSpan::new(0, text.len()),
        )
    })
}

/// Canonical text of `e`; `parse` inverts it.
pub fn print_canonical(e: &Element) -> String {
    e.to_string()
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    len: usize,
    scope: Option<&'a Presentation>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, scope: Option<&'a Presentation>) -> Result<Self, ParseError> {
        let tokens = Lexer::new(text).collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            tokens,
            pos: 0,
            len: text.len(),
            scope,
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eof_span(&self) -> SourceSpan {
        SourceSpan::new(self.len, self.len)
    }

    fn here(&self) -> SourceSpan {
        self.peek()
            .map(|t| t.span)
            .unwrap_or_else(|| self.eof_span())
    }

    fn expect(&mut self, want: TokenKind, what: &str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.kind == want => Ok(self.bump().unwrap()),
            _ => Err(ParseError::syntax(format!("expected {what}"), self.here())),
        }
    }

    fn parse_all(mut self) -> Result<Element, ParseError> {
        if self.tokens.is_empty() {
            return Err(ParseError::syntax("empty expression", self.eof_span()));
        }
        let e = self.expr()?;
        if let Some(t) = self.peek() {
            return Err(ParseError::syntax("unexpected token", t.span));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut negate = false;
        match self.peek_kind() {
            Some(TokenKind::Minus) => {
                self.bump();
                negate = true;
            }
            Some(TokenKind::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek_kind() {
                Some(TokenKind::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek_kind() {
                Some(TokenKind::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(k) if k.starts_factor() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Element, ParseError> {
        let mut e = self.primary()?;
        while self.peek_kind() == Some(&TokenKind::Apostrophe) {
            self.bump();
            e = e.star();
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Element, ParseError> {
        let Some(tok) = self.bump() else {
            return Err(ParseError::syntax(
                "unexpected end of input",
                self.eof_span(),
            ));
        };
        match tok.kind {
            TokenKind::Int(n) => {
                let mut value = BigRational::from_integer(n);
                if self.peek_kind() == Some(&TokenKind::Slash) {
                    self.bump();
                    let den = self.int("denominator")?;
                    if den.1 == BigInt::from(0) {
                        return Err(ParseError::syntax("zero denominator", den.0));
                    }
                    value /= BigRational::from_integer(den.1);
                }
                Ok(Element::scalar(LaurentPoly::constant(value)))
            }
            TokenKind::Q => {
                let mut exp = 1i32;
                if self.peek_kind() == Some(&TokenKind::Caret) {
                    self.bump();
                    let neg = if self.peek_kind() == Some(&TokenKind::Minus) {
                        self.bump();
                        true
                    } else {
                        false
                    };
                    let (span, v) = self.int("exponent")?;
                    let v = v
                        .to_i32()
                        .ok_or_else(|| ParseError::syntax("exponent out of range", span))?;
                    exp = if neg { -v } else { v };
                }
                Ok(Element::scalar(LaurentPoly::q_pow(exp)))
            }
            TokenKind::Gen(family, index) => self.generator(family, index, tok.span),
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(ParseError::syntax(
                "expected a scalar, generator or '('",
                tok.span,
            )),
        }
    }

    fn int(&mut self, what: &str) -> Result<(SourceSpan, BigInt), ParseError> {
        match self.bump() {
            Some(Token {
                kind: TokenKind::Int(v),
                span,
            }) => Ok((span, v)),
            Some(t) => Err(ParseError::syntax(
                format!("expected integer {what}"),
                t.span,
            )),
            None => Err(ParseError::syntax(
                format!("expected integer {what}"),
                self.eof_span(),
            )),
        }
    }

    fn generator(
        &self,
        family: Family,
        index: u32,
        span: SourceSpan,
    ) -> Result<Element, ParseError> {
        let g = Generator {
            family,
            index,
            starred: false,
        };
        let name = g.to_string();
        match self.scope {
            Some(p) if p.contains(g) => Ok(Element::generator(g)),
            Some(p) => Err(ParseError::UnknownGenerator {
                name,
                valid: p.generator_range(),
                span,
            }),
            None => Err(ParseError::UnknownGenerator {
                name,
                valid: "none, scalar expected".into(),
                span,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Word;

    #[test]
    fn scalar_times_word() {
        let p = Presentation::sigma(2).unwrap();
        let e = parse("q^-1 y1 y2", &p).unwrap();
        assert_eq!(e.num_terms(), 1);
        let w = Word::new(vec![Generator::y(1), Generator::y(2)]);
        assert_eq!(e.coeff(&w), LaurentPoly::q_pow(-1));
    }

    #[test]
    fn parenthesized_scalar_and_adjoint() {
        let p = Presentation::s(2).unwrap();
        let e = parse("(1 - q^2) x1'", &p).unwrap();
        let want = Element::term(
            LaurentPoly::from_int_terms([(0, 1), (2, -1)]),
            Word::new(vec![Generator::x(1).star()]),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn unknown_generator_names_valid_range() {
        let p = Presentation::sigma(2).unwrap();
        let err = parse("y4", &p).unwrap_err();
        assert_eq!(err.to_string(), "unknown generator y4 (valid: y1..y3)");
        assert_eq!(err.span(), SourceSpan::new(0, 2));
        let err = parse("2 x1", &p).unwrap_err();
        assert_eq!(err.span(), SourceSpan::new(2, 4));
    }

    #[test]
    fn syntax_errors_carry_spans() {
        let p = Presentation::sigma(1).unwrap();
        for (text, at) in [
            ("y1 +", 4),
            ("(y1", 3),
            ("q^", 2),
            ("y1 ) y2", 3),
            ("", 0),
            ("1/0", 2),
        ] {
            match parse(text, &p) {
                Err(ParseError::Syntax { span, .. }) => assert_eq!(span.start, at, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn adjoint_of_product() {
        let p = Presentation::sigma(2).unwrap();
        assert_eq!(parse("(q y1 y2)'", &p).unwrap().to_string(), "(q)*y2'y1'");
        assert_eq!(parse("y1''", &p).unwrap().to_string(), "(1)*y1");
    }

    #[test]
    fn canonical_text_round_trips() {
        let p = Presentation::sigma(1).unwrap();
        let text = "(1 - q^4)*1 + (q^4)*y1'y1";
        let e = parse(text, &p).unwrap();
        assert_eq!(print_canonical(&e), text);
        assert_eq!(print_canonical(&parse("0", &p).unwrap()), "0");
        assert_eq!(
            print_canonical(&parse("y2 y1' - y2 y1' ", &p).unwrap()),
            "0"
        );
    }

    #[test]
    fn laurent_only_scope() {
        assert_eq!(
            parse_laurent("3/2*q^2 - q^-1 + 1").unwrap().to_string(),
            "-q^-1 + 1 + 3/2*q^2"
        );
        assert!(parse_laurent("y1").is_err());
    }
}

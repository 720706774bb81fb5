//! Parser for the polynomial expression grammar shared by the library tests
//! and the command-line tools.
//!
//! Grammar (whitespace is ignored everywhere):
//!
//! ```text
//! poly    :=  ['-'] term ( ('+' | '-') term )*
//! term    :=  coeff [ '*' mono ]  |  coeff mono  |  mono
//! mono    :=  factor ( '*' factor )*
//! factor  :=  var [ '^' uint ]
//! coeff   :=  uint
//! var     :=  identifier declared by the ambient ring
//! ```
//!
//! Errors carry the byte offset of the offending token.

use std::sync::Arc;

use crate::error::AlgebraError;
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Int(u64),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn next(&mut self) -> Result<(usize, Tok), AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok((start, Tok::Plus))
            }
            b'-' => {
                self.pos += 1;
                Ok((start, Tok::Minus))
            }
            b'*' => {
                self.pos += 1;
                Ok((start, Tok::Star))
            }
            b'^' => {
                self.pos += 1;
                Ok((start, Tok::Caret))
            }
            b'0'..=b'9' => {
                let mut v: u64 = 0;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((self.src[self.pos] - b'0') as u64))
                        .ok_or_else(|| AlgebraError::Parse {
                            position: start,
                            message: "integer literal too large".into(),
                        })?;
                    self.pos += 1;
                }
                Ok((start, Tok::Int(v)))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos + 1;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end])
                    .unwrap()
                    .to_string();
                self.pos = end;
                Ok((start, Tok::Ident(name)))
            }
            other => Err(AlgebraError::Parse {
                position: start,
                message: format!("unexpected character {:?}", other as char),
            }),
        }
    }

    fn peek(&mut self) -> Result<(usize, Tok), AlgebraError> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

fn parse_factor(
    lx: &mut Lexer,
    ring: &Arc<PolyRing>,
    exps: &mut [u64],
) -> Result<(), AlgebraError> {
    let (pos, tok) = lx.next()?;
    let name = match tok {
        Tok::Ident(name) => name,
        other => {
            return Err(AlgebraError::Parse {
                position: pos,
                message: format!("expected variable, found {other:?}"),
            })
        }
    };
    let idx = ring.var_index(&name).ok_or_else(|| AlgebraError::Parse {
        position: pos,
        message: format!("unknown variable {name:?}"),
    })?;
    let mut exp: u64 = 1;
    if let (_, Tok::Caret) = lx.peek()? {
        lx.next()?;
        let (epos, etok) = lx.next()?;
        match etok {
            Tok::Int(v) => exp = v,
            other => {
                return Err(AlgebraError::Parse {
                    position: epos,
                    message: format!("expected integer exponent, found {other:?}"),
                })
            }
        }
    }
    exps[idx] = exps[idx].checked_add(exp).ok_or_else(|| AlgebraError::Parse {
        position: pos,
        message: "exponent overflow".into(),
    })?;
    Ok(())
}

fn parse_term(lx: &mut Lexer, ring: &Arc<PolyRing>) -> Result<(Monomial, Fp), AlgebraError> {
    let field = ring.field();
    let mut coeff = field.one();
    let mut exps = vec![0u64; ring.nvars()];

    let (pos, tok) = lx.peek()?;
    if let Tok::Int(v) = tok {
        lx.next()?;
        coeff = field.from_u64(v);
        // Optional '*' or juxtaposed monomial after the coefficient.
        match lx.peek()? {
            (_, Tok::Star) => {
                lx.next()?;
                parse_factor(lx, ring, &mut exps)?;
            }
            (_, Tok::Ident(_)) => {
                parse_factor(lx, ring, &mut exps)?;
            }
            _ => {
                return Ok((Monomial::new(exps), coeff));
            }
        }
    } else if let Tok::Ident(_) = tok {
        parse_factor(lx, ring, &mut exps)?;
    } else {
        return Err(AlgebraError::Parse {
            position: pos,
            message: format!("expected term, found {tok:?}"),
        });
    }

    while let (_, Tok::Star) = lx.peek()? {
        lx.next()?;
        parse_factor(lx, ring, &mut exps)?;
    }
    Ok((Monomial::new(exps), coeff))
}

/// Parses a polynomial expression in the given ambient ring.
pub fn parse_polynomial(ring: &Arc<PolyRing>, src: &str) -> Result<Polynomial, AlgebraError> {
    let mut lx = Lexer::new(src);
    let field = *ring.field();
    let mut terms: Vec<(Monomial, Fp)> = Vec::new();

    let mut sign_neg = false;
    if let (_, Tok::Minus) = lx.peek()? {
        lx.next()?;
        sign_neg = true;
    }
    loop {
        let (m, c) = parse_term(&mut lx, ring)?;
        let c = if sign_neg { field.neg(c) } else { c };
        terms.push((m, c));
        let (pos, tok) = lx.next()?;
        match tok {
            Tok::Plus => sign_neg = false,
            Tok::Minus => sign_neg = true,
            Tok::End => break,
            other => {
                return Err(AlgebraError::Parse {
                    position: pos,
                    message: format!("expected '+', '-' or end of input, found {other:?}"),
                })
            }
        }
    }
    let _ = lx.peek_pos();
    Ok(ring.from_terms(terms))
}

/// Parses a `;`-separated list of polynomial expressions.
pub fn parse_polynomial_list(
    ring: &Arc<PolyRing>,
    src: &str,
) -> Result<Vec<Polynomial>, AlgebraError> {
    src.split(';')
        .map(|chunk| parse_polynomial(ring, chunk))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(5, &["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn parses_basic_forms() {
        let r = ring();
        let f = parse_polynomial(&r, "y^2 - x^3").unwrap();
        assert_eq!(f.to_string(), "4*x^3 + y^2");
        assert_eq!(
            parse_polynomial(&r, "2x").unwrap(),
            parse_polynomial(&r, "2*x").unwrap()
        );
        assert_eq!(
            parse_polynomial(&r, " x * y ^ 2 + 3 ").unwrap().to_string(),
            "x*y^2 + 3"
        );
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        // 5 = 0 mod 5.
        assert!(parse_polynomial(&r, "5").unwrap().is_zero());
        // Leading minus.
        assert_eq!(parse_polynomial(&r, "-x").unwrap().to_string(), "4*x");
        // Repeated variables multiply out.
        assert_eq!(
            parse_polynomial(&r, "x*x*x").unwrap(),
            parse_polynomial(&r, "x^3").unwrap()
        );
    }

    #[test]
    fn cancellation_inside_input() {
        let r = ring();
        assert!(parse_polynomial(&r, "x*y - x*y").unwrap().is_zero());
    }

    #[test]
    fn error_positions() {
        let r = ring();
        match parse_polynomial(&r, "x + z") {
            Err(AlgebraError::Parse { position, message }) => {
                assert_eq!(position, 4);
                assert!(message.contains("unknown variable"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial(&r, "x^") {
            Err(AlgebraError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial(&r, "x ++ y").is_err());
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "x y").is_err());
        assert!(parse_polynomial(&r, "(x)").is_err());
    }

    #[test]
    fn list_parsing() {
        let r = ring();
        let gens = parse_polynomial_list(&r, "x*y; y^2 - x^3").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_polynomial_list(&r, "x;;y").is_err());
    }
}

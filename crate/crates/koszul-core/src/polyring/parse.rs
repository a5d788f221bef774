//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! poly      := term (('+'|'-') term)*
//! term      := coeff ('*' powerprod)? | powerprod
//! powerprod := var ('^' nat)? ('*' var ('^' nat)?)*
//! coeff     := int | int '/' nat        (fractions over the rationals only)
//! ```
//!
//! Whitespace is insignificant. A leading sign before the first term is
//! accepted so that every formatted polynomial parses back.

use super::{Coeff, FieldKind, Monomial, Polynomial, PolynomialRing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(String),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(src[start..i].to_string()), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_string()), start));
            }
            other => {
                return Err(Error::Parse {
                    message: format!("unexpected character '{other}'"),
                    position: i,
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a PolynomialRing,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            message: message.into(),
            position: self.here(),
        })
    }

    fn expect_nat(&mut self, what: &str) -> Result<u32> {
        let position = self.here();
        match self.bump() {
            Some(Tok::Int(s)) => s.parse::<u32>().map_err(|_| Error::Parse {
                message: format!("{what} '{s}' out of range"),
                position,
            }),
            other => Err(Error::Parse {
                message: format!(
                    "expected {what}, found {}",
                    other.map_or("end of input".to_string(), |t| format!("{t:?}"))
                ),
                position,
            }),
        }
    }

    fn var_index(&self, name: &str, position: usize) -> Result<usize> {
        self.ring
            .var_names()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse {
                message: format!("unknown variable '{name}'"),
                position,
            })
    }

    /// powerprod := var ('^' nat)? ('*' var ('^' nat)?)*
    /// Entered after the first variable has been consumed.
    fn powerprod(&mut self, first: &str, first_pos: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.nvars()];
        let idx = self.var_index(first, first_pos)?;
        exps[idx] += self.exponent()?;
        while self.peek() == Some(&Tok::Star) {
            // only consume the '*' if a variable follows; a '*' before a
            // digit belongs to no production and is an error here
            self.bump();
            let position = self.here();
            match self.bump() {
                Some(Tok::Ident(v)) => {
                    let idx = self.var_index(&v, position)?;
                    exps[idx] += self.exponent()?;
                }
                _ => {
                    return Err(Error::Parse {
                        message: "expected variable after '*'".into(),
                        position,
                    })
                }
            }
        }
        Ok(Monomial::new(exps))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            self.expect_nat("exponent")
        } else {
            Ok(1)
        }
    }

    /// term := coeff ('*' powerprod)? | powerprod
    fn term(&mut self) -> Result<(Monomial, Coeff)> {
        let position = self.here();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let field = self.ring.field();
                let mut coeff = field.from_decimal(&digits)?;
                if self.peek() == Some(&Tok::Slash) {
                    let slash_pos = self.here();
                    self.bump();
                    let den_pos = self.here();
                    let den = match self.bump() {
                        Some(Tok::Int(d)) => d,
                        _ => {
                            return Err(Error::Parse {
                                message: "expected denominator".into(),
                                position: den_pos,
                            })
                        }
                    };
                    if !matches!(field.kind(), FieldKind::Rationals) {
                        return Err(Error::Parse {
                            message: "fraction coefficients are only valid over the rationals"
                                .into(),
                            position: slash_pos,
                        });
                    }
                    let den = field.from_decimal(&den)?;
                    if field.is_zero(&den) {
                        return Err(Error::Parse {
                            message: "division by zero coefficient".into(),
                            position: den_pos,
                        });
                    }
                    coeff = field.div(&coeff, &den);
                }
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    let vpos = self.here();
                    match self.bump() {
                        Some(Tok::Ident(v)) => {
                            let m = self.powerprod(&v, vpos)?;
                            Ok((m, coeff))
                        }
                        _ => Err(Error::Parse {
                            message: "expected variable after '*'".into(),
                            position: vpos,
                        }),
                    }
                } else {
                    Ok((Monomial::one(self.ring.nvars()), coeff))
                }
            }
            Some(Tok::Ident(v)) => {
                let m = self.powerprod(&v, position)?;
                Ok((m, self.ring.field().one()))
            }
            other => Err(Error::Parse {
                message: format!(
                    "expected term, found {}",
                    other.map_or("end of input".to_string(), |t| format!("{t:?}"))
                ),
                position,
            }),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let field = self.ring.field().clone();
        let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
        // optional sign before the first term
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            let c = if negate { field.neg(&c) } else { c };
            terms.push((m, c));
            match self.peek() {
                Some(Tok::Plus) => {
                    negate = false;
                    self.bump();
                }
                Some(Tok::Minus) => {
                    negate = true;
                    self.bump();
                }
                None => break,
                Some(t) => {
                    let t = t.clone();
                    return self.err(format!("expected '+', '-' or end of input, found {t:?}"));
                }
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }
}

pub fn parse_poly(text: &str, ring: &PolynomialRing) -> Result<Polynomial> {
    let lexer = Lexer {
        src: text,
        toks: lex(text)?,
    };
    if lexer.toks.is_empty() {
        return Err(Error::Parse {
            message: "empty polynomial".into(),
            position: 0,
        });
    }
    let mut p = Parser {
        ring,
        toks: lexer.toks,
        pos: 0,
        end: lexer.src.len(),
    };
    p.poly()
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::polyring::{CoefficientField, MonomialOrder, PolynomialRing};

    fn ring(field: CoefficientField) -> PolynomialRing {
        PolynomialRing::new(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    #[test]
    fn single_monomial() {
        let r = ring(CoefficientField::rationals());
        let p = r.parse_poly("x*y*z").unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0.exponents(), &[1, 1, 1]);
        assert!(r.field().is_one(&p.terms()[0].1));
    }

    #[test]
    fn sum_of_squares() {
        let r = ring(CoefficientField::rationals());
        let p = r.parse_poly("x^2 + y^2 + z^2").unwrap();
        assert_eq!(p.terms().len(), 3);
    }

    #[test]
    fn coefficient_reduction_mod_2() {
        let r = ring(CoefficientField::prime(2).unwrap());
        assert!(r.parse_poly("2*x").unwrap().is_zero());
        assert_eq!(r.parse_poly("3*x").unwrap(), r.var(0));
    }

    #[test]
    fn unknown_variable_reports_position() {
        let r = ring(CoefficientField::rationals());
        match r.parse_poly("x + w^2") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 4);
                assert!(message.contains("unknown variable"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_exponent() {
        let r = ring(CoefficientField::rationals());
        assert!(r.parse_poly("x^").is_err());
        assert!(r.parse_poly("x^y").is_err());
        assert!(r.parse_poly("x^99999999999999999999").is_err());
    }

    #[test]
    fn division_by_zero_coefficient() {
        let r = ring(CoefficientField::rationals());
        match r.parse_poly("1/0*x") {
            Err(Error::Parse { message, .. }) => {
                assert!(message.contains("division by zero"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn fractions_rejected_over_prime_fields() {
        let r = ring(CoefficientField::prime(5).unwrap());
        assert!(r.parse_poly("1/2*x").is_err());
        let q = ring(CoefficientField::rationals());
        assert!(q.parse_poly("1/2*x").is_ok());
    }

    #[test]
    fn whitespace_insignificant() {
        let r = ring(CoefficientField::rationals());
        assert_eq!(
            r.parse_poly("  x ^2+ 3 * y ").unwrap(),
            r.parse_poly("x^2+3*y").unwrap()
        );
    }

    #[test]
    fn format_then_parse_round_trips() {
        let r = ring(CoefficientField::rationals());
        for text in [
            "x^2 + y^2 + z^2",
            "-x + 2/3*y - z^4",
            "1/2",
            "x*y*z - 1",
            "0",
        ] {
            let p = r.parse_poly(text).unwrap();
            let formatted = p.to_string();
            if p.is_zero() {
                assert_eq!(formatted, "0");
                continue;
            }
            assert_eq!(r.parse_poly(&formatted).unwrap(), p);
        }
    }

    #[test]
    fn garbage_rejected() {
        let r = ring(CoefficientField::rationals());
        assert!(r.parse_poly("").is_err());
        assert!(r.parse_poly("x +").is_err());
        assert!(r.parse_poly("(x)").is_err());
        assert!(r.parse_poly("x y").is_err());
        assert!(r.parse_poly("2 3").is_err());
    }
}

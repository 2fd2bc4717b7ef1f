//! Expression syntax shared by the CLI and the preset files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '·' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `q` and `j` are scalars; every other identifier is a generator. Products
//! are noncommutative and keep their order; division and negative powers are
//! only allowed on scalars.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Poly, Sym};
use crate::names;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    J,
    Gen { name: String, offset: usize },
    Sum(Vec<Expr>),
    Neg(Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>, usize),
    Power(Box<Expr>, i64, usize),
}

impl Expr {
    /// Number of top-level summands.
    pub fn top_level_terms(&self) -> usize {
        match self {
            Expr::Sum(v) => v.len(),
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '²' | '⁻' | '¹' | '∂')
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Int(s.parse().expect("digits")), i));
                continue;
            }
            c if is_ident_char(c) => {
                let mut s = String::new();
                while let Some(&(_, d)) = it.peek() {
                    if is_ident_char(d) {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), i));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        it.next();
        out.push((tok, i));
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let r = self.unary()?;
                    acc = Expr::Product(Box::new(acc), Box::new(r));
                }
                Tok::Slash => {
                    let at = self.offset();
                    self.bump();
                    let r = self.unary()?;
                    acc = Expr::Quotient(Box::new(acc), Box::new(r), at);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let at = self.offset();
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Tok::Int(n) => {
                let k: i64 = n.try_into().map_err(|_| Error::Parse {
                    offset: at,
                    message: "exponent too large".into(),
                })?;
                Ok(Expr::Power(Box::new(base), if neg { -k } else { k }, at))
            }
            _ => Err(Error::Parse {
                offset: at + 1,
                message: "expected integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(s) => Ok(match s.as_str() {
                "q" => Expr::Q,
                "j" => Expr::J,
                _ => Expr::Gen {
                    name: s,
                    offset: at,
                },
            }),
            Tok::LParen => {
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Tok::End => Err(Error::Parse {
                offset: at,
                message: "unexpected end of input".into(),
            }),
            other => Err(Error::Parse {
                offset: at,
                message: format!("unexpected token {other:?}"),
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let msg = if *p.peek() == Tok::RParen {
            "unbalanced `)`"
        } else {
            "unexpected trailing input"
        };
        return p.err(msg);
    }
    Ok(e)
}

/// Canonical ASCII name for an identifier token.
pub fn canonical_name(token: &str) -> &str {
    names::from_alias(token).unwrap_or(token)
}

fn as_scalar(p: &Poly) -> Option<Scalar> {
    match p.len() {
        0 => Some(Scalar::zero()),
        1 => p
            .terms()
            .next()
            .filter(|(w, _)| w.is_empty())
            .map(|(_, c)| c.clone()),
        _ => None,
    }
}

/// Evaluates to a polynomial; generators must belong to `alphabet` if given.
pub fn eval(e: &Expr, alphabet: Option<&Alphabet>) -> Result<Poly> {
    Ok(match e {
        Expr::Int(n) => Poly::constant(Scalar::from_rational(n.clone().into())),
        Expr::Q => Poly::constant(Scalar::q()),
        Expr::J => Poly::constant(Scalar::j()),
        Expr::Gen { name, offset } => {
            let canon = canonical_name(name);
            let s = Sym::new(canon);
            match alphabet {
                Some(a) if !a.contains(s) => {
                    return Err(Error::Parse {
                        offset: *offset,
                        message: format!("unknown symbol `{name}`"),
                    })
                }
                _ => Poly::gen(s),
            }
        }
        Expr::Sum(v) => {
            let mut acc = Poly::zero();
            for t in v {
                acc = acc + eval(t, alphabet)?;
            }
            acc
        }
        Expr::Neg(x) => -eval(x, alphabet)?,
        Expr::Product(a, b) => &eval(a, alphabet)? * &eval(b, alphabet)?,
        Expr::Quotient(a, b, at) => {
            let num = eval(a, alphabet)?;
            let den = eval(b, alphabet)?;
            let d = as_scalar(&den).ok_or_else(|| Error::Parse {
                offset: *at,
                message: "division by a non-scalar".into(),
            })?;
            let inv = d.inv().map_err(|_| Error::Parse {
                offset: *at,
                message: "division by zero".into(),
            })?;
            num.scale(&inv)
        }
        Expr::Power(b, k, at) => {
            let base = eval(b, alphabet)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                let s = as_scalar(&base).ok_or_else(|| Error::Parse {
                    offset: *at,
                    message: "negative power of a non-scalar".into(),
                })?;
                Poly::constant(s.pow(*k).map_err(|_| Error::Parse {
                    offset: *at,
                    message: "negative power of zero".into(),
                })?)
            }
        }
    })
}

pub fn parse_poly(src: &str, alphabet: Option<&Alphabet>) -> Result<Poly> {
    eval(&parse(src)?, alphabet)
}

/// Parses a coefficient: integers, fractions, q, j and arithmetic.
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let p = parse_poly(src, Some(&Alphabet::default()))?;
    as_scalar(&p).ok_or(Error::Parse {
        offset: 0,
        message: "not a scalar".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_top_level_terms() {
        let e = parse("x*th - th*x - h*x^2").unwrap();
        assert_eq!(e.top_level_terms(), 3);
    }

    #[test]
    fn scalar_times_word() {
        let p = parse_poly("q*j^2*dth*x", None).unwrap();
        let want = Poly::names(&["dth", "x"]).scale(&(&Scalar::q() * &Scalar::j_pow(2)));
        assert_eq!(p, want);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse("x*("),
            Err(Error::Parse {
                offset: 3,
                message: "unexpected end of input".into()
            })
        );
        assert!(matches!(parse("(x"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse("x)"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse("1/"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_poly("1/0", None), Err(Error::Parse { .. })));
        let a = Alphabet::default();
        assert!(matches!(
            parse_poly("2*zz", Some(&a)),
            Err(Error::Parse { offset: 2, .. })
        ));
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("j^2 + j + 1").unwrap(), Scalar::zero());
        assert_eq!(parse_scalar("3/6").unwrap(), Scalar::ratio(1, 2));
        assert_eq!(
            parse_scalar("(q^2 - 1)/(q - 1)").unwrap(),
            &Scalar::q() + &Scalar::from_int(1)
        );
        assert_eq!(parse_scalar("j*q^-1").unwrap(), &Scalar::j() * &Scalar::q_pow(-1));
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn unicode_synonyms() {
        let p = parse_poly("θ·x − h·x²", None);
        // `x²` is a single identifier token and is not a known name
        assert!(p.is_ok());
        let p = parse_poly("θ·x", None).unwrap();
        assert_eq!(p, Poly::names(&["th", "x"]));
        assert_eq!(parse_poly("d²θ", None).unwrap(), Poly::names(&["d2th"]));
        assert_eq!(parse_poly("x⁻¹", None).unwrap(), Poly::names(&["xinv"]));
    }
}

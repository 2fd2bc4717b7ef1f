//! Text and LaTeX rendering of scalars and polynomials.
//!
//! Text output is accepted back by [`crate::expr::parse_poly`]; terms are
//! listed from largest to smallest word under the given term order.

use num_traits::One;

use crate::freealg::{Poly, Sym};
use crate::names;
use crate::rewrite::TermOrder;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Unicode,
    Latex,
}

fn word_str(w: &[Sym], style: Style) -> String {
    match style {
        Style::Text => w.iter().map(|s| s.name()).collect::<Vec<_>>().join("*"),
        Style::Unicode => w
            .iter()
            .map(|s| names::unicode(s.name()))
            .collect::<Vec<_>>()
            .join("·"),
        Style::Latex => w
            .iter()
            .map(|s| names::latex(s.name()))
            .collect::<Vec<_>>()
            .join(" \\, "),
    }
}

fn latex_scalar(c: &Scalar) -> String {
    let text = c.format(false);
    let fix = |s: &str| -> String {
        let mut out = String::new();
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '^' => {
                    let mut exp = String::new();
                    while let Some(&n) = chars.peek() {
                        if n == '-' && exp.is_empty() || n.is_ascii_digit() {
                            exp.push(n);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    out.push_str(&format!("^{{{exp}}}"));
                }
                '*' => out.push(' '),
                _ => out.push(ch),
            }
        }
        out
    };
    if let Some(idx) = text.find(")/(") {
        let num = &text[1..idx];
        let den = &text[idx + 3..text.len() - 1];
        format!("\\frac{{{}}}{{{}}}", fix(num), fix(den))
    } else {
        fix(&text)
    }
}

fn scalar_str(c: &Scalar, style: Style) -> String {
    match style {
        Style::Text => c.format(false),
        Style::Unicode => c.format(true),
        Style::Latex => latex_scalar(c),
    }
}

fn wrap(s: String, style: Style) -> String {
    match style {
        Style::Latex => format!("\\left({s}\\right)"),
        _ => format!("({s})"),
    }
}

fn mul_sep(style: Style) -> &'static str {
    match style {
        Style::Text => "*",
        Style::Unicode => "·",
        Style::Latex => " \\, ",
    }
}

/// Renders `p`; terms sorted by `order` (descending) when given.
pub fn render(p: &Poly, order: Option<&TermOrder>, style: Style) -> String {
    let mut terms: Vec<(&Vec<Sym>, &Scalar)> = p.terms().collect();
    if let Some(o) = order {
        terms.sort_by(|a, b| o.cmp_words(b.0, a.0));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in terms.iter().enumerate() {
        let (neg, body) = match c.split_sign() {
            Some((neg, mag)) => {
                let body = if w.is_empty() {
                    scalar_str(&mag, style)
                } else if mag.is_one() {
                    word_str(w, style)
                } else {
                    format!("{}{}{}", scalar_str(&mag, style), mul_sep(style), word_str(w, style))
                };
                (neg, body)
            }
            None => {
                let cs = wrap(scalar_str(c, style), style);
                let body = if w.is_empty() {
                    cs
                } else {
                    format!("{cs}{}{}", mul_sep(style), word_str(w, style))
                };
                (false, body)
            }
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

pub fn poly_text(p: &Poly, order: Option<&TermOrder>, unicode: bool) -> String {
    render(p, order, if unicode { Style::Unicode } else { Style::Text })
}

pub fn poly_latex(p: &Poly, order: Option<&TermOrder>) -> String {
    render(p, order, Style::Latex)
}

pub fn word_text(w: &[Sym]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        word_str(w, Style::Text)
    }
}

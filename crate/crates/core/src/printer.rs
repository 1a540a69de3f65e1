//! Deterministic polynomial printing.
//!
//! Plain style round-trips through the parser. Terms appear in descending
//! monomial order, so output is canonical.

use crate::poly::{MultiPoly, Rational};
use num_traits::{One, Signed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrintStyle {
    Plain,
    Latex,
}

pub fn print_poly(p: &MultiPoly, style: PrintStyle) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_desc().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let is_const = m.is_one();
        match style {
            PrintStyle::Plain => {
                if is_const {
                    out.push_str(&abs.to_string());
                } else {
                    if !abs.is_one() {
                        out.push_str(&abs.to_string());
                        out.push('*');
                    }
                    let mut first = true;
                    for (v, e) in m.vars() {
                        if !first {
                            out.push('*');
                        }
                        first = false;
                        out.push(v.as_char());
                        if e > 1 {
                            out.push('^');
                            out.push_str(&e.to_string());
                        }
                    }
                }
            }
            PrintStyle::Latex => {
                if is_const {
                    out.push_str(&latex_rational(&abs));
                } else {
                    if !abs.is_one() {
                        out.push_str(&latex_rational(&abs));
                    }
                    for (v, e) in m.vars() {
                        out.push(v.as_char());
                        if e > 1 {
                            out.push_str(&format!("^{{{}}}", e));
                        }
                    }
                }
            }
        }
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

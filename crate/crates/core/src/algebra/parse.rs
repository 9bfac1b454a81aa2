//! Text grammar for polynomials: `-z1^2+z0*z3`, `3*y0*y2 - 2`, ...
//!
//! Variables are looked up in a caller supplied name list, coefficients are
//! integers, `*` separates factors, `^` raises a variable to an integer
//! power. Whitespace is ignored.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

/// `z0..z3`.
pub const Z_NAMES: [&str; 4] = ["z0", "z1", "z2", "z3"];
/// `y0..y3`.
pub const Y_NAMES: [&str; 4] = ["y0", "y1", "y2", "y3"];
/// The bigraded ring `z0..z3, y0..y3`.
pub const ZY_NAMES: [&str; 8] = ["z0", "z1", "z2", "z3", "y0", "y1", "y2", "y3"];

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Lexer { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.src.chars().count() + 1, |&(i, _)| {
                self.src[..i].chars().count() + 1
            })
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.to_string(),
        })
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn integer(&mut self) -> Result<BigInt> {
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn identifier(&mut self) -> String {
        let mut id = String::new();
        if let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            id.push(c);
            self.pos += 1;
            while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                id.push(c);
                self.pos += 1;
            }
        }
        id
    }
}

/// Parses `text` into `ring`, resolving variable names through `names`.
pub fn parse_poly<K: Field>(ring: &Ring<K>, names: &[&str], text: &str) -> Result<Polynomial<K>> {
    if names.len() < ring.nvars {
        return Err(Error::ArityMismatch {
            expected: ring.nvars,
            found: names.len(),
        });
    }
    let k = &ring.field;
    let mut lx = Lexer::new(text);
    let mut terms = Vec::new();
    if lx.peek().is_none() {
        return lx.err("empty polynomial");
    }
    let mut first = true;
    while lx.peek().is_some() {
        let mut negative = false;
        match lx.peek() {
            Some('+') => {
                lx.bump();
            }
            Some('-') => {
                lx.bump();
                negative = true;
            }
            _ if !first => return lx.err("expected '+' or '-'"),
            _ => {}
        }
        first = false;
        let mut coeff = BigInt::from(1);
        let mut exps = [0u32; 12];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= lx.integer()?;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let col = lx.column();
                    let id = lx.identifier();
                    let Some(idx) = names[..ring.nvars].iter().position(|n| *n == id) else {
                        return Err(Error::Parse {
                            column: col,
                            message: alloc::format!("unknown variable '{}'", id),
                        });
                    };
                    let mut e = 1u32;
                    if lx.peek() == Some('^') {
                        lx.bump();
                        let v = lx.integer()?;
                        e = u32::try_from(v).map_err(|_| Error::Parse {
                            column: lx.column(),
                            message: "exponent too large".to_string(),
                        })?;
                    }
                    exps[idx] += e;
                }
                _ => return lx.err("expected a coefficient or a variable"),
            }
            if lx.peek() == Some('*') {
                lx.bump();
                continue;
            }
            break;
        }
        if negative {
            coeff = -coeff;
        }
        if exps.iter().any(|&e| e > u8::MAX as u32) {
            return lx.err("exponent too large");
        }
        terms.push((Monomial::from_exponents(&exps[..ring.nvars]), k.from_bigint(&coeff)));
        match lx.peek() {
            None | Some('+') | Some('-') => {}
            Some(_) => return lx.err("unexpected character"),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

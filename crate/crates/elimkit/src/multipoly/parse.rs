//! Text and JSON forms of integer polynomials.
//!
//! Variable slots: X1..X4 are 0..3 (y, z, zp/z' alias X2, X3, X4), the
//! parameter x is slot 4 and t is slot 5.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly};
use crate::error::{ElimError, Result};
use crate::exactalg::Ring;

pub const PARAM_X: usize = 4;
pub const PARAM_T: usize = 5;
pub const VAR_NAMES: [&str; 6] = ["X1", "X2", "X3", "X4", "x", "t"];

fn slot_of(name: &str) -> Option<usize> {
    Some(match name {
        "X1" => 0,
        "X2" | "y" => 1,
        "X3" | "z" => 2,
        "X4" | "zp" | "z'" => 3,
        "x" => PARAM_X,
        "t" => PARAM_T,
        _ => return None,
    })
}

/// Parses `+ - * ^`, parentheses, integer literals and the variables above.
pub fn parse_poly(src: &str) -> Result<MultiPoly<BigInt>> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ElimError {
        ElimError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly<BigInt>> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.plus(&rhs) } else { acc.minus(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly<BigInt>> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.times(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<BigInt>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.negate())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<BigInt>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u64 = e.try_into().map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<MultiPoly<BigInt>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'\'') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match slot_of(name) {
                    Some(i) => Ok(MultiPoly::var(i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

/// One term of the JSON form: `{"exps": [...], "coeff": "decimal"}`, exps
/// indexed by the variable slots above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exps: Vec<u32>,
    pub coeff: String,
}

impl MultiPoly<BigInt> {
    /// Terms in descending grevlex order, exponent vectors padded to `nvars`.
    pub fn to_json_terms(&self, nvars: usize) -> Vec<JsonTerm> {
        self.iter()
            .map(|(m, c)| JsonTerm {
                exps: m.padded(nvars),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut out = MultiPoly::default();
        for t in terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| ElimError::InvalidArgument(format!("bad coefficient '{}'", t.coeff)))?;
            out.add_term(Monomial::new(t.exps.clone()), &c);
        }
        Ok(out)
    }
}

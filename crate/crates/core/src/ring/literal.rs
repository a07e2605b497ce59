//! Textual ring elements: `-12`, `3+2i`, `1-w`, `T^2+T+1`.
//!
//! Polynomial coefficients are field indices. Over a prime field they are
//! reduced mod `p`; over a proper prime-power field an index `>= q` is
//! rejected since it names no element.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{poly, Ring, RingElement, RingKind};
use crate::error::{Error, Result};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { pos, msg: msg.into() }
}

impl Ring {
    fn variable(&self) -> Option<char> {
        match self.kind {
            RingKind::Integers => None,
            RingKind::GaussianIntegers => Some('i'),
            RingKind::EisensteinIntegers => Some('w'),
            RingKind::PolynomialsOverFq(_) => Some('T'),
        }
    }

    /// Parse a ring literal. Error positions are 0-based columns in `s`.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        self.parse_element_at(s, 0)
    }

    /// As [`Ring::parse_element`], with error columns shifted by `offset`.
    pub fn parse_element_at(&self, s: &str, offset: usize) -> Result<RingElement> {
        let chars: Vec<char> = s.chars().collect();
        let var = self.variable();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < chars.len() && chars[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let mut acc = self.zero();
        let mut first = true;
        skip_ws(&mut pos);
        if pos == chars.len() {
            return Err(err(offset + pos, "empty ring literal"));
        }
        while pos < chars.len() {
            let mut negative = false;
            if chars[pos] == '+' || chars[pos] == '-' {
                negative = chars[pos] == '-';
                pos += 1;
                skip_ws(&mut pos);
            } else if !first {
                return Err(err(offset + pos, format!("expected '+' or '-', found '{}'", chars[pos])));
            }
            first = false;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<BigInt> = if pos > start {
                Some(chars[start..pos].iter().collect::<String>().parse().unwrap())
            } else {
                None
            };
            let mut exp: u32 = 0;
            if pos < chars.len() && Some(chars[pos]) == var {
                pos += 1;
                exp = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let es = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if es == pos {
                        return Err(err(offset + pos, "expected an exponent"));
                    }
                    exp = chars[es..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err(offset + es, "exponent too large"))?;
                }
            } else if coeff.is_none() {
                return match chars.get(pos) {
                    Some(c) => Err(err(offset + pos, format!("unexpected '{c}'"))),
                    None => Err(err(offset + pos, "unexpected end of ring literal")),
                };
            }
            let c = self.coefficient(coeff.unwrap_or_else(BigInt::one), offset + start)?;
            let mut term = self.mul(&c, &self.pow(&self.generator(), exp));
            if negative {
                term = self.neg(&term);
            }
            acc = self.add(&acc, &term);
            skip_ws(&mut pos);
        }
        Ok(acc)
    }

    fn coefficient(&self, c: BigInt, pos: usize) -> Result<RingElement> {
        match self.kind {
            RingKind::PolynomialsOverFq(q) => {
                let f = self.fq();
                if f.degree() == 1 {
                    Ok(self.from_bigint(&c))
                } else {
                    match c.to_u32() {
                        Some(idx) if idx < q => Ok(RingElement::Poly(poly::constant(idx))),
                        _ => Err(err(pos, format!("coefficient {c} is not an index below {q}"))),
                    }
                }
            }
            _ => Ok(self.from_bigint(&c)),
        }
    }

    /// Inverse of [`Ring::parse_element`].
    pub fn show(&self, x: &RingElement) -> String {
        match x {
            RingElement::Int(n) => n.to_string(),
            RingElement::Quad(a, b) => {
                let v = self.variable().unwrap();
                let var_term = |b: &BigInt| -> String {
                    if b.is_one() {
                        v.to_string()
                    } else if *b == -BigInt::one() {
                        format!("-{v}")
                    } else {
                        format!("{b}{v}")
                    }
                };
                match (a.is_zero(), b.is_zero()) {
                    (_, true) => a.to_string(),
                    (true, false) => var_term(b),
                    (false, false) => {
                        let tail = var_term(&b.abs());
                        let sign = if b.is_negative() { '-' } else { '+' };
                        format!("{a}{sign}{tail}")
                    }
                }
            }
            RingElement::Poly(p) => {
                if p.is_empty() {
                    return "0".into();
                }
                let mut parts = Vec::new();
                for (k, &c) in p.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let mono = match k {
                        0 => String::new(),
                        1 => "T".into(),
                        _ => format!("T^{k}"),
                    };
                    parts.push(match (c, k) {
                        (_, 0) => c.to_string(),
                        (1, _) => mono,
                        _ => format!("{c}{mono}"),
                    });
                }
                parts.join("+")
            }
        }
    }
}

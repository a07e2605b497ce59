//! Generator expressions: `u[1] s[2] - 3/4*p[1+(4)] + (1/2+i)*s[3]* e[2]`.
//!
//! ```text
//! elem   := term (('+' | '-') term)*
//! term   := coeff | [coeff '*'] factor+
//! factor := 's[' rel ']' ['*'] | 'u[' rel ']' | 'e[' rel ']'
//!         | 'p[' rel '+(' rel ')]' | 'f[' rel ';' rel ']'
//! coeff  := rational | '(' gaussian-rational ')'
//! ```
//!
//! `f[m;n]` is the Bost–Connes projection onto the unit orbit of `n` mod `m`.
//! Error columns are 0-based. [`AlgebraElement::show`] prints in this
//! grammar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bost_connes::bc_f_by_rep;
use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::scalar::Scalar;
use crate::star::AlgebraElement;

pub fn parse_expression(text: &str, ring: &Ring) -> Result<AlgebraElement> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, ring };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let mut acc = AlgebraElement::zero(ring);
    let mut first = true;
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        let mut negative = false;
        match p.peek() {
            Some('+') | Some('-') => {
                negative = p.peek() == Some('-');
                p.pos += 1;
                p.skip_ws();
            }
            Some(c) if !first => return Err(p.err(format!("expected '+' or '-', found '{c}'"))),
            _ => {}
        }
        first = false;
        let mut term = p.term()?;
        if negative {
            term = -&term;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::ParseError { pos, msg: msg.into() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.err(format!("expected '{c}', found '{x}'"))),
            None => Err(self.err(format!("expected '{c}'"))),
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let ring = self.ring;
        let mut coeff = None;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '(') {
            coeff = Some(self.coeff()?);
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(AlgebraElement::constant(ring, coeff.unwrap()));
            }
            self.pos += 1;
            self.skip_ws();
        }
        let mut word = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('s' | 'u' | 'e' | 'p' | 'f') => word = &word * &self.factor()?,
                _ => break,
            }
        }
        Ok(match coeff {
            Some(c) => word.scale(&c),
            None => word,
        })
    }

    /// Ring literal up to (not including) `stop`, which must occur.
    fn literal_until(&mut self, stop: &str) -> Result<(RingElement, usize)> {
        let start = self.pos;
        let stop: Vec<char> = stop.chars().collect();
        let mut end = start;
        while end + stop.len() <= self.chars.len() && self.chars[end..end + stop.len()] != stop[..] {
            if self.chars[end] == ']' {
                break;
            }
            end += 1;
        }
        if end + stop.len() > self.chars.len() || self.chars[end..end + stop.len()] != stop[..] {
            let pos = end.min(self.chars.len());
            let what: String = stop.iter().collect();
            return Err(self.err_at(pos, format!("expected '{what}'")));
        }
        let text: String = self.chars[start..end].iter().collect();
        let x = self.ring.parse_element_at(&text, start)?;
        self.pos = end + stop.len();
        Ok((x, start))
    }

    fn nonzero(&self, x: &RingElement, pos: usize) -> Result<()> {
        if self.ring.is_zero(x) {
            return Err(Error::DegenerateInput(format!("zero modulus at column {pos}")));
        }
        Ok(())
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let ring = self.ring;
        let name = self.peek().ok_or_else(|| self.err("expected a generator"))?;
        if !matches!(name, 's' | 'u' | 'e' | 'p' | 'f') {
            return Err(self.err(format!("expected a generator, found '{name}'")));
        }
        self.pos += 1;
        self.expect('[')?;
        let out = match name {
            's' => {
                let (m, at) = self.literal_until("]")?;
                self.nonzero(&m, at)?;
                let s = AlgebraElement::s(ring, &m)?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    s.adjoint()
                } else {
                    s
                }
            }
            'u' => AlgebraElement::u(ring, &self.literal_until("]")?.0),
            'e' => {
                let (m, at) = self.literal_until("]")?;
                self.nonzero(&m, at)?;
                AlgebraElement::e(ring, &m)?
            }
            'p' => {
                let (d, _) = self.literal_until("+(")?;
                let (l, at) = self.literal_until(")")?;
                self.nonzero(&l, at)?;
                self.expect(']')?;
                return Ok(AlgebraElement::p(ring, &Coset::new(ring, d, l)?));
            }
            _ => {
                let (m, at) = self.literal_until(";")?;
                self.nonzero(&m, at)?;
                let (n, _) = self.literal_until("]")?;
                return bc_f_by_rep(ring, &m, &n);
            }
        };
        Ok(out)
    }

    fn rational(&mut self) -> Result<BigRational> {
        let int = |p: &mut Self| -> Result<BigInt> {
            let start = p.pos;
            while p.peek().is_some_and(|c| c.is_ascii_digit()) {
                p.pos += 1;
            }
            if start == p.pos {
                return Err(p.err("expected digits"));
            }
            Ok(p.chars[start..p.pos].iter().collect::<String>().parse().unwrap())
        };
        let num = int(self)?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let den = int(self)?;
            if den.is_zero() {
                return Err(self.err_at(at, "zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    /// `3/4`, or `(a+bi)` with rational `a`, `b`, either part optional.
    fn coeff(&mut self) -> Result<Scalar> {
        if self.peek() != Some('(') {
            return Ok(Scalar::real(self.rational()?));
        }
        self.pos += 1;
        let (mut re, mut im) = (BigRational::zero(), BigRational::zero());
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek() == Some(')') && !first {
                self.pos += 1;
                break;
            }
            let mut sign = BigRational::one();
            match self.peek() {
                Some('+') | Some('-') => {
                    if self.peek() == Some('-') {
                        sign = -sign;
                    }
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) if !first => return Err(self.err(format!("expected '+', '-' or ')', found '{c}'"))),
                None => return Err(self.err("expected ')'")),
                _ => {}
            }
            first = false;
            let mag = if self.peek() == Some('i') { BigRational::one() } else { self.rational()? };
            if self.peek() == Some('i') {
                self.pos += 1;
                im += sign * mag;
            } else {
                re += sign * mag;
            }
        }
        Ok(Scalar::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<AlgebraElement> {
        parse_expression(s, &Ring::integers())
    }

    #[test]
    fn examples() {
        let z = Ring::integers();
        let x = parse("u[1] s[2]").unwrap();
        assert_eq!(x, &AlgebraElement::u(&z, &z.one()) * &AlgebraElement::s(&z, &z.from_i64(2)).unwrap());
        assert_eq!(x.show(), "u[1] s[2]");
        assert!(parse("s[2]* u[3] s[2]").unwrap().is_zero());
        assert_eq!(parse("u[1"), Err(Error::ParseError { pos: 3, msg: "expected ']'".into() }));
        assert!(matches!(parse("e[0]"), Err(Error::DegenerateInput(_))));
        assert!(matches!(parse("p[1+(0)]"), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn coefficients_and_constants() {
        let z = Ring::integers();
        assert_eq!(parse("1").unwrap(), AlgebraElement::one(&z));
        assert_eq!(parse("3/4 - 3/4").unwrap(), AlgebraElement::zero(&z));
        let x = parse("(1/2-1/3i)*e[2] + (i)*u[1]").unwrap();
        assert_eq!(parse(&x.show()).unwrap(), x);
        assert!(matches!(parse("2*"), Err(Error::ParseError { pos: 2, .. })));
        assert!(matches!(parse("1/0"), Err(Error::ParseError { pos: 2, .. })));
    }

    #[test]
    fn other_rings() {
        let g = Ring::gaussian();
        let x = parse_expression("s[1+i]* p[i+(2)] u[1-i] - 2*f[1+i;1]", &g).unwrap();
        assert_eq!(parse_expression(&x.show(), &g).unwrap(), x);
        let f = Ring::poly_fq(3).unwrap();
        let y = parse_expression("s[T^2+1] u[T] + p[2T+(T^2)]", &f).unwrap();
        assert_eq!(parse_expression(&y.show(), &f).unwrap(), y);
        assert!(matches!(parse_expression("f[T;1]", &f), Err(Error::UnsupportedRing(_))));
    }
}

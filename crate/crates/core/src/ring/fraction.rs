//! Elements of the quotient field `Q(R)`.

use super::{Ring, RingElement};
use crate::error::{Error, Result};

/// `num / den` in lowest terms, `den` a canonical associate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction {
    num: RingElement,
    den: RingElement,
}

impl Fraction {
    pub fn new(ring: &Ring, num: RingElement, den: RingElement) -> Result<Fraction> {
        if ring.is_zero(&den) {
            return Err(Error::DegenerateInput("zero denominator".into()));
        }
        let g = ring.gcd(&num, &den);
        let (num, den) = (ring.exact_div(&num, &g).unwrap(), ring.exact_div(&den, &g).unwrap());
        let (u, den) = ring.canonical_associate(&den)?;
        Ok(Fraction { num: ring.mul(&u, &num), den })
    }

    pub fn integer(ring: &Ring, x: RingElement) -> Fraction {
        Fraction { num: x, den: ring.one() }
    }

    pub fn num(&self) -> &RingElement {
        &self.num
    }

    pub fn den(&self) -> &RingElement {
        &self.den
    }

    pub fn is_zero(&self, ring: &Ring) -> bool {
        ring.is_zero(&self.num)
    }

    pub fn is_integral(&self, ring: &Ring) -> bool {
        ring.is_one(&self.den)
    }

    /// The ring element, if integral.
    pub fn to_integral(&self, ring: &Ring) -> Option<RingElement> {
        self.is_integral(ring).then(|| self.num.clone())
    }

    pub fn add(&self, ring: &Ring, o: &Fraction) -> Fraction {
        let num = ring.add(&ring.mul(&self.num, &o.den), &ring.mul(&o.num, &self.den));
        Fraction::new(ring, num, ring.mul(&self.den, &o.den)).unwrap()
    }

    pub fn neg(&self, ring: &Ring) -> Fraction {
        Fraction { num: ring.neg(&self.num), den: self.den.clone() }
    }

    pub fn sub(&self, ring: &Ring, o: &Fraction) -> Fraction {
        self.add(ring, &o.neg(ring))
    }

    pub fn mul(&self, ring: &Ring, o: &Fraction) -> Fraction {
        Fraction::new(ring, ring.mul(&self.num, &o.num), ring.mul(&self.den, &o.den)).unwrap()
    }

    pub fn inv(&self, ring: &Ring) -> Result<Fraction> {
        Fraction::new(ring, self.den.clone(), self.num.clone())
    }

    pub fn div(&self, ring: &Ring, o: &Fraction) -> Result<Fraction> {
        Ok(self.mul(ring, &o.inv(ring)?))
    }

    pub fn show(&self, ring: &Ring) -> String {
        if self.is_integral(ring) {
            ring.show(&self.num)
        } else {
            format!("({})/({})", ring.show(&self.num), ring.show(&self.den))
        }
    }
}

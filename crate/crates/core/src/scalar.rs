//! Exact complex rationals `re + im*i`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Scalar {
        Scalar { re, im }
    }

    pub fn zero() -> Scalar {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn i() -> Scalar {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(re: BigRational) -> Scalar {
        Scalar::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2`, exact.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    pub fn norm_sq_f64(&self) -> f64 {
        self.norm_sq().to_f64().unwrap_or(f64::NAN)
    }

    pub fn scale_f64(&self, w: f64) -> (f64, f64) {
        let (re, im) = self.to_f64();
        (re * w, im * w)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational scalars print as `3/4`, complex ones as `(1/2+1/3i)`; this is
/// also the coefficient syntax of the expression grammar.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        let im_abs = fmt_rat(&self.im.abs());
        let im = if im_abs == "1" { String::new() } else { im_abs };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "({sign}{im}i)")
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "({}{sign}{im}i)", fmt_rat(&self.re))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Scalar::new(BigRational::new(1.into(), 2.into()), BigRational::one());
        let prod = &a * &a.conj();
        assert_eq!(prod, Scalar::ratio(5, 4));
        assert_eq!(a.norm_sq(), BigRational::new(5.into(), 4.into()));
        assert!((&a - &a).is_zero());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::ratio(3, 4).to_string(), "3/4");
        assert_eq!(Scalar::from_int(-2).to_string(), "-2");
        assert_eq!(Scalar::i().to_string(), "(i)");
        let z = Scalar::new(BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 3.into()));
        assert_eq!(z.to_string(), "(1/2-1/3i)");
    }
}

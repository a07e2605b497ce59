//! Arithmetic in the imaginary quadratic rings `Z[i]` and `Z[w]`,
//! `w = exp(2 pi i / 3)`, on coordinate pairs `a + b*theta`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quad {
    /// `theta = i`, `theta^2 = -1`.
    Gaussian,
    /// `theta = w`, `w^2 = -1 - w`.
    Eisenstein,
}

pub type Pair = (BigInt, BigInt);

impl Quad {
    pub fn mul(self, x: &Pair, y: &Pair) -> Pair {
        let (a, b) = x;
        let (c, d) = y;
        match self {
            Quad::Gaussian => (a * c - b * d, a * d + b * c),
            Quad::Eisenstein => {
                let bd = b * d;
                (a * c - &bd, a * d + b * c - bd)
            }
        }
    }

    pub fn conj(self, x: &Pair) -> Pair {
        let (a, b) = x;
        match self {
            Quad::Gaussian => (a.clone(), -b),
            Quad::Eisenstein => (a - b, -b),
        }
    }

    pub fn norm(self, x: &Pair) -> BigInt {
        let (a, b) = x;
        match self {
            Quad::Gaussian => a * a + b * b,
            Quad::Eisenstein => a * a - a * b + b * b,
        }
    }

    /// `x * theta`.
    pub fn times_theta(self, x: &Pair) -> Pair {
        let (a, b) = x;
        match self {
            Quad::Gaussian => (-b, a.clone()),
            Quad::Eisenstein => (-b, a - b),
        }
    }

    pub fn units(self) -> Vec<Pair> {
        let one = BigInt::one();
        let zero = BigInt::zero();
        match self {
            Quad::Gaussian => vec![
                (one.clone(), zero.clone()),
                (zero.clone(), one.clone()),
                (-&one, zero.clone()),
                (zero, -one),
            ],
            Quad::Eisenstein => vec![
                (one.clone(), zero.clone()),
                (one.clone(), one.clone()),
                (zero.clone(), one.clone()),
                (-&one, zero.clone()),
                (-&one, -&one),
                (zero, -one),
            ],
        }
    }

    /// Euclidean division with nearest-point rounding; the remainder has
    /// norm strictly below `norm(y)`.
    pub fn div_rem(self, x: &Pair, y: &Pair) -> (Pair, Pair) {
        let n = self.norm(y);
        let (s, t) = self.mul(x, &self.conj(y));
        let q = (round_div(&s, &n), round_div(&t, &n));
        let qy = self.mul(&q, y);
        let r = (&x.0 - &qy.0, &x.1 - &qy.1);
        (q, r)
    }

    /// Canonical associate and the unit achieving it.
    pub fn canonical(self, x: &Pair) -> (Pair, Pair) {
        let cands = self.units().into_iter().map(|u| {
            let v = self.mul(&u, x);
            (u, v)
        });
        match self {
            // argument in [0, pi/2): a > 0, b >= 0
            Quad::Gaussian => cands
                .into_iter()
                .find(|(_, v)| v.0.is_positive() && !v.1.is_negative())
                .expect("exactly one associate lies in the first quadrant"),
            // lexicographically least (a, b) among associates with a > 0
            Quad::Eisenstein => cands
                .filter(|(_, v)| v.0.is_positive())
                .min_by(|l, r| l.1.cmp(&r.1))
                .expect("an open half-plane contains an associate"),
        }
    }

    /// Hermite basis `(A, 0), (B, D)` of the sublattice `m * R`.
    pub fn hermite(self, m: &Pair) -> Hermite {
        let v1 = m.clone();
        let v2 = self.times_theta(m);
        let ext = v1.1.extended_gcd(&v2.1);
        let d = ext.gcd.abs();
        let sign = if ext.gcd.is_negative() { -BigInt::one() } else { BigInt::one() };
        let (s, t) = (ext.x * &sign, ext.y * &sign);
        let det = (&v1.0 * &v2.1 - &v2.0 * &v1.1).abs();
        let a = &det / &d;
        let b_raw = &s * &v1.0 + &t * &v2.0;
        let b = b_raw.mod_floor(&a);
        Hermite { a, b, d }
    }
}

impl Quad {
    /// [`Hermite::reduce`] in machine integers; `None` if an input does not
    /// fit in `i64`. Agrees with the big-integer path.
    pub fn reduce_small(self, x: &Pair, m: &Pair) -> Option<Pair> {
        let small = |v: &BigInt| v.to_i64().map(i128::from);
        let (x0, x1, m0, m1) = (small(&x.0)?, small(&x.1)?, small(&m.0)?, small(&m.1)?);
        let (t0, t1) = match self {
            Quad::Gaussian => (-m1, m0),
            Quad::Eisenstein => (-m1, m0 - m1),
        };
        let (g, s, t) = xgcd_i128(m1, t1);
        let (g, s, t) = if g < 0 { (-g, -s, -t) } else { (g, s, t) };
        let det = (m0 * t1 - t0 * m1).abs();
        let a = det / g;
        let b = (s * m0 + t * t0).rem_euclid(a);
        let q = x1.div_euclid(g);
        let y = x1 - q * g;
        let xr = (x0 - q * b).rem_euclid(a);
        Some((BigInt::from(xr), BigInt::from(y)))
    }
}

impl Quad {
    /// `d | x` iff `N(d)` divides both coordinates of `x * conj(d)`.
    pub fn divides_small(self, d: &Pair, x: &Pair) -> Option<bool> {
        let small = |v: &BigInt| v.to_i64().map(i128::from);
        let (a, b, c, e) = (small(&x.0)?, small(&x.1)?, small(&d.0)?, small(&d.1)?);
        let (n, p0, p1) = match self {
            // (a + bi)(c - ei)
            Quad::Gaussian => (c * c + e * e, a * c + b * e, b * c - a * e),
            // conj(c + ew) = (c - e) - ew
            Quad::Eisenstein => {
                let (cc, ce) = (c - e, -e);
                let be = b * ce;
                (c * c - c * e + e * e, a * cc - be, a * ce + b * cc - be)
            }
        };
        Some(p0 % n == 0 && p1 % n == 0)
    }
}

fn xgcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

fn round_div(s: &BigInt, n: &BigInt) -> BigInt {
    // floor((2s + n) / 2n)
    let two = BigInt::from(2);
    (s * &two + n).div_floor(&(n * &two))
}

#[derive(Debug, Clone)]
pub struct Hermite {
    pub a: BigInt,
    pub b: BigInt,
    pub d: BigInt,
}

impl Hermite {
    pub fn reduce(&self, x: &Pair) -> Pair {
        let t = x.1.div_floor(&self.d);
        let y = &x.1 - &t * &self.d;
        let xr = (&x.0 - &t * &self.b).mod_floor(&self.a);
        (xr, y)
    }
}

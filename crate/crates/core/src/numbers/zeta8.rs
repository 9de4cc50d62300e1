//! The cyclotomic field Q(zeta_8) in the power basis `1, z, z^2, z^3`
//! with `z^4 = -1`.
//!
//! The representation is the unique normal form in the power basis, so
//! equality is structural. `i = z^2` and `sqrt(2) = z - z^3` are derived
//! constants.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Zeta8Field};
use crate::numbers::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Zeta8 {
    /// Coordinates of `c[0] + c[1] z + c[2] z^2 + c[3] z^3`.
    c: [Rational; 4],
}

impl Zeta8 {
    pub fn new(c: [Rational; 4]) -> Self {
        Zeta8 { c }
    }

    pub fn from_rational(r: Rational) -> Self {
        Zeta8 {
            c: [r, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// Ratio of two integers; `den` must be nonzero.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// `z^k` for any integer `k`, reduced via `z^4 = -1`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        if k < 4 {
            c[k] = Rational::one();
        } else {
            c[k - 4] = -Rational::one();
        }
        Zeta8 { c }
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// `i = z^2`.
    pub fn i() -> Self {
        Self::zeta_pow(2)
    }

    /// `sqrt(2) = z - z^3`.
    pub fn sqrt2() -> Self {
        Self::zeta_pow(1) - Self::zeta_pow(3)
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.c
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Galois conjugate `z -> z^j` for odd `j`.
    fn conjugate(&self, j: usize) -> Self {
        debug_assert!(j % 2 == 1);
        let mut out = Zeta8::zero();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let e = (k * j) % 8;
            if e < 4 {
                out.c[e] += ck;
            } else {
                out.c[e - 4] -= ck;
            }
        }
        out
    }

    /// Multiplicative inverse via the product of Galois conjugates:
    /// `a^-1 = sigma_3(a) sigma_5(a) sigma_7(a) / N(a)` with `N(a)` rational.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let prod = self.conjugate(3) * self.conjugate(5) * self.conjugate(7);
        let norm = self.clone() * prod.clone();
        let n = norm
            .as_rational()
            .expect("norm of a Q(zeta_8) element is rational");
        debug_assert!(!n.is_zero());
        let ninv = n.recip();
        Ok(Zeta8 {
            c: [
                &prod.c[0] * &ninv,
                &prod.c[1] * &ninv,
                &prod.c[2] * &ninv,
                &prod.c[3] * &ninv,
            ],
        })
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Zeta8::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            n >>= 1;
            if n > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Zero for Zeta8 {
    fn zero() -> Self {
        Zeta8 {
            c: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for Zeta8 {
    fn one() -> Self {
        Zeta8::from_int(1)
    }
}

impl Add for Zeta8 {
    type Output = Zeta8;
    fn add(mut self, rhs: Zeta8) -> Zeta8 {
        self += &rhs;
        self
    }
}

impl AddAssign<&Zeta8> for Zeta8 {
    fn add_assign(&mut self, rhs: &Zeta8) {
        for k in 0..4 {
            self.c[k] += &rhs.c[k];
        }
    }
}

impl Sub for Zeta8 {
    type Output = Zeta8;
    fn sub(mut self, rhs: Zeta8) -> Zeta8 {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Zeta8> for Zeta8 {
    fn sub_assign(&mut self, rhs: &Zeta8) {
        for k in 0..4 {
            self.c[k] -= &rhs.c[k];
        }
    }
}

impl Neg for Zeta8 {
    type Output = Zeta8;
    fn neg(mut self) -> Zeta8 {
        for k in 0..4 {
            self.c[k] = -std::mem::replace(&mut self.c[k], Rational::zero());
        }
        self
    }
}

impl Mul for Zeta8 {
    type Output = Zeta8;
    fn mul(self, rhs: Zeta8) -> Zeta8 {
        &self * &rhs
    }
}

impl Mul<&Zeta8> for &Zeta8 {
    type Output = Zeta8;
    fn mul(self, rhs: &Zeta8) -> Zeta8 {
        let mut out = Zeta8::zero();
        for (a, ca) in self.c.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.c.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let p = ca * cb;
                let k = a + b;
                if k < 4 {
                    out.c[k] += p;
                } else {
                    out.c[k - 4] -= p;
                }
            }
        }
        out
    }
}

impl MulAssign<&Zeta8> for Zeta8 {
    fn mul_assign(&mut self, rhs: &Zeta8) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{ck}")?,
                1 => write!(f, "({ck})*z")?,
                _ => write!(f, "({ck})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Field object for Q(zeta_8).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Q8;

impl Field for Q8 {
    type Elem = Zeta8;

    fn zero(&self) -> Zeta8 {
        Zeta8::zero()
    }

    fn one(&self) -> Zeta8 {
        Zeta8::one()
    }

    fn from_i64(&self, n: i64) -> Zeta8 {
        Zeta8::from_int(n)
    }

    fn add(&self, a: &Zeta8, b: &Zeta8) -> Zeta8 {
        let mut out = a.clone();
        out += b;
        out
    }

    fn sub(&self, a: &Zeta8, b: &Zeta8) -> Zeta8 {
        let mut out = a.clone();
        out -= b;
        out
    }

    fn neg(&self, a: &Zeta8) -> Zeta8 {
        -a.clone()
    }

    fn mul(&self, a: &Zeta8, b: &Zeta8) -> Zeta8 {
        a * b
    }

    fn inv(&self, a: &Zeta8) -> Result<Zeta8> {
        a.inv()
    }

    fn is_zero(&self, a: &Zeta8) -> bool {
        Zero::is_zero(a)
    }

    fn sqrt_minus_one(&self) -> Option<Zeta8> {
        Some(Zeta8::i())
    }
}

impl Zeta8Field for Q8 {
    fn zeta8(&self) -> Zeta8 {
        Zeta8::zeta()
    }

    fn zeta8_pow(&self, k: i64) -> Zeta8 {
        Zeta8::zeta_pow(k)
    }
}

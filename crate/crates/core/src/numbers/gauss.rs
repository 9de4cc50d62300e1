//! Gaussian integers Z[i] and the primary-prime splitting of rational
//! primes p = 1 mod 4.
//!
//! An element coprime to 1+i has a unique *primary* associate, the one
//! congruent to 1 mod 2+2i. For a split prime p the two primary elements
//! above p are complex conjugates; we canonically return the one with
//! positive imaginary part.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new<T: Into<BigInt>, U: Into<BigInt>>(re: T, im: U) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = GaussInt::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d` when `d` divides `self` in Z[i].
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let t = self * &d.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt { re: qr, im: qi })
        } else {
            None
        }
    }

    pub fn is_divisible_by(&self, d: &GaussInt) -> bool {
        self.div_exact(d).is_some()
    }

    /// `self = 1 mod 2+2i`.
    pub fn is_primary(&self) -> bool {
        (self - &GaussInt::one()).is_divisible_by(&GaussInt::new(2, 2))
    }
}

impl Add for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Trial-division primality test, enough for the desk-scale primes here.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits a prime p = 1 mod 4 as p = pi * conj(pi) and returns the primary
/// factor pi = a+bi with pi = 1 mod 2+2i and im(pi) > 0.
pub fn gauss_primary_split(p: u64) -> Result<GaussInt> {
    if !is_prime_u64(p) {
        return Err(invalid!("{p} is not prime"));
    }
    if p % 4 != 1 {
        return Err(invalid!("{p} is not congruent to 1 mod 4"));
    }
    let mut a = 1u64;
    while a * a <= p {
        let rest = p - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            // All eight unit-associates and conjugates of a+bi.
            let (a, b) = (a as i64, b as i64);
            for (re, im) in [
                (a, b),
                (a, -b),
                (-a, b),
                (-a, -b),
                (b, a),
                (b, -a),
                (-b, a),
                (-b, -a),
            ] {
                let cand = GaussInt::new(re, im);
                if im > 0 && cand.is_primary() {
                    return Ok(cand);
                }
            }
            unreachable!("a split prime always has a primary factor with im > 0");
        }
        a += 1;
    }
    unreachable!("p = 1 mod 4 is a sum of two squares");
}

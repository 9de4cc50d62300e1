//! Field abstraction shared by the exact and the finite-field back ends.
//!
//! Arithmetic goes through a field object rather than bare element methods
//! because `Fp` carries a runtime modulus; the object holds that context and
//! elements stay plain values. [`Q8`](crate::numbers::Q8) and
//! [`Fp`](crate::numbers::Fp) are the two instantiations, so every identity
//! below can be checked exactly over Q(zeta_8) and probabilistically over
//! F_p with the same code.

use std::fmt::{Debug, Display};

use crate::error::Result;

pub trait Field: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug + Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)] // the field object is the context
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// A square root of -1, when the field has one.
    fn sqrt_minus_one(&self) -> Option<Self::Elem> {
        None
    }
}

/// A field with a distinguished primitive 8th root of unity `eps`,
/// i.e. a fixed solution of `eps^4 = -1`.
pub trait Zeta8Field: Field {
    fn zeta8(&self) -> Self::Elem;

    /// `eps^k` for any integer exponent, reduced mod 8.
    fn zeta8_pow(&self, k: i64) -> Self::Elem {
        let k = k.rem_euclid(8) as u64;
        self.pow(&self.zeta8(), k)
    }
}

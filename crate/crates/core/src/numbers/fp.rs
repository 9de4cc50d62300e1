//! Prime fields F_p with odd p, as a field object over plain `u64`
//! residues in `[0, p)`.

use crate::error::{invalid, Error, Result};
use crate::field::{Field, Zeta8Field};
use crate::numbers::gauss::is_prime_u64;

/// Field object for F_p. Construct with [`Fp::new`]; `zeta8` and the square
/// root of -1 are found once at construction when they exist.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u64,
    zeta8: Option<u64>,
    sqrt_m1: Option<u64>,
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Fp {
    /// An odd prime field.
    pub fn new(p: u64) -> Result<Fp> {
        if !is_prime_u64(p) {
            return Err(invalid!("{p} is not prime"));
        }
        if p == 2 {
            return Err(invalid!("characteristic 2 is not supported"));
        }
        let sqrt_m1 = if p % 4 == 1 {
            Some(find_sqrt_minus_one(p))
        } else {
            None
        };
        let zeta8 = if p % 8 == 1 { Some(find_zeta8(p)) } else { None };
        Ok(Fp { p, zeta8, sqrt_m1 })
    }

    /// Like [`Fp::new`] but requires p = 1 mod 8, so that the field contains
    /// a primitive 8th root of unity.
    pub fn with_zeta8(p: u64) -> Result<Fp> {
        let f = Fp::new(p)?;
        if f.zeta8.is_none() {
            return Err(invalid!("{p} is not congruent to 1 mod 8"));
        }
        Ok(f)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn add_raw(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub_raw(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow_raw(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_raw(acc, a);
            }
            n >>= 1;
            if n > 0 {
                a = self.mul_raw(a, a);
            }
        }
        acc
    }

    pub fn inv_raw(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2).
        Ok(self.pow_raw(a, self.p - 2))
    }

    /// Legendre symbol as +1, 0, -1.
    pub fn legendre(&self, a: u64) -> i32 {
        if a == 0 {
            return 0;
        }
        let e = self.pow_raw(a, (self.p - 1) / 2);
        if e == 1 {
            1
        } else {
            -1
        }
    }

    /// A square root by Tonelli-Shanks, `None` for non-residues.
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if self.legendre(a) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow_raw(a, (p + 1) / 4));
        }
        // p = 1 mod 4: full Tonelli-Shanks.
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while self.legendre(z) != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow_raw(z, q);
        let mut t = self.pow_raw(a, q);
        let mut r = self.pow_raw(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mul_raw(t2, t2);
                i += 1;
                if i == m {
                    return None; // unreachable for residues
                }
            }
            let b = self.pow_raw(c, 1 << (m - i - 1));
            m = i;
            c = self.mul_raw(b, b);
            t = self.mul_raw(t, c);
            r = self.mul_raw(r, b);
        }
        Some(r)
    }

    /// All solutions of `x^4 = c`, sorted; the list has 0, 1, 2 or 4 entries.
    pub fn fourth_roots(&self, c: u64) -> Vec<u64> {
        debug_assert!(c < self.p);
        if c == 0 {
            return vec![0];
        }
        let mut roots = Vec::new();
        if let Some(s) = self.sqrt(c) {
            for t in [s, self.p - s] {
                if let Some(x) = self.sqrt(t) {
                    roots.push(x);
                    roots.push(self.p - x);
                }
            }
        }
        roots.sort_unstable();
        roots.dedup();
        roots
    }
}

fn find_sqrt_minus_one(p: u64) -> u64 {
    debug_assert!(p % 4 == 1);
    let f = Fp {
        p,
        zeta8: None,
        sqrt_m1: None,
    };
    for a in 2..p {
        let b = f.pow_raw(a, (p - 1) / 4);
        if f.mul_raw(b, b) == p - 1 {
            return b;
        }
    }
    unreachable!("p = 1 mod 4 has a square root of -1");
}

/// Deterministic element of multiplicative order exactly 8: the smallest
/// solution of `e^4 = -1` below a scan bound, else the first power-residue
/// construction that works.
fn find_zeta8(p: u64) -> u64 {
    debug_assert!(p % 8 == 1);
    let f = Fp {
        p,
        zeta8: None,
        sqrt_m1: None,
    };
    for e in 2..p.min(1000) {
        if f.pow_raw(e, 4) == p - 1 {
            return e;
        }
    }
    for a in 2..p {
        let z = f.pow_raw(a, (p - 1) / 8);
        if f.pow_raw(z, 4) == p - 1 {
            return z;
        }
    }
    unreachable!("p = 1 mod 8 has elements of order 8");
}

/// The distinguished 8th root of unity of F_p; errors unless p = 1 mod 8.
pub fn fp_zeta8(p: u64) -> Result<u64> {
    let f = Fp::with_zeta8(p)?;
    Ok(f.zeta8.unwrap())
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.add_raw(*a, *b)
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.sub_raw(*a, *b)
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_raw(*a, *b)
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        self.inv_raw(*a)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sqrt_minus_one(&self) -> Option<u64> {
        self.sqrt_m1
    }
}

impl Zeta8Field for Fp {
    fn zeta8(&self) -> u64 {
        self.zeta8
            .expect("field constructed without an 8th root of unity")
    }
}

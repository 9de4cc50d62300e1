//! Finite-level matrix checks over Z/n behind the Brauer bounds: the
//! embedding of Z[i] into 2x2 matrices, the mod-16 commutator kernel
//! sweep, the mod-l^2 conjugation-fixed sweeps for l = 3, 5, and
//! multiplicative orders in (Z[i]/l)*.
//!
//! The basis convention sends `[i]` to the matrix `[[0,-1],[1,0]]`, so the
//! image of Z[i]/n is the set of matrices `[[a,-b],[b,a]]`, and its
//! anti-diagonal complement (the image of Z[i] times the swap matrix) is
//! `[[a,b],[b,-a]]`. Every claim is checked by exhaustion at the exact
//! finite level at which it is used; the sweeps are desk-scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::numbers::{is_prime_u64, GaussInt};

/// A 2x2 matrix over Z/n.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat2Mod {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

impl Mat2Mod {
    pub fn new(n: u64, a: u64, b: u64, c: u64, d: u64) -> Self {
        assert!(n >= 2);
        Mat2Mod {
            n,
            a: a % n,
            b: b % n,
            c: c % n,
            d: d % n,
        }
    }

    pub fn identity(n: u64) -> Self {
        Mat2Mod::new(n, 1, 0, 0, 1)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let m = |x: u64, y: u64| (x * y) % n;
        Mat2Mod {
            n,
            a: (m(self.a, rhs.a) + m(self.b, rhs.c)) % n,
            b: (m(self.a, rhs.b) + m(self.b, rhs.d)) % n,
            c: (m(self.c, rhs.a) + m(self.d, rhs.c)) % n,
            d: (m(self.c, rhs.b) + m(self.d, rhs.d)) % n,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let s = |x: u64, y: u64| (x + n - y) % n;
        Mat2Mod {
            n,
            a: s(self.a, rhs.a),
            b: s(self.b, rhs.b),
            c: s(self.c, rhs.c),
            d: s(self.d, rhs.d),
        }
    }

    pub fn scalar_mul(&self, k: u64) -> Self {
        let n = self.n;
        Mat2Mod {
            n,
            a: (self.a * k) % n,
            b: (self.b * k) % n,
            c: (self.c * k) % n,
            d: (self.d * k) % n,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    /// Membership in the image of Z[i]/n: the matrices `[[a,-b],[b,a]]`.
    pub fn is_in_gauss_class(&self) -> bool {
        self.a == self.d && (self.b + self.c).is_multiple_of(self.n)
    }

    /// Inverse via the adjugate; `None` when the determinant is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let det = ((self.a * self.d) % n + n - (self.b * self.c) % n) % n;
        let det_inv = mod_inverse(det, n)?;
        let neg = |x: u64| (n - x % n) % n;
        Some(
            Mat2Mod {
                n,
                a: self.d,
                b: neg(self.b),
                c: neg(self.c),
                d: self.a,
            }
            .scalar_mul(det_inv),
        )
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    // extended Euclid
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

fn bigint_mod(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n)).to_u64().unwrap()
}

/// The matrix of `a+bi` acting on the rank-2 module, in the basis where
/// `[i]` is `[[0,-1],[1,0]]`: namely `[[a,-b],[b,a]]` mod n.
pub fn gauss_matrix_mod(alpha: &GaussInt, n: u64) -> Mat2Mod {
    let a = bigint_mod(&alpha.re, n);
    let b = bigint_mod(&alpha.im, n);
    Mat2Mod::new(n, a, (n - b) % n, b, a)
}

/// Exhaustive mod-16 sweep: for every matrix A with `sA - As` in the image
/// of Z[i]/16, where `s` is the matrix of `1+4i`, the commutator condition
/// forces `8(a-d) = 8(b+c) = 0` and `8A` lies in the image of Z[i]/16.
pub fn verify_terib_kernel() -> bool {
    let n = 16u64;
    let s = gauss_matrix_mod(&GaussInt::new(1, 4), n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let m = Mat2Mod { n, a, b, c, d };
                    let comm = s.mul(&m).sub(&m.mul(&s));
                    if !comm.is_in_gauss_class() {
                        continue;
                    }
                    let eight_ad = (8 * (a + n - d)) % n;
                    let eight_bc = (8 * (b + c)) % n;
                    if eight_ad != 0 || eight_bc != 0 {
                        return false;
                    }
                    if !m.scalar_mul(8).is_in_gauss_class() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exhaustive mod-l^2 sweep for l in {3, 5}: every anti-diagonal matrix
/// `x = [[a,b],[b,-a]]` over Z/l^2 fixed by conjugation with the matrix of
/// `(1+4i)^4 = 161-240i` is killed by l. Also asserts that identity in
/// Z[i] and that 240 has l-valuation exactly 1.
pub fn verify_odd_square_kill(ell: u64) -> Result<bool> {
    if ell != 3 && ell != 5 {
        return Err(invalid!("sweep is defined for l in {{3, 5}}, got {ell}"));
    }
    let pow4 = GaussInt::new(1, 4).pow(4);
    assert_eq!(pow4, GaussInt::new(161, -240));
    assert_eq!(240 % ell, 0);
    assert_ne!(240 % (ell * ell), 0);
    let n = ell * ell;
    let u = gauss_matrix_mod(&pow4, n);
    let u_inv = u
        .inverse()
        .ok_or_else(|| invalid!("matrix of (1+4i)^4 is not invertible mod {n}"))?;
    for a in 0..n {
        for b in 0..n {
            let x = Mat2Mod::new(n, a, b, b, (n - a) % n);
            if u.mul(&x).mul(&u_inv) != x {
                continue;
            }
            if !x.scalar_mul(ell).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(-1+2i)^4 = -7+24i` is non-scalar mod l exactly when l does not
/// divide 24.
pub fn check_nonscalar_fr5pow4(ell: u64) -> Result<bool> {
    if ell < 3 {
        return Err(invalid!("l must be an odd prime, got {ell}"));
    }
    let pow4 = GaussInt::new(-1, 2).pow(4);
    assert_eq!(pow4, GaussInt::new(-7, 24));
    Ok(24 % ell != 0)
}

/// Multiplicative order of `alpha` in (Z[i]/l)* for a prime l coprime to
/// the norm of `alpha`.
pub fn mult_order_mod(alpha: &GaussInt, ell: u64) -> Result<u64> {
    if !is_prime_u64(ell) {
        return Err(invalid!("{ell} is not prime"));
    }
    if alpha.norm().mod_floor(&BigInt::from(ell)).is_zero() {
        return Err(invalid!("{alpha} is not invertible mod {ell}"));
    }
    let base = (bigint_mod(&alpha.re, ell), bigint_mod(&alpha.im, ell));
    let mut acc = base;
    let mut order = 1u64;
    while acc != (1, 0) {
        // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
        acc = (
            ((acc.0 * base.0) % ell + ell * ell - (acc.1 * base.1) % ell) % ell,
            ((acc.0 * base.1) % ell + (acc.1 * base.0) % ell) % ell,
        );
        order += 1;
        if order > ell * ell {
            unreachable!("order of a unit divides the group order");
        }
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn matrix_of_i_mod_16() {
        let m = gauss_matrix_mod(&GaussInt::i(), 16);
        assert_eq!(m, Mat2Mod::new(16, 0, 15, 1, 0));
    }

    #[test]
    fn matrix_of_1_plus_4i_mod_16() {
        let m = gauss_matrix_mod(&GaussInt::new(1, 4), 16);
        assert_eq!(m, Mat2Mod::new(16, 1, 12, 4, 1));
    }

    #[test]
    fn matrix_of_161_minus_240i_mod_9() {
        let m = gauss_matrix_mod(&GaussInt::new(161, -240), 9);
        assert_eq!(m, Mat2Mod::new(9, 8, 6, 3, 8));
    }

    #[test]
    fn terib_identity_and_swap_cases() {
        let n = 16;
        let s = gauss_matrix_mod(&GaussInt::new(1, 4), n);
        let id = Mat2Mod::identity(n);
        assert!(s.mul(&id).sub(&id.mul(&s)).is_in_gauss_class());
        assert!(id.scalar_mul(8).is_in_gauss_class());

        // swap matrix: the commutator is diag(-8, 8) = diag(8, 8) mod 16,
        // which lies in the image of Z[i]/16, and 8*swap does too
        let swap = Mat2Mod::new(n, 0, 1, 1, 0);
        let comm = s.mul(&swap).sub(&swap.mul(&s));
        assert_eq!(comm, Mat2Mod::new(n, 8, 0, 0, 8));
        assert!(comm.is_in_gauss_class());
        assert!(swap.scalar_mul(8).is_in_gauss_class());
    }

    #[test]
    fn terib_kernel_sweep() {
        assert!(verify_terib_kernel());
    }

    #[test]
    fn odd_square_kill_sweeps() {
        assert!(verify_odd_square_kill(3).unwrap());
        assert!(verify_odd_square_kill(5).unwrap());
        assert!(verify_odd_square_kill(7).is_err());
    }

    #[test]
    fn nonscalar_examples() {
        assert!(check_nonscalar_fr5pow4(7).unwrap());
        assert!(!check_nonscalar_fr5pow4(3).unwrap());
        assert!(check_nonscalar_fr5pow4(11).unwrap());
        assert!(check_nonscalar_fr5pow4(2).is_err());
    }

    #[test]
    fn nonscalar_for_all_ell_from_7_to_97() {
        for ell in (7..=97u64).filter(|&l| is_prime_u64(l)) {
            assert!(check_nonscalar_fr5pow4(ell).unwrap());
        }
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(mult_order_mod(&GaussInt::new(1, 4), 3).unwrap(), 8);
        assert_eq!(mult_order_mod(&GaussInt::i(), 3).unwrap(), 4);
        assert_eq!(mult_order_mod(&GaussInt::one(), 7).unwrap(), 1);
        // 1+2i has norm 5
        assert!(mult_order_mod(&GaussInt::new(1, 2), 5).is_err());
    }

    #[test]
    fn gauss_matrix_is_a_ring_homomorphism() {
        let mut rng = StdRng::seed_from_u64(3);
        for n in [3u64, 5, 9, 16, 25] {
            for _ in 0..40 {
                let x = GaussInt::new(rng.gen_range(-50i64..50), rng.gen_range(-50i64..50));
                let y = GaussInt::new(rng.gen_range(-50i64..50), rng.gen_range(-50i64..50));
                let sum = gauss_matrix_mod(&(&x + &y), n);
                let prod = gauss_matrix_mod(&(&x * &y), n);
                let mx = gauss_matrix_mod(&x, n);
                let my = gauss_matrix_mod(&y, n);
                assert_eq!(
                    sum,
                    Mat2Mod::new(n, mx.a + my.a, mx.b + my.b, mx.c + my.c, mx.d + my.d)
                );
                assert_eq!(prod, mx.mul(&my));
            }
        }
    }

    #[test]
    fn gauss_image_is_centralizer_of_i() {
        for n in [3u64, 5] {
            let j = gauss_matrix_mod(&GaussInt::i(), n);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            let m = Mat2Mod { n, a, b, c, d };
                            let commutes = m.mul(&j) == j.mul(&m);
                            assert_eq!(commutes, m.is_in_gauss_class());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn antidiagonal_set_is_gauss_image_times_swap() {
        // the defining form [[a,b],[b,-a]] coincides with (Z[i]/n) * swap
        for n in [3u64, 5] {
            let swap = Mat2Mod::new(n, 0, 1, 1, 0);
            for a in 0..n {
                for b in 0..n {
                    let g = Mat2Mod::new(n, a, (n - b) % n, b, a);
                    let anti = g.mul(&swap);
                    // [[-b, a], [a, b]] has the shape [[x,y],[y,-x]]
                    assert_eq!(anti, Mat2Mod::new(n, (n - b) % n, a, a, b));
                    assert_eq!(anti.b, anti.c);
                    assert_eq!((anti.a + anti.d) % n, 0);
                }
            }
        }
    }
}

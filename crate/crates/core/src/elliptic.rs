//! Short Weierstrass curves over exact fields, complex multiplication by
//! Z[i] on the lemniscatic curve `y^2 = x^3 - x`, torsion constructions,
//! naive point counting, and the primary-Frobenius consistency check.

use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{invalid, Error, Result};
use crate::field::Field;
use crate::galois::mult_order_mod;
use crate::numbers::{gauss_primary_split, GaussInt, Fp, Q8, Rational, Zeta8};

/// `y^2 = x^3 + a x + b` with nonzero discriminant.
#[derive(Clone, PartialEq, Debug)]
pub struct Curve<F: Field> {
    field: F,
    a: F::Elem,
    b: F::Elem,
}

#[derive(Clone, PartialEq, Debug)]
pub enum EcPoint<F: Field> {
    Infinity,
    Affine(F::Elem, F::Elem),
}

impl<F: Field> Curve<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem) -> Result<Self> {
        let c = Curve { field, a, b };
        if c.field.is_zero(&c.discriminant()) {
            return Err(invalid!("singular curve: discriminant is zero"));
        }
        Ok(c)
    }

    /// The lemniscatic curve `y^2 = x^3 - x`.
    pub fn lemniscatic(field: F) -> Self {
        let a = field.from_i64(-1);
        let b = field.zero();
        Curve::new(field, a, b).unwrap()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn a(&self) -> &F::Elem {
        &self.a
    }

    pub fn b(&self) -> &F::Elem {
        &self.b
    }

    /// `-16 (4a^3 + 27b^2)`.
    pub fn discriminant(&self) -> F::Elem {
        let f = &self.field;
        let a3 = f.mul(&f.mul(&self.a, &self.a), &self.a);
        let b2 = f.mul(&self.b, &self.b);
        let s = f.add(
            &f.mul(&f.from_i64(4), &a3),
            &f.mul(&f.from_i64(27), &b2),
        );
        f.mul(&f.from_i64(-16), &s)
    }

    /// `j = c4^3 / Delta` with `c4 = -48a`.
    pub fn j_invariant(&self) -> F::Elem {
        let f = &self.field;
        let c4 = f.mul(&f.from_i64(-48), &self.a);
        let c4cubed = f.mul(&f.mul(&c4, &c4), &c4);
        f.mul(&c4cubed, &f.inv(&self.discriminant()).unwrap())
    }

    pub fn is_on_curve(&self, p: &EcPoint<F>) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine(x, y) => {
                let f = &self.field;
                let rhs = f.add(
                    &f.add(&f.mul(&f.mul(x, x), x), &f.mul(&self.a, x)),
                    &self.b,
                );
                f.mul(y, y) == rhs
            }
        }
    }

    pub fn neg(&self, p: &EcPoint<F>) -> EcPoint<F> {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine(x, y) => EcPoint::Affine(x.clone(), self.field.neg(y)),
        }
    }

    /// Chord-tangent group law; infinity is the identity.
    pub fn add(&self, p: &EcPoint<F>, q: &EcPoint<F>) -> EcPoint<F> {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (EcPoint::Infinity, _) => return q.clone(),
            (_, EcPoint::Infinity) => return p.clone(),
            (EcPoint::Affine(x1, y1), EcPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if *y1 == f.neg(y2) {
                return EcPoint::Infinity;
            }
            // tangent: (3x^2 + a) / 2y
            let num = f.add(&f.mul(&f.from_i64(3), &f.mul(x1, x1)), &self.a);
            let den = f.mul(&f.from_i64(2), y1);
            f.mul(&num, &f.inv(&den).unwrap())
        } else {
            let num = f.sub(y2, y1);
            let den = f.sub(x2, x1);
            f.mul(&num, &f.inv(&den).unwrap())
        };
        let x3 = f.sub(&f.sub(&f.mul(&lambda, &lambda), x1), x2);
        let y3 = f.sub(&f.mul(&lambda, &f.sub(x1, &x3)), y1);
        EcPoint::Affine(x3, y3)
    }

    /// `n * P` by double-and-add; negative `n` negates the point.
    pub fn scalar_mul(&self, n: i64, p: &EcPoint<F>) -> EcPoint<F> {
        let (mut k, base) = if n < 0 {
            (n.unsigned_abs(), self.neg(p))
        } else {
            (n as u64, p.clone())
        };
        let mut acc = EcPoint::Infinity;
        let mut run = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &run);
            }
            k >>= 1;
            if k > 0 {
                run = self.add(&run, &run);
            }
        }
        acc
    }

    /// `[i](x, y) = (-x, i y)`; needs `b = 0` and a square root of -1 in
    /// the coefficient field.
    pub fn cm_i(&self, p: &EcPoint<F>) -> Result<EcPoint<F>> {
        let f = &self.field;
        if !f.is_zero(&self.b) {
            return Err(invalid!("complex multiplication needs b = 0"));
        }
        let i = f
            .sqrt_minus_one()
            .ok_or_else(|| invalid!("coefficient field has no square root of -1"))?;
        Ok(match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine(x, y) => EcPoint::Affine(f.neg(x), f.mul(&i, y)),
        })
    }

    /// `[a+bi] P = a P + b [i]P`.
    pub fn cm_apply(&self, alpha: &GaussInt, p: &EcPoint<F>) -> Result<EcPoint<F>> {
        let re = alpha
            .re
            .to_i64()
            .ok_or_else(|| invalid!("CM coefficient out of range"))?;
        let im = alpha
            .im
            .to_i64()
            .ok_or_else(|| invalid!("CM coefficient out of range"))?;
        let ip = self.cm_i(p)?;
        Ok(self.add(&self.scalar_mul(re, p), &self.scalar_mul(im, &ip)))
    }

    /// Monic-normalized 3-division polynomial `psi_3 / 3`, ascending
    /// coefficients: `t^4 + 2a t^2 + 4b t - a^2/3`. Needs characteristic
    /// different from 3.
    pub fn three_division_poly(&self) -> [F::Elem; 5] {
        let f = &self.field;
        let third = f
            .inv(&f.from_i64(3))
            .expect("3 must be invertible in the coefficient field");
        let a2 = f.mul(&self.a, &self.a);
        [
            f.neg(&f.mul(&a2, &third)),
            f.mul(&f.from_i64(4), &self.b),
            f.mul(&f.from_i64(2), &self.a),
            f.zero(),
            f.one(),
        ]
    }
}

impl Curve<Fp> {
    /// `#C(F_p)` by direct enumeration over x with a quadratic-residue
    /// test, plus the point at infinity.
    pub fn count_points(&self) -> Result<u64> {
        let fp = self.field;
        let p = fp.modulus();
        if fp.is_zero(&self.discriminant()) {
            return Err(invalid!("bad reduction at {p}"));
        }
        let mut count = 1u64; // infinity
        for x in 0..p {
            let fx = fp.add_raw(fp.add_raw(fp.pow_raw(x, 3), fp.mul_raw(self.a, x)), self.b);
            count += match fp.legendre(fx) {
                1 => 2,
                0 => 1,
                _ => 0,
            };
        }
        Ok(count)
    }

    /// A uniformly sampled affine point.
    pub fn random_point<R: Rng>(&self, rng: &mut R) -> EcPoint<Fp> {
        let fp = self.field;
        let p = fp.modulus();
        loop {
            let x = rng.gen_range(0..p);
            let fx = fp.add_raw(fp.add_raw(fp.pow_raw(x, 3), fp.mul_raw(self.a, x)), self.b);
            if let Some(y) = fp.sqrt(fx) {
                return EcPoint::Affine(x, y);
            }
        }
    }
}

/// `#C(F_p)` for `y^2 = x^3 + ax + b` with integer coefficients; errors on
/// bad reduction (including p = 2).
pub fn count_points(a: i64, b: i64, p: u64) -> Result<u64> {
    let fp = Fp::new(p)?;
    let curve = Curve::new(fp, fp.from_i64(a), fp.from_i64(b))
        .map_err(|_| invalid!("bad reduction at {p}"))?;
    curve.count_points()
}

/// The primary Frobenius of the lemniscatic curve at a split prime: the
/// primary Gaussian factor of p, cross-checked against the point count via
/// `2 Re(pi) = p + 1 - #E(F_p)`.
pub fn frobenius_primary(p: u64) -> Result<GaussInt> {
    let pi = gauss_primary_split(p)?;
    let count = count_points(-1, 0, p)?;
    let trace = (p as i64) + 1 - count as i64;
    let two_re = (&pi.re + &pi.re).to_i64().unwrap();
    assert_eq!(
        two_re, trace,
        "primary Frobenius trace disagrees with the point count at {p}"
    );
    Ok(pi)
}

/// The 16 points of the 4-torsion of `y^2 = x^3 - x`, all with
/// coordinates in Q(zeta_8).
pub fn four_torsion_q8() -> Vec<EcPoint<Q8>> {
    let i = Zeta8::i;
    let s2 = Zeta8::sqrt2;
    let int = Zeta8::from_int;
    let mut pts: Vec<EcPoint<Q8>> = vec![
        EcPoint::Infinity,
        EcPoint::Affine(int(0), int(0)),
        EcPoint::Affine(int(1), int(0)),
        EcPoint::Affine(int(-1), int(0)),
    ];
    // order-4 points, by the x-coordinates solving x(2P) in {0, 1, -1}
    let order4: [(Zeta8, Zeta8); 6] = [
        // 2P = (0,0): x = ±i
        (i(), int(1) - i()),
        (-i(), int(1) + i()),
        // 2P = (1,0): x = 1 ± sqrt2
        (int(1) + s2(), int(2) + s2()),
        (int(1) - s2(), int(2) - s2()),
        // 2P = (-1,0): x = -1 ± sqrt2
        (int(-1) + s2(), i() * (int(2) - s2())),
        (int(-1) - s2(), i() * (int(2) + s2())),
    ];
    for (x, y) in order4 {
        pts.push(EcPoint::Affine(x.clone(), -y.clone()));
        pts.push(EcPoint::Affine(x, y));
    }
    pts
}

/// Named outcomes of the torsion-field verification for one prime.
#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub ell: u8,
    pub checks: Vec<(String, bool)>,
}

impl TorsionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Element of the quotient ring Q(zeta_8)[t]/(t^deg - c), coefficients
/// ascending. Used for the small symbolic torsion checks.
#[derive(Clone, PartialEq, Debug)]
struct QuotElem {
    rel: Zeta8, // t^deg = rel
    c: Vec<Zeta8>,
}

impl QuotElem {
    fn new(deg: usize, rel: Zeta8) -> Self {
        QuotElem {
            rel,
            c: vec![Zeta8::from_int(0); deg],
        }
    }

    fn constant(deg: usize, rel: Zeta8, v: Zeta8) -> Self {
        let mut e = Self::new(deg, rel);
        e.c[0] = v;
        e
    }

    fn gen_power(deg: usize, rel: Zeta8, k: usize) -> Self {
        assert!(k < deg);
        let mut e = Self::new(deg, rel);
        e.c[k] = Zeta8::from_int(1);
        e
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.c.iter().enumerate() {
            out.c[k] += v;
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.c.iter().enumerate() {
            out.c[k] -= v;
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let deg = self.c.len();
        let mut conv = vec![Zeta8::from_int(0); 2 * deg];
        for (a, ca) in self.c.iter().enumerate() {
            for (b, cb) in other.c.iter().enumerate() {
                conv[a + b] += &(ca * cb);
            }
        }
        let mut out = Self::new(deg, self.rel.clone());
        for (k, v) in conv.into_iter().enumerate() {
            if k < deg {
                out.c[k] += &v;
            } else {
                out.c[k - deg] += &(&v * &self.rel);
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.c.iter().all(|v| v.is_zero())
    }
}

/// The checkable algebraic shadows of the torsion-field computations for
/// the lemniscatic curve at `l = 3` or `l = 5`.
pub fn verify_torsion_fields(ell: u8) -> Result<TorsionReport> {
    match ell {
        3 => Ok(verify_torsion_3()),
        5 => verify_torsion_5(),
        _ => Err(invalid!("torsion-field checks exist for l in {{3, 5}}")),
    }
}

fn verify_torsion_3() -> TorsionReport {
    let mut checks = Vec::new();

    // (i) (1+i) a (a^2 - i) / 2 is a root of z^4 + 6z^2 - 3 in Q(i)[a]/(a^4 + 3)
    {
        let rel = Zeta8::from_int(-3); // a^4 = -3
        let deg = 4;
        let a1 = QuotElem::gen_power(deg, rel.clone(), 1);
        let a2 = QuotElem::gen_power(deg, rel.clone(), 2);
        let i = QuotElem::constant(deg, rel.clone(), Zeta8::i());
        let half_1pi = QuotElem::constant(
            deg,
            rel.clone(),
            (Zeta8::from_int(1) + Zeta8::i()) * Zeta8::from_ratio(1, 2),
        );
        let z0 = half_1pi.mul(&a1).mul(&a2.sub(&i));
        let z2 = z0.mul(&z0);
        let z4 = z2.mul(&z2);
        let six = QuotElem::constant(deg, rel.clone(), Zeta8::from_int(6));
        let three = QuotElem::constant(deg, rel, Zeta8::from_int(3));
        let value = z4.add(&six.mul(&z2)).sub(&three);
        checks.push(("root of z^4+6z^2-3 in Q(i)[a]/(a^4+3)".into(), value.is_zero()));
    }

    // (ii) the monic 3-division polynomial of y^2 = x^3 - x is t^4 - 2t^2 - 1/3
    {
        let e = Curve::lemniscatic(Q8);
        let got = e.three_division_poly();
        let expect = [
            Zeta8::from_ratio(-1, 3),
            Zeta8::from_int(0),
            Zeta8::from_int(-2),
            Zeta8::from_int(0),
            Zeta8::from_int(1),
        ];
        checks.push(("3-division polynomial is t^4-2t^2-1/3".into(), got == expect));
    }

    // (iii) 1+4i has multiplicative order 8 in (Z[i]/3)*
    {
        let ok = mult_order_mod(&GaussInt::new(1, 4), 3) == Ok(8);
        checks.push(("order of 1+4i mod 3 is 8".into(), ok));
    }

    TorsionReport { ell: 3, checks }
}

fn verify_torsion_5() -> Result<TorsionReport> {
    let mut checks = Vec::new();
    let i = Zeta8::i();
    let one = Zeta8::from_int(1);
    // c = (1+2i)^{-1}, cbar = (1-2i)^{-1}
    let c = (one.clone() + i.clone() + i.clone()).inv().unwrap();
    let cbar = (one.clone() - i.clone() - i.clone()).inv().unwrap();

    // (i) y1^2 = x1^3 - x1 with x1^2 = c forces y1^4 = -4 c^3, symbolically
    // in Q(i)[x1]/(x1^2 - c)
    {
        let deg = 2;
        let x1 = QuotElem::gen_power(deg, c.clone(), 1);
        let x1sq = QuotElem::constant(deg, c.clone(), c.clone());
        let y1sq = x1.mul(&x1sq).sub(&x1); // x1^3 - x1
        let y1fourth = y1sq.mul(&y1sq);
        let expect = QuotElem::constant(
            deg,
            c.clone(),
            Zeta8::from_int(-4) * c.clone() * c.clone() * c.clone(),
        );
        checks.push((
            "y1^4 = -4(1+2i)^{-3} from x1^2 = (1+2i)^{-1}".into(),
            y1fourth == expect,
        ));
    }

    // (ii) ((5/2) y1 y2)^4 = 5, using y1^4 = -4 c^3 and y2^4 = -4 cbar^3
    {
        let y1_4 = Zeta8::from_int(-4) * c.clone() * c.clone() * c.clone();
        let y2_4 = Zeta8::from_int(-4) * cbar.clone() * cbar.clone() * cbar.clone();
        let five_half = Zeta8::from_ratio(5, 2);
        let value = five_half.pow(4) * y1_4 * y2_4;
        checks.push(("((5/2) y1 y2)^4 = 5".into(), value == Zeta8::from_int(5)));
    }

    // kernel labels: with [i](x,y) = (-x, iy), the tangent-line algebra for
    // [2i]P = P forces x^2 = (1-2i)^{-1} on Ker[1-2i] (cleared form:
    // i(3c-1) = (1+i)(c-1) for c = x^2), and fails for x^2 = (1+2i)^{-1}
    {
        let pairing = |cc: &Zeta8| {
            let three_c = Zeta8::from_int(3) * cc.clone() - one.clone();
            let lhs = i.clone() * three_c;
            let rhs = (one.clone() + i.clone()) * (cc.clone() - one.clone());
            lhs == rhs
        };
        checks.push((
            "Ker[1-2i] x-coordinates satisfy x^2 = (1-2i)^{-1}".into(),
            pairing(&cbar) && !pairing(&c),
        ));
    }

    // (iii) finite-field instantiation: a nonzero point killed by [1-2i]
    // and by [5], with x^2 the inverse of a conjugate of 1+2i
    {
        let (p, i0, pt) = find_five_torsion_instance(500)?;
        let fp = Fp::new(p)?;
        let e = Curve::lemniscatic(fp);
        let killed = cm_one_minus_two_i(&e, i0, &pt) == EcPoint::Infinity;
        let five = e.scalar_mul(5, &pt) == EcPoint::Infinity;
        let nonzero = pt != EcPoint::Infinity;
        checks.push((
            format!("[1-2i]P5 = O, [5]P5 = O, P5 != O over F_{p} with i = {i0}"),
            killed && five && nonzero,
        ));
    }

    Ok(TorsionReport { ell: 5, checks })
}

/// `[1-2i]P` with an explicit square root of -1 (the CM pairing depends on
/// which root plays the role of i).
fn cm_one_minus_two_i(e: &Curve<Fp>, i0: u64, p: &EcPoint<Fp>) -> EcPoint<Fp> {
    let fp = *e.field();
    let ip = match p {
        EcPoint::Infinity => EcPoint::Infinity,
        EcPoint::Affine(x, y) => EcPoint::Affine(fp.neg(x), fp.mul_raw(i0, *y)),
    };
    e.add(p, &e.scalar_mul(-2, &ip))
}

/// Smallest split prime below the bound carrying a rational generator of
/// Ker[1-2i], found by trying both square roots of -1 as i and both
/// conjugate values for x^2; returns the prime, the root used, and the
/// point.
fn find_five_torsion_instance(bound: u64) -> Result<(u64, u64, EcPoint<Fp>)> {
    for p in (5..bound).filter(|&p| p % 4 == 1 && crate::numbers::is_prime_u64(p)) {
        let fp = Fp::new(p)?;
        let e = Curve::lemniscatic(fp);
        let Some(i_canonical) = fp.sqrt_minus_one() else {
            continue;
        };
        for i0 in [i_canonical, p - i_canonical] {
            for denom in [
                fp.add_raw(1, fp.mul_raw(2, i0)),
                fp.sub_raw(1, fp.mul_raw(2, i0)),
            ] {
                if denom == 0 {
                    continue; // p = 5, where 1+2i ramifies
                }
                let c = fp.inv_raw(denom)?;
                let Some(x) = fp.sqrt(c) else {
                    continue;
                };
                let rhs = fp.sub_raw(fp.pow_raw(x, 3), x);
                let Some(y) = fp.sqrt(rhs) else {
                    continue;
                };
                let pt = EcPoint::Affine(x, y);
                if cm_one_minus_two_i(&e, i0, &pt) == EcPoint::Infinity
                    && e.scalar_mul(5, &pt) == EcPoint::Infinity
                {
                    return Ok((p, i0, pt));
                }
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no 5-torsion instantiation prime below {bound}"
    )))
}

/// Whether `y^2 = x^3 + a1 x` and `y^2 = x^3 + a2 x` are isomorphic over
/// Q(zeta_8): the coefficient ratio must be a 4th power there.
pub fn quartic_twists_isomorphic_over_q8(a1: &Rational, a2: &Rational) -> Result<bool> {
    use num_traits::Zero;
    if a1.is_zero() || a2.is_zero() {
        return Err(invalid!("twist test needs nonzero coefficients"));
    }
    crate::brauer::fourth_power_in_q8(&(a2 / a1))
}

/// The genus-1 quartic model `v^2 = (u^2 - 1)(u^2 - 1/2)` with base point
/// at infinity where `v/u^2 = 1`. Recorded for the twist chain down to
/// `y^2 = x^3 - 4x`; carries no arithmetic of its own.
pub struct QuarticModelC;

impl QuarticModelC {
    /// Ascending coefficients of `(u^2-1)(u^2-1/2) = u^4 - (3/2)u^2 + 1/2`.
    pub fn rhs_coeffs() -> [Rational; 5] {
        [
            Rational::new(1.into(), 2.into()),
            Rational::from_integer(0.into()),
            Rational::new((-3).into(), 2.into()),
            Rational::from_integer(0.into()),
            Rational::from_integer(1.into()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn e_q8() -> Curve<Q8> {
        Curve::lemniscatic(Q8)
    }

    #[test]
    fn identity_and_two_torsion() {
        let e = e_q8();
        let p = EcPoint::Affine(Zeta8::from_int(0), Zeta8::from_int(0));
        assert_eq!(e.add(&p, &EcPoint::Infinity), p);
        assert_eq!(e.add(&p, &p), EcPoint::Infinity);
        assert_eq!(e.scalar_mul(0, &p), EcPoint::Infinity);
    }

    #[test]
    fn doubling_of_i_point_lands_on_two_torsion() {
        let e = e_q8();
        let p = EcPoint::Affine(Zeta8::i(), Zeta8::from_int(1) - Zeta8::i());
        assert!(e.is_on_curve(&p));
        assert_eq!(
            e.scalar_mul(2, &p),
            EcPoint::Affine(Zeta8::from_int(0), Zeta8::from_int(0))
        );
    }

    #[test]
    fn sqrt2_point_has_order_four() {
        let e = e_q8();
        let p = EcPoint::Affine(
            Zeta8::from_int(1) + Zeta8::sqrt2(),
            Zeta8::from_int(2) + Zeta8::sqrt2(),
        );
        assert!(e.is_on_curve(&p));
        assert_eq!(
            e.scalar_mul(2, &p),
            EcPoint::Affine(Zeta8::from_int(1), Zeta8::from_int(0))
        );
        assert_eq!(e.scalar_mul(4, &p), EcPoint::Infinity);
    }

    #[test]
    fn duplication_formula_on_random_points() {
        // x(2P) * 4x(x^2-1) = (x^2+1)^2 away from the 2-torsion
        let fp = Fp::new(10007).unwrap();
        let e = Curve::lemniscatic(fp);
        let mut rng = StdRng::seed_from_u64(2);
        let mut tested = 0;
        while tested < 50 {
            let p = e.random_point(&mut rng);
            let EcPoint::Affine(x, _) = p.clone() else {
                continue;
            };
            let den = fp.mul_raw(fp.mul_raw(4, x), fp.sub_raw(fp.mul_raw(x, x), 1));
            if den == 0 {
                continue;
            }
            let EcPoint::Affine(x2, _) = e.scalar_mul(2, &p) else {
                continue;
            };
            let num = {
                let t = fp.add_raw(fp.mul_raw(x, x), 1);
                fp.mul_raw(t, t)
            };
            assert_eq!(fp.mul_raw(x2, den), num);
            tested += 1;
        }
    }

    #[test]
    fn cm_examples() {
        let e = e_q8();
        let origin = EcPoint::Affine(Zeta8::from_int(0), Zeta8::from_int(0));
        assert_eq!(e.cm_i(&origin).unwrap(), origin);

        let fp = Fp::new(13).unwrap();
        let efp = Curve::lemniscatic(fp);
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..30 {
            let p = efp.random_point(&mut rng);
            let ii = efp.cm_i(&efp.cm_i(&p).unwrap()).unwrap();
            assert_eq!(ii, efp.neg(&p));
            // additivity of [2+i] against direct evaluation
            let q = efp.random_point(&mut rng);
            let alpha = GaussInt::new(2, 1);
            let lhs = efp.cm_apply(&alpha, &efp.add(&p, &q)).unwrap();
            let rhs = efp.add(
                &efp.cm_apply(&alpha, &p).unwrap(),
                &efp.cm_apply(&alpha, &q).unwrap(),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cm_needs_square_root_of_minus_one() {
        let fp = Fp::new(7).unwrap();
        let e = Curve::lemniscatic(fp);
        let p = e.random_point(&mut StdRng::seed_from_u64(1));
        assert!(e.cm_i(&p).is_err());
    }

    #[test]
    fn point_counts() {
        assert_eq!(count_points(-1, 0, 5).unwrap(), 8);
        assert_eq!(count_points(-1, 0, 13).unwrap(), 8);
        assert!(count_points(-1, 0, 2).is_err());
        // y^2 = x^3 - 3x + 2 = (x-1)^2 (x+2) is singular everywhere
        assert!(count_points(-3, 2, 7).is_err());
    }

    #[test]
    fn frobenius_pinned_values() {
        assert_eq!(frobenius_primary(5).unwrap(), GaussInt::new(-1, 2));
        assert_eq!(frobenius_primary(17).unwrap(), GaussInt::new(1, 4));
        assert_eq!(frobenius_primary(13).unwrap(), GaussInt::new(3, 2));
    }

    #[test]
    fn division_polynomials() {
        let e = e_q8();
        assert_eq!(
            e.three_division_poly(),
            [
                Zeta8::from_ratio(-1, 3),
                Zeta8::from_int(0),
                Zeta8::from_int(-2),
                Zeta8::from_int(0),
                Zeta8::from_int(1),
            ]
        );
        let c = Curve::new(Q8, Zeta8::from_int(-4), Zeta8::from_int(0)).unwrap();
        assert_eq!(
            c.three_division_poly(),
            [
                Zeta8::from_ratio(-16, 3),
                Zeta8::from_int(0),
                Zeta8::from_int(-8),
                Zeta8::from_int(0),
                Zeta8::from_int(1),
            ]
        );
    }

    #[test]
    fn division_poly_annihilates_duplication_identity() {
        // (x^2+1)^2 - 4x(x^2-1) x = -3 (x^4 - 2x^2 - 1/3) as polynomials
        // over Q, so the roots of the 3-division polynomial satisfy
        // x(2P) = x(P)
        let mul = |a: &Vec<Rational>, b: &Vec<Rational>| {
            let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
            for (i, ca) in a.iter().enumerate() {
                for (j, cb) in b.iter().enumerate() {
                    out[i + j] += ca * cb;
                }
            }
            out
        };
        let r = |n: i64| Rational::from_integer(n.into());
        let x2p1 = vec![r(1), r(0), r(1)];
        let lhs = mul(&x2p1, &x2p1);
        // 4x^2 (x^2 - 1) = 4x^4 - 4x^2
        let sub = [r(0), r(0), r(-4), r(0), r(4)];
        let mut diff: Vec<Rational> = (0..5)
            .map(|k| lhs.get(k).cloned().unwrap_or_else(Rational::zero) - sub[k].clone())
            .collect();
        // expect -3 * (t^4 - 2t^2 - 1/3)
        let expect = [
            Rational::one(),
            r(0),
            Rational::new(6.into(), 1.into()),
            r(0),
            r(-3),
        ];
        for (d, e) in diff.iter_mut().zip(expect.iter()) {
            assert_eq!(&*d, e);
        }
    }

    #[test]
    fn four_torsion_structure() {
        let e = e_q8();
        let pts = four_torsion_q8();
        assert_eq!(pts.len(), 16);
        for p in &pts {
            assert!(e.is_on_curve(p), "off-curve point {p:?}");
            assert_eq!(e.scalar_mul(4, p), EcPoint::Infinity);
        }
        // distinct
        for (i, p) in pts.iter().enumerate() {
            assert!(!pts[i + 1..].contains(p));
        }
        // closed under addition and [i]
        for p in &pts {
            assert!(pts.contains(&e.cm_i(p).unwrap()));
            for q in &pts {
                assert!(pts.contains(&e.add(p, q)));
            }
        }
        // the named members
        assert!(pts.contains(&EcPoint::Affine(Zeta8::i(), Zeta8::from_int(1) - Zeta8::i())));
        assert!(pts.contains(&EcPoint::Affine(
            Zeta8::from_int(1) + Zeta8::sqrt2(),
            Zeta8::from_int(2) + Zeta8::sqrt2()
        )));
    }

    #[test]
    fn torsion_field_reports() {
        let r3 = verify_torsion_fields(3).unwrap();
        assert!(r3.all_pass(), "{:?}", r3.checks);
        let r5 = verify_torsion_fields(5).unwrap();
        assert!(r5.all_pass(), "{:?}", r5.checks);
        assert!(verify_torsion_fields(7).is_err());
    }

    #[test]
    fn five_torsion_instance_is_29() {
        let (p, i0, pt) = find_five_torsion_instance(500).unwrap();
        assert_eq!(p, 29);
        assert_eq!(i0, 17);
        // the kernel x-coordinates satisfy x^2 = (1-2i)^{-1} = 7 mod 29
        let EcPoint::Affine(x, _) = pt else {
            panic!("expected an affine generator");
        };
        let fp = Fp::new(29).unwrap();
        assert_eq!(fp.mul_raw(x, x), 7);
        assert!(Curve::lemniscatic(fp).is_on_curve(&pt));
    }

    #[test]
    fn curve_invariants_and_twist_chain() {
        let c_prime = Curve::new(Q8, Zeta8::from_int(-4), Zeta8::from_int(0)).unwrap();
        assert_eq!(c_prime.discriminant(), Zeta8::from_int(4096)); // 2^12
        assert_eq!(c_prime.j_invariant(), Zeta8::from_int(1728));
        let e = e_q8();
        assert_eq!(e.j_invariant(), Zeta8::from_int(1728));

        let r = |n: i64| Rational::from_integer(n.into());
        // ratio 4 = (sqrt 2)^4 is a 4th power in Q(zeta_8)
        assert!(quartic_twists_isomorphic_over_q8(&r(-1), &r(-4)).unwrap());
        // ratio 2 is not
        assert!(!quartic_twists_isomorphic_over_q8(&r(-1), &r(-2)).unwrap());
        assert!(quartic_twists_isomorphic_over_q8(&r(0), &r(1)).is_err());
    }

    #[test]
    fn quartic_model_coefficients() {
        // (u^2 - 1)(u^2 - 1/2) expanded
        let r = QuarticModelC::rhs_coeffs();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(r[0], half);
        assert_eq!(r[2], Rational::new((-3).into(), 2.into()));
        assert_eq!(r[4], Rational::one());
    }

    #[test]
    fn counts_divisible_by_16_for_split8_primes() {
        for p in (17..500u64).filter(|&p| p % 8 == 1 && crate::numbers::is_prime_u64(p)) {
            let n = count_points(-1, 0, p).unwrap();
            assert_eq!(n % 16, 0, "#E(F_{p}) = {n}");
        }
    }
}

//! Arithmetic in Q*/Q*^4, the subgroup H_D attached to a diagonal quartic
//! surface, the Kummer-field splitting criterion, and the per-surface
//! Brauer verdicts and bounds.
//!
//! A nonzero rational is represented by its sign together with its prime
//! valuations mod 4; `t^4 - d` splits in `Q(i, b_1^(1/4), ..., b_n^(1/4))`
//! exactly when the class of `d` lies in the subgroup generated by `-4`
//! and the `b_i`. Membership is decided by exhaustion over exponent
//! vectors in `(Z/4)^n`, which is trivially cheap at this scale and avoids
//! Smith-form machinery over the non-field Z/4.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::numbers::{rational_int, Rational};

const FACTOR_TRIAL_BOUND: u64 = 1_000_000;
/// Largest coefficient magnitude the trial-division factorizer certifies.
const FACTOR_INPUT_BOUND: u64 = 1_000_000_000_000;

fn factor_u64(mut n: u64) -> Result<BTreeMap<u64, u32>> {
    if n > FACTOR_INPUT_BOUND {
        return Err(invalid!("coefficient magnitude {n} is too large to factor"));
    }
    let mut out = BTreeMap::new();
    let mut d = 2u64;
    while d <= FACTOR_TRIAL_BOUND && d * d <= n {
        while n.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        // no factor below 10^6 and n <= 10^12, so n is prime
        *out.entry(n).or_insert(0) += 1;
    }
    Ok(out)
}

/// The class of a nonzero rational in Q*/Q*^4: a sign bit and the prime
/// exponents of the 4th-power-free signed factorization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QClassMod4 {
    sign: bool,
    exps: BTreeMap<u64, u8>,
}

impl QClassMod4 {
    pub fn trivial() -> Self {
        QClassMod4 {
            sign: false,
            exps: BTreeMap::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        !self.sign && self.exps.is_empty()
    }

    pub fn sign(&self) -> bool {
        self.sign
    }

    pub fn exponents(&self) -> &BTreeMap<u64, u8> {
        &self.exps
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&q, &e) in &other.exps {
            let v = (exps.get(&q).copied().unwrap_or(0) + e) % 4;
            if v == 0 {
                exps.remove(&q);
            } else {
                exps.insert(q, v);
            }
        }
        QClassMod4 {
            sign: self.sign != other.sign,
            exps,
        }
    }

    pub fn pow(&self, k: u8) -> Self {
        let mut acc = QClassMod4::trivial();
        for _ in 0..(k % 4) {
            acc = acc.mul(self);
        }
        acc
    }
}

fn bigint_to_u64_abs(n: &BigInt) -> Result<u64> {
    n.abs()
        .to_u64()
        .ok_or_else(|| invalid!("coefficient does not fit in 64 bits"))
}

/// Canonical class of a nonzero rational: denominator exponents enter
/// negatively (i.e. as `4 - v` mod 4).
pub fn qclass_of(d: &Rational) -> Result<QClassMod4> {
    if d.is_zero() {
        return Err(invalid!("zero has no class in Q*/Q*^4"));
    }
    let num = factor_u64(bigint_to_u64_abs(d.numer())?)?;
    let den = factor_u64(bigint_to_u64_abs(d.denom())?)?;
    let mut exps = BTreeMap::new();
    for (q, e) in num {
        let v = (e % 4) as u8;
        if v != 0 {
            exps.insert(q, v);
        }
    }
    for (q, e) in den {
        let cur = exps.get(&q).copied().unwrap_or(0);
        let v = (cur + 4 - (e % 4) as u8) % 4;
        if v == 0 {
            exps.remove(&q);
        } else {
            exps.insert(q, v);
        }
    }
    Ok(QClassMod4 {
        sign: d.is_negative(),
        exps,
    })
}

/// A finitely generated subgroup of Q*/Q*^4.
#[derive(Clone, Debug)]
pub struct SubgroupMod4 {
    gens: Vec<QClassMod4>,
}

impl SubgroupMod4 {
    pub fn new(gens: Vec<QClassMod4>) -> Self {
        SubgroupMod4 { gens }
    }

    pub fn from_rationals(gens: &[Rational]) -> Result<Self> {
        Ok(SubgroupMod4 {
            gens: gens.iter().map(qclass_of).collect::<Result<_>>()?,
        })
    }

    pub fn generators(&self) -> &[QClassMod4] {
        &self.gens
    }

    /// Membership by exhaustion over all exponent vectors in `(Z/4)^n`.
    pub fn contains(&self, d: &QClassMod4) -> Result<bool> {
        let n = self.gens.len();
        if n > 8 {
            return Err(invalid!("membership sweep supports at most 8 generators"));
        }
        let mut exps = vec![0u8; n];
        loop {
            let mut prod = QClassMod4::trivial();
            for (g, &e) in self.gens.iter().zip(&exps) {
                prod = prod.mul(&g.pow(e));
            }
            if &prod == d {
                return Ok(true);
            }
            // odometer over (Z/4)^n
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(false);
                }
                exps[k] += 1;
                if exps[k] < 4 {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }
}

/// The subgroup `H_D` of Q*/Q*^4 generated by -1, 4 and the surface
/// coefficients.
pub fn compute_hd(a1: &Rational, a2: &Rational, a3: &Rational) -> Result<SubgroupMod4> {
    for a in [a1, a2, a3] {
        if a.is_zero() {
            return Err(invalid!("surface coefficients must be nonzero"));
        }
    }
    SubgroupMod4::from_rationals(&[
        rational_int(-1),
        rational_int(4),
        a1.clone(),
        a2.clone(),
        a3.clone(),
    ])
}

/// Whether `t^4 - d` splits in `Q(i, b_1^(1/4), ..., b_n^(1/4))`:
/// equivalently, whether the class of `d` lies in the subgroup generated
/// by `-4` and the `b_i`.
pub fn splits_in_kummer_field(b: &[Rational], d: &Rational) -> Result<bool> {
    let mut gens = vec![rational_int(-4)];
    gens.extend_from_slice(b);
    let h = SubgroupMod4::from_rationals(&gens)?;
    h.contains(&qclass_of(d)?)
}

/// Whether a nonzero rational is a 4th power in Q(zeta_8). Since
/// `4^(1/4) = sqrt(2)`, that field is the Kummer field for `b = 4`, so the
/// criterion is membership in the subgroup generated by -1 and 4.
pub fn fourth_power_in_q8(r: &Rational) -> Result<bool> {
    let h = SubgroupMod4::from_rationals(&[rational_int(-1), rational_int(4)])?;
    h.contains(&qclass_of(r)?)
}

/// Exponent and order bounds that hold for every diagonal quartic
/// surface over Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnconditionalBounds {
    /// 2^10 * 3 * 5, an exponent bound for Br(D)/Br_1(D).
    pub exponent: u64,
    /// (2^10 * 3 * 5)^2, an order bound for Br(D)/Br_1(D).
    pub order_br1: u64,
    /// 2^25 * 3^2 * 5^2, an order bound for Br(D)/Br_0(D).
    pub order_br0: u64,
}

pub const UNCONDITIONAL: UnconditionalBounds = UnconditionalBounds {
    exponent: 15_360,
    order_br1: 235_929_600,
    order_br0: 7_549_747_200,
};

/// Per-surface verdicts and bounds.
#[derive(Clone, PartialEq, Debug)]
pub struct BrauerReport {
    pub coefficients: [Rational; 3],
    pub hd_contains_2: bool,
    pub hd_contains_3: bool,
    pub hd_contains_5: bool,
    /// No transcendental Brauer classes: `{2,3,5}` misses `H_D`. The
    /// 2-part of this criterion cites the external theorem that
    /// `2 not in H_D` kills the 2-primary transcendental part.
    pub transcendental_trivial: bool,
    /// Refined exponent bound for Br(D)/Br_1(D) from the memberships.
    pub exponent_bound: u64,
    /// `exponent_bound^2`, via Br of the geometric surface being (Q/Z)^2.
    pub order_bound_br1: u64,
    /// `order_bound_br1 * 2^5`, via the bound on Br_1(D)/Br_0(D).
    pub order_bound_br0: u64,
    pub unconditional: UnconditionalBounds,
}

/// H_D memberships of 2, 3, 5 and the resulting refined bounds for the
/// surface `x0^4 + a1 x1^4 + a2 x2^4 + a3 x3^4 = 0`.
pub fn analyze_surface(a1: &Rational, a2: &Rational, a3: &Rational) -> Result<BrauerReport> {
    let hd = compute_hd(a1, a2, a3)?;
    let hd_contains_2 = hd.contains(&qclass_of(&rational_int(2))?)?;
    let hd_contains_3 = hd.contains(&qclass_of(&rational_int(3))?)?;
    let hd_contains_5 = hd.contains(&qclass_of(&rational_int(5))?)?;
    let e2 = if hd_contains_2 { 1u64 << 10 } else { 1 };
    let e3 = if hd_contains_3 { 3 } else { 1 };
    let e5 = if hd_contains_5 { 5 } else { 1 };
    let exponent_bound = e2 * e3 * e5;
    let order_bound_br1 = exponent_bound * exponent_bound;
    let order_bound_br0 = order_bound_br1 * 32;
    Ok(BrauerReport {
        coefficients: [a1.clone(), a2.clone(), a3.clone()],
        hd_contains_2,
        hd_contains_3,
        hd_contains_5,
        transcendental_trivial: !hd_contains_2 && !hd_contains_3 && !hd_contains_5,
        exponent_bound,
        order_bound_br1,
        order_bound_br0,
        unconditional: UNCONDITIONAL,
    })
}

//! The explicit map from the Fermat quartic X to the Kummer surface: the
//! functions F1..F4 and G1..G4, their linear dependence relations and
//! square identities, the coordinates (w1, w2, y, z), and the two Kummer
//! surface equations
//!
//! ```text
//!   y^2 = (w1 - 1)(w2 - 1) / ((w1 - 1/2)(w2 - 1/2)),   z^2 = w2 / w1.
//! ```
//!
//! Everything is verified on X: exactly over Q(zeta_8) by normal-form
//! reduction, or numerically at sampled points of X(F_p) for p = 1 mod 8.
//! Rational functions are never reduced to lowest terms; all equality
//! goes through cross-multiplication and `nf_fermat`. The exact Kummer
//! check clears denominators over the shared factor `(1+eps^2)^2 Q S`,
//! which keeps the reduced degrees near 26 instead of squaring the
//! denominators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::fermat::{e_double, e_prime, f_form, h_double, h_prime};
use crate::field::{Field, Zeta8Field};
use crate::numbers::Fp;
use crate::poly::{rf_equal_on_x, MPoly, RatFunc};

/// `x0 - eps^k x1`
fn lin01<F: Zeta8Field>(field: &F, k: i64) -> MPoly<F> {
    MPoly::linear(
        field,
        [
            field.one(),
            field.neg(&field.zeta8_pow(k)),
            field.zero(),
            field.zero(),
        ],
    )
}

/// `x2 - eps^k x3`
fn lin23<F: Zeta8Field>(field: &F, k: i64) -> MPoly<F> {
    MPoly::linear(
        field,
        [
            field.zero(),
            field.zero(),
            field.one(),
            field.neg(&field.zeta8_pow(k)),
        ],
    )
}

fn product<F: Field>(factors: &[MPoly<F>]) -> MPoly<F> {
    let mut acc = MPoly::one(factors[0].field());
    for f in factors {
        acc = acc.mul(f);
    }
    acc
}

/// One of the four functions whose divisors contain the degree-16 divisor
/// D' (index 1-based).
pub fn build_f<F: Zeta8Field>(field: &F, i: usize) -> Result<RatFunc<F>> {
    let common = [f_form(field, 7, 2, 7), f_form(field, 7, 6, 3)];
    let rf = match i {
        1 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 1, 2, 5),
                f_form(field, 1, 6, 1),
                e_prime(field, true),
                lin01(field, 1),
                lin01(field, 7),
            ]),
            product(&[e_double(field, true), lin23(field, 1), lin23(field, 7)]),
        ),
        2 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 3, 2, 7),
                f_form(field, 3, 6, 3),
                h_prime(field, 1, 3),
                lin23(field, 5),
            ]),
            product(&[h_double(field, 3, 3), lin23(field, 1)]),
        ),
        3 => RatFunc::from_poly(product(&[
            common[0].clone(),
            common[1].clone(),
            f_form(field, 5, 3, 4),
            f_form(field, 5, 7, 0),
        ])),
        4 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 7, 5, 4),
                f_form(field, 7, 1, 0),
                e_double(field, false),
                h_prime(field, 1, 3),
                lin01(field, 1),
                lin01(field, 7),
            ]),
            product(&[
                e_prime(field, false),
                h_double(field, 3, 3),
                lin23(field, 1),
                lin23(field, 3),
            ]),
        ),
        _ => return Err(invalid!("F index must lie in 1..=4, got {i}")),
    };
    Ok(rf)
}

/// One of the four functions whose divisors contain the degree-16 divisor
/// D'' (index 1-based).
pub fn build_g<F: Zeta8Field>(field: &F, i: usize) -> Result<RatFunc<F>> {
    let common = [f_form(field, 3, 6, 7), f_form(field, 3, 2, 3)];
    let rf = match i {
        1 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 1, 2, 5),
                f_form(field, 1, 6, 1),
                e_prime(field, false),
                lin01(field, 1),
                lin01(field, 3),
            ]),
            product(&[e_double(field, true), lin23(field, 5), lin23(field, 7)]),
        ),
        2 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 3, 2, 7),
                f_form(field, 3, 6, 3),
                h_prime(field, 3, 1),
                lin01(field, 3),
            ]),
            product(&[h_double(field, 3, 3), lin01(field, 7)]),
        ),
        3 => RatFunc::from_poly(product(&[
            common[0].clone(),
            common[1].clone(),
            f_form(field, 7, 5, 4),
            f_form(field, 7, 1, 0),
        ])),
        4 => RatFunc::new(
            product(&[
                common[0].clone(),
                common[1].clone(),
                f_form(field, 5, 3, 4),
                f_form(field, 5, 7, 0),
                e_double(field, false),
                h_prime(field, 3, 1),
                lin23(field, 1),
                lin23(field, 3),
            ]),
            product(&[
                e_prime(field, true),
                h_double(field, 3, 3),
                lin01(field, 1),
                lin01(field, 7),
            ]),
        ),
        _ => return Err(invalid!("G index must lie in 1..=4, got {i}")),
    };
    Ok(rf)
}

/// The assembled map data: F's, G's and the coordinates (w1, w2, y, z).
#[derive(Clone, Debug)]
pub struct MizukamiData<F: Zeta8Field> {
    pub field: F,
    pub f: [RatFunc<F>; 4],
    pub g: [RatFunc<F>; 4],
    pub w1: RatFunc<F>,
    pub w2: RatFunc<F>,
    pub y: RatFunc<F>,
    pub z: RatFunc<F>,
}

/// `eps / (1 + eps^2)` as a field element.
fn eps_over_c<F: Zeta8Field>(field: &F) -> F::Elem {
    let eps = field.zeta8();
    let c = field.add(&field.one(), &field.zeta8_pow(2));
    field.mul(&eps, &field.inv(&c).unwrap())
}

/// Builds F1..F4, G1..G4 and the coordinates
/// `w1 = eps/(1+eps^2) F2/F1`, `w2 = eps/(1+eps^2) G2/G1`,
/// `z = eps^3 (1+eps^2) e'_+ / h'_13`, `y = 2 eps^2 e''_+ / h''_11`.
pub fn kummer_map<F: Zeta8Field>(field: &F) -> MizukamiData<F> {
    let f: [RatFunc<F>; 4] = std::array::from_fn(|k| build_f(field, k + 1).unwrap());
    let g: [RatFunc<F>; 4] = std::array::from_fn(|k| build_g(field, k + 1).unwrap());
    let scale = eps_over_c(field);
    let w1 = f[1].div(&f[0]).unwrap().scale(&scale);
    let w2 = g[1].div(&g[0]).unwrap().scale(&scale);
    let c = field.add(&field.one(), &field.zeta8_pow(2));
    let z_scale = field.mul(&field.zeta8_pow(3), &c);
    let z = RatFunc::new(e_prime(field, true).scale(&z_scale), h_prime(field, 1, 3));
    let y_scale = field.mul(&field.from_i64(2), &field.zeta8_pow(2));
    let y = RatFunc::new(e_double(field, true).scale(&y_scale), h_double(field, 1, 1));
    MizukamiData {
        field: field.clone(),
        f,
        g,
        w1,
        w2,
        y,
        z,
    }
}

/// The four linear dependence relations
/// `F3 = eps^2 F2 - eps(1+eps^2) F1`, `F4 = -eps(1+eps^2) F2 + eps^2 F1`,
/// `G3 = eps(1+eps^2) G1 - eps^2 G2`, `G4 = -eps(1+eps^2) G2 + eps^2 G1`,
/// each as rational-function identities on X.
pub fn verify_dependence<F: Zeta8Field>(field: &F) -> Result<bool> {
    let d = kummer_map(field);
    let eps2 = field.zeta8_pow(2);
    let c = field.add(&field.one(), &field.zeta8_pow(2));
    let eps_c = field.mul(&field.zeta8(), &c);
    let neg_eps_c = field.neg(&eps_c);

    let rhs_f3 = d.f[1].scale(&eps2).sub(&d.f[0].scale(&eps_c));
    let rhs_f4 = d.f[1].scale(&neg_eps_c).add(&d.f[0].scale(&eps2));
    let rhs_g3 = d.g[0].scale(&eps_c).sub(&d.g[1].scale(&eps2));
    let rhs_g4 = d.g[1].scale(&neg_eps_c).add(&d.g[0].scale(&eps2));

    Ok(rf_equal_on_x(&d.f[2], &rhs_f3)?
        && rf_equal_on_x(&d.f[3], &rhs_f4)?
        && rf_equal_on_x(&d.g[2], &rhs_g3)?
        && rf_equal_on_x(&d.g[3], &rhs_g4)?)
}

/// The two square identities
/// `F1 G2 / (F2 G1) = 2 (e'_+/h'_13)^2` and
/// `F3 G3 / (F4 G4) = 2 (e''_+/h''_11)^2`.
pub fn verify_squares<F: Zeta8Field>(field: &F) -> Result<bool> {
    let d = kummer_map(field);
    let two = field.from_i64(2);

    let lhs1 = d.f[0].mul(&d.g[1]).div(&d.f[1].mul(&d.g[0]))?;
    let ep = e_prime(field, true);
    let rhs1 = RatFunc::new(
        ep.mul(&ep).scale(&two),
        h_prime(field, 1, 3).pow(2),
    );

    let lhs2 = d.f[2].mul(&d.g[2]).div(&d.f[3].mul(&d.g[3]))?;
    let ed = e_double(field, true);
    let rhs2 = RatFunc::new(
        ed.mul(&ed).scale(&two),
        h_double(field, 1, 1).pow(2),
    );

    Ok(rf_equal_on_x(&lhs1, &rhs1)? && rf_equal_on_x(&lhs2, &rhs2)?)
}

/// The numerator-level building blocks of w1 and w2 over the common
/// denominators: `w1 = eps P / ((1+eps^2) Q)` and
/// `w2 = eps R / ((1+eps^2) S)`.
struct WBlocks<F: Field> {
    p: MPoly<F>,
    q: MPoly<F>,
    r: MPoly<F>,
    s: MPoly<F>,
}

fn w_blocks<F: Zeta8Field>(d: &MizukamiData<F>) -> WBlocks<F> {
    WBlocks {
        p: d.f[1].num.mul(&d.f[0].den),
        q: d.f[0].num.mul(&d.f[1].den),
        r: d.g[1].num.mul(&d.g[0].den),
        s: d.g[0].num.mul(&d.g[1].den),
    }
}

/// All denominators of the map data are nonzero in the function field of
/// X (their normal forms are nonzero), including the w-blocks.
pub fn denominators_nonzero_on_x<F: Zeta8Field>(field: &F) -> bool {
    let d = kummer_map(field);
    let wb = w_blocks(&d);
    let mut polys: Vec<&MPoly<F>> = Vec::new();
    for rf in d.f.iter().chain(d.g.iter()) {
        polys.push(&rf.den);
    }
    polys.extend([&d.y.den, &d.z.den, &wb.p, &wb.q, &wb.r, &wb.s]);
    polys.iter().all(|p| !p.nf_fermat().is_zero())
}

/// Exact verification of the Kummer equations and the four ratio
/// identities `F3/F1 = eps(1+eps^2)(w1-1)`, `F4/F1 = -2eps^2(w1-1/2)`,
/// `G3/G1 = -eps(1+eps^2)(w2-1)`, `G4/G1 = -2eps^2(w2-1/2)`, all reduced
/// to normal form modulo the Fermat quartic.
pub fn verify_kummer_exact<F: Zeta8Field>(field: &F) -> Result<bool> {
    let d = kummer_map(field);
    if !denominators_nonzero_on_x(field) {
        return Err(invalid!("a map denominator vanishes identically on X"));
    }
    let wb = w_blocks(&d);
    let (p, q, r, s) = (&wb.p, &wb.q, &wb.r, &wb.s);
    let eps = field.zeta8();
    let c = field.add(&field.one(), &field.zeta8_pow(2));
    let two = field.from_i64(2);

    // w1 - 1 = (eps P - c Q) / (c Q), w1 - 1/2 = (2 eps P - c Q) / (2 c Q)
    let w1_m1 = p.scale(&eps).sub(&q.scale(&c));
    let w1_mh = p.scale(&field.mul(&two, &eps)).sub(&q.scale(&c));
    let w2_m1 = r.scale(&eps).sub(&s.scale(&c));
    let w2_mh = r.scale(&field.mul(&two, &eps)).sub(&s.scale(&c));

    // z^2 = w2/w1 cross-multiplied:
    //   eps^6 c^2 e'+^2 (S P) = h'13^2 (R Q)
    let ep2 = e_prime(field, true).pow(2);
    let hp2 = h_prime(field, 1, 3).pow(2);
    let z_scale = field.mul(&field.zeta8_pow(6), &field.mul(&c, &c));
    let eq_z = ep2
        .scale(&z_scale)
        .mul(&s.mul(p))
        .sub(&hp2.mul(&r.mul(q)));
    if !eq_z.nf_fermat().is_zero() {
        return Ok(false);
    }

    // y^2 (w1-1/2)(w2-1/2) = (w1-1)(w2-1), cleared over the shared
    // denominator c^2 Q S:
    //   e''+^2 (2 eps P - c Q)(2 eps R - c S) + h''11^2 (eps P - c Q)(eps R - c S) = 0
    let ed2 = e_double(field, true).pow(2);
    let hd2 = h_double(field, 1, 1).pow(2);
    let eq_y = ed2
        .mul(&w1_mh.mul(&w2_mh))
        .add(&hd2.mul(&w1_m1.mul(&w2_m1)));
    if !eq_y.nf_fermat().is_zero() {
        return Ok(false);
    }

    // ratio identities, cross-multiplied over the same blocks
    let checks = [
        // F3/F1 = eps c (w1-1) = eps (eps P - c Q)/Q
        d.f[2]
            .num
            .mul(&d.f[0].den)
            .mul(q)
            .sub(&d.f[0].num.mul(&d.f[2].den).mul(&w1_m1.scale(&eps))),
        // F4/F1 = -2 eps^2 (w1-1/2) = -eps^2 (2 eps P - c Q)/(c Q)
        d.f[3]
            .num
            .mul(&d.f[0].den)
            .mul(&q.scale(&c))
            .add(&d.f[0].num.mul(&d.f[3].den).mul(&w1_mh.scale(&field.zeta8_pow(2)))),
        // G3/G1 = -eps c (w2-1) = -eps (eps R - c S)/S
        d.g[2]
            .num
            .mul(&d.g[0].den)
            .mul(s)
            .add(&d.g[0].num.mul(&d.g[2].den).mul(&w2_m1.scale(&eps))),
        // G4/G1 = -2 eps^2 (w2-1/2) = -eps^2 (2 eps R - c S)/(c S)
        d.g[3]
            .num
            .mul(&d.g[0].den)
            .mul(&s.scale(&c))
            .add(&d.g[0].num.mul(&d.g[3].den).mul(&w2_mh.scale(&field.zeta8_pow(2)))),
    ];
    Ok(checks.iter().all(|e| e.nf_fermat().is_zero()))
}

/// Draws one point of X(F_p) by sampling (x1, x2, x3) and solving for x0;
/// `None` when this particular draw admits no solution.
fn draw_x_point<R: Rng>(fp: &Fp, rng: &mut R) -> Option<[u64; 4]> {
    let p = fp.modulus();
    let x1 = rng.gen_range(0..p);
    let x2 = rng.gen_range(0..p);
    let x3 = rng.gen_range(0..p);
    let c = fp.neg(&fp.add_raw(
        fp.pow_raw(x1, 4),
        fp.add_raw(fp.pow_raw(x2, 4), fp.pow_raw(x3, 4)),
    ));
    let roots = fp.fourth_roots(c);
    let x0 = *roots.first()?;
    if x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0 {
        return None;
    }
    Some([x0, x1, x2, x3])
}

/// A point of X(F_p) for p = 1 mod 8, deterministic in the seed.
pub fn sample_x_point(p: u64, seed: u64) -> Result<[u64; 4]> {
    let fp = Fp::with_zeta8(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        if let Some(pt) = draw_x_point(&fp, &mut rng) {
            return Ok(pt);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no point of X(F_{p}) found within the draw budget"
    )))
}

/// Values of the map coordinates at a sampled point, skipping points where
/// any constituent vanishes.
struct MapValues {
    w1: u64,
    w2: u64,
    y: u64,
    z: u64,
}

fn eval_map_at(fp: &Fp, d: &MizukamiData<Fp>, pt: &[u64; 4]) -> Option<MapValues> {
    // w coordinates need F1, F2, G1, G2 finite and nonzero
    for rf in [&d.f[0], &d.f[1], &d.g[0], &d.g[1]] {
        if fp.is_zero(&rf.num.eval(pt)) || fp.is_zero(&rf.den.eval(pt)) {
            return None;
        }
    }
    let w1 = d.w1.eval(pt)?;
    let w2 = d.w2.eval(pt)?;
    let y = d.y.eval(pt)?;
    let z = d.z.eval(pt)?;
    if fp.is_zero(&y) || fp.is_zero(&z) {
        return None;
    }
    // the y-equation divides by (w1 - 1/2)(w2 - 1/2)
    let half = fp.inv_raw(2).ok()?;
    if w1 == half || w2 == half {
        return None;
    }
    Some(MapValues { w1, w2, y, z })
}

/// Sampled verification of both Kummer equations at `trials` random
/// points of X(F_p) avoiding all denominator zeros; deterministic in the
/// seed. Errors when too few valid points are found within the budget.
pub fn verify_kummer_sampled(p: u64, trials: u32, seed: u64) -> Result<bool> {
    let fp = Fp::with_zeta8(p)?;
    let d = kummer_map(&fp);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = (trials as u64).saturating_mul(2_000);
    let mut valid = 0u32;
    let mut draws = 0u64;
    while valid < trials {
        draws += 1;
        if draws > budget {
            return Err(Error::SearchExhausted(format!(
                "only {valid}/{trials} usable points of X(F_{p}) after {budget} draws"
            )));
        }
        let Some(pt) = draw_x_point(&fp, &mut rng) else {
            continue;
        };
        let Some(v) = eval_map_at(&fp, &d, &pt) else {
            continue;
        };
        // z^2 = w2 / w1
        let lhs = fp.mul_raw(v.z, v.z);
        let rhs = fp.mul_raw(v.w2, fp.inv_raw(v.w1)?);
        if lhs != rhs {
            return Ok(false);
        }
        // y^2 = (w1-1)(w2-1) / ((w1-1/2)(w2-1/2))
        let half = fp.inv_raw(2)?;
        let num = fp.mul_raw(fp.sub_raw(v.w1, 1), fp.sub_raw(v.w2, 1));
        let den = fp.mul_raw(fp.sub_raw(v.w1, half), fp.sub_raw(v.w2, half));
        let lhs = fp.mul_raw(fp.mul_raw(v.y, v.y), den);
        if lhs != num {
            return Ok(false);
        }
        valid += 1;
    }
    Ok(true)
}

/// Sampled verification of the dependence relations and square identities
/// at `trials` random points; used by the quick mode.
pub fn verify_identities_sampled(p: u64, trials: u32, seed: u64) -> Result<bool> {
    let fp = Fp::with_zeta8(p)?;
    let d = kummer_map(&fp);
    let eps = fp.zeta8();
    let c = fp.add_raw(1, fp.zeta8_pow(2));
    let eps_c = fp.mul_raw(eps, c);
    let eps2 = fp.zeta8_pow(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    let budget = (trials as u64).saturating_mul(2_000);
    let mut valid = 0u32;
    let mut draws = 0u64;
    while valid < trials {
        draws += 1;
        if draws > budget {
            return Err(Error::SearchExhausted(format!(
                "only {valid}/{trials} usable points of X(F_{p}) after {budget} draws"
            )));
        }
        let Some(pt) = draw_x_point(&fp, &mut rng) else {
            continue;
        };
        let vals: Option<Vec<u64>> = d
            .f
            .iter()
            .chain(d.g.iter())
            .map(|rf| rf.eval(&pt))
            .collect();
        let Some(vals) = vals else {
            continue;
        };
        let (f1, f2, f3, f4) = (vals[0], vals[1], vals[2], vals[3]);
        let (g1, g2, g3, g4) = (vals[4], vals[5], vals[6], vals[7]);
        if [f1, f2, f4, g1, g2, g4].contains(&0) {
            continue;
        }
        // dependence relations
        if f3 != fp.sub_raw(fp.mul_raw(eps2, f2), fp.mul_raw(eps_c, f1)) {
            return Ok(false);
        }
        if f4 != fp.sub_raw(fp.mul_raw(eps2, f1), fp.mul_raw(eps_c, f2)) {
            return Ok(false);
        }
        if g3 != fp.sub_raw(fp.mul_raw(eps_c, g1), fp.mul_raw(eps2, g2)) {
            return Ok(false);
        }
        if g4 != fp.sub_raw(fp.mul_raw(eps2, g1), fp.mul_raw(eps_c, g2)) {
            return Ok(false);
        }
        // square identities
        let ep = e_prime(&fp, true).eval(&pt);
        let hp = h_prime(&fp, 1, 3).eval(&pt);
        let ed = e_double(&fp, true).eval(&pt);
        let hd = h_double(&fp, 1, 1).eval(&pt);
        if hp == 0 || hd == 0 {
            continue;
        }
        let lhs1 = fp.mul_raw(fp.mul_raw(f1, g2), fp.inv_raw(fp.mul_raw(f2, g1))?);
        let r1 = fp.mul_raw(ep, fp.inv_raw(hp)?);
        if lhs1 != fp.mul_raw(2, fp.mul_raw(r1, r1)) {
            return Ok(false);
        }
        if f3 == 0 || f4 == 0 || g3 == 0 || g4 == 0 {
            continue;
        }
        let lhs2 = fp.mul_raw(fp.mul_raw(f3, g3), fp.inv_raw(fp.mul_raw(f4, g4))?);
        let r2 = fp.mul_raw(ed, fp.inv_raw(hd)?);
        if lhs2 != fp.mul_raw(2, fp.mul_raw(r2, r2)) {
            return Ok(false);
        }
        valid += 1;
    }
    Ok(true)
}

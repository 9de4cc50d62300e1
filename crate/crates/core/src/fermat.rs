//! The 48 lines on the Fermat quartic surface X, their incidence
//! combinatorics, the residual conics cut out by planes through meeting
//! line pairs, the quadric octad decompositions, and the (E1) identities.
//!
//! With `eps` a fixed solution of `eps^4 = -1` and `mu, nu` odd residues
//! mod 8, the 48 lines are
//!
//! ```text
//!   L(mu,nu): x0 = eps^mu x1,  x2 = eps^nu x3
//!   M(mu,nu): x0 = eps^mu x2,  x1 = eps^nu x3
//!   N(mu,nu): x0 = eps^mu x3,  x1 = eps^nu x2
//! ```
//!
//! Incidence has a purely combinatorial rule, independently certified here
//! by exact rank computation on the lines' defining forms. Divisor-level
//! decomposition claims are certified by containment plus degree counting,
//! keeping everything polynomial.

use crate::error::{invalid, Result};
use crate::field::{Field, Zeta8Field};
use crate::poly::{binary_resultant, BinForm, Exp, MPoly};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    L,
    M,
    N,
}

/// One of the 48 lines; `mu`, `nu` are odd residues mod 8.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LineId {
    pub family: Family,
    pub mu: u8,
    pub nu: u8,
}

impl LineId {
    pub fn new(family: Family, mu: i64, nu: i64) -> LineId {
        let (mu, nu) = (mu.rem_euclid(8) as u8, nu.rem_euclid(8) as u8);
        assert!(mu % 2 == 1 && nu % 2 == 1, "line indices must be odd");
        LineId { family, mu, nu }
    }
}

impl std::fmt::Display for LineId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{}{}", self.family, self.mu, self.nu)
    }
}

pub fn all_lines() -> Vec<LineId> {
    let mut v = Vec::with_capacity(48);
    for family in [Family::L, Family::M, Family::N] {
        for mu in [1, 3, 5, 7] {
            for nu in [1, 3, 5, 7] {
                v.push(LineId::new(family, mu, nu));
            }
        }
    }
    v
}

/// The two defining linear forms of a line.
pub fn line_forms<F: Zeta8Field>(field: &F, id: LineId) -> (MPoly<F>, MPoly<F>) {
    let e = |k: i64| field.zeta8_pow(k);
    let z = || field.zero();
    let one = || field.one();
    let neg = |k: i64| field.neg(&e(k));
    let (mu, nu) = (id.mu as i64, id.nu as i64);
    match id.family {
        Family::L => (
            MPoly::linear(field, [one(), neg(mu), z(), z()]),
            MPoly::linear(field, [z(), z(), one(), neg(nu)]),
        ),
        Family::M => (
            MPoly::linear(field, [one(), z(), neg(mu), z()]),
            MPoly::linear(field, [z(), one(), z(), neg(nu)]),
        ),
        Family::N => (
            MPoly::linear(field, [one(), z(), z(), neg(mu)]),
            MPoly::linear(field, [z(), one(), neg(nu), z()]),
        ),
    }
}

/// Parametrization of a line: coordinate `x_k = out[k][0] s + out[k][1] t`.
pub fn line_param<F: Zeta8Field>(field: &F, id: LineId) -> [[F::Elem; 2]; 4] {
    let e = |k: i64| field.zeta8_pow(k);
    let z = || field.zero();
    let one = || field.one();
    let (mu, nu) = (id.mu as i64, id.nu as i64);
    match id.family {
        // (eps^mu s : s : eps^nu t : t)
        Family::L => [[e(mu), z()], [one(), z()], [z(), e(nu)], [z(), one()]],
        // (eps^mu s : eps^nu t : s : t)
        Family::M => [[e(mu), z()], [z(), e(nu)], [one(), z()], [z(), one()]],
        // (eps^mu t : eps^nu s : s : t)
        Family::N => [[z(), e(mu)], [e(nu), z()], [one(), z()], [z(), one()]],
    }
}

/// Restriction of a homogeneous polynomial to a parametrized line, as a
/// binary form in `(s, t)`.
pub fn restrict_to_line<F: Field>(p: &MPoly<F>, param: &[[F::Elem; 2]; 4]) -> BinForm<F> {
    let f = p.field().clone();
    let deg = p.total_degree().unwrap_or(0) as usize;
    let maxdeg: Vec<u8> = (0..4)
        .map(|k| p.terms().map(|(e, _)| e.0[k]).max().unwrap_or(0))
        .collect();
    // per-variable powers of (a s + b t)
    let var_pows: Vec<Vec<BinForm<F>>> = (0..4)
        .map(|k| {
            let lin = BinForm::new(&f, vec![param[k][0].clone(), param[k][1].clone()]);
            let mut v = vec![BinForm::new(&f, vec![f.one()])];
            for j in 1..=maxdeg[k] as usize {
                let next = v[j - 1].mul(&lin);
                v.push(next);
            }
            v
        })
        .collect();
    let mut out = vec![f.zero(); deg + 1];
    for (e, c) in p.terms() {
        debug_assert_eq!(e.total() as usize, deg, "restriction needs a homogeneous form");
        let mut t = BinForm::new(&f, vec![c.clone()]);
        for k in 0..4 {
            if e.0[k] > 0 {
                t = t.mul(&var_pows[k][e.0[k] as usize]);
            }
        }
        for (j, v) in t.coeffs.iter().enumerate() {
            out[j] = f.add(&out[j], v);
        }
    }
    BinForm::new(&f, out)
}

/// Whether the line lies on X (its parametrization kills the quartic).
pub fn line_on_x<F: Zeta8Field>(field: &F, id: LineId) -> bool {
    let q = MPoly::fermat_quartic(field);
    restrict_to_line(&q, &line_param(field, id)).is_zero()
}

/// Combinatorial incidence rule. Within one family, `L(a,b)` meets
/// `L(c,d)` iff `a = c` or `b = d` but not both; across families the rule
/// is a single congruence mod 8.
pub fn lines_meet_rule(a: LineId, b: LineId) -> Result<bool> {
    if a == b {
        return Err(invalid!("incidence of a line with itself"));
    }
    if a.family == b.family {
        return Ok((a.mu == b.mu) != (a.nu == b.nu));
    }
    let (x, y) = if a.family < b.family { (a, b) } else { (b, a) };
    let (al, be) = (x.mu as i64, x.nu as i64);
    let (ga, de) = (y.mu as i64, y.nu as i64);
    let cond = match (x.family, y.family) {
        (Family::L, Family::M) => al - be - ga + de,
        (Family::L, Family::N) => al + be - ga + de,
        (Family::M, Family::N) => al + be - ga - de,
        _ => unreachable!(),
    };
    Ok(cond.rem_euclid(8) == 0)
}

/// Rank of a small matrix over a field, by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
fn rank<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(&m[r][c]).unwrap();
        for j in c..cols {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let s = field.mul(&factor, &m[r][j]);
                    m[i][j] = field.sub(&m[i][j], &s);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn linear_coeffs<F: Field>(p: &MPoly<F>) -> Vec<F::Elem> {
    (0..4)
        .map(|k| {
            let mut e = [0u8; 4];
            e[k] = 1;
            p.coeff(&Exp(e))
        })
        .collect()
}

/// Geometric incidence oracle: the four defining forms of the two lines
/// have a common nonzero projective solution iff their coefficient matrix
/// has rank at most 3.
pub fn lines_meet_oracle<F: Zeta8Field>(field: &F, a: LineId, b: LineId) -> Result<bool> {
    if a == b {
        return Err(invalid!("incidence of a line with itself"));
    }
    let (fa1, fa2) = line_forms(field, a);
    let (fb1, fb2) = line_forms(field, b);
    let m: Vec<Vec<F::Elem>> = [fa1, fa2, fb1, fb2].iter().map(linear_coeffs).collect();
    Ok(rank(field, m) <= 3)
}

/// Exhaustive agreement of the combinatorial rule with the rank oracle
/// over all 1128 unordered pairs of distinct lines.
pub fn incidence_rule_matches_oracle<F: Zeta8Field>(field: &F) -> bool {
    let lines = all_lines();
    for (i, &a) in lines.iter().enumerate() {
        for &b in &lines[i + 1..] {
            if lines_meet_rule(a, b).unwrap() != lines_meet_oracle(field, a, b).unwrap() {
                return false;
            }
        }
    }
    true
}

// --- named quadric and plane forms ------------------------------------------

/// `e'_± = x0 x3 ± x1 x2`
pub fn e_prime<F: Zeta8Field>(field: &F, plus: bool) -> MPoly<F> {
    let p = MPoly::var(field, 0).mul(&MPoly::var(field, 3));
    let q = MPoly::var(field, 1).mul(&MPoly::var(field, 2));
    if plus {
        p.add(&q)
    } else {
        p.sub(&q)
    }
}

/// `e''_± = x0 x2 ± x1 x3`
pub fn e_double<F: Zeta8Field>(field: &F, plus: bool) -> MPoly<F> {
    let p = MPoly::var(field, 0).mul(&MPoly::var(field, 2));
    let q = MPoly::var(field, 1).mul(&MPoly::var(field, 3));
    if plus {
        p.add(&q)
    } else {
        p.sub(&q)
    }
}

fn sq<F: Field>(field: &F, k: usize, c: F::Elem) -> MPoly<F> {
    let mut e = [0u8; 4];
    e[k] = 2;
    MPoly::monomial(field, Exp(e), c)
}

/// `h'_{ab} = x0^2 - eps^{2a} x1^2 - eps^{2b} x2^2 + eps^{2a+2b} x3^2`;
/// depends on `a, b` mod 4 only.
pub fn h_prime<F: Zeta8Field>(field: &F, a: i64, b: i64) -> MPoly<F> {
    sq(field, 0, field.one())
        .add(&sq(field, 1, field.neg(&field.zeta8_pow(2 * a))))
        .add(&sq(field, 2, field.neg(&field.zeta8_pow(2 * b))))
        .add(&sq(field, 3, field.zeta8_pow(2 * a + 2 * b)))
}

/// `h''_{ab} = x0^2 - eps^{2a} x1^2 - eps^{2b} x3^2 + eps^{2a+2b} x2^2`;
/// depends on `a, b` mod 4 only.
pub fn h_double<F: Zeta8Field>(field: &F, a: i64, b: i64) -> MPoly<F> {
    sq(field, 0, field.one())
        .add(&sq(field, 1, field.neg(&field.zeta8_pow(2 * a))))
        .add(&sq(field, 3, field.neg(&field.zeta8_pow(2 * b))))
        .add(&sq(field, 2, field.zeta8_pow(2 * a + 2 * b)))
}

/// `f_{lmn} = x0 + eps^l x1 + eps^m x2 + eps^n x3`
pub fn f_form<F: Zeta8Field>(field: &F, l: i64, m: i64, n: i64) -> MPoly<F> {
    MPoly::linear(
        field,
        [
            field.one(),
            field.zeta8_pow(l),
            field.zeta8_pow(m),
            field.zeta8_pow(n),
        ],
    )
}

// --- residual conics ----------------------------------------------------------

/// A residual conic: the plane through two meeting lines, and the quadric
/// that cuts the conic in that plane.
#[derive(Clone, PartialEq, Debug)]
pub struct Conic<F: Field> {
    pub plane: MPoly<F>,
    pub quadric: MPoly<F>,
    pub parents: (LineId, LineId),
}

/// The residual conic through a meeting `(L, M)` or `(L, N)` pair (in
/// either order). Errors when the lines are skew and for family pairs
/// with no conic construction.
pub fn conic_from_line_pair<F: Zeta8Field>(field: &F, a: LineId, b: LineId) -> Result<Conic<F>> {
    let (l, other) = match (a.family, b.family) {
        (Family::L, Family::M) | (Family::L, Family::N) => (a, b),
        (Family::M, Family::L) | (Family::N, Family::L) => (b, a),
        _ => {
            return Err(invalid!(
                "no conic construction for family pair {:?}/{:?}",
                a.family,
                b.family
            ))
        }
    };
    if !lines_meet_rule(l, other)? {
        return Err(invalid!("lines {l} and {other} are skew"));
    }
    let al = l.mu as i64;
    let (ga, de) = (other.mu as i64, other.nu as i64);
    let e = |k: i64| field.zeta8_pow(k);
    let neg = |k: i64| field.neg(&e(k));
    let term =
        |e0: u8, e1: u8, e2: u8, e3: u8, c: F::Elem| MPoly::monomial(field, Exp([e0, e1, e2, e3]), c);
    let (plane, quadric) = match other.family {
        Family::M => (
            // x0 - eps^a x1 - eps^g x2 + eps^{a+d} x3
            MPoly::linear(field, [field.one(), neg(al), neg(ga), e(al + de)]),
            // x0^2 + eps^{a+d} x0 x3 + eps^{2a+2d} x3^2
            //      + eps^{2a} x1^2 + eps^{a+g} x1 x2 + eps^{2g} x2^2
            term(2, 0, 0, 0, field.one())
                .add(&term(1, 0, 0, 1, e(al + de)))
                .add(&term(0, 0, 0, 2, e(2 * al + 2 * de)))
                .add(&term(0, 2, 0, 0, e(2 * al)))
                .add(&term(0, 1, 1, 0, e(al + ga)))
                .add(&term(0, 0, 2, 0, e(2 * ga))),
        ),
        Family::N => (
            // x0 - eps^a x1 + eps^{a+d} x2 - eps^g x3
            MPoly::linear(field, [field.one(), neg(al), e(al + de), neg(ga)]),
            // x0^2 + eps^{a+d} x0 x2 + eps^{2a+2d} x2^2
            //      + eps^{2a} x1^2 + eps^{a+g} x1 x3 + eps^{2g} x3^2
            term(2, 0, 0, 0, field.one())
                .add(&term(1, 0, 1, 0, e(al + de)))
                .add(&term(0, 0, 2, 0, e(2 * al + 2 * de)))
                .add(&term(0, 2, 0, 0, e(2 * al)))
                .add(&term(0, 1, 0, 1, e(al + ga)))
                .add(&term(0, 0, 0, 2, e(2 * ga))),
        ),
        Family::L => unreachable!(),
    };
    Ok(Conic {
        plane,
        quadric,
        parents: (l, other),
    })
}

/// Every conic constructible here: one per meeting `(L, M)` and `(L, N)`
/// pair (128 in total).
pub fn all_conics<F: Zeta8Field>(field: &F) -> Vec<Conic<F>> {
    let mut out = Vec::with_capacity(128);
    for lmu in [1, 3, 5, 7] {
        for lnu in [1, 3, 5, 7] {
            let l = LineId::new(Family::L, lmu, lnu);
            for fam in [Family::M, Family::N] {
                for mu in [1, 3, 5, 7] {
                    for nu in [1, 3, 5, 7] {
                        let other = LineId::new(fam, mu, nu);
                        if lines_meet_rule(l, other).unwrap() {
                            out.push(conic_from_line_pair(field, l, other).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Certifies the plane-section decomposition for a conic: both parent
/// lines satisfy the plane, and the Fermat quartic restricted to the plane
/// factors exactly as quadric times a quadratic cofactor.
pub fn verify_conic_on_x<F: Zeta8Field>(field: &F, conic: &Conic<F>) -> bool {
    for id in [conic.parents.0, conic.parents.1] {
        if !restrict_to_line(&conic.plane, &line_param(field, id)).is_zero() {
            return false;
        }
    }
    // the plane is monic in x0: substitute x0 = -(rest)
    let repl = conic.plane.sub(&MPoly::var(field, 0)).neg();
    if repl.x0_degree().unwrap_or(0) != 0 {
        return false;
    }
    let quartic_on_plane = MPoly::fermat_quartic(field).substitute_x0(&repl);
    let quadric_on_plane = conic.quadric.substitute_x0(&repl);
    if quadric_on_plane.is_zero() {
        return false;
    }
    match quartic_on_plane.divide_exact(&quadric_on_plane) {
        Some(cof) => cof.total_degree() == Some(2),
        None => false,
    }
}

// --- quadric octads -----------------------------------------------------------

/// Tag of a quadric whose intersection with X decomposes as eight lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuadricTag {
    EPrimePlus,
    EPrimeMinus,
    EDoublePlus,
    EDoubleMinus,
    /// `h'` with odd parameters (mod 4).
    HPrime(i64, i64),
    /// `h''` with odd parameters (mod 4).
    HDouble(i64, i64),
}

pub fn quadric_form<F: Zeta8Field>(field: &F, tag: QuadricTag) -> MPoly<F> {
    match tag {
        QuadricTag::EPrimePlus => e_prime(field, true),
        QuadricTag::EPrimeMinus => e_prime(field, false),
        QuadricTag::EDoublePlus => e_double(field, true),
        QuadricTag::EDoubleMinus => e_double(field, false),
        QuadricTag::HPrime(a, b) => h_prime(field, a, b),
        QuadricTag::HDouble(a, b) => h_double(field, a, b),
    }
}

/// The eight lines contained in `X ∩ {form = 0}`.
pub fn octad_lines(tag: QuadricTag) -> [LineId; 8] {
    use Family::*;
    let line = LineId::new;
    match tag {
        QuadricTag::EPrimeMinus => [
            line(L, 1, 1),
            line(L, 3, 3),
            line(L, 5, 5),
            line(L, 7, 7),
            line(M, 1, 1),
            line(M, 3, 3),
            line(M, 5, 5),
            line(M, 7, 7),
        ],
        QuadricTag::EPrimePlus => [
            line(L, 1, 5),
            line(L, 3, 7),
            line(L, 5, 1),
            line(L, 7, 3),
            line(M, 1, 5),
            line(M, 3, 7),
            line(M, 5, 1),
            line(M, 7, 3),
        ],
        QuadricTag::EDoubleMinus => [
            line(L, 1, 7),
            line(L, 3, 5),
            line(L, 5, 3),
            line(L, 7, 1),
            line(N, 1, 1),
            line(N, 3, 3),
            line(N, 5, 5),
            line(N, 7, 7),
        ],
        QuadricTag::EDoublePlus => [
            line(L, 1, 3),
            line(L, 3, 1),
            line(L, 5, 7),
            line(L, 7, 5),
            line(N, 1, 5),
            line(N, 3, 7),
            line(N, 5, 1),
            line(N, 7, 3),
        ],
        QuadricTag::HPrime(a, b) => [
            line(L, a, a),
            line(L, a, a + 4),
            line(L, a + 4, a),
            line(L, a + 4, a + 4),
            line(M, b, b),
            line(M, b, b + 4),
            line(M, b + 4, b),
            line(M, b + 4, b + 4),
        ],
        QuadricTag::HDouble(a, b) => [
            line(L, a, -a),
            line(L, a, 4 - a),
            line(L, a + 4, -a),
            line(L, a + 4, 4 - a),
            line(N, b, b),
            line(N, b, b + 4),
            line(N, b + 4, b),
            line(N, b + 4, b + 4),
        ],
    }
}

/// Certifies an octad decomposition: the eight listed lines are pairwise
/// distinct and each lies in `{form = 0}`. Eight distinct lines inside a
/// degree-8 intersection pin down the whole decomposition.
pub fn verify_quadric_octad<F: Zeta8Field>(field: &F, tag: QuadricTag) -> bool {
    let form = quadric_form(field, tag);
    let lines = octad_lines(tag);
    for (i, a) in lines.iter().enumerate() {
        if lines[i + 1..].contains(a) {
            return false;
        }
    }
    lines
        .iter()
        .all(|&id| restrict_to_line(&form, &line_param(field, id)).is_zero())
}

/// Every octad decomposition: the four e-forms and all h-form parameter
/// pairs (odd residues mod 8; the forms depend on them mod 4 only).
pub fn verify_all_octads<F: Zeta8Field>(field: &F) -> bool {
    let mut tags = vec![
        QuadricTag::EPrimePlus,
        QuadricTag::EPrimeMinus,
        QuadricTag::EDoublePlus,
        QuadricTag::EDoubleMinus,
    ];
    for a in [1, 3, 5, 7] {
        for b in [1, 3, 5, 7] {
            tags.push(QuadricTag::HPrime(a, b));
            tags.push(QuadricTag::HDouble(a, b));
        }
    }
    tags.into_iter().all(|t| verify_quadric_octad(field, t))
}

/// The (E1) identities on X:
/// `h'_13 h'_31 = -h'_11 h'_33 = 2 e'_+ e'_-` and the double-primed chain.
pub fn verify_e1<F: Zeta8Field>(field: &F) -> bool {
    let two = field.from_i64(2);
    let ee_p = e_prime(field, true).mul(&e_prime(field, false)).scale(&two);
    let ee_d = e_double(field, true)
        .mul(&e_double(field, false))
        .scale(&two);
    let checks = [
        h_prime(field, 1, 3).mul(&h_prime(field, 3, 1)).sub(&ee_p),
        h_prime(field, 1, 1).mul(&h_prime(field, 3, 3)).add(&ee_p),
        h_double(field, 1, 3).mul(&h_double(field, 3, 1)).sub(&ee_d),
        h_double(field, 1, 1).mul(&h_double(field, 3, 3)).add(&ee_d),
    ];
    checks.iter().all(|p| p.nf_fermat().is_zero())
}

// --- the sixteen mutually skew curves -----------------------------------------

#[derive(Clone, PartialEq, Debug)]
pub enum SkewCurve<F: Field> {
    Line(LineId),
    Conic(Conic<F>),
}

/// The sixteen genus-0 curves (8 lines, 8 conics) that correspond to the
/// 16 disjoint lines of the Kummer surface.
pub fn sixteen_skew_curves<F: Zeta8Field>(field: &F) -> Vec<SkewCurve<F>> {
    use Family::*;
    let line = |f, m, n| SkewCurve::Line(LineId::new(f, m, n));
    let conic = |am, an, f, bm, bn| {
        SkewCurve::Conic(
            conic_from_line_pair(field, LineId::new(L, am, an), LineId::new(f, bm, bn)).unwrap(),
        )
    };
    vec![
        line(M, 5, 1),
        line(M, 3, 3),
        line(M, 1, 5),
        line(M, 7, 7),
        conic(3, 3, M, 1, 1),
        conic(3, 3, M, 5, 5),
        conic(1, 5, M, 3, 7),
        conic(1, 5, M, 7, 3),
        line(N, 1, 1),
        line(N, 3, 7),
        line(N, 5, 5),
        line(N, 7, 3),
        conic(5, 7, N, 1, 5),
        conic(5, 7, N, 5, 1),
        conic(7, 1, N, 3, 3),
        conic(7, 1, N, 7, 7),
    ]
}

fn plane_coeffs<F: Field>(p: &MPoly<F>) -> [F::Elem; 4] {
    std::array::from_fn(|k| {
        let mut e = [0u8; 4];
        e[k] = 1;
        p.coeff(&Exp(e))
    })
}

/// Parametrizes the intersection line of two distinct planes; errors when
/// the planes are proportional.
#[allow(clippy::needless_range_loop)]
fn plane_intersection_param<F: Field>(
    field: &F,
    p: &[F::Elem; 4],
    q: &[F::Elem; 4],
) -> Result<[[F::Elem; 2]; 4]> {
    let mut m = [p.to_vec(), q.to_vec()];
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..4 {
        let Some(piv) = (r..2).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(&m[r][c]).unwrap();
        for j in 0..4 {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..2 {
            if i != r && !field.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in 0..4 {
                    let s = field.mul(&factor, &m[r][j]);
                    m[i][j] = field.sub(&m[i][j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == 2 {
            break;
        }
    }
    if r < 2 {
        return Err(invalid!("proportional planes have no intersection line"));
    }
    let free: Vec<usize> = (0..4).filter(|c| !pivots.contains(c)).collect();
    let mut out: [[F::Elem; 2]; 4] = std::array::from_fn(|_| [field.zero(), field.zero()]);
    for (bi, &fc) in free.iter().enumerate() {
        out[fc][bi] = field.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            out[pc][bi] = field.neg(&m[ri][fc]);
        }
    }
    Ok(out)
}

/// Whether two of the sixteen curves are disjoint on X. Line pairs use the
/// incidence rule; a line meets a conic iff it hits the conic's plane in a
/// point of the quadric (a line inside the plane always meets the conic
/// over the algebraic closure); conic pairs restrict both quadrics to the
/// planes' intersection line and take a resultant.
pub fn curves_disjoint<F: Zeta8Field>(
    field: &F,
    a: &SkewCurve<F>,
    b: &SkewCurve<F>,
) -> Result<bool> {
    match (a, b) {
        (SkewCurve::Line(x), SkewCurve::Line(y)) => Ok(!lines_meet_rule(*x, *y)?),
        (SkewCurve::Line(id), SkewCurve::Conic(c)) | (SkewCurve::Conic(c), SkewCurve::Line(id)) => {
            let param = line_param(field, *id);
            let restriction = restrict_to_line(&c.plane, &param);
            if restriction.is_zero() {
                return Ok(false);
            }
            let u = restriction.coeffs[0].clone();
            let v = restriction.coeffs[1].clone();
            let (s0, t0) = (v, field.neg(&u));
            let pt: [F::Elem; 4] = std::array::from_fn(|k| {
                field.add(&field.mul(&param[k][0], &s0), &field.mul(&param[k][1], &t0))
            });
            Ok(!field.is_zero(&c.quadric.eval(&pt)))
        }
        (SkewCurve::Conic(c1), SkewCurve::Conic(c2)) => {
            let p1 = plane_coeffs(&c1.plane);
            let p2 = plane_coeffs(&c2.plane);
            let param = plane_intersection_param(field, &p1, &p2)?;
            let q1 = restrict_to_line(&c1.quadric, &param);
            let q2 = restrict_to_line(&c2.quadric, &param);
            let r = binary_resultant(&q1, &q2)?;
            Ok(!field.is_zero(&r))
        }
    }
}

/// All 120 unordered pairs of the sixteen curves are disjoint.
pub fn verify_sixteen_skew<F: Zeta8Field>(field: &F) -> Result<bool> {
    let curves = sixteen_skew_curves(field);
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            if !curves_disjoint(field, a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{Q8, Zeta8};
    use crate::poly::RatFunc;

    fn zp(k: i64) -> Zeta8 {
        Zeta8::zeta_pow(k)
    }

    #[test]
    fn line_form_pins() {
        let x = |i| MPoly::var(&Q8, i);
        let (f1, f2) = line_forms(&Q8, LineId::new(Family::L, 1, 1));
        assert_eq!(f1, x(0).sub(&x(1).scale(&zp(1))));
        assert_eq!(f2, x(2).sub(&x(3).scale(&zp(1))));

        let (f1, f2) = line_forms(&Q8, LineId::new(Family::M, 3, 5));
        assert_eq!(f1, x(0).sub(&x(2).scale(&zp(3))));
        assert_eq!(f2, x(1).sub(&x(3).scale(&zp(5))));

        let (f1, f2) = line_forms(&Q8, LineId::new(Family::N, 7, 1));
        assert_eq!(f1, x(0).sub(&x(3).scale(&zp(7))));
        assert_eq!(f2, x(1).sub(&x(2).scale(&zp(1))));
    }

    #[test]
    fn all_48_lines_lie_on_x() {
        let lines = all_lines();
        assert_eq!(lines.len(), 48);
        assert!(lines.iter().all(|&id| line_on_x(&Q8, id)));
    }

    #[test]
    fn meet_rule_examples() {
        let l11 = LineId::new(Family::L, 1, 1);
        let m11 = LineId::new(Family::M, 1, 1);
        let l13 = LineId::new(Family::L, 1, 3);
        let n33 = LineId::new(Family::N, 3, 3);
        assert!(lines_meet_rule(l11, m11).unwrap());
        assert!(lines_meet_rule(l11, l13).unwrap());
        assert!(!lines_meet_rule(l11, n33).unwrap());
        assert!(lines_meet_rule(l11, l11).is_err());
    }

    #[test]
    fn oracle_examples() {
        let l11 = LineId::new(Family::L, 1, 1);
        let m11 = LineId::new(Family::M, 1, 1);
        let n33 = LineId::new(Family::N, 3, 3);
        assert!(lines_meet_oracle(&Q8, l11, m11).unwrap());
        assert!(!lines_meet_oracle(&Q8, l11, n33).unwrap());
    }

    #[test]
    fn rule_matches_oracle_on_all_pairs() {
        assert!(incidence_rule_matches_oracle(&Q8));
    }

    #[test]
    fn conic_plane_pins() {
        let x = |i| MPoly::var(&Q8, i);
        // (L33, M11): plane x0 - z^3 x1 - z x2 + z^4 x3
        let c = conic_from_line_pair(
            &Q8,
            LineId::new(Family::L, 3, 3),
            LineId::new(Family::M, 1, 1),
        )
        .unwrap();
        let expect = x(0)
            .sub(&x(1).scale(&zp(3)))
            .sub(&x(2).scale(&zp(1)))
            .add(&x(3).scale(&zp(4)));
        assert_eq!(c.plane, expect);

        // (L57, N15): plane x0 - z^5 x1 + z^{10} x2 - z x3
        let c = conic_from_line_pair(
            &Q8,
            LineId::new(Family::L, 5, 7),
            LineId::new(Family::N, 1, 5),
        )
        .unwrap();
        let expect = x(0)
            .sub(&x(1).scale(&zp(5)))
            .add(&x(2).scale(&zp(10)))
            .sub(&x(3).scale(&zp(1)));
        assert_eq!(c.plane, expect);
    }

    #[test]
    fn conic_rejects_bad_pairs() {
        let l11 = LineId::new(Family::L, 1, 1);
        assert!(conic_from_line_pair(&Q8, l11, LineId::new(Family::N, 3, 3)).is_err());
        assert!(conic_from_line_pair(
            &Q8,
            LineId::new(Family::M, 1, 1),
            LineId::new(Family::N, 1, 1)
        )
        .is_err());
        assert!(conic_from_line_pair(&Q8, l11, LineId::new(Family::L, 1, 3)).is_err());
    }

    #[test]
    fn conic_verification_examples() {
        let c1 = conic_from_line_pair(
            &Q8,
            LineId::new(Family::L, 3, 3),
            LineId::new(Family::M, 1, 1),
        )
        .unwrap();
        assert!(verify_conic_on_x(&Q8, &c1));

        let c2 = conic_from_line_pair(
            &Q8,
            LineId::new(Family::L, 5, 7),
            LineId::new(Family::N, 1, 5),
        )
        .unwrap();
        assert!(verify_conic_on_x(&Q8, &c2));

        let mut broken = c1.clone();
        broken.quadric = MPoly::var(&Q8, 0).pow(2);
        assert!(!verify_conic_on_x(&Q8, &broken));
    }

    #[test]
    fn all_128_conics_verify() {
        let conics = all_conics(&Q8);
        assert_eq!(conics.len(), 128);
        assert!(conics.iter().all(|c| verify_conic_on_x(&Q8, c)));
    }

    #[test]
    fn octad_examples() {
        assert!(verify_quadric_octad(&Q8, QuadricTag::EPrimeMinus));
        assert!(verify_quadric_octad(&Q8, QuadricTag::HPrime(1, 3)));
        assert!(verify_quadric_octad(&Q8, QuadricTag::EDoublePlus));
    }

    #[test]
    fn all_octads_verify() {
        assert!(verify_all_octads(&Q8));
    }

    #[test]
    fn e1_holds_on_x_but_not_in_the_ambient_ring() {
        assert!(verify_e1(&Q8));
        let two = Q8.from_i64(2);
        let ee = e_prime(&Q8, true).mul(&e_prime(&Q8, false)).scale(&two);
        let raw = h_prime(&Q8, 1, 3).mul(&h_prime(&Q8, 3, 1)).sub(&ee);
        assert!(!raw.is_zero());
    }

    #[test]
    fn skew_examples() {
        let m51 = SkewCurve::<Q8>::Line(LineId::new(Family::M, 5, 1));
        let m33 = SkewCurve::Line(LineId::new(Family::M, 3, 3));
        let n11 = SkewCurve::Line(LineId::new(Family::N, 1, 1));
        assert!(curves_disjoint(&Q8, &m51, &m33).unwrap());
        assert!(curves_disjoint(&Q8, &m51, &n11).unwrap());
    }

    #[test]
    fn sixteen_curves_are_mutually_skew() {
        assert!(verify_sixteen_skew(&Q8).unwrap());
    }

    #[test]
    fn parent_lines_meet_their_conic() {
        let c = conic_from_line_pair(
            &Q8,
            LineId::new(Family::L, 3, 3),
            LineId::new(Family::M, 1, 1),
        )
        .unwrap();
        let parent = SkewCurve::Line(c.parents.0);
        let conic = SkewCurve::Conic(c);
        assert!(!curves_disjoint(&Q8, &parent, &conic).unwrap());
    }

    #[test]
    fn e1_as_rational_function_identity() {
        // h'_13 h'_31 / (2 e'_+ e'_-) = 1 on X
        let num = h_prime(&Q8, 1, 3).mul(&h_prime(&Q8, 3, 1));
        let den = e_prime(&Q8, true)
            .mul(&e_prime(&Q8, false))
            .scale(&Q8.from_i64(2));
        let lhs = RatFunc::new(num, den);
        let one = RatFunc::from_poly(MPoly::one(&Q8));
        assert!(crate::poly::rf_equal_on_x(&lhs, &one).unwrap());
    }
}

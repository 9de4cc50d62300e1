//! Sparse multivariate polynomials in `x0..x3` over an exact field, with
//! the canonical normal form modulo the Fermat quartic
//! `x0^4 + x1^4 + x2^4 + x3^4` and rational-function identity testing on
//! the quartic surface X.
//!
//! The normal form reduces the degree in `x0` below 4 by the substitution
//! `x0^4 -> -(x1^4 + x2^4 + x3^4)`; since the relation is monic in `x0^4`
//! this is a unique canonical representative and needs no Groebner
//! machinery. Terms are kept in graded-lex order, an internal determinism
//! choice with no semantic weight.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::field::Field;

/// Exponent vector of a term in `x0..x3`, ordered graded-lex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Exp(pub [u8; 4]);

impl Exp {
    pub fn total(&self) -> u16 {
        self.0.iter().map(|&e| e as u16).sum()
    }

    fn checked_add(&self, other: &Exp) -> Exp {
        Exp(std::array::from_fn(|k| {
            self.0[k]
                .checked_add(other.0[k])
                .expect("exponent overflow")
        }))
    }

    fn divides(&self, other: &Exp) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn sub(&self, other: &Exp) -> Exp {
        Exp(std::array::from_fn(|k| self.0[k] - other.0[k]))
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq)]
pub struct MPoly<F: Field> {
    field: F,
    terms: BTreeMap<Exp, F::Elem>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(field: &F) -> Self {
        MPoly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        let mut p = Self::zero(field);
        p.add_term(Exp([0; 4]), c);
        p
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// The variable `x_i`.
    pub fn var(field: &F, i: usize) -> Self {
        assert!(i < 4);
        let mut e = [0u8; 4];
        e[i] = 1;
        Self::monomial(field, Exp(e), field.one())
    }

    pub fn monomial(field: &F, e: Exp, c: F::Elem) -> Self {
        let mut p = Self::zero(field);
        p.add_term(e, c);
        p
    }

    /// The linear form `c0 x0 + c1 x1 + c2 x2 + c3 x3`.
    pub fn linear(field: &F, coeffs: [F::Elem; 4]) -> Self {
        let mut p = Self::zero(field);
        for (i, c) in coeffs.into_iter().enumerate() {
            let mut e = [0u8; 4];
            e[i] = 1;
            p.add_term(Exp(e), c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &F::Elem)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.keys().map(|e| e.total()).max()
    }

    pub fn x0_degree(&self) -> Option<u8> {
        self.terms.keys().map(|e| e.0[0]).max()
    }

    pub fn coeff(&self, e: &Exp) -> F::Elem {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c * x^e` in place, dropping the term if the sum cancels.
    pub fn add_term(&mut self, e: Exp, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        let mut out = Self::zero(&self.field);
        for (e, t) in &self.terms {
            out.add_term(*e, self.field.mul(t, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Exp, F::Elem> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(eb);
                let c = self.field.mul(ca, cb);
                match terms.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = self.field.add(o.get(), &c);
                        *o.get_mut() = s;
                    }
                }
            }
        }
        terms.retain(|_, c| !self.field.is_zero(c));
        MPoly {
            field: self.field.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &[F::Elem; 4]) -> F::Elem {
        let f = &self.field;
        let maxdeg = self
            .terms
            .keys()
            .fold([0u8; 4], |m, e| std::array::from_fn(|k| m[k].max(e.0[k])));
        // Power tables per variable.
        let pows: Vec<Vec<F::Elem>> = (0..4)
            .map(|k| {
                let mut v = Vec::with_capacity(maxdeg[k] as usize + 1);
                v.push(f.one());
                for j in 1..=maxdeg[k] as usize {
                    let last = v[j - 1].clone();
                    v.push(f.mul(&last, &x[k]));
                }
                v
            })
            .collect();
        let mut acc = f.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in 0..4 {
                if e.0[k] > 0 {
                    t = f.mul(&t, &pows[k][e.0[k] as usize]);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes `x0 -> repl` (which must not involve `x0`), by Horner's
    /// rule on the `x0`-slices.
    pub fn substitute_x0(&self, repl: &Self) -> Self {
        assert_eq!(repl.x0_degree().unwrap_or(0), 0);
        let d = match self.x0_degree() {
            None => return Self::zero(&self.field),
            Some(d) => d,
        };
        // slice k = coefficient of x0^k, a polynomial in x1..x3
        let mut slices: Vec<MPoly<F>> = (0..=d).map(|_| Self::zero(&self.field)).collect();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2.0[0];
            e2.0[0] = 0;
            slices[k as usize].add_term(e2, c.clone());
        }
        let mut acc = slices.pop().unwrap();
        while let Some(s) = slices.pop() {
            acc = acc.mul(repl).add(&s);
        }
        acc
    }

    /// The Fermat quartic `x0^4 + x1^4 + x2^4 + x3^4`.
    pub fn fermat_quartic(field: &F) -> Self {
        let mut p = Self::zero(field);
        for k in 0..4 {
            let mut e = [0u8; 4];
            e[k] = 4;
            p.add_term(Exp(e), field.one());
        }
        p
    }

    /// Canonical representative modulo the Fermat quartic ideal: the unique
    /// polynomial congruent to `self` with `x0`-degree at most 3, obtained
    /// by substituting `x0^4 -> -(x1^4 + x2^4 + x3^4)`.
    pub fn nf_fermat(&self) -> Self {
        let d = self.x0_degree().unwrap_or(0);
        if d <= 3 {
            return self.clone();
        }
        let f = &self.field;
        let maxq = (d / 4) as usize;
        // powers of b = x1^4 + x2^4 + x3^4
        let mut b = Self::zero(f);
        for k in 1..4 {
            let mut e = [0u8; 4];
            e[k] = 4;
            b.add_term(Exp(e), f.one());
        }
        let mut bpow = Vec::with_capacity(maxq + 1);
        bpow.push(Self::one(f));
        for q in 1..=maxq {
            let last: &MPoly<F> = &bpow[q - 1];
            bpow.push(last.mul(&b));
        }
        let mut out = Self::zero(f);
        for (e, c) in &self.terms {
            let q = (e.0[0] / 4) as usize;
            let r = e.0[0] % 4;
            if q == 0 {
                out.add_term(*e, c.clone());
            } else {
                // x0^(4q+r) = (-1)^q x0^r (x1^4+x2^4+x3^4)^q  mod X
                let sign = if q % 2 == 1 { f.neg(c) } else { c.clone() };
                let rest = Self::monomial(f, Exp([r, e.0[1], e.0[2], e.0[3]]), sign);
                out = out.add(&bpow[q].mul(&rest));
            }
        }
        out
    }

    /// Leading term under graded-lex.
    fn leading(&self) -> Option<(&Exp, &F::Elem)> {
        self.terms.iter().next_back()
    }

    /// Exact division: `Some(q)` with `self = g * q` when `g` divides
    /// `self`, `None` otherwise. Single-divisor multivariate division by
    /// leading terms, a complete divisibility test for any monomial order.
    pub fn divide_exact(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let f = &self.field;
        let (glt_e, glt_c) = g.leading().map(|(e, c)| (*e, c.clone())).unwrap();
        let glt_inv = f.inv(&glt_c).expect("leading coefficient is a unit");
        let mut r = self.clone();
        let mut q = Self::zero(f);
        while let Some((rlt_e, rlt_c)) = r.leading().map(|(e, c)| (*e, c.clone())) {
            if !glt_e.divides(&rlt_e) {
                return None;
            }
            let e = rlt_e.sub(&glt_e);
            let c = f.mul(&rlt_c, &glt_inv);
            let t = Self::monomial(f, e, c.clone());
            q.add_term(e, c);
            r = r.sub(&t.mul(g));
        }
        Some(q)
    }
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &ek) in e.0.iter().enumerate() {
                match ek {
                    0 => {}
                    1 => write!(f, "*x{k}")?,
                    _ => write!(f, "*x{k}^{ek}")?,
                }
            }
        }
        Ok(())
    }
}

/// Exact division wrapper matching the operation-level contract: `g` must be
/// nonzero, failure is a value.
pub fn poly_divide_exact<F: Field>(f: &MPoly<F>, g: &MPoly<F>) -> Result<Option<MPoly<F>>> {
    if g.is_zero() {
        return Err(invalid!("division by the zero polynomial"));
    }
    Ok(f.divide_exact(g))
}

/// A rational function on X as a formal fraction; no reduction to lowest
/// terms is ever performed, all equality is semantic via [`rf_equal_on_x`].
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F: Field> {
    pub num: MPoly<F>,
    pub den: MPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: MPoly<F>, den: MPoly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn from_poly(num: MPoly<F>) -> Self {
        let one = MPoly::one(num.field());
        RatFunc { num, den: one }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc {
            num: self
                .num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatFunc {
            num: self
                .num
                .mul(&other.den)
                .sub(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    /// Evaluates at a point; `None` when the denominator vanishes there.
    pub fn eval(&self, x: &[F::Elem; 4]) -> Option<F::Elem> {
        let f = self.num.field();
        let d = self.den.eval(x);
        if f.is_zero(&d) {
            return None;
        }
        let n = self.num.eval(x);
        Some(f.mul(&n, &f.inv(&d).unwrap()))
    }
}

/// Semantic equality of rational functions on X: cross-multiply and reduce
/// to normal form. Errors when a denominator vanishes identically on X.
pub fn rf_equal_on_x<F: Field>(r: &RatFunc<F>, s: &RatFunc<F>) -> Result<bool> {
    for d in [&r.den, &s.den] {
        if d.nf_fermat().is_zero() {
            return Err(invalid!("denominator vanishes identically on X"));
        }
    }
    let cross = r.num.mul(&s.den).sub(&s.num.mul(&r.den));
    Ok(cross.nf_fermat().is_zero())
}

/// A homogeneous binary form in `(s, t)`: `coeffs[k]` multiplies
/// `s^(d-k) t^k` where `d = coeffs.len() - 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct BinForm<F: Field> {
    field: F,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> BinForm<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Self {
        assert!(!coeffs.is_empty());
        BinForm {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = vec![f.zero(); self.degree() + other.degree() + 1];
        for (i, ca) in self.coeffs.iter().enumerate() {
            for (j, cb) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(ca, cb));
            }
        }
        BinForm::new(f, out)
    }

    pub fn eval(&self, s: &F::Elem, t: &F::Elem) -> F::Elem {
        let f = &self.field;
        let d = self.degree();
        let mut acc = f.zero();
        let mut spow = vec![f.one()];
        let mut tpow = vec![f.one()];
        for k in 1..=d {
            spow.push(f.mul(&spow[k - 1], s));
            tpow.push(f.mul(&tpow[k - 1], t));
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            let m = f.mul(&f.mul(c, &spow[d - k]), &tpow[k]);
            acc = f.add(&acc, &m);
        }
        acc
    }
}

/// Determinant by cofactor expansion; division-free, fine for the 4x4
/// Sylvester matrices used here.
fn det<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = field.zero();
    for j in 0..n {
        if field.is_zero(&m[0][j]) {
            continue;
        }
        let minor: Vec<Vec<F::Elem>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let cof = field.mul(&m[0][j], &det(field, &minor));
        if j % 2 == 0 {
            acc = field.add(&acc, &cof);
        } else {
            acc = field.sub(&acc, &cof);
        }
    }
    acc
}

/// Resultant of two binary forms of (formal) degree at most 2, via the
/// Sylvester matrix for their formal degrees. Zero exactly when the forms
/// share a projective root over the algebraic closure. Errors on an
/// identically zero form.
pub fn binary_resultant<F: Field>(q1: &BinForm<F>, q2: &BinForm<F>) -> Result<F::Elem> {
    if q1.is_zero() || q2.is_zero() {
        return Err(invalid!("resultant of the identically zero form"));
    }
    if q1.degree() > 2 || q2.degree() > 2 {
        return Err(invalid!("binary forms of degree > 2 are not supported"));
    }
    let f = &q1.field;
    let (d1, d2) = (q1.degree(), q2.degree());
    let n = d1 + d2;
    if n == 0 {
        // two nonzero constants never share a root
        return Ok(f.one());
    }
    let mut m: Vec<Vec<F::Elem>> = vec![vec![f.zero(); n]; n];
    for r in 0..d2 {
        for (k, c) in q1.coeffs.iter().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..d1 {
        for (k, c) in q2.coeffs.iter().enumerate() {
            m[d2 + r][r + k] = c.clone();
        }
    }
    Ok(det(f, &m))
}

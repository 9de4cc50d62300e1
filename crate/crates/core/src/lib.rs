//! Exact-arithmetic verification kit for diagonal quartic surfaces.
//!
//! The crate machine-checks, in exact arithmetic, the classical geometry of
//! the Fermat quartic surface `x0^4 + x1^4 + x2^4 + x3^4 = 0` (its 48
//! lines, residual conics and quadric decompositions), Mizukami's explicit
//! map from that surface to a Kummer surface, the torsion and Frobenius
//! arithmetic of the lemniscatic curve `y^2 = x^3 - x`, and the
//! finite-level Galois-module sweeps behind the Brauer-group bounds for
//! diagonal quartic surfaces `x0^4 + a1 x1^4 + a2 x2^4 + a3 x3^4 = 0`
//! over Q. The `brauer` module computes, per surface, the membership
//! criterion in the subgroup `H_D` of `Q*/Q*^4` and the resulting
//! verdicts and bounds.
//!
//! All identity checking runs over a generic coefficient field
//! ([`field::Field`]): exactly over Q(zeta_8) and probabilistically over
//! F_p with p = 1 mod 8, sharing one polynomial engine.

pub mod brauer;
pub mod elliptic;
pub mod error;
pub mod fermat;
pub mod field;
pub mod galois;
pub mod mizukami;
pub mod numbers;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, Zeta8Field};
pub use numbers::{Fp, GaussInt, Q8, Rational, Zeta8};

/// Polynomials over Q(zeta_8), the exact instantiation.
pub type Q8Poly = poly::MPoly<Q8>;
/// Polynomials over F_p, the sampled instantiation.
pub type FpPoly = poly::MPoly<Fp>;
/// Rational functions on X over Q(zeta_8).
pub type Q8RatFunc = poly::RatFunc<Q8>;

//! Exact arithmetic foundations: rationals, Q(zeta_8), Gaussian integers
//! and prime fields.

pub mod fp;
pub mod gauss;
pub mod zeta8;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{invalid, Result};

pub use fp::{fp_zeta8, Fp};
pub use gauss::{gauss_primary_split, is_prime_u64, GaussInt};
pub use zeta8::{Q8, Zeta8};

/// Arbitrary-precision rational, stored fully reduced with positive
/// denominator (guaranteed by `num-rational`).
pub type Rational = num_rational::BigRational;

/// Parses a rational written as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| invalid!("cannot parse rational `{s}`: {e}"))
}

pub fn rational_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn is_fourth_power_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.nth_root(4);
    &(&r * &r * &r * &r) == n
}

/// Whether a nonzero rational is a 4th power in Q.
pub fn is_fourth_power_rational(r: &Rational) -> bool {
    is_fourth_power_int(r.numer()) && is_fourth_power_int(r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signed_fractions() {
        assert_eq!(parse_rational("-4").unwrap(), rational_int(-4));
        assert_eq!(
            parse_rational("3/2").unwrap(),
            Rational::new(3.into(), 2.into())
        );
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn fourth_power_detection() {
        assert!(is_fourth_power_rational(&rational_int(16)));
        assert!(is_fourth_power_rational(&Rational::new(1.into(), 81.into())));
        assert!(!is_fourth_power_rational(&rational_int(-16)));
        assert!(!is_fourth_power_rational(&rational_int(8)));
    }
}

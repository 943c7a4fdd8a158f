//! Exact scalar arithmetic.
//!
//! Everything in this crate computes over the field of rationals with
//! arbitrary-precision integer parts; floating point appears only in the
//! numeric cross-check oracle.  The representation is num-rational's
//! `Ratio<BigInt>`, which maintains the canonical form we rely on
//! everywhere: lowest terms, denominator positive, zero stored as `0/1`.
//! Equality of values is therefore structural equality.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_bigint::BigInt as Int;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = num_rational::Ratio<Int>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("denominator is zero")]
pub struct ZeroDenominator;

/// Rational from machine-integer parts.  Panics on a zero denominator, so
/// this is for literals in code and tests; runtime input goes through
/// [`try_rat`].
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(Int::from(numer), Int::from(denom))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Checked constructor: reduces and fixes signs, rejects a zero denominator.
pub fn try_rat(numer: Int, denom: Int) -> Result<Rat, ZeroDenominator> {
    if denom.is_zero() {
        return Err(ZeroDenominator);
    }
    Ok(Rat::new(numer, denom))
}

/// Checked division; `None` on a zero divisor.
pub fn checked_div(a: &Rat, b: &Rat) -> Option<Rat> {
    if b.is_zero() {
        None
    } else {
        Some(a / b)
    }
}

/// Canonical display form: `numer/denom`, with `/denom` omitted for
/// integers.  This is the form used in all CLI output and JSON payloads,
/// pinned here rather than inherited from the dependency's `Display`.
pub fn format_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Sign as -1, 0, or 1; used by the root-location test where only signs of
/// exact quantities matter.
pub fn sign(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(0, 5), int(0));
        assert_eq!(rat(0, -7).denom(), &Int::from(1));
        // lowest terms and positive denominator after arithmetic too
        let q = rat(1, 6) + rat(1, 3);
        assert_eq!((q.numer(), q.denom()), (&Int::from(1), &Int::from(2)));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(try_rat(Int::from(1), Int::from(0)), Err(ZeroDenominator));
        assert!(try_rat(Int::from(0), Int::from(3)).is_ok());
        assert_eq!(checked_div(&rat(1, 2), &int(0)), None);
        assert_eq!(checked_div(&rat(1, 2), &int(2)), Some(rat(1, 4)));
    }

    #[test]
    fn display_form() {
        assert_eq!(format_rat(&rat(-1, 12)), "-1/12");
        assert_eq!(format_rat(&int(7)), "7");
        assert_eq!(format_rat(&int(0)), "0");
        assert_eq!(format_rat(&rat(10, -4)), "-5/2");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1000i64..1000, 1i64..60).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        // Field axioms, exercised on random words; the interesting part is
        // that reduction never breaks them.
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &Rat::zero(), a.clone());
            prop_assert_eq!(&a * &Rat::one(), a.clone());
            prop_assert_eq!(&a + &(-&a), Rat::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &(Rat::one() / &a), Rat::one());
            }
        }

        #[test]
        fn division_roundtrip(a in arb_rat(), b in arb_rat()) {
            if let Some(q) = checked_div(&a, &b) {
                prop_assert_eq!(q * &b, a);
            } else {
                prop_assert!(b.is_zero());
            }
        }
    }
}

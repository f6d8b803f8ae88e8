//! Small helpers over arbitrary-precision rationals.
//!
//! All series coefficients in this crate are `BigRational` values from the
//! `num` family, which keeps them in canonical form (reduced, positive
//! denominator) by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Rational from a small numerator/denominator pair.
///
/// Panics if `denom` is zero, like `BigRational::new`.
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Canonical `p/q` rendering, with the `/q` part omitted when q = 1.
pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

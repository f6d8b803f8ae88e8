//! Euler numbers in the secant convention: sec x = sum E_n x^(2n)/(2n)!.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UnivariateSeries;
use crate::rational::factorial;

/// The secant numbers E_0, E_1, ..., all positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSequence {
    values: Vec<BigInt>,
}

impl EulerSequence {
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// E_n. Panics past the computed range.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Compute E_0 .. E_count by exact reciprocal of the cosine series:
/// E_n is the x^(2n) coefficient of sec x times (2n)!.
pub fn euler_numbers(count: usize) -> EulerSequence {
    let sec = UnivariateSeries::sec(2 * count);
    let mut values = Vec::with_capacity(count + 1);
    for n in 0..=count {
        let c = sec.coeff(2 * n) * num_rational::BigRational::from_integer(factorial(2 * n));
        assert!(c.denom().is_one(), "secant coefficients scale to integers");
        let e = c.to_integer();
        assert!(e.is_positive(), "secant numbers are positive");
        values.push(e);
    }
    // Sanity on the sequence shape: E_0 = 1 and strict growth from n = 1.
    assert!(values[0].is_one());
    for w in values[1..].windows(2) {
        assert!(w[0] < w[1]);
    }
    EulerSequence { values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_u128(seq: &EulerSequence) -> Vec<u128> {
        seq.values()
            .iter()
            .map(|v| v.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn zeroth_secant_number() {
        assert_eq!(as_u128(&euler_numbers(0)), vec![1]);
    }

    #[test]
    fn first_five_secant_numbers() {
        assert_eq!(as_u128(&euler_numbers(4)), vec![1, 1, 5, 61, 1385]);
    }

    #[test]
    fn first_six_secant_numbers() {
        assert_eq!(as_u128(&euler_numbers(5)), vec![1, 1, 5, 61, 1385, 50521]);
    }

    #[test]
    fn deeper_values_stay_exact() {
        let seq = euler_numbers(8);
        assert_eq!(
            as_u128(&seq)[5..],
            [50521, 2_702_765, 199_360_981, 19_391_512_145]
        );
    }
}

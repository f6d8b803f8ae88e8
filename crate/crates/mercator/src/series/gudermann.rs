//! Series of the inverse Gudermannian and of the Gudermannian itself.
//!
//! The inverse Gudermannian arctanh(sin x) is the logarithm of the
//! angle-addition law built in [`super::group_law`]; the Gudermannian
//! arcsin(tanh x) is its exponential. Both are odd, and their odd
//! coefficients are secant numbers over odd factorials:
//!
//! - log series: coefficient of x^(2n+1) is E_n / (2n+1)!
//! - exp series: coefficient of x^(2n+1) is (-1)^n E_n / (2n+1)!
//!
//! The signs follow from the derivatives sec x and sech x. Each
//! construction is pinned by an independent route in the test suite:
//! the log series against arctanh composed with sin (and against the
//! antiderivative of sec), the exp series against the compositional
//! inverse of the log series.

use num_rational::BigRational;

use super::euler::euler_numbers;
use super::UnivariateSeries;
use crate::rational::factorial;

/// Series of arctanh(sin x) to the given order. All coefficients are
/// positive: E_n / (2n+1)!.
pub fn gudermann_log_series(order: usize) -> UnivariateSeries {
    assert!(order >= 1, "the log series needs order >= 1");
    build(order, false)
}

/// Series of arcsin(tanh x) to the given order; the compositional
/// inverse of [`gudermann_log_series`]. Coefficients alternate:
/// (-1)^n E_n / (2n+1)!.
pub fn gudermann_exp_series(order: usize) -> UnivariateSeries {
    assert!(order >= 1, "the exp series needs order >= 1");
    build(order, true)
}

fn build(order: usize, alternating: bool) -> UnivariateSeries {
    let terms = if order >= 1 { (order - 1) / 2 } else { 0 };
    let euler = euler_numbers(terms);
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for n in 0..=terms {
        let mut c = BigRational::new(euler.get(n).clone(), factorial(2 * n + 1));
        if alternating && n % 2 == 1 {
            c = -c;
        }
        coeffs[2 * n + 1] = c;
    }
    UnivariateSeries::from_coeffs(coeffs)
}

use num_traits::Zero;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn order_one_is_the_identity() {
        assert_eq!(gudermann_log_series(1), UnivariateSeries::identity(1));
        assert_eq!(gudermann_exp_series(1), UnivariateSeries::identity(1));
    }

    #[test]
    fn log_series_low_coefficients() {
        // x + x^3/6 + x^5/24
        let s = gudermann_log_series(5);
        assert_eq!(s.coeff(1), &ratio(1, 1));
        assert_eq!(s.coeff(3), &ratio(1, 6));
        assert_eq!(s.coeff(5), &ratio(1, 24));
        assert_eq!(s.coeff(2), &ratio(0, 1));
        assert_eq!(s.coeff(4), &ratio(0, 1));
    }

    #[test]
    fn log_series_degree_seven() {
        assert_eq!(gudermann_log_series(7).coeff(7), &ratio(61, 5040));
    }

    #[test]
    fn log_series_matches_arctanh_of_sin() {
        for order in [1, 2, 5, 7, 13] {
            let composed = UnivariateSeries::arctanh(order)
                .compose(&UnivariateSeries::sin(order))
                .unwrap();
            assert_eq!(gudermann_log_series(order), composed, "order {order}");
        }
    }

    #[test]
    fn log_series_matches_sec_antiderivative() {
        for order in [1, 5, 13] {
            let integrated = UnivariateSeries::sec(order - 1).antiderivative();
            assert_eq!(gudermann_log_series(order), integrated, "order {order}");
        }
    }

    #[test]
    fn exp_series_low_coefficients() {
        // x - x^3/6 + x^5/24 - 61 x^7/5040
        let s = gudermann_exp_series(7);
        assert_eq!(s.coeff(1), &ratio(1, 1));
        assert_eq!(s.coeff(3), &ratio(-1, 6));
        assert_eq!(s.coeff(5), &ratio(1, 24));
        assert_eq!(s.coeff(7), &ratio(-61, 5040));
    }

    #[test]
    fn exp_series_is_the_compositional_inverse() {
        for order in [1, 3, 5, 13] {
            let inverted = gudermann_log_series(order).invert_composition().unwrap();
            assert_eq!(gudermann_exp_series(order), inverted, "order {order}");
        }
    }

    #[test]
    fn exp_series_matches_arcsin_of_tanh() {
        let order = 13;
        let composed = UnivariateSeries::arcsin(order)
            .compose(&UnivariateSeries::tanh(order))
            .unwrap();
        assert_eq!(gudermann_exp_series(order), composed);
    }

    #[test]
    fn the_two_series_compose_to_the_identity() {
        let order = 3;
        let composed = gudermann_log_series(order)
            .compose(&gudermann_exp_series(order))
            .unwrap();
        assert_eq!(composed, UnivariateSeries::identity(order));
    }

    #[test]
    fn both_series_are_odd() {
        for s in [gudermann_log_series(12), gudermann_exp_series(12)] {
            for k in (0..=12).step_by(2) {
                assert!(s.coeff(k).is_zero());
            }
        }
    }
}

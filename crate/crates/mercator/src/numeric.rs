//! Double-precision evaluation of the inverse Gudermannian, its inverse,
//! and the circle-level angle addition.
//!
//! The inverse Gudermannian arctanh(sin x) maps the circle to the
//! extended line, diverging at x = ±pi/2; adding two angles means
//! mapping both, adding on the line, and mapping back. That route only
//! covers the open interval (-pi/2, pi/2), so [`mercator_add`] instead
//! uses the closed form
//!
//! ```text
//! x (+) y  =  2 atan2( sin((x+y)/2), cos((x-y)/2) )   (principal value)
//! ```
//!
//! which extends the addition continuously to the whole torus except the
//! two points (±pi/2, ∓pi/2). The closed form is the argument of the
//! unit-modulus complex number whose logarithm the Cayley-transform
//! factorization produces; [`cayley_residual`] verifies that identity
//! numerically, and the test suite pins the closed form against the
//! transform-and-add route on a grid.
//!
//! Everything here is a pure function of f64 inputs. Angles are reduced
//! to (-pi, pi] before use; singularities are detected by exact
//! comparison after reduction with a one-ulp guard band, so they are
//! defined values (±infinity), not errors.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

use crate::tolerances::ANGLE_ULP_GUARD;

/// Domain violations of the circle-level operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error(
        "({x}, {y}) reduces to a puncture of the addition domain: \
         the two points (±pi/2, ∓pi/2) have no continuous value"
    )]
    Puncture { x: f64, y: f64 },
    #[error("the inverse Gudermannian is singular at ±pi/2 (mod 2pi), got {x}")]
    Singular { x: f64 },
}

/// Selector for the three algebraically equal forms of arctanh(sin x).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseGdFormula {
    /// arctanh(sin x)
    ArctanhSin,
    /// log |tan x + sec x|
    LogTanSec,
    /// (1/2) log |(1 + sin x)/(1 - sin x)|
    HalfLogRatio,
}

/// Reduce an angle to the principal interval (-pi, pi].
///
/// Reduction subtracts an exact multiple of the f64 value of 2pi, so the
/// result is faithful to within one ulp of the reduced argument.
pub fn reduce_angle(x: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = x % two_pi;
    if r > PI {
        r -= two_pi;
    } else if r <= -PI {
        r += two_pi;
    }
    r
}

/// True when the reduced angle sits on the positive singularity +pi/2.
fn at_positive_pole(reduced: f64) -> bool {
    (reduced - FRAC_PI_2).abs() <= ANGLE_ULP_GUARD
}

/// True when the reduced angle sits on the negative singularity -pi/2.
fn at_negative_pole(reduced: f64) -> bool {
    (reduced + FRAC_PI_2).abs() <= ANGLE_ULP_GUARD
}

/// The inverse Gudermannian arctanh(sin x), evaluated by the selected
/// representation. Returns +inf at x = pi/2 and -inf at x = -pi/2
/// (mod 2pi); all three formulas agree to [`crate::tolerances::CORE_AGREEMENT`]
/// away from the singularities.
pub fn inverse_gudermannian(x: f64, formula: InverseGdFormula) -> f64 {
    let r = reduce_angle(x);
    if at_positive_pole(r) {
        return f64::INFINITY;
    }
    if at_negative_pole(r) {
        return f64::NEG_INFINITY;
    }
    match formula {
        InverseGdFormula::ArctanhSin => r.sin().atanh(),
        InverseGdFormula::LogTanSec => (r.tan() + 1.0 / r.cos()).abs().ln(),
        InverseGdFormula::HalfLogRatio => {
            let s = r.sin();
            0.5 * ((1.0 + s) / (1.0 - s)).abs().ln()
        }
    }
}

/// The Gudermannian arcsin(tanh y), the inverse of
/// [`inverse_gudermannian`]. Maps ±inf to ±pi/2; the image is
/// [-pi/2, pi/2].
pub fn gudermannian(y: f64) -> f64 {
    y.tanh().asin()
}

/// Angle addition on the circle, principal value in (-pi, pi].
///
/// Agrees with `gudermannian(inverse_gudermannian(x) + inverse_gudermannian(y))`
/// wherever both inputs lie in (-pi/2, pi/2), and extends that law
/// continuously to all of the torus except the two punctures
/// (±pi/2, ∓pi/2), which are rejected.
pub fn mercator_add(x: f64, y: f64) -> Result<f64, NumericError> {
    let rx = reduce_angle(x);
    let ry = reduce_angle(y);
    if is_puncture(rx, ry) {
        return Err(NumericError::Puncture { x: rx, y: ry });
    }
    let half_sum_sin = ((rx + ry) / 2.0).sin();
    let half_diff_cos = ((rx - ry) / 2.0).cos();
    let raw = 2.0 * half_sum_sin.atan2(half_diff_cos);
    // atan2 doubles into (-2pi, 2pi]; one correction restores principal range
    Ok(if raw > PI {
        raw - 2.0 * PI
    } else if raw <= -PI {
        raw + 2.0 * PI
    } else {
        raw
    })
}

fn is_puncture(rx: f64, ry: f64) -> bool {
    (at_positive_pole(rx) && at_negative_pole(ry))
        || (at_negative_pole(rx) && at_positive_pole(ry))
}

/// The aberration form of the addition law:
/// (sin x + sin y) / (1 + sin x sin y), which equals sin(x (+) y).
///
/// The denominator vanishes exactly at the punctures of
/// [`mercator_add`]; those inputs are rejected.
pub fn aberration_sine(x: f64, y: f64) -> Result<f64, NumericError> {
    let rx = reduce_angle(x);
    let ry = reduce_angle(y);
    let denom = 1.0 + rx.sin() * ry.sin();
    if is_puncture(rx, ry) || denom == 0.0 {
        return Err(NumericError::Puncture { x: rx, y: ry });
    }
    Ok((rx.sin() + ry.sin()) / denom)
}

/// Residual of the Cayley-transform route against the direct one.
///
/// Evaluates -log(i C(e^(ix))) with C(z) = (z - i)/(z + i) in complex
/// arithmetic and returns the larger of the real-part mismatch against
/// `inverse_gudermannian(x)` and the stray imaginary part. Both vanish
/// (to [`crate::tolerances::ROUND_TRIP`]) for |x| < pi/2; the principal
/// logarithm picks up a branch term beyond.
pub fn cayley_residual(x: f64) -> Result<f64, NumericError> {
    let r = reduce_angle(x);
    if at_positive_pole(r) || at_negative_pole(r) {
        return Err(NumericError::Singular { x: r });
    }
    let i = Complex64::new(0.0, 1.0);
    let z = Complex64::from_polar(1.0, r);
    let cayley = (z - i) / (z + i);
    let w = -(i * cayley).ln();
    let direct = inverse_gudermannian(r, InverseGdFormula::ArctanhSin);
    Ok((w.re - direct).abs().max(w.im.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tolerances::{CORE_AGREEMENT, ROUND_TRIP};

    const ALL_FORMULAS: [InverseGdFormula; 3] = [
        InverseGdFormula::ArctanhSin,
        InverseGdFormula::LogTanSec,
        InverseGdFormula::HalfLogRatio,
    ];

    #[test]
    fn reduce_angle_principal_range() {
        assert_eq!(reduce_angle(0.0), 0.0);
        assert_eq!(reduce_angle(PI), PI);
        assert_eq!(reduce_angle(-PI), PI);
        assert!((reduce_angle(2.0 * PI + 0.25) - 0.25).abs() < 1e-14);
        assert!((reduce_angle(-7.0 * PI / 2.0) - FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn vanishes_at_zero() {
        for f in ALL_FORMULAS {
            assert_eq!(inverse_gudermannian(0.0, f), 0.0);
        }
    }

    #[test]
    fn diverges_at_the_poles() {
        for f in ALL_FORMULAS {
            assert_eq!(inverse_gudermannian(FRAC_PI_2, f), f64::INFINITY);
            assert_eq!(inverse_gudermannian(-FRAC_PI_2, f), f64::NEG_INFINITY);
            // the same poles repeat mod 2pi
            assert_eq!(
                inverse_gudermannian(FRAC_PI_2 + 2.0 * PI, f),
                f64::INFINITY
            );
        }
    }

    /// Frozen oracle: arctanh(sin 1/2) evaluated at 30 digits is
    /// 0.522238103278440330189887144936.
    #[test]
    fn value_at_one_half() {
        for f in ALL_FORMULAS {
            let got = inverse_gudermannian(0.5, f);
            assert!(
                (got - 0.522_238_103_278_440_33).abs() < 1e-12,
                "{f:?} gave {got}"
            );
        }
    }

    #[test]
    fn formulas_agree_on_a_grid() {
        for i in 0..500 {
            let x = -1.5 + 3.0 * (i as f64 + 0.5) / 500.0;
            let a = inverse_gudermannian(x, InverseGdFormula::ArctanhSin);
            for f in [InverseGdFormula::LogTanSec, InverseGdFormula::HalfLogRatio] {
                let b = inverse_gudermannian(x, f);
                let scale = a.abs().max(1.0);
                assert!((a - b).abs() <= CORE_AGREEMENT * scale, "x = {x}, {f:?}");
            }
        }
    }

    #[test]
    fn gudermannian_inverts_it() {
        assert_eq!(gudermannian(0.0), 0.0);
        assert_eq!(gudermannian(f64::INFINITY), FRAC_PI_2);
        assert_eq!(gudermannian(f64::NEG_INFINITY), -FRAC_PI_2);
        // frozen inverse of the oracle above
        assert!((gudermannian(0.522_238_103_278_440_33) - 0.5).abs() < 1e-12);
        for i in 0..200 {
            let x = -1.4 + 2.8 * (i as f64 + 0.5) / 200.0;
            let rt = gudermannian(inverse_gudermannian(x, InverseGdFormula::ArctanhSin));
            assert!((rt - x).abs() < ROUND_TRIP, "x = {x}");
        }
    }

    #[test]
    fn addition_with_zero_is_the_identity_on_the_circle() {
        for i in 0..100 {
            let x = -3.1 + 6.2 * (i as f64) / 99.0;
            let sum = mercator_add(x, 0.0).unwrap();
            assert!((sum - x).abs() < 1e-12, "x = {x}, sum = {sum}");
        }
        // including the poles of the logarithm, where the closed form is fine
        assert!((mercator_add(FRAC_PI_2, 0.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn addition_matches_the_transform_route() {
        let samples = [(0.3, 0.4), (-1.2, 0.7), (0.9, -0.9), (1.3, 1.3)];
        for (x, y) in samples {
            let closed = mercator_add(x, y).unwrap();
            let via_line = gudermannian(
                inverse_gudermannian(x, InverseGdFormula::ArctanhSin)
                    + inverse_gudermannian(y, InverseGdFormula::ArctanhSin),
            );
            assert!(
                (closed - via_line).abs() < CORE_AGREEMENT,
                "({x}, {y}): {closed} vs {via_line}"
            );
        }
    }

    #[test]
    fn punctures_are_rejected() {
        for (x, y) in [(FRAC_PI_2, -FRAC_PI_2), (-FRAC_PI_2, FRAC_PI_2)] {
            assert!(matches!(
                mercator_add(x, y),
                Err(NumericError::Puncture { .. })
            ));
            assert!(matches!(
                aberration_sine(x, y),
                Err(NumericError::Puncture { .. })
            ));
        }
        // shifted by a full turn they are still punctures
        assert!(mercator_add(FRAC_PI_2 + 2.0 * PI, -FRAC_PI_2).is_err());
        // the diagonal pairs are fine
        assert!(mercator_add(FRAC_PI_2, FRAC_PI_2).is_ok());
    }

    #[test]
    fn aberration_form_matches_the_sine_of_the_sum() {
        assert_eq!(aberration_sine(0.0, 0.7).unwrap(), 0.7f64.sin());
        let (x, y) = (0.3, 0.4);
        let lhs = aberration_sine(x, y).unwrap();
        let rhs = mercator_add(x, y).unwrap().sin();
        assert!((lhs - rhs).abs() < CORE_AGREEMENT);
        // fixed point at the pole pair with equal signs
        assert_eq!(aberration_sine(FRAC_PI_2, FRAC_PI_2).unwrap(), 1.0);
    }

    #[test]
    fn cayley_route_matches_the_direct_one() {
        assert_eq!(cayley_residual(0.0).unwrap(), 0.0);
        for x in [0.5, -0.8, 1.2, -1.39] {
            let residual = cayley_residual(x).unwrap();
            assert!(residual < ROUND_TRIP, "x = {x}, residual = {residual}");
        }
        assert!(matches!(
            cayley_residual(FRAC_PI_2),
            Err(NumericError::Singular { .. })
        ));
    }

    #[test]
    fn addition_is_continuous_across_the_antidiagonal() {
        // walk through (pi/2 + e, pi/2 - e); the non-punctured antidiagonal
        let mut previous: Option<f64> = None;
        for k in -50..=50 {
            let e = k as f64 * 1e-3;
            let sum = mercator_add(FRAC_PI_2 + e, FRAC_PI_2 - e).unwrap();
            if let Some(p) = previous {
                assert!((sum - p).abs() < 1e-2, "jump near e = {e}");
            }
            previous = Some(sum);
        }
    }
}

//! The angle-addition law as a formal group law, and its axioms.
//!
//! `F(X,Y) = gd(gd⁻¹(X) + gd⁻¹(Y))` is a one-dimensional formal group
//! law over the rationals, with the inverse Gudermannian as logarithm:
//! F = X + Y - (X²Y + XY²)/2 + higher odd-degree terms. This module
//! builds F by two routes that share no code path:
//!
//! - the logarithm route: substitute gd⁻¹(X) + gd⁻¹(Y) into the gd
//!   series ([`mercator_group_law`]);
//! - the sine-addition route: F = arcsin((sin X + sin Y)/(1 + sin X sin Y)),
//!   the aberration form of the same law
//!   ([`mercator_group_law_from_sine_addition`]).
//!
//! [`check_group_law_axioms`] then verifies unit, commutativity and
//! associativity as exact coefficient identities, expanding the
//! associativity comparison in three variables.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gudermann::{gudermann_exp_series, gudermann_log_series};
use super::trivariate::TrivariateSeries;
use super::{BivariateSeries, UnivariateSeries};
use crate::rational::integer;

/// Outcome of one exact coefficient identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomCheck {
    Pass,
    /// The first offending monomial, as exponents of the participating
    /// variables (two entries for bivariate checks, three for the
    /// associativity check, one for univariate checks).
    Fail { monomial: Vec<usize> },
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomCheck::Pass)
    }

    fn fail2(i: usize, j: usize) -> Self {
        AxiomCheck::Fail {
            monomial: vec![i, j],
        }
    }
}

impl std::fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomCheck::Pass => write!(f, "pass"),
            AxiomCheck::Fail { monomial } => {
                write!(f, "fail at ")?;
                let names = ["X", "Y", "Z"];
                let mut wrote = false;
                for (axis, &e) in monomial.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if wrote {
                        write!(f, " ")?;
                    }
                    if e == 1 {
                        write!(f, "{}", names[axis])?;
                    } else {
                        write!(f, "{}^{}", names[axis], e)?;
                    }
                    wrote = true;
                }
                if !wrote {
                    write!(f, "1")?;
                }
                Ok(())
            }
        }
    }
}

/// Per-axiom outcome of [`check_group_law_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: AxiomCheck,
    pub commutativity: AxiomCheck,
    pub associativity: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.unit.passed() && self.commutativity.passed() && self.associativity.passed()
    }
}

/// The angle-addition law through the logarithm route, truncated at
/// total degree `order`.
pub fn mercator_group_law(order: usize) -> BivariateSeries {
    assert!(order >= 1, "the group law needs order >= 1");
    let log = gudermann_log_series(order);
    let exp = gudermann_exp_series(order);
    let sum = BivariateSeries::from_univariate_x(&log)
        .add(&BivariateSeries::from_univariate_y(&log));
    sum.substitute_into(&exp)
        .expect("the log series has no constant term")
}

/// The same law through the sine-addition identity:
/// arcsin((sin X + sin Y) / (1 + sin X sin Y)).
///
/// Shares no construction step with [`mercator_group_law`]; the test
/// suite requires the two expansions to agree exactly.
pub fn mercator_group_law_from_sine_addition(order: usize) -> BivariateSeries {
    assert!(order >= 1);
    let sin = UnivariateSeries::sin(order);
    let sin_x = BivariateSeries::from_univariate_x(&sin);
    let sin_y = BivariateSeries::from_univariate_y(&sin);
    let numerator = sin_x.add(&sin_y);
    // 1/(1 + u) = sum (-u)^k via composition with the geometric series
    let mut geometric = UnivariateSeries::zero(order);
    for k in 0..=order {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        geometric = set_coeff(geometric, k, integer(sign));
    }
    let denominator_inverse = sin_x
        .multiply(&sin_y)
        .substitute_into(&geometric)
        .expect("sin X sin Y has no constant term");
    let ratio = numerator.multiply(&denominator_inverse);
    ratio
        .substitute_into(&UnivariateSeries::arcsin(order))
        .expect("the sine ratio has no constant term")
}

fn set_coeff(s: UnivariateSeries, k: usize, value: BigRational) -> UnivariateSeries {
    let mut coeffs = s.coeffs().to_vec();
    coeffs[k] = value;
    UnivariateSeries::from_coeffs(coeffs)
}

/// Verify the three formal-group-law axioms for `f`, exactly, up to its
/// truncation order: F(X,0) = X and F(0,Y) = Y, F(X,Y) = F(Y,X), and
/// F(F(X,Y),Z) = F(X,F(Y,Z)) expanded in three variables.
pub fn check_group_law_axioms(f: &BivariateSeries) -> AxiomReport {
    AxiomReport {
        unit: check_unit(f),
        commutativity: check_commutativity(f),
        associativity: check_associativity(f),
    }
}

fn check_unit(f: &BivariateSeries) -> AxiomCheck {
    let n = f.order();
    // F(X, 0) = X: the j = 0 column must be exactly X
    for i in 0..=n {
        let expected_one = i == 1;
        let c = f.coeff(i, 0);
        if (expected_one && !c.is_one()) || (!expected_one && !c.is_zero()) {
            return AxiomCheck::fail2(i, 0);
        }
    }
    // F(0, Y) = Y
    for j in 0..=n {
        let expected_one = j == 1;
        let c = f.coeff(0, j);
        if (expected_one && !c.is_one()) || (!expected_one && !c.is_zero()) {
            return AxiomCheck::fail2(0, j);
        }
    }
    AxiomCheck::Pass
}

fn check_commutativity(f: &BivariateSeries) -> AxiomCheck {
    let n = f.order();
    for degree in 0..=n {
        for i in 0..=degree {
            let j = degree - i;
            if f.coeff(i, j) != f.coeff(j, i) {
                return AxiomCheck::fail2(i, j);
            }
        }
    }
    AxiomCheck::Pass
}

fn check_associativity(f: &BivariateSeries) -> AxiomCheck {
    let n = f.order();
    let x = TrivariateSeries::variable(0, n);
    let z = TrivariateSeries::variable(2, n);
    let f_xy = TrivariateSeries::from_bivariate(f, (0, 1), n);
    let f_yz = TrivariateSeries::from_bivariate(f, (1, 2), n);
    let left = TrivariateSeries::compose_bivariate(f, &f_xy, &z);
    let right = TrivariateSeries::compose_bivariate(f, &x, &f_yz);
    match left.first_difference(&right) {
        None => AxiomCheck::Pass,
        Some((i, j, k)) => AxiomCheck::Fail {
            monomial: vec![i, j, k],
        },
    }
}

/// Coefficient form of the statement that the exp series is the log
/// series with every other odd coefficient negated (the real content of
/// composing the law's logarithm with itself through a quarter turn).
///
/// Checks, for all 2n+1 within the order, that the x^(2n+1) coefficient
/// of `exp` equals (-1)^n times that of `log`, and that even
/// coefficients of both vanish.
pub fn check_involution_pair(log: &UnivariateSeries, exp: &UnivariateSeries) -> AxiomCheck {
    let order = log.order().min(exp.order());
    for k in 0..=order {
        if k % 2 == 0 {
            if !log.coeff(k).is_zero() || !exp.coeff(k).is_zero() {
                return AxiomCheck::Fail { monomial: vec![k] };
            }
            continue;
        }
        let n = (k - 1) / 2;
        let expected = if n % 2 == 0 {
            log.coeff(k).clone()
        } else {
            -log.coeff(k)
        };
        if exp.coeff(k) != &expected {
            return AxiomCheck::Fail { monomial: vec![k] };
        }
    }
    AxiomCheck::Pass
}

/// Run [`check_involution_pair`] on series built from scratch: the log
/// series as arctanh composed with sin, the exp series as its
/// compositional inverse. Neither route hardwires the sign pattern the
/// check asserts, so a pass is informative.
pub fn check_involution_coefficients(order: usize) -> AxiomCheck {
    assert!(order >= 1);
    let log = UnivariateSeries::arctanh(order)
        .compose(&UnivariateSeries::sin(order))
        .expect("sin has no constant term");
    let exp = log
        .invert_composition()
        .expect("arctanh(sin x) is normalized");
    check_involution_pair(&log, &exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn low_order_coefficients() {
        let f = mercator_group_law(5);
        assert_eq!(f.coeff(1, 0), &integer(1));
        assert_eq!(f.coeff(0, 1), &integer(1));
        assert_eq!(f.coeff(1, 1), &integer(0));
        assert_eq!(f.coeff(2, 0), &integer(0));
        assert_eq!(f.coeff(2, 1), &ratio(-1, 2));
        assert_eq!(f.coeff(1, 2), &ratio(-1, 2));
    }

    #[test]
    fn both_construction_routes_agree() {
        for order in [1, 3, 5, 9] {
            assert_eq!(
                mercator_group_law(order),
                mercator_group_law_from_sine_addition(order),
                "order {order}"
            );
        }
    }

    /// Frozen oracle: expansion of arcsin((sin X + sin Y)/(1 + sin X sin Y))
    /// computed independently with a separate computer-algebra system.
    #[test]
    fn degree_seven_table_matches_external_expansion() {
        let f = mercator_group_law(7);
        let expected: &[(usize, usize, (i64, i64))] = &[
            (0, 1, (1, 1)),
            (1, 0, (1, 1)),
            (1, 2, (-1, 2)),
            (2, 1, (-1, 2)),
            (1, 4, (1, 24)),
            (2, 3, (1, 3)),
            (3, 2, (1, 3)),
            (4, 1, (1, 24)),
            (1, 6, (-1, 720)),
            (2, 5, (-1, 15)),
            (3, 4, (-5, 18)),
            (4, 3, (-5, 18)),
            (5, 2, (-1, 15)),
            (6, 1, (-1, 720)),
        ];
        let nonzero = f.nonzero_terms();
        assert_eq!(nonzero.len(), expected.len());
        for &(i, j, (p, q)) in expected {
            assert_eq!(f.coeff(i, j), &ratio(p, q), "at ({i},{j})");
        }
    }

    #[test]
    fn axioms_pass_at_order_nine() {
        let report = check_group_law_axioms(&mercator_group_law(9));
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn unit_axiom_catches_a_counterexample() {
        // F = X + Y + X^2 violates F(X,0) = X at X^2
        let mut f = BivariateSeries::zero(4);
        f.set_coeff(1, 0, integer(1));
        f.set_coeff(0, 1, integer(1));
        f.set_coeff(2, 0, integer(1));
        let report = check_group_law_axioms(&f);
        assert_eq!(report.unit, AxiomCheck::fail2(2, 0));
        assert_eq!(format!("{}", report.unit), "fail at X^2");
    }

    #[test]
    fn multiplicative_law_passes_all_axioms() {
        // F = X + Y + XY, the law of (1+X)(1+Y) - 1
        let mut f = BivariateSeries::zero(6);
        f.set_coeff(1, 0, integer(1));
        f.set_coeff(0, 1, integer(1));
        f.set_coeff(1, 1, integer(1));
        let report = check_group_law_axioms(&f);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn associativity_catches_an_asymmetric_tweak() {
        let mut f = mercator_group_law(5);
        f.set_coeff(2, 1, ratio(-1, 3));
        f.set_coeff(1, 2, ratio(-1, 3));
        let report = check_group_law_axioms(&f);
        // still commutative and unital, but no longer associative
        assert!(report.unit.passed());
        assert!(report.commutativity.passed());
        assert!(!report.associativity.passed());
    }

    #[test]
    fn involution_holds_through_order_thirteen() {
        for order in [1, 7, 13] {
            assert_eq!(check_involution_coefficients(order), AxiomCheck::Pass);
        }
    }

    #[test]
    fn involution_detector_catches_perturbations() {
        let log = gudermann_log_series(7);
        let exp = gudermann_exp_series(7);
        assert_eq!(check_involution_pair(&log, &exp), AxiomCheck::Pass);

        let perturbed = set_coeff(exp.clone(), 5, ratio(1, 25));
        assert_eq!(
            check_involution_pair(&log, &perturbed),
            AxiomCheck::Fail { monomial: vec![5] }
        );
        let perturbed_even = set_coeff(log.clone(), 4, ratio(1, 100));
        assert_eq!(
            check_involution_pair(&perturbed_even, &exp),
            AxiomCheck::Fail { monomial: vec![4] }
        );
    }

    #[test]
    fn group_law_unit_row_holds_at_every_order() {
        for order in 1..=9 {
            let f = mercator_group_law(order);
            let report = check_group_law_axioms(&f);
            assert!(report.unit.passed(), "order {order}");
        }
    }

    #[test]
    fn group_law_is_odd() {
        let f = mercator_group_law(8);
        for (i, j, _) in f.nonzero_terms() {
            assert_eq!((i + j) % 2, 1, "even-degree term at ({i},{j})");
        }
    }

    #[test]
    fn negation_is_the_formal_inverse() {
        // F(t, -t) = 0 as a univariate series
        let f = mercator_group_law(9);
        let t = UnivariateSeries::identity(9);
        let result = f.substitute_univariate(&t, &t.neg()).unwrap();
        assert!(result.is_zero(), "{result:?}");
    }

    #[test]
    fn truncation_is_stable_across_orders() {
        let high = mercator_group_law(11);
        let low = mercator_group_law(7);
        for (i, j, c) in low.nonzero_terms() {
            assert_eq!(high.coeff(i, j), c);
        }
    }
}

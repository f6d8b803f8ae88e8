//! Truncated univariate formal power series over exact rationals.
//!
//! A series of order N carries exactly the coefficients of x^0 .. x^N;
//! every term of higher degree is discarded. Binary operations truncate
//! to the minimum of the two input orders, so a result is always valid to
//! the order it claims. All arithmetic is exact.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::{factorial, format_ratio, ratio};

use super::SeriesError;

/// Formal power series in one variable, truncated at a fixed total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateSeries {
    /// `coeffs[k]` multiplies x^k; the length is always `order + 1`.
    coeffs: Vec<BigRational>,
}

impl UnivariateSeries {
    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The series `x`, the identity for composition.
    pub fn identity(order: usize) -> Self {
        assert!(order >= 1, "the identity series needs order >= 1");
        let mut s = Self::zero(order);
        s.coeffs[1] = BigRational::one();
        s
    }

    /// Constant series.
    pub fn constant(value: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// Build from an explicit coefficient list; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least x^0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k. Panics when k exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Copy truncated (or zero-extended) to the given order.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        coeffs.truncate(order + 1);
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product, truncated at the minimum input order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let order = self.order();
        let lead_inv = self.coeffs[0].recip();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = lead_inv.clone();
        for k in 1..=order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &coeffs[k - j];
                }
            }
            coeffs[k] = -acc * &lead_inv;
        }
        Ok(Self { coeffs })
    }

    /// Substitute `inner` for the variable: `self(inner(x))`.
    ///
    /// The inner series must have zero constant term, otherwise the
    /// substitution would need infinitely many terms per coefficient.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm {
                found: format_ratio(&inner.coeffs[0]),
            });
        }
        let order = self.order().min(inner.order());
        // Horner from the top coefficient down.
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.multiply(&inner.resized(order));
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of a normalized series (f(0) = 0, f'(0) = 1):
    /// returns g with f(g(x)) = x = g(f(x)) up to the truncation order.
    ///
    /// Built degree by degree: once f(g) = x holds through x^(k-1), the
    /// x^k error feeds back linearly through the unit linear term of f.
    pub fn invert_composition(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() || !self.coeffs.get(1).map_or(false, One::is_one) {
            return Err(SeriesError::NotNormalized {
                constant: format_ratio(&self.coeffs[0]),
                linear: format_ratio(self.coeffs.get(1).unwrap_or(&BigRational::zero())),
            });
        }
        let order = self.order();
        let mut inverse = Self::identity(order);
        for k in 2..=order {
            let error = self.compose(&inverse)?;
            let correction = &error.coeffs[k];
            if !correction.is_zero() {
                inverse.coeffs[k] -= correction;
            }
        }
        Ok(inverse)
    }

    /// Term-by-term derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "cannot lower the order below zero");
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * ratio(k as i64, 1))
            .collect();
        Self { coeffs }
    }

    /// Antiderivative with zero constant term; the order rises by one.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.order() + 2];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + 1] = c / ratio(k as i64 + 1, 1);
        }
        Self { coeffs }
    }

    /// Horner evaluation in double precision, for comparisons against the
    /// floating-point layer. Rationals are converted termwise.
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + ratio_to_f64(c);
        }
        acc
    }

    // --- stock expansions -------------------------------------------------

    pub fn sin(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n + 1 <= order {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            s.coeffs[2 * n + 1] =
                BigRational::new(sign.into(), factorial(2 * n + 1));
            n += 1;
        }
        s
    }

    pub fn cos(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n <= order {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            s.coeffs[2 * n] = BigRational::new(sign.into(), factorial(2 * n));
            n += 1;
        }
        s
    }

    pub fn sinh(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n + 1 <= order {
            s.coeffs[2 * n + 1] = BigRational::new(1.into(), factorial(2 * n + 1));
            n += 1;
        }
        s
    }

    pub fn cosh(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n <= order {
            s.coeffs[2 * n] = BigRational::new(1.into(), factorial(2 * n));
            n += 1;
        }
        s
    }

    /// sec = 1/cos, by exact series reciprocal.
    pub fn sec(order: usize) -> Self {
        Self::cos(order)
            .reciprocal()
            .expect("cos has constant term 1")
    }

    /// tanh = sinh/cosh, by exact series reciprocal.
    pub fn tanh(order: usize) -> Self {
        Self::sinh(order).multiply(
            &Self::cosh(order)
                .reciprocal()
                .expect("cosh has constant term 1"),
        )
    }

    /// arctanh(x) = x + x^3/3 + x^5/5 + ...
    pub fn arctanh(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n + 1 <= order {
            s.coeffs[2 * n + 1] = ratio(1, 2 * n as i64 + 1);
            n += 1;
        }
        s
    }

    /// arcsin(x) = sum (2n)! / (4^n (n!)^2 (2n+1)) x^(2n+1)
    pub fn arcsin(order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut n = 0usize;
        while 2 * n + 1 <= order {
            let numer = factorial(2 * n);
            let denom = num_bigint::BigInt::from(4).pow(n as u32)
                * factorial(n)
                * factorial(n)
                * num_bigint::BigInt::from(2 * n as i64 + 1);
            s.coeffs[2 * n + 1] = BigRational::new(numer, denom);
            n += 1;
        }
        s
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    // Good enough for the small coefficients this crate produces; both
    // conversions are exact until well past degree 13.
    let numer = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let denom = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * (numer.abs() / denom)
}

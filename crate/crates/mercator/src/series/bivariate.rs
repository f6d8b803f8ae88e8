//! Truncated bivariate formal power series over exact rationals.
//!
//! Truncation is by total degree: a series of order N stores the
//! coefficients of X^i Y^j for all i + j <= N in a triangular table.
//! Total-degree truncation is what makes the associativity check in
//! [`super::group_law`] well-defined at a fixed order.

use num_rational::BigRational;
use num_traits::Zero;

use super::{SeriesError, UnivariateSeries};
use crate::rational::format_ratio;

/// Formal power series in X and Y, truncated at a fixed total degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    /// `rows[i][j]` multiplies X^i Y^j; row i has `order + 1 - i` entries.
    rows: Vec<Vec<BigRational>>,
    order: usize,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        let rows = (0..=order)
            .map(|i| vec![BigRational::zero(); order + 1 - i])
            .collect();
        Self { rows, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of X^i Y^j. Panics when i + j exceeds the order.
    pub fn coeff(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, value: BigRational) {
        self.rows[i][j] = value;
    }

    /// Embed a univariate series as a function of X alone.
    pub fn from_univariate_x(u: &UnivariateSeries) -> Self {
        let mut s = Self::zero(u.order());
        for (k, c) in u.coeffs().iter().enumerate() {
            s.rows[k][0] = c.clone();
        }
        s
    }

    /// Embed a univariate series as a function of Y alone.
    pub fn from_univariate_y(u: &UnivariateSeries) -> Self {
        let mut s = Self::zero(u.order());
        for (k, c) in u.coeffs().iter().enumerate() {
            s.rows[0][k] = c.clone();
        }
        s
    }

    /// Copy truncated (or zero-extended) to the given total degree.
    pub fn resized(&self, order: usize) -> Self {
        let mut s = Self::zero(order);
        for i in 0..=order.min(self.order) {
            for j in 0..=(order.min(self.order) - i) {
                s.rows[i][j] = self.rows[i][j].clone();
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|c| -c).collect())
                .collect(),
            order: self.order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut s = Self::zero(order);
        for i in 0..=order {
            for j in 0..=(order - i) {
                s.rows[i][j] = &self.rows[i][j] + &other.rows[i][j];
            }
        }
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|c| c * factor).collect())
                .collect(),
            order: self.order,
        }
    }

    /// Cauchy product, truncated at the minimum total degree.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut s = Self::zero(order);
        for i1 in 0..=order {
            for j1 in 0..=(order - i1) {
                let a = &self.rows[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=(order - i1 - j1) {
                    for j2 in 0..=(order - i1 - j1 - i2) {
                        let b = &other.rows[i2][j2];
                        if b.is_zero() {
                            continue;
                        }
                        s.rows[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        s
    }

    /// Substitute this series into a univariate one: `outer(self)`.
    ///
    /// Requires a zero constant term, as univariate composition does.
    pub fn substitute_into(&self, outer: &UnivariateSeries) -> Result<Self, SeriesError> {
        if !self.rows[0][0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm {
                found: format_ratio(&self.rows[0][0]),
            });
        }
        let order = self.order.min(outer.order());
        let inner = self.resized(order);
        let mut acc = Self::zero(order);
        acc.rows[0][0] = outer.coeff(order).clone();
        for k in (0..order).rev() {
            acc = acc.multiply(&inner);
            acc.rows[0][0] += outer.coeff(k);
        }
        Ok(acc)
    }

    /// Evaluate with univariate series substituted for X and Y.
    pub fn substitute_univariate(
        &self,
        x: &UnivariateSeries,
        y: &UnivariateSeries,
    ) -> Result<UnivariateSeries, SeriesError> {
        for arg in [x, y] {
            if !arg.coeff(0).is_zero() {
                return Err(SeriesError::NonzeroConstantTerm {
                    found: format_ratio(arg.coeff(0)),
                });
            }
        }
        let order = self.order.min(x.order()).min(y.order());
        let x = x.resized(order);
        let y = y.resized(order);
        // Horner over rows of X, each row a Horner over Y.
        let mut acc = UnivariateSeries::zero(order);
        for i in (0..=order).rev() {
            let mut row = UnivariateSeries::zero(order);
            for j in (0..=(self.order - i).min(order)).rev() {
                row = row.multiply(&y);
                let mut c0 = row.coeffs()[0].clone();
                c0 += &self.rows[i][j];
                row = replace_constant(row, c0);
            }
            acc = acc.multiply(&x).add(&row);
        }
        Ok(acc)
    }

    /// Iterate nonzero coefficients as `(i, j, value)` in total-degree
    /// order, then by i.
    pub fn nonzero_terms(&self) -> Vec<(usize, usize, &BigRational)> {
        let mut terms = Vec::new();
        for degree in 0..=self.order {
            for i in 0..=degree {
                let j = degree - i;
                let c = &self.rows[i][j];
                if !c.is_zero() {
                    terms.push((i, j, c));
                }
            }
        }
        terms
    }
}

fn replace_constant(s: UnivariateSeries, c0: BigRational) -> UnivariateSeries {
    let mut coeffs = s.coeffs().to_vec();
    coeffs[0] = c0;
    UnivariateSeries::from_coeffs(coeffs)
}

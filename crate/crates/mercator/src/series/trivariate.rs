//! Trivariate series support for the associativity check.
//!
//! Associativity compares F(F(X,Y),Z) with F(X,F(Y,Z)), which lives in
//! three variables. Nothing outside the axiom checker needs this, so the
//! type stays crate-private and minimal: dense triangular storage over
//! monomials X^i Y^j Z^k with i + j + k <= N.

use num_rational::BigRational;
use num_traits::Zero;

use super::BivariateSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct TrivariateSeries {
    order: usize,
    /// Flattened triangular table; see [`Self::index`].
    coeffs: Vec<BigRational>,
}

/// Number of monomials of total degree <= n in three variables.
fn table_len(n: usize) -> usize {
    (n + 1) * (n + 2) * (n + 3) / 6
}

impl TrivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigRational::zero(); table_len(order)],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Position of X^i Y^j Z^k: monomials are laid out by ascending i,
    /// then j, then k, matching the iteration in [`Self::for_each`].
    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i + j + k <= self.order);
        let n = self.order;
        // monomials with first exponent < i
        let before_i = table_len(n) - table_len(n - i);
        // within block i: rows with second exponent < j (a 2-variable table)
        let m = n - i;
        let before_j = (m + 1) * (m + 2) / 2 - (m - j + 1) * (m - j + 2) / 2;
        before_i + before_j + k
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.coeffs[self.index(i, j, k)]
    }

    fn coeff_mut(&mut self, i: usize, j: usize, k: usize) -> &mut BigRational {
        let idx = self.index(i, j, k);
        &mut self.coeffs[idx]
    }

    /// The plain variable X, Y or Z as a series (axis 0, 1 or 2).
    pub fn variable(axis: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        let exps = [
            (axis == 0) as usize,
            (axis == 1) as usize,
            (axis == 2) as usize,
        ];
        *s.coeff_mut(exps[0], exps[1], exps[2]) = BigRational::from_integer(1.into());
        s
    }

    /// Embed a bivariate series, mapping its (X, Y) onto the axis pair.
    pub fn from_bivariate(b: &BivariateSeries, axes: (usize, usize), order: usize) -> Self {
        assert_ne!(axes.0, axes.1);
        let mut s = Self::zero(order);
        for (i, j, c) in b.nonzero_terms() {
            if i + j > order {
                continue;
            }
            let mut exps = [0usize; 3];
            exps[axes.0] = i;
            exps[axes.1] = j;
            *s.coeff_mut(exps[0], exps[1], exps[2]) = c.clone();
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            order: self.order,
            coeffs,
        }
    }

    /// Visit every monomial as (i, j, k, coefficient).
    fn for_each(&self, mut f: impl FnMut(usize, usize, usize, &BigRational)) {
        let n = self.order;
        let mut idx = 0;
        for i in 0..=n {
            for j in 0..=(n - i) {
                for k in 0..=(n - i - j) {
                    f(i, j, k, &self.coeffs[idx]);
                    idx += 1;
                }
            }
        }
    }

    /// Cauchy product truncated at the common total degree.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let n = self.order;
        let mut out = Self::zero(n);
        self.for_each(|i1, j1, k1, a| {
            if a.is_zero() {
                return;
            }
            let budget = n - i1 - j1 - k1;
            for i2 in 0..=budget {
                for j2 in 0..=(budget - i2) {
                    for k2 in 0..=(budget - i2 - j2) {
                        let b = other.coeff(i2, j2, k2);
                        if b.is_zero() {
                            continue;
                        }
                        *out.coeff_mut(i1 + i2, j1 + j2, k1 + k2) += a * b;
                    }
                }
            }
        });
        out
    }

    /// Substitute trivariate arguments into a bivariate series:
    /// `f(p, q)`. Both arguments must have zero constant term.
    pub fn compose_bivariate(f: &BivariateSeries, p: &Self, q: &Self) -> Self {
        assert!(p.coeff(0, 0, 0).is_zero() && q.coeff(0, 0, 0).is_zero());
        assert_eq!(p.order, q.order);
        let n = p.order.min(f.order());
        let p = p.resized(n);
        let q = q.resized(n);
        // Horner in the first variable over rows, each row Horner in the
        // second variable.
        let mut acc = Self::zero(n);
        for i in (0..=n).rev() {
            let mut row = Self::zero(n);
            for j in (0..=(f.order() - i).min(n)).rev() {
                row = row.multiply(&q);
                *row.coeff_mut(0, 0, 0) += f.coeff(i, j);
            }
            acc = acc.multiply(&p).add(&row);
        }
        acc
    }

    fn resized(&self, order: usize) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut out = Self::zero(order);
        self.for_each(|i, j, k, c| {
            if i + j + k <= order && !c.is_zero() {
                *out.coeff_mut(i, j, k) = c.clone();
            }
        });
        out
    }

    /// First monomial (degree-ascending, then lexicographic in i, j)
    /// where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, usize)> {
        assert_eq!(self.order, other.order);
        let n = self.order;
        for degree in 0..=n {
            for i in 0..=degree {
                for j in 0..=(degree - i) {
                    let k = degree - i - j;
                    if self.coeff(i, j, k) != other.coeff(i, j, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    #[test]
    fn index_matches_iteration_order() {
        let s = TrivariateSeries::zero(5);
        let mut expected = 0usize;
        s.for_each(|i, j, k, _| {
            assert_eq!(s.index(i, j, k), expected, "at ({i},{j},{k})");
            expected += 1;
        });
        assert_eq!(expected, table_len(5));
    }

    #[test]
    fn multiply_matches_hand_expansion() {
        // (X + Y)(Y + Z) = XY + XZ + Y^2 + YZ
        let order = 3;
        let xy = TrivariateSeries::variable(0, order).add(&TrivariateSeries::variable(1, order));
        let yz = TrivariateSeries::variable(1, order).add(&TrivariateSeries::variable(2, order));
        let p = xy.multiply(&yz);
        assert_eq!(p.coeff(1, 1, 0), &integer(1));
        assert_eq!(p.coeff(1, 0, 1), &integer(1));
        assert_eq!(p.coeff(0, 2, 0), &integer(1));
        assert_eq!(p.coeff(0, 1, 1), &integer(1));
        assert_eq!(p.coeff(2, 0, 0), &integer(0));
    }

    #[test]
    fn compose_bivariate_recovers_sum() {
        // f(A, B) = A + B with A = X + Y, B = Z
        let order = 4;
        let mut f = BivariateSeries::zero(order);
        f.set_coeff(1, 0, integer(1));
        f.set_coeff(0, 1, integer(1));
        let a = TrivariateSeries::variable(0, order).add(&TrivariateSeries::variable(1, order));
        let b = TrivariateSeries::variable(2, order);
        let g = TrivariateSeries::compose_bivariate(&f, &a, &b);
        let expected = TrivariateSeries::variable(0, order)
            .add(&TrivariateSeries::variable(1, order))
            .add(&TrivariateSeries::variable(2, order));
        assert_eq!(g, expected);
    }

    #[test]
    fn first_difference_scans_by_degree() {
        let order = 3;
        let a = TrivariateSeries::variable(0, order);
        let mut b = a.clone();
        *b.coeff_mut(1, 1, 0) += integer(1);
        *b.coeff_mut(0, 1, 0) += integer(2);
        assert_eq!(a.first_difference(&b), Some((0, 1, 0)));
        assert_eq!(a.first_difference(&a), None);
    }
}

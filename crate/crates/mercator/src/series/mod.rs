//! Exact formal-power-series algebra over arbitrary-precision rationals.
//!
//! Everything in this module is deterministic and exact: no floating
//! point anywhere, and recomputing at a higher truncation order never
//! changes a lower-order coefficient.

mod bivariate;
mod euler;
mod group_law;
mod gudermann;
pub mod serialize;
mod trivariate;
mod univariate;

pub use bivariate::BivariateSeries;
pub use euler::{euler_numbers, EulerSequence};
pub use group_law::{
    check_group_law_axioms, check_involution_coefficients, check_involution_pair,
    mercator_group_law, mercator_group_law_from_sine_addition, AxiomCheck, AxiomReport,
};
pub use gudermann::{gudermann_exp_series, gudermann_log_series};
pub use univariate::UnivariateSeries;

use thiserror::Error;

/// Precondition violations of the series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("composition requires an inner series with zero constant term, found {found}")]
    NonzeroConstantTerm { found: String },
    #[error(
        "compositional inversion requires f(0) = 0 and f'(0) = 1, \
         found constant term {constant} and linear term {linear}"
    )]
    NotNormalized { constant: String, linear: String },
    #[error("series reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
}

//! Exact and floating-point machinery for the Gudermannian angle-addition law
//! and the apparent rotation of relativistically moving objects.
//!
//! The crate is organized in four layers:
//!
//! - [`series`]: truncated formal power series over arbitrary-precision
//!   rationals. Generates the Euler numbers, the series of the inverse
//!   Gudermannian and its inverse, and the two-variable addition law
//!   `F(X,Y) = gd(gd⁻¹(X) + gd⁻¹(Y))`, and proves its group-law axioms as
//!   exact coefficient identities.
//! - [`numeric`]: double-precision evaluation of the same functions,
//!   including the closed-form circle addition and the Cayley-transform
//!   route used to cross-check it.
//! - [`terrell`]: the physics layer. Computes the apparent rotation of a
//!   moving object by two independent routes (the textbook aberration
//!   formula and the angle-addition law) and tabulates both.
//! - [`render`]: a light-travel-time ray tracer that images a wireframe
//!   mesh in uniform motion and quantifies how fast the apparent image
//!   approaches the rotated-object prediction.
//!
//! [`verify`] bundles the full identity suite into a reproducible
//! pass/fail report; [`tolerances`] holds every numeric threshold.

pub mod numeric;
pub mod numfmt;
pub mod rational;
pub mod render;
pub mod series;
pub mod terrell;
pub mod tolerances;
pub mod verify;

//! Every floating-point threshold used by this crate, in one place.
//!
//! The exact-arithmetic layer in [`crate::series`] needs none of these; the
//! constants below govern the double-precision layers and the test suites.
//! They are sized for IEEE 754 f64 (about 15.9 significant digits) with
//! roughly two digits of headroom over the observed residuals.

/// Agreement between algebraically equal double-precision routes
/// (the three inverse-Gudermannian formulas, closed-form addition vs the
/// transform-and-add route, the two apparent-rotation routes).
pub const CORE_AGREEMENT: f64 = 1e-12;

/// Round-trip and complex-path identities, which stack a few more
/// operations than the core routes: gd(gd⁻¹(x)) = x, antiperiodicity,
/// and the Cayley-transform residual.
pub const ROUND_TRIP: f64 = 1e-10;

/// Numeric angle addition vs the degree-13 truncated series on
/// |x|, |y| <= 0.3. The first omitted term has total degree 15, so the
/// remainder is below 0.3^15 ~ 1.4e-8 times a small coefficient; 5e-12
/// is a loose ceiling over the observed error.
pub const SERIES_CONSISTENCY: f64 = 5e-12;

/// Grid checks of the group structure (associativity, commutativity)
/// in double precision, where three additions compound.
pub const GROUP_GRID: f64 = 1e-11;

/// Closest-approach law: apparent rotation at zero sight angle equals
/// arcsin of the speed up to one arccos/arcsin rounding step.
pub const CLOSEST_APPROACH: f64 = 1e-13;

/// Apparent rotation at speed 1 - 1e-9 and zero sight angle sits within
/// this distance of the limiting value pi/2 (arcsin flattens near 1, so
/// the gap scales like sqrt of the speed deficit, about 4.5e-5).
pub const LIMIT_NEAR_LIGHTSPEED: f64 = 1e-3;

/// Light-travel-time residual for a traced vertex, scaled by
/// max(1, |observation time|).
pub const RETARDED_RESIDUAL: f64 = 1e-10;

/// Mirror-image symmetry of rendered frames under reflecting both the
/// velocity and the sight angle.
pub const MIRROR_SYMMETRY: f64 = 1e-10;

/// Normalized image mismatch required at distance/size ratio 400 in the
/// small-object convergence run.
pub const CONVERGENCE_AT_400: f64 = 0.02;

/// Band for the ratio of successive mismatches as the distance/size
/// ratio doubles. First-order convergence predicts 2; the band leaves
/// room for the next-order term without admitting a flat sequence.
pub const CONVERGENCE_RATIO_BAND: (f64, f64) = (1.5, 3.0);

/// Guard band for detecting singular angles after reduction to
/// (-pi, pi]: one unit in the last place at pi/2.
pub const ANGLE_ULP_GUARD: f64 = f64::EPSILON;

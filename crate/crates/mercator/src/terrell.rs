//! Apparent rotation of an object in uniform relativistic motion.
//!
//! Geometry: the observer sits at the origin; the object travels along a
//! line parallel to the x axis in the upper half plane, with speed v in
//! units of c. The observation angle psi in (0, pi) is measured from the
//! direction of motion; the sight angle is its shift psi_tilde =
//! psi - pi/2, zero exactly at closest approach.
//!
//! The rotation is computed by two independent routes:
//!
//! - [`rotation_taylor`]: the textbook aberration relation
//!   cos(phi + psi) = (cos psi - v)/(1 - v cos psi), solved on the
//!   principal branch;
//! - [`rotation_group_law`]: the angle-addition law of
//!   [`crate::numeric::mercator_add`] applied to arcsin(v) and the sight
//!   angle.
//!
//! The two agree to [`crate::tolerances::CORE_AGREEMENT`] everywhere in
//! range; [`rotation_table`] tabulates both with their discrepancy.

use std::f64::consts::FRAC_PI_2;
use thiserror::Error;

use crate::numeric::mercator_add;
use crate::numfmt::g17;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TerrellError {
    #[error("speed must satisfy |v| < 1 in units of c, got {0}")]
    Speed(f64),
    #[error("observation angle must lie strictly inside (0, pi), got {0}")]
    ObservationAngle(f64),
    #[error("sight angle must lie strictly inside (-pi/2, pi/2), got {0}")]
    SightAngle(f64),
    #[error("table row {index}: {source}")]
    Row {
        index: usize,
        source: Box<TerrellError>,
    },
}

/// Speed in units of c, strictly below lightspeed.
///
/// Lightspeed itself is rejected: arcsin(1) = pi/2 composed with a
/// grazing sight angle would land exactly on a puncture of the addition
/// law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocity(f64);

impl Velocity {
    pub fn new(v: f64) -> Result<Self, TerrellError> {
        if !v.is_finite() || v.abs() >= 1.0 {
            return Err(TerrellError::Speed(v));
        }
        Ok(Self(v))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The aberration angle of the speed: arcsin(v), in (-pi/2, pi/2).
    pub fn velocity_angle(self) -> f64 {
        self.0.asin()
    }
}

/// Sight angle, zero at closest approach, strictly inside (-pi/2, pi/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SightAngle(f64);

impl SightAngle {
    pub fn new(psi_tilde: f64) -> Result<Self, TerrellError> {
        if !psi_tilde.is_finite() || psi_tilde.abs() >= FRAC_PI_2 {
            return Err(TerrellError::SightAngle(psi_tilde));
        }
        Ok(Self(psi_tilde))
    }

    /// Shift an observation angle psi in (0, pi) to the sight angle
    /// psi - pi/2.
    pub fn from_observation(psi: f64) -> Result<Self, TerrellError> {
        if !psi.is_finite() || psi <= 0.0 || psi >= std::f64::consts::PI {
            return Err(TerrellError::ObservationAngle(psi));
        }
        Ok(Self(psi - FRAC_PI_2))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Back to the observation angle psi = psi_tilde + pi/2.
    pub fn observation_angle(self) -> f64 {
        self.0 + FRAC_PI_2
    }
}

/// Which formula produced a rotation result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Taylor,
    GroupLaw,
}

/// Apparent rotation and the aberrated sight angle that carries it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationResult {
    /// Counterclockwise apparent rotation, signed.
    pub rotation: f64,
    /// The aberrated sight angle, rotation + sight angle, in
    /// (-pi/2, pi/2).
    pub apparent_angle: f64,
    pub route: Route,
}

/// The aberration relation cos(phi + psi) = (cos psi - v)/(1 - v cos psi),
/// solved for phi with the unique branch phi + psi in (0, pi).
///
/// The right side always lies in (-1, 1) for |v| < 1 and psi in (0, pi),
/// so the principal arccos gives the one physical solution; it matches
/// the principal arcsin of the aberrated sight angle.
pub fn rotation_taylor(v: Velocity, psi: f64) -> Result<RotationResult, TerrellError> {
    if !psi.is_finite() || psi <= 0.0 || psi >= std::f64::consts::PI {
        return Err(TerrellError::ObservationAngle(psi));
    }
    let cos_psi = psi.cos();
    // rounding can push the quotient a hair outside [-1, 1]
    let aberrated = ((cos_psi - v.value()) / (1.0 - v.value() * cos_psi)).clamp(-1.0, 1.0);
    let rotation = aberrated.acos() - psi;
    Ok(RotationResult {
        rotation,
        apparent_angle: rotation + psi - FRAC_PI_2,
        route: Route::Taylor,
    })
}

/// The angle-addition route: the apparent angle is
/// arcsin(v) (+) sight angle, and the rotation is their difference.
pub fn rotation_group_law(v: Velocity, sight: SightAngle) -> RotationResult {
    let apparent_angle = mercator_add(v.velocity_angle(), sight.radians())
        .expect("both summands lie strictly inside (-pi/2, pi/2), away from the punctures");
    RotationResult {
        rotation: apparent_angle - sight.radians(),
        apparent_angle,
        route: Route::GroupLaw,
    }
}

/// One row of [`rotation_table`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationRow {
    pub v: f64,
    pub nu: f64,
    pub psi_tilde: f64,
    pub phi_taylor: f64,
    pub phi_group_law: f64,
    pub abs_diff: f64,
}

/// Evaluate both routes over the cartesian grid of speeds and sight
/// angles, speeds outermost, in input order. Invalid elements surface as
/// [`TerrellError::Row`] with the offending row index.
pub fn rotation_table(
    velocities: &[f64],
    sight_angles: &[f64],
) -> Result<Vec<RotationRow>, TerrellError> {
    let mut rows = Vec::with_capacity(velocities.len() * sight_angles.len());
    for (vi, &v_raw) in velocities.iter().enumerate() {
        for (si, &s_raw) in sight_angles.iter().enumerate() {
            let index = vi * sight_angles.len() + si;
            let wrap = |source| TerrellError::Row {
                index,
                source: Box::new(source),
            };
            let v = Velocity::new(v_raw).map_err(wrap)?;
            let sight = SightAngle::new(s_raw).map_err(wrap)?;
            let taylor = rotation_taylor(v, sight.observation_angle()).map_err(wrap)?;
            let group = rotation_group_law(v, sight);
            rows.push(RotationRow {
                v: v.value(),
                nu: v.velocity_angle(),
                psi_tilde: sight.radians(),
                phi_taylor: taylor.rotation,
                phi_group_law: group.rotation,
                abs_diff: (taylor.rotation - group.rotation).abs(),
            });
        }
    }
    Ok(rows)
}

/// CSV rendering of a rotation table: fixed header, 17 significant
/// digits, LF line endings.
pub fn rotation_table_csv(rows: &[RotationRow]) -> String {
    let mut out = String::from("v,nu,psi_tilde,phi_taylor,phi_fgl,abs_diff\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            g17(r.v),
            g17(r.nu),
            g17(r.psi_tilde),
            g17(r.phi_taylor),
            g17(r.phi_group_law),
            g17(r.abs_diff),
        ));
    }
    out
}

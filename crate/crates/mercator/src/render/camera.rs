//! Pinhole camera at the origin with gnomonic projection.

use super::vec3::{cross, dot, normalize, Vec3};
use super::RenderError;

/// Pinhole observer at the origin. Projection is gnomonic: a direction
/// maps to its intersection with the image plane one unit along
/// `forward`, scaled so the field-of-view edge lands at ±1. Straight
/// segments in space project to straight segments in the image.
#[derive(Debug, Clone, PartialEq)]
pub struct Camera {
    forward: Vec3,
    up: Vec3,
    right: Vec3,
    pub field_of_view: f64,
    tan_half_fov: f64,
    /// Pixel resolution for raster output; vector output uses it only
    /// for the nominal width/height attributes.
    pub resolution: (u32, u32),
}

impl Camera {
    /// Build from a viewing direction and an up hint; the hint is
    /// re-orthogonalized against `forward`.
    pub fn new(
        forward: Vec3,
        up: Vec3,
        field_of_view: f64,
        resolution: (u32, u32),
    ) -> Result<Self, RenderError> {
        if !(field_of_view > 0.0 && field_of_view < std::f64::consts::PI) {
            return Err(RenderError::FieldOfView(field_of_view));
        }
        if resolution.0 == 0 || resolution.1 == 0 {
            return Err(RenderError::Resolution(resolution));
        }
        let forward = normalize(forward).ok_or(RenderError::DegenerateCameraAxes)?;
        let right = normalize(cross(forward, up)).ok_or(RenderError::DegenerateCameraAxes)?;
        let up = cross(right, forward);
        Ok(Self {
            forward,
            up,
            right,
            field_of_view,
            tan_half_fov: (field_of_view / 2.0).tan(),
            resolution,
        })
    }

    /// Camera aimed along `direction`, choosing the z axis as up hint
    /// (or the x axis when the direction is nearly vertical).
    pub fn aimed_at(
        direction: Vec3,
        field_of_view: f64,
        resolution: (u32, u32),
    ) -> Result<Self, RenderError> {
        let dir = normalize(direction).ok_or(RenderError::DegenerateCameraAxes)?;
        let up = if dir[2].abs() > 0.99 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 0.0, 1.0]
        };
        Self::new(dir, up, field_of_view, resolution)
    }

    pub fn forward(&self) -> Vec3 {
        self.forward
    }

    /// Project a viewing direction to image coordinates in [-1, 1]
    /// (at the field-of-view edge). Directions at or behind the image
    /// plane return None.
    pub fn project(&self, direction: Vec3) -> Option<[f64; 2]> {
        let depth = dot(direction, self.forward);
        if depth <= 0.0 {
            return None;
        }
        Some([
            dot(direction, self.right) / (depth * self.tan_half_fov),
            dot(direction, self.up) / (depth * self.tan_half_fov),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn looking_along_y() -> Camera {
        Camera::new([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], FRAC_PI_2, (64, 64)).unwrap()
    }

    #[test]
    fn center_projects_to_origin() {
        let cam = looking_along_y();
        assert_eq!(cam.project([0.0, 5.0, 0.0]), Some([0.0, 0.0]));
    }

    #[test]
    fn fov_edge_maps_to_unit_coordinate() {
        let cam = looking_along_y();
        // 45 degrees off axis = half of the 90 degree fov
        let p = cam.project([1.0, 1.0, 0.0]).unwrap();
        assert!((p[0] - 1.0).abs() < 1e-15);
        assert!(p[1].abs() < 1e-15);
    }

    #[test]
    fn x_is_right_and_z_is_up() {
        let cam = looking_along_y();
        let right = cam.project([0.5, 2.0, 0.0]).unwrap();
        assert!(right[0] > 0.0 && right[1].abs() < 1e-15);
        let up = cam.project([0.0, 2.0, 0.5]).unwrap();
        assert!(up[1] > 0.0 && up[0].abs() < 1e-15);
    }

    #[test]
    fn behind_the_camera_is_rejected() {
        let cam = looking_along_y();
        assert_eq!(cam.project([0.0, -1.0, 0.0]), None);
        assert_eq!(cam.project([1.0, 0.0, 0.0]), None);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(Camera::new([0.0; 3], [0.0, 0.0, 1.0], 1.0, (8, 8)).is_err());
        assert!(Camera::new([0.0, 1.0, 0.0], [0.0, 1.0, 0.0], 1.0, (8, 8)).is_err());
        assert!(Camera::new([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], 0.0, (8, 8)).is_err());
        assert!(Camera::new([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], 1.0, (0, 8)).is_err());
    }

    #[test]
    fn aimed_at_handles_vertical_directions() {
        let cam = Camera::aimed_at([0.0, 0.0, 1.0], 1.0, (8, 8)).unwrap();
        assert_eq!(cam.forward(), [0.0, 0.0, 1.0]);
    }
}

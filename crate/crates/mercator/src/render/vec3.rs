//! Minimal 3-vector arithmetic on plain arrays.

pub(crate) type Vec3 = [f64; 3];

pub(crate) fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub(crate) fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn normalize(a: Vec3) -> Option<Vec3> {
    let n = norm(a);
    if n == 0.0 || !n.is_finite() {
        None
    } else {
        Some(scale(a, 1.0 / n))
    }
}

/// Angle between two directions, robust near 0 and pi.
pub(crate) fn angle_between(a: Vec3, b: Vec3) -> f64 {
    norm(cross(a, b)).atan2(dot(a, b))
}

/// Linear interpolation a + t (b - a).
pub(crate) fn lerp(a: Vec3, b: Vec3, t: f64) -> Vec3 {
    add(a, scale(sub(b, a), t))
}

/// Rotation about the z axis, counterclockwise in the (x, y) plane.
pub(crate) fn rotate_z(p: Vec3, angle: f64) -> Vec3 {
    let (s, c) = angle.sin_cos();
    [p[0] * c - p[1] * s, p[0] * s + p[1] * c, p[2]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_between_is_stable_for_tiny_angles() {
        let a = [0.0, 1.0, 0.0];
        let b = [1e-9, 1.0, 0.0];
        let angle = angle_between(a, b);
        assert!((angle - 1e-9).abs() < 1e-18);
    }

    #[test]
    fn rotate_z_quarter_turn() {
        let p = rotate_z([1.0, 0.0, 2.0], std::f64::consts::FRAC_PI_2);
        assert!((p[0]).abs() < 1e-15);
        assert!((p[1] - 1.0).abs() < 1e-15);
        assert_eq!(p[2], 2.0);
    }
}

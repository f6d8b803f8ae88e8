//! Rendered frames and the normalized mismatch between them.

use super::camera::Camera;
use super::vec3::{angle_between, Vec3};
use super::RenderError;

/// Output flavor a frame is destined for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameMode {
    SvgWireframe,
    PpmRaster,
}

/// What the observer sees of one mesh vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexView {
    /// Unit direction from the observer to the vertex's apparent position.
    pub direction: Vec3,
    /// Gnomonic image coordinates, None when the vertex falls outside
    /// the forward hemisphere.
    pub projected: Option<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FrameMetadata {
    pub velocity: f64,
    pub sight_angle: f64,
    pub observation_time: f64,
    /// Rotation the angle-addition law predicts for this frame's speed
    /// and sight angle.
    pub predicted_rotation: f64,
    /// Edges dropped because a sample fell behind the camera.
    pub dropped_edges: usize,
}

/// One rendered image: per-vertex apparent directions, the projected
/// polyline of every edge, and the metadata describing the scene.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    pub mode: FrameMode,
    pub vertices: Vec<VertexView>,
    pub edges: Vec<[usize; 2]>,
    /// One polyline per edge, in edge order; None when the edge was
    /// dropped. With k subdivision points a polyline has k + 2 entries.
    pub polylines: Vec<Option<Vec<[f64; 2]>>>,
    pub camera: Camera,
    pub metadata: FrameMetadata,
}

/// Normalized worst-case image discrepancy between two frames of the
/// same mesh: the largest angular separation between corresponding
/// apparent vertex directions, divided by the apparent angular size of
/// the object in `reference` (its largest pairwise vertex separation).
///
/// Dimensionless; 0 for identical frames, 1 when one vertex is displaced
/// by the whole apparent size of the object.
pub fn frame_mismatch(frame: &Frame, reference: &Frame) -> Result<f64, RenderError> {
    if frame.vertices.len() != reference.vertices.len() || frame.edges != reference.edges {
        return Err(RenderError::TopologyMismatch);
    }
    if frame.camera != reference.camera {
        return Err(RenderError::CameraMismatch);
    }

    let worst = frame
        .vertices
        .iter()
        .zip(&reference.vertices)
        .map(|(a, b)| angle_between(a.direction, b.direction))
        .fold(0.0, f64::max);
    if worst == 0.0 {
        return Ok(0.0);
    }

    let mut size = 0.0f64;
    for (i, a) in reference.vertices.iter().enumerate() {
        for b in &reference.vertices[i + 1..] {
            size = size.max(angle_between(a.direction, b.direction));
        }
    }
    if size == 0.0 {
        return Err(RenderError::DegenerateAngularSize);
    }
    Ok(worst / size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn test_frame(directions: Vec<Vec3>) -> Frame {
        let camera =
            Camera::new([0.0, 1.0, 0.0], [0.0, 0.0, 1.0], FRAC_PI_2, (16, 16)).unwrap();
        let vertices = directions
            .into_iter()
            .map(|d| VertexView {
                projected: camera.project(d),
                direction: d,
            })
            .collect();
        Frame {
            mode: FrameMode::SvgWireframe,
            vertices,
            edges: vec![],
            polylines: vec![],
            camera,
            metadata: FrameMetadata {
                velocity: 0.0,
                sight_angle: 0.0,
                observation_time: 1.0,
                predicted_rotation: 0.0,
                dropped_edges: 0,
            },
        }
    }

    #[test]
    fn identical_frames_have_zero_mismatch() {
        let f = test_frame(vec![[0.0, 1.0, 0.0], [0.1, 1.0, 0.0]]);
        assert_eq!(frame_mismatch(&f, &f).unwrap(), 0.0);
    }

    #[test]
    fn displacement_by_the_object_size_gives_one() {
        // reference: two directions separated by 0.1 rad; candidate moves
        // one vertex by exactly that separation
        let a = [0.0, 1.0, 0.0];
        let b = [0.1f64.tan(), 1.0, 0.0];
        let c = [(-0.1f64).tan(), 1.0, 0.0];
        let reference = test_frame(vec![a, b]);
        let moved = test_frame(vec![c, b]);
        let m = frame_mismatch(&moved, &reference).unwrap();
        assert!((m - 1.0).abs() < 1e-12, "mismatch {m}");
    }

    #[test]
    fn topology_must_match() {
        let a = test_frame(vec![[0.0, 1.0, 0.0]]);
        let b = test_frame(vec![[0.0, 1.0, 0.0], [0.1, 1.0, 0.0]]);
        assert!(matches!(
            frame_mismatch(&a, &b),
            Err(RenderError::TopologyMismatch)
        ));
    }

    #[test]
    fn single_point_reference_is_degenerate_unless_identical() {
        let a = test_frame(vec![[0.0, 1.0, 0.0]]);
        assert_eq!(frame_mismatch(&a, &a).unwrap(), 0.0);
        let moved = test_frame(vec![[0.1, 1.0, 0.0]]);
        assert!(matches!(
            frame_mismatch(&moved, &a),
            Err(RenderError::DegenerateAngularSize)
        ));
    }
}

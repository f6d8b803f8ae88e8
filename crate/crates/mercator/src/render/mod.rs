//! Light-travel-time rendering of a wireframe in uniform motion.
//!
//! The observer sits at the origin and receives, at one observation
//! time, light that left each vertex at its own earlier emission time.
//! Solving that light-travel-time condition per vertex and projecting
//! the retarded positions is all it takes for the apparent image of a
//! fast object to come out rotated rather than squashed;
//! [`render_rotated_oracle`] renders the predicted rotated object for
//! comparison and [`frame_mismatch`] measures the gap, which shrinks as
//! the object's angular size does.
//!
//! The moving object is Lorentz-contracted along its motion axis in the
//! observer frame; without that contraction the apparent image would not
//! converge to a rigid rotation.
//!
//! Everything is a pure function of its inputs. Sequences may render in
//! parallel, but items are assembled in input order, so output bytes
//! never depend on the worker count.

mod camera;
mod frame;
mod mesh;
pub mod output;
mod vec3;

pub use camera::Camera;
pub use frame::{frame_mismatch, Frame, FrameMetadata, FrameMode, VertexView};
pub use mesh::Mesh;

use rayon::prelude::*;
use thiserror::Error;

use crate::terrell::{rotation_group_law, SightAngle, TerrellError, Velocity};
use crate::tolerances::RETARDED_RESIDUAL;
use vec3::{add, lerp, norm, normalize, rotate_z, scale, Vec3};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error("a mesh needs at least one vertex")]
    EmptyMesh,
    #[error("mesh vertex coordinate is not finite: {0}")]
    NonFiniteVertex(f64),
    #[error("edge {edge:?} references a vertex outside 0..{vertex_count}")]
    EdgeOutOfRange {
        edge: [usize; 2],
        vertex_count: usize,
    },
    #[error("mesh JSON is invalid: {0}")]
    MeshFormat(String),
    #[error("field of view must lie in (0, pi), got {0}")]
    FieldOfView(f64),
    #[error("raster resolution must be nonzero, got {0:?}")]
    Resolution((u32, u32)),
    #[error("camera axes are degenerate (zero or parallel forward/up)")]
    DegenerateCameraAxes,
    #[error("closest-approach distance must be positive and finite, got {0}")]
    ClosestApproach(f64),
    #[error("transverse offset must be finite, got {0}")]
    TransverseOffset(f64),
    #[error("a resting object never leaves the zero sight angle; {0} is unreachable")]
    UnreachableSightAngle(f64),
    #[error(transparent)]
    Physics(#[from] TerrellError),
    #[error("sight angle {index}: {source}")]
    AtAngle {
        index: usize,
        source: Box<RenderError>,
    },
    #[error("frames do not share mesh topology")]
    TopologyMismatch,
    #[error("frames were rendered with different cameras")]
    CameraMismatch,
    #[error("reference frame has zero angular size")]
    DegenerateAngularSize,
}

/// Uniform motion along +x at height `closest_approach` above the
/// observer, optionally offset out of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionState {
    velocity: Velocity,
    closest_approach: f64,
    transverse_offset: f64,
}

impl MotionState {
    pub fn new(
        velocity: Velocity,
        closest_approach: f64,
        transverse_offset: f64,
    ) -> Result<Self, RenderError> {
        if !(closest_approach.is_finite() && closest_approach > 0.0) {
            return Err(RenderError::ClosestApproach(closest_approach));
        }
        if !transverse_offset.is_finite() {
            return Err(RenderError::TransverseOffset(transverse_offset));
        }
        Ok(Self {
            velocity,
            closest_approach,
            transverse_offset,
        })
    }

    /// Motion in the (x, y) plane, the canonical geometry.
    pub fn in_plane(velocity: Velocity, closest_approach: f64) -> Result<Self, RenderError> {
        Self::new(velocity, closest_approach, 0.0)
    }

    pub fn velocity(&self) -> Velocity {
        self.velocity
    }

    pub fn closest_approach(&self) -> f64 {
        self.closest_approach
    }

    fn speed(&self) -> f64 {
        self.velocity.value()
    }
}

/// World position at time `t` of the mesh point with rest-frame offset
/// `offset`. The offset is Lorentz-contracted along x; the object center
/// crosses x = 0 at t = 0.
pub fn world_vertex_position(offset: Vec3, motion: &MotionState, t: f64) -> Vec3 {
    let v = motion.speed();
    let contraction = (1.0 - v * v).sqrt();
    [
        v * t + offset[0] * contraction,
        motion.closest_approach + offset[1],
        motion.transverse_offset + offset[2],
    ]
}

/// Emission time t_e <= T at which light leaving the vertex reaches the
/// origin at observation time T, solving |position(t_e)| = T - t_e.
///
/// The condition squares to a quadratic with leading coefficient
/// 1 - v^2 > 0; the physical root is the smaller one, computed from the
/// product of roots when the sum is positive so that no cancellation
/// occurs even when T is large against the geometry.
pub fn retarded_emission_time(offset: Vec3, motion: &MotionState, observation_time: f64) -> f64 {
    let v = motion.speed();
    let contracted_x = offset[0] * (1.0 - v * v).sqrt();
    let y = motion.closest_approach + offset[1];
    let z = motion.transverse_offset + offset[2];
    let t = observation_time;

    let a = 1.0 - v * v;
    let half_sum = v * contracted_x + t;
    let c = t * t - (contracted_x * contracted_x + y * y + z * z);
    // a t_e^2 - 2 half_sum t_e + c = 0
    let discriminant = (half_sum * half_sum - a * c).max(0.0);
    let sqrt_d = discriminant.sqrt();
    if half_sum >= 0.0 {
        let denom = half_sum + sqrt_d;
        if denom == 0.0 {
            0.0
        } else {
            c / denom
        }
    } else {
        (half_sum - sqrt_d) / a
    }
}

/// Sight angle under which the object center is seen at the given
/// observation time: the retarded center sits at (v t_e, y0), and the
/// sight angle is atan(v t_e / y0).
pub fn sight_angle_at_time(motion: &MotionState, observation_time: f64) -> f64 {
    let t_e = retarded_emission_time([0.0; 3], motion, observation_time);
    (motion.speed() * t_e).atan2(motion.closest_approach)
}

/// Observation time at which the object center is seen under the given
/// sight angle. Inverts [`sight_angle_at_time`] in closed form:
/// t_e = y0 tan(sight)/v, then T = t_e plus the light travel distance.
///
/// A resting object is only ever seen at sight angle zero; any other
/// request is rejected.
pub fn time_for_sight_angle(motion: &MotionState, sight: SightAngle) -> Result<f64, RenderError> {
    let v = motion.speed();
    let t_e = if v == 0.0 {
        if sight.radians() != 0.0 {
            return Err(RenderError::UnreachableSightAngle(sight.radians()));
        }
        0.0
    } else {
        motion.closest_approach * sight.radians().tan() / v
    };
    let center = world_vertex_position([0.0; 3], motion, t_e);
    Ok(t_e + norm(center))
}

/// Residual of the light-travel-time condition for one traced vertex,
/// scaled by max(1, |T|). Bounded by
/// [`crate::tolerances::RETARDED_RESIDUAL`] for every rendered vertex.
pub fn retarded_residual(offset: Vec3, motion: &MotionState, observation_time: f64) -> f64 {
    let t_e = retarded_emission_time(offset, motion, observation_time);
    let distance = norm(world_vertex_position(offset, motion, t_e));
    (distance - (observation_time - t_e)).abs() / observation_time.abs().max(1.0)
}

fn trace_direction(offset: Vec3, motion: &MotionState, observation_time: f64) -> Vec3 {
    let t_e = retarded_emission_time(offset, motion, observation_time);
    let position = world_vertex_position(offset, motion, t_e);
    debug_assert!(
        retarded_residual(offset, motion, observation_time) < RETARDED_RESIDUAL,
        "retarded-time solve lost precision"
    );
    normalize(position).unwrap_or([0.0; 3])
}

/// Render the mesh as actually seen at `observation_time`: every sample
/// point is traced to its own emission time and projected from its
/// retarded position. `subdivide` inserts that many interior sample
/// points per edge, which lets the apparent curvature of straight rods
/// show up in the output.
pub fn render_apparent(
    mesh: &Mesh,
    motion: &MotionState,
    camera: &Camera,
    observation_time: f64,
    subdivide: u32,
    mode: FrameMode,
) -> Frame {
    let sight_angle = sight_angle_at_time(motion, observation_time);
    let predicted = predicted_rotation(motion, sight_angle);
    build_frame(mesh, camera, mode, subdivide, |offset| {
        trace_direction(offset, motion, observation_time)
    })
    .with_metadata(FrameMetadata {
        velocity: motion.speed(),
        sight_angle,
        observation_time,
        predicted_rotation: predicted,
        dropped_edges: 0, // filled by build_frame
    })
}

/// Render the prediction: the resting mesh rotated counterclockwise
/// about the z axis by the apparent rotation for this sight angle,
/// placed at the retarded position of the object center, and projected
/// with the same camera.
pub fn render_rotated_oracle(
    mesh: &Mesh,
    motion: &MotionState,
    camera: &Camera,
    sight: SightAngle,
    subdivide: u32,
    mode: FrameMode,
) -> Result<Frame, RenderError> {
    let observation_time = time_for_sight_angle(motion, sight)?;
    let t_e = retarded_emission_time([0.0; 3], motion, observation_time);
    let center = world_vertex_position([0.0; 3], motion, t_e);
    let rotation = predicted_rotation(motion, sight.radians());
    let frame = build_frame(mesh, camera, mode, subdivide, |offset| {
        normalize(add(center, rotate_z(offset, rotation))).unwrap_or([0.0; 3])
    })
    .with_metadata(FrameMetadata {
        velocity: motion.speed(),
        sight_angle: sight.radians(),
        observation_time,
        predicted_rotation: rotation,
        dropped_edges: 0,
    });
    Ok(frame)
}

fn predicted_rotation(motion: &MotionState, sight_angle: f64) -> f64 {
    let sight = SightAngle::new(sight_angle)
        .expect("a retarded center direction always has |sight| < pi/2");
    rotation_group_law(motion.velocity(), sight).rotation
}

/// Frame under construction; keeps the dropped-edge count with it.
struct FrameBuild {
    frame: Frame,
    dropped: usize,
}

impl FrameBuild {
    fn with_metadata(mut self, mut metadata: FrameMetadata) -> Frame {
        metadata.dropped_edges = self.dropped;
        self.frame.metadata = metadata;
        self.frame
    }
}

fn build_frame(
    mesh: &Mesh,
    camera: &Camera,
    mode: FrameMode,
    subdivide: u32,
    direction_of: impl Fn(Vec3) -> Vec3,
) -> FrameBuild {
    let vertices: Vec<VertexView> = mesh
        .vertices
        .iter()
        .map(|&offset| {
            let direction = direction_of(offset);
            VertexView {
                direction,
                projected: camera.project(direction),
            }
        })
        .collect();

    let mut dropped = 0;
    let polylines = mesh
        .edges
        .iter()
        .map(|&[a, b]| {
            let samples = subdivide as usize + 2;
            let mut points = Vec::with_capacity(samples);
            for m in 0..samples {
                let projected = if m == 0 {
                    vertices[a].projected
                } else if m == samples - 1 {
                    vertices[b].projected
                } else {
                    let t = m as f64 / (samples - 1) as f64;
                    let offset = lerp(mesh.vertices[a], mesh.vertices[b], t);
                    camera.project(direction_of(offset))
                };
                match projected {
                    Some(p) => points.push(p),
                    None => {
                        dropped += 1;
                        return None;
                    }
                }
            }
            Some(points)
        })
        .collect();

    FrameBuild {
        frame: Frame {
            mode,
            vertices,
            edges: mesh.edges.clone(),
            polylines,
            camera: camera.clone(),
            metadata: FrameMetadata {
                velocity: 0.0,
                sight_angle: 0.0,
                observation_time: 0.0,
                predicted_rotation: 0.0,
                dropped_edges: 0,
            },
        },
        dropped,
    }
}

/// How [`render_sequence`] obtains the camera for each frame.
#[derive(Debug, Clone)]
pub enum CameraRig {
    /// One fixed camera for every frame.
    Fixed(Camera),
    /// Re-aim at the apparent object center per frame, with the given or
    /// an automatic field of view sized to frame the object.
    AutoAim {
        field_of_view: Option<f64>,
        resolution: (u32, u32),
    },
}

impl CameraRig {
    fn resolve(&self, mesh: &Mesh, motion: &MotionState, sight: SightAngle) -> Result<Camera, RenderError> {
        match self {
            CameraRig::Fixed(camera) => Ok(camera.clone()),
            CameraRig::AutoAim {
                field_of_view,
                resolution,
            } => {
                let observation_time = time_for_sight_angle(motion, sight)?;
                let t_e = retarded_emission_time([0.0; 3], motion, observation_time);
                let center = world_vertex_position([0.0; 3], motion, t_e);
                let fov = field_of_view.unwrap_or_else(|| {
                    (6.0 * (mesh.max_radius()).atan2(norm(center))).clamp(1e-3, 3.0)
                });
                Camera::aimed_at(center, fov, *resolution)
            }
        }
    }
}

/// One sight angle of a rendered sweep.
#[derive(Debug, Clone)]
pub struct SequenceItem {
    pub sight_angle: f64,
    pub observation_time: f64,
    pub apparent: Frame,
    pub oracle: Frame,
    pub mismatch: f64,
}

/// Render the apparent/predicted frame pair for every sight angle, with
/// the normalized mismatch per pair. Items come back in input order and
/// are bit-identical for any rayon worker count.
pub fn render_sequence(
    mesh: &Mesh,
    motion: &MotionState,
    rig: &CameraRig,
    sight_angles: &[f64],
    subdivide: u32,
    mode: FrameMode,
) -> Result<Vec<SequenceItem>, RenderError> {
    let results: Vec<Result<SequenceItem, RenderError>> = sight_angles
        .par_iter()
        .map(|&angle| {
            let sight = SightAngle::new(angle).map_err(RenderError::from)?;
            let camera = rig.resolve(mesh, motion, sight)?;
            let observation_time = time_for_sight_angle(motion, sight)?;
            let apparent =
                render_apparent(mesh, motion, &camera, observation_time, subdivide, mode);
            let oracle = render_rotated_oracle(mesh, motion, &camera, sight, subdivide, mode)?;
            let mismatch = frame_mismatch(&apparent, &oracle)?;
            Ok(SequenceItem {
                sight_angle: angle,
                observation_time,
                apparent,
                oracle,
                mismatch,
            })
        })
        .collect();

    results
        .into_iter()
        .enumerate()
        .map(|(index, r)| {
            r.map_err(|source| RenderError::AtAngle {
                index,
                source: Box::new(source),
            })
        })
        .collect()
}

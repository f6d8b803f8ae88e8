//! Wireframe meshes: vertices in object coordinates plus index edges.

use serde::{Deserialize, Serialize};

use super::RenderError;

/// A wireframe object. Vertex coordinates are rest-frame offsets from
/// the object center, in the same length unit as distances elsewhere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub edges: Vec<[usize; 2]>,
}

impl Mesh {
    pub fn new(vertices: Vec<[f64; 3]>, edges: Vec<[usize; 2]>) -> Result<Self, RenderError> {
        let mesh = Self { vertices, edges };
        mesh.validate()?;
        Ok(mesh)
    }

    fn validate(&self) -> Result<(), RenderError> {
        if self.vertices.is_empty() {
            return Err(RenderError::EmptyMesh);
        }
        if let Some(v) = self.vertices.iter().flatten().find(|c| !c.is_finite()) {
            return Err(RenderError::NonFiniteVertex(*v));
        }
        for &[a, b] in &self.edges {
            if a >= self.vertices.len() || b >= self.vertices.len() {
                return Err(RenderError::EdgeOutOfRange {
                    edge: [a, b],
                    vertex_count: self.vertices.len(),
                });
            }
        }
        Ok(())
    }

    /// The unit cube centered at the origin: side 1, 8 vertices, 12 edges.
    pub fn unit_cube() -> Self {
        let mut vertices = Vec::with_capacity(8);
        for &x in &[-0.5, 0.5] {
            for &y in &[-0.5, 0.5] {
                for &z in &[-0.5, 0.5] {
                    vertices.push([x, y, z]);
                }
            }
        }
        // vertex index encodes its sign pattern; edges join single-bit flips
        let mut edges = Vec::with_capacity(12);
        for a in 0..8usize {
            for bit in 0..3 {
                let b = a ^ (1 << bit);
                if a < b {
                    edges.push([a, b]);
                }
            }
        }
        Self { vertices, edges }
    }

    pub fn from_json(text: &str) -> Result<Self, RenderError> {
        let mesh: Mesh =
            serde_json::from_str(text).map_err(|e| RenderError::MeshFormat(e.to_string()))?;
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("meshes always serialize")
    }

    /// Largest vertex distance from the object center.
    pub fn max_radius(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| super::vec3::norm(*v))
            .fold(0.0, f64::max)
    }
}

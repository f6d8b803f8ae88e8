//! File renderings of frames: SVG wireframes, PPM rasters, mismatch CSV.
//!
//! All output is deterministic text or bytes assembled in frame order;
//! numbers print at 17 significant digits.

use crate::numfmt::g17;

use super::frame::{Frame, FrameMetadata};
use super::SequenceItem;

fn metadata_comment(m: &FrameMetadata) -> String {
    format!(
        "<!-- v={} psi_tilde={} T={} phi_predicted={} -->",
        g17(m.velocity),
        g17(m.sight_angle),
        g17(m.observation_time),
        g17(m.predicted_rotation),
    )
}

/// SVG wireframe: one polyline per edge, viewBox normalized to the
/// [-1, 1] square, metadata in a leading comment. The image y axis
/// points up, so point coordinates are emitted with y negated.
pub fn frame_to_svg(frame: &Frame) -> String {
    let (w, h) = frame.camera.resolution;
    let mut out = String::new();
    out.push_str(&metadata_comment(&frame.metadata));
    out.push('\n');
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" \
         viewBox=\"-1 -1 2 2\">\n"
    ));
    for polyline in frame.polylines.iter().flatten() {
        let points: Vec<String> = polyline
            .iter()
            .map(|p| format!("{},{}", g17(p[0]), g17(-p[1])))
            .collect();
        out.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.005\"/>\n",
            points.join(" ")
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Binary PPM (P6, 8-bit) raster of a frame: black background, the
/// wireframe in white. When an overlay frame is given its wireframe is
/// drawn into the red channel only, so overlay-only pixels show red and
/// agreement shows white.
pub fn frame_to_ppm(frame: &Frame, overlay: Option<&Frame>) -> Vec<u8> {
    let (w, h) = frame.camera.resolution;
    let mut raster = Raster::new(w, h);
    raster.draw_frame(frame, [255, 255, 255]);
    if let Some(o) = overlay {
        raster.draw_frame(o, [255, 0, 0]);
    }
    let mut bytes = format!("P6\n{w} {h}\n255\n").into_bytes();
    bytes.extend_from_slice(&raster.pixels);
    bytes
}

/// Mismatch table for a rendered sweep.
pub fn mismatch_csv(items: &[SequenceItem]) -> String {
    let mut out = String::from("psi_tilde,T,mismatch,phi_predicted\n");
    for item in items {
        out.push_str(&format!(
            "{},{},{},{}\n",
            g17(item.sight_angle),
            g17(item.observation_time),
            g17(item.mismatch),
            g17(item.oracle.metadata.predicted_rotation),
        ));
    }
    out
}

struct Raster {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl Raster {
    fn new(width: u32, height: u32) -> Self {
        Self {
            width,
            height,
            pixels: vec![0; (width as usize) * (height as usize) * 3],
        }
    }

    fn draw_frame(&mut self, frame: &Frame, color: [u8; 3]) {
        for polyline in frame.polylines.iter().flatten() {
            for pair in polyline.windows(2) {
                self.draw_segment(pair[0], pair[1], color);
            }
        }
    }

    /// Draw one segment given in [-1, 1] image coordinates.
    fn draw_segment(&mut self, a: [f64; 2], b: [f64; 2], color: [u8; 3]) {
        let Some((a, b)) = clip_to_unit_square(a, b) else {
            return;
        };
        let to_pixel = |p: [f64; 2]| -> (i64, i64) {
            let x = (p[0] + 1.0) / 2.0 * (self.width - 1) as f64;
            let y = (1.0 - p[1]) / 2.0 * (self.height - 1) as f64;
            (x.round() as i64, y.round() as i64)
        };
        let (x0, y0) = to_pixel(a);
        let (x1, y1) = to_pixel(b);
        self.bresenham(x0, y0, x1, y1, color);
    }

    fn bresenham(&mut self, mut x0: i64, mut y0: i64, x1: i64, y1: i64, color: [u8; 3]) {
        let dx = (x1 - x0).abs();
        let dy = -(y1 - y0).abs();
        let sx = if x0 < x1 { 1 } else { -1 };
        let sy = if y0 < y1 { 1 } else { -1 };
        let mut err = dx + dy;
        loop {
            self.set_pixel(x0, y0, color);
            if x0 == x1 && y0 == y1 {
                break;
            }
            let e2 = 2 * err;
            if e2 >= dy {
                err += dy;
                x0 += sx;
            }
            if e2 <= dx {
                err += dx;
                y0 += sy;
            }
        }
    }

    fn set_pixel(&mut self, x: i64, y: i64, color: [u8; 3]) {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return;
        }
        let idx = (y as usize * self.width as usize + x as usize) * 3;
        // channel-wise max lets the white wireframe and the red overlay coexist
        for (k, &c) in color.iter().enumerate() {
            self.pixels[idx + k] = self.pixels[idx + k].max(c);
        }
    }
}

/// Liang-Barsky clip of a segment to the [-1, 1] square. Returns None
/// when the segment misses the viewport entirely.
fn clip_to_unit_square(a: [f64; 2], b: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    for (p, q) in [
        (-dx, a[0] + 1.0),
        (dx, 1.0 - a[0]),
        (-dy, a[1] + 1.0),
        (dy, 1.0 - a[1]),
    ] {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
            continue;
        }
        let r = q / p;
        if p < 0.0 {
            if r > t1 {
                return None;
            }
            t0 = t0.max(r);
        } else {
            if r < t0 {
                return None;
            }
            t1 = t1.min(r);
        }
    }
    if t0 > t1 {
        return None;
    }
    Some((
        [a[0] + t0 * dx, a[1] + t0 * dy],
        [a[0] + t1 * dx, a[1] + t1 * dy],
    ))
}

//! Closed polygons approximating `q(∂Δ)`, with inside tests and signed distance.

use crate::error::{Error, Result};
use crate::kernel::ComplexValue;

/// Vertices used when tracing a boundary.
pub const BOUNDARY_VERTICES: usize = 4096;
/// Radius of the traced circle; stays off exceptional points on `|z| = 1`.
pub const BOUNDARY_RADIUS: f64 = 1.0 - 1e-6;

/// A simple closed polygon (the last vertex joins the first).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPolygon {
    vertices: Vec<ComplexValue>,
}

fn cross(a: ComplexValue, b: ComplexValue) -> f64 {
    a.re * b.im - a.im * b.re
}

fn orient(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> f64 {
    cross(b - a, c - a)
}

fn proper_crossing(a: ComplexValue, b: ComplexValue, c: ComplexValue, d: ComplexValue) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

fn segment_distance(p: ComplexValue, a: ComplexValue, b: ComplexValue) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 == 0.0 { 0.0 } else { ((p - a).re * ab.re + (p - a).im * ab.im) / len2 };
    (p - (a + ab * t.clamp(0.0, 1.0))).norm()
}

impl BoundaryPolygon {
    /// Validate and take ownership of `vertices`.
    ///
    /// Fails with `PolygonDegenerate` if two non-adjacent edges cross, which
    /// is what a non-univalent `q` produces.
    pub fn new(vertices: Vec<ComplexValue>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidParameter(format!("polygon needs >= 3 vertices, got {}", vertices.len())));
        }
        if vertices.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite("polygon vertex"));
        }
        let poly = Self { vertices };
        if let Some((i, j)) = poly.find_crossing() {
            return Err(Error::PolygonDegenerate { first: i, second: j });
        }
        Ok(poly)
    }

    /// Trace `q` on `|z| = 1 − 1e-6` with [`BOUNDARY_VERTICES`] vertices.
    pub fn trace<Q: Fn(ComplexValue) -> ComplexValue>(q: Q) -> Result<Self> {
        let n = BOUNDARY_VERTICES;
        let vertices = (0..n)
            .map(|k| q(ComplexValue::from_polar(BOUNDARY_RADIUS, std::f64::consts::TAU * k as f64 / n as f64)))
            .collect();
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[ComplexValue] {
        &self.vertices
    }

    fn edge(&self, i: usize) -> (ComplexValue, ComplexValue) {
        (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()])
    }

    // Sweep over edges sorted by their left end; only x-overlapping pairs are tested.
    fn find_crossing(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        let mut order: Vec<(f64, f64, usize)> = (0..n)
            .map(|i| {
                let (a, b) = self.edge(i);
                (a.re.min(b.re), a.re.max(b.re), i)
            })
            .collect();
        order.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.2.cmp(&y.2)));
        for (k, &(_, hi, i)) in order.iter().enumerate() {
            let (a, b) = self.edge(i);
            for &(lo_j, _, j) in &order[k + 1..] {
                if lo_j > hi {
                    break;
                }
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if adjacent {
                    continue;
                }
                let (c, d) = self.edge(j);
                if proper_crossing(a, b, c, d) {
                    return Some((i.min(j), i.max(j)));
                }
            }
        }
        None
    }

    /// Even-odd rule.
    pub fn contains(&self, p: ComplexValue) -> bool {
        let mut inside = false;
        let n = self.vertices.len();
        let mut j = n - 1;
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[j]);
            if (a.im > p.im) != (b.im > p.im) && p.re < (b.re - a.re) * (p.im - a.im) / (b.im - a.im) + a.re {
                inside = !inside;
            }
            j = i;
        }
        inside
    }

    /// Distance to the boundary, positive inside and negative outside.
    pub fn signed_distance(&self, p: ComplexValue) -> f64 {
        let d = (0..self.vertices.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                segment_distance(p, a, b)
            })
            .fold(f64::INFINITY, f64::min);
        if self.contains(p) {
            d
        } else {
            -d
        }
    }
}

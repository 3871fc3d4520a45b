//! Janowski pairs `(A, B)` and the image of the disk under `(1+Az)/(1+Bz)`.

use crate::error::{Error, Result};
use crate::kernel::ComplexValue;

/// `(A, B)` with `-1 <= B < A <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiPair {
    a: f64,
    b: f64,
}

impl JanowskiPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || !(-1.0 <= b && b < a && a <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "Janowski pair needs -1 <= B < A <= 1, got A = {a}, B = {b}"
            )));
        }
        Ok(Self { a, b })
    }

    /// `P[1-2β, -1]`: real part greater than `β`.
    pub fn real_part_above(beta: f64) -> Result<Self> {
        Self::new(1.0 - 2.0 * beta, -1.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// `(1 + Az)/(1 + Bz)` for `|z| <= 1`.
pub fn mobius_target(pair: &JanowskiPair, z: ComplexValue) -> Result<ComplexValue> {
    if !(z.norm() <= 1.0) {
        return Err(Error::Domain(format!("mobius_target needs |z| <= 1, got {}", z.norm())));
    }
    let den = 1.0 + pair.b * z;
    if den.norm() == 0.0 {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok((1.0 + pair.a * z) / den)
}

/// Open image of the unit disk under the Janowski Möbius map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetRegion {
    /// `Re w > boundary_re` (the `B = -1` case).
    HalfPlane { boundary_re: f64 },
    /// `|w - center| < radius`.
    Disk { center: ComplexValue, radius: f64 },
}

impl TargetRegion {
    /// Signed distance to the boundary, positive inside.
    ///
    /// Half-plane margin is `Re w - boundary_re`; disk margin is
    /// `radius - |w - center|`. Only the sign is comparable across kinds.
    pub fn margin(&self, w: ComplexValue) -> f64 {
        match *self {
            TargetRegion::HalfPlane { boundary_re } => w.re - boundary_re,
            TargetRegion::Disk { center, radius } => radius - (w - center).norm(),
        }
    }

    pub fn contains(&self, w: ComplexValue) -> bool {
        self.margin(w) > 0.0
    }
}

pub fn target_region(pair: &JanowskiPair) -> TargetRegion {
    let (a, b) = (pair.a, pair.b);
    if b == -1.0 {
        TargetRegion::HalfPlane { boundary_re: (1.0 - a) / 2.0 }
    } else {
        let d = 1.0 - b * b;
        TargetRegion::Disk {
            center: ComplexValue::new((1.0 - a * b) / d, 0.0),
            radius: (a - b) / d,
        }
    }
}

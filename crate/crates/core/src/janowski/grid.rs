//! Deterministic polar samples of the open unit disk.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::ComplexValue;

/// Radial-angular product grid inside `|z| <= 1 - ε`.
///
/// Radii are `(1-ε) sin(π(i+1)/(2 n_r))`, which cluster toward the rim where
/// the extremes of the kernel's real part sit; angles are `2πj/n_θ`.
/// Doubling both counts yields a superset of the original points.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles: Vec<f64>,
    margin_eps: f64,
}

impl DiskGrid {
    pub fn new(n_r: usize, n_theta: usize, margin_eps: f64) -> Result<Self> {
        if n_r == 0 || n_theta == 0 {
            return Err(Error::InvalidParameter("grid needs n_r > 0 and n_theta > 0".into()));
        }
        if !(margin_eps > 0.0 && margin_eps < 1.0) {
            return Err(Error::InvalidParameter(format!("grid margin must lie in (0, 1), got {margin_eps}")));
        }
        let outer = 1.0 - margin_eps;
        let radii = (0..n_r)
            .map(|i| {
                if i + 1 == n_r {
                    outer
                } else {
                    outer * (FRAC_PI_2 * (i + 1) as f64 / n_r as f64).sin()
                }
            })
            .collect();
        let angles = (0..n_theta).map(|j| TAU * j as f64 / n_theta as f64).collect();
        Ok(Self { radii, angles, margin_eps })
    }

    pub fn from_spec(spec: GridSpec) -> Result<Self> {
        Self::new(spec.n_r, spec.n_theta, spec.eps)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn margin_eps(&self) -> f64 {
        self.margin_eps
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points in radius-major order.
    pub fn points(&self) -> Vec<ComplexValue> {
        self.radii
            .iter()
            .flat_map(|&r| self.angles.iter().map(move |&t| ComplexValue::from_polar(r, t)))
            .collect()
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        Self::from_spec(GridSpec::default()).expect("default grid spec is valid")
    }
}

/// `(n_r, n_θ, ε)`, written `64x128@0.001` on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub n_r: usize,
    pub n_theta: usize,
    pub eps: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { n_r: 64, n_theta: 128, eps: 1e-3 }
    }
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("grid spec must look like 64x128 or 64x128@0.001, got {s:?}"));
        let (dims, eps) = match s.trim().split_once('@') {
            Some((d, e)) => (d, Some(e)),
            None => (s.trim(), None),
        };
        let (nr, nt) = dims.split_once(['x', 'X']).ok_or_else(bad)?;
        let n_r: usize = nr.trim().parse().map_err(|_| bad())?;
        let n_theta: usize = nt.trim().parse().map_err(|_| bad())?;
        let eps = match eps {
            Some(e) => e.trim().parse::<f64>().map_err(|_| bad())?,
            None => GridSpec::default().eps,
        };
        if n_r < 4 || n_theta < 4 {
            return Err(Error::Parse(format!("grid sizes must be >= 4, got {n_r}x{n_theta}")));
        }
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::Parse(format!("grid margin must lie in (0, 1), got {eps}")));
        }
        Ok(Self { n_r, n_theta, eps })
    }
}

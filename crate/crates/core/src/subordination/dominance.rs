//! Sampled subordination `f ≺ q`: `f(0) = q(0)` and `f(grid) ⊂ q(Δ)`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::janowski::grid::DiskGrid;
use crate::kernel::{ComplexValue, EvalConfig};
use crate::reduce::worst_point;
use crate::subordination::g::GFunction;
use crate::subordination::polygon::BoundaryPolygon;

/// Margins above `-DOMINANCE_TOL` count as contained.
pub const DOMINANCE_TOL: f64 = 1e-7;
const ORIGIN_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominanceReport {
    pub contained: bool,
    /// Smallest signed distance of `f(z)` to the traced boundary of `q(Δ)`.
    pub min_margin: f64,
    /// Grid point attaining `min_margin`.
    pub witness: ComplexValue,
}

/// Check `f ≺ q` on `grid`; `q` must be univalent with `q(0) = 0`.
pub fn dominance_of<F, Q>(f: F, q: Q, grid: &DiskGrid) -> Result<DominanceReport>
where
    F: Fn(ComplexValue) -> Result<ComplexValue> + Sync,
    Q: Fn(ComplexValue) -> ComplexValue,
{
    if grid.is_empty() {
        return Err(Error::InvalidParameter("dominance needs a nonempty grid".into()));
    }
    let origin = ComplexValue::new(0.0, 0.0);
    let q0 = q(origin);
    if !(q0.norm() <= ORIGIN_TOL) {
        return Err(Error::InvalidParameter(format!("target must satisfy q(0) = 0, got {q0}")));
    }
    let f0 = f(origin)?;
    if !(f0.norm() <= ORIGIN_TOL) {
        return Err(Error::InvalidParameter(format!("f must satisfy f(0) = 0, got {f0}")));
    }
    let polygon = BoundaryPolygon::trace(q)?;
    let samples: Vec<(f64, ComplexValue)> = grid
        .points()
        .into_par_iter()
        .map(|z| f(z).map(|w| (polygon.signed_distance(w), z)))
        .collect::<Result<_>>()?;
    let (min_margin, witness) = worst_point(&samples).expect("grid is nonempty");
    Ok(DominanceReport { contained: min_margin > -DOMINANCE_TOL, min_margin, witness })
}

/// Check `g_{α+1} ≺ q` on `grid`.
pub fn numeric_dominance<Q>(alpha: f64, q: Q, grid: &DiskGrid, cfg: &EvalConfig) -> Result<DominanceReport>
where
    Q: Fn(ComplexValue) -> ComplexValue,
{
    if !(alpha > 1.0) {
        return Err(Error::InvalidParameter(format!("dominance needs alpha > 1, got {alpha}")));
    }
    let g = GFunction::new(alpha + 1.0)?;
    dominance_of(|z| g.eval(z, cfg), q, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subordination::target::Target;
    use proptest::prelude::*;

    fn grid() -> DiskGrid {
        DiskGrid::new(8, 16, 1e-3).unwrap()
    }

    #[test]
    fn identity_inside_double() {
        let r = dominance_of(Ok, |z| 2.0 * z, &grid()).unwrap();
        assert!(r.contained);
        assert!((r.min_margin - 1.0).abs() < 2e-3, "{}", r.min_margin);
        assert!((r.witness.norm() - (1.0 - 1e-3)).abs() < 1e-12);
    }

    #[test]
    fn double_outside_identity() {
        let r = dominance_of(|z| Ok(2.0 * z), |z| z, &grid()).unwrap();
        assert!(!r.contained);
        assert!(r.min_margin < -0.9);
    }

    #[test]
    fn scaled_self_target() {
        let cfg = EvalConfig::default();
        let g = GFunction::new(2.5).unwrap();
        let max = grid().points().iter().map(|&z| g.eval(z, &cfg).unwrap().norm()).fold(0.0, f64::max);
        let m = 1.1 * max;
        let r = numeric_dominance(1.5, |z| m * z, &grid(), &cfg).unwrap();
        assert!(r.contained && r.min_margin > 0.0);
        let r = numeric_dominance(1.5, |z| 0.9 * max * z, &grid(), &cfg).unwrap();
        assert!(!r.contained);
    }

    #[test]
    fn preconditions() {
        assert!(dominance_of(|z| Ok(z + 1.0), |z| z, &grid()).is_err());
        assert!(dominance_of(Ok, |z| z + 1.0, &grid()).is_err());
        assert!(numeric_dominance(1.0, |z| z, &grid(), &EvalConfig::default()).is_err());
        assert!(matches!(
            dominance_of(Ok, |z| z + z * z, &grid()),
            Err(Error::PolygonDegenerate { .. })
        ));
    }

    #[test]
    fn deterministic() {
        let cfg = EvalConfig::default();
        let t: Target = "mobius:1,-1".parse().unwrap();
        let a = numeric_dominance(2.0, |z| t.eval(z), &grid(), &cfg).unwrap();
        let b = numeric_dominance(2.0, |z| t.eval(z), &grid(), &cfg).unwrap();
        assert_eq!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        // Dilating the target keeps a contained image contained.
        #[test]
        fn monotone_under_scaling(alpha in 1.1f64..4.0, c in 1.0f64..3.0, pick in 0usize..3) {
            let cfg = EvalConfig::default();
            let t: Target = ["scaled:2", "mobius:1,-0.5", "poly:0,1.5,0.3"][pick].parse().unwrap();
            let base = numeric_dominance(alpha, |z| t.eval(z), &grid(), &cfg).unwrap();
            let scaled = numeric_dominance(alpha, |z| c * t.eval(z), &grid(), &cfg).unwrap();
            if base.contained {
                prop_assert!(scaled.contained);
            }
        }
    }
}

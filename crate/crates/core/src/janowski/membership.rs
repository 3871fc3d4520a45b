//! Sampled checks that a function maps the disk into a Janowski region.
//!
//! These corroborate the predicates in [`super::theorems`]; a finite grid is
//! never a proof of membership.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::janowski::grid::DiskGrid;
use crate::janowski::region::{target_region, JanowskiPair};
use crate::kernel::{eval_derivative, eval_series, ComplexValue, EvalConfig, KernelParams};
use crate::reduce::worst_point;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipReport {
    /// Every sample lies in the open target region.
    pub member: bool,
    /// Smallest signed distance to the region boundary (positive inside).
    pub min_margin: f64,
    /// Grid point attaining `min_margin`.
    pub witness: ComplexValue,
    /// `min |(1+B) f(z) - (1+A)|` over the grid; the predicates assume it is nonzero.
    pub hypothesis_gap: f64,
}

/// Sample `f` on `grid` against the image region of `pair`.
pub fn membership_of<F>(f: F, pair: &JanowskiPair, grid: &DiskGrid) -> Result<MembershipReport>
where
    F: Fn(ComplexValue) -> Result<ComplexValue> + Sync,
{
    if grid.is_empty() {
        return Err(Error::InvalidParameter("membership needs a nonempty grid".into()));
    }
    let region = target_region(pair);
    let (a, b) = (pair.a(), pair.b());
    let samples: Vec<(f64, ComplexValue, f64)> = grid
        .points()
        .into_par_iter()
        .map(|z| {
            let w = f(z)?;
            Ok((region.margin(w), z, ((1.0 + b) * w - (1.0 + a)).norm()))
        })
        .collect::<Result<_>>()?;
    let margins: Vec<(f64, ComplexValue)> = samples.iter().map(|&(m, z, _)| (m, z)).collect();
    let (min_margin, witness) = worst_point(&margins).expect("grid is nonempty");
    let hypothesis_gap = samples.iter().map(|s| s.2).fold(f64::INFINITY, f64::min);
    Ok(MembershipReport { member: min_margin > 0.0, min_margin, witness, hypothesis_gap })
}

/// Does `S_{α,λ}` map the sampled disk into the region of `pair`?
pub fn numeric_membership(
    params: &KernelParams,
    pair: &JanowskiPair,
    grid: &DiskGrid,
    cfg: &EvalConfig,
) -> Result<MembershipReport> {
    membership_of(|z| eval_series(params, z, cfg), pair, grid)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CloseToConvexReport {
    /// Sampled minimum of `Re((zS′_α + 2αS_α)/(2α))` is positive.
    pub close_to_convex: bool,
    pub min_real_part: f64,
    pub witness: ComplexValue,
    /// Largest `|(zS′_α + 2αS_α)/(2α) - S_{α-1}|` seen on the grid.
    pub max_identity_residual: f64,
}

/// Pointwise tolerance on `(zS′_α + 2αS_α)/(2α) = S_{α-1}`.
pub const CLOSE_TO_CONVEX_IDENTITY_TOL: f64 = 1e-10;

/// Check `Re((zS′_α + 2αS_α)/(2α)) > 0` on the grid (λ = 1).
///
/// The expression equals `S_{α-1}` by the order recurrence; that equality
/// is verified at every point and a violation is an error.
pub fn check_close_to_convex(alpha: f64, grid: &DiskGrid, cfg: &EvalConfig) -> Result<CloseToConvexReport> {
    if !(alpha > 0.5) {
        return Err(Error::Domain(format!("close-to-convexity check needs alpha > 1/2, got {alpha}")));
    }
    if grid.is_empty() {
        return Err(Error::InvalidParameter("close-to-convexity check needs a nonempty grid".into()));
    }
    let upper = KernelParams::unit(alpha)?;
    let lower = KernelParams::unit(alpha - 1.0)?;
    let samples: Vec<(f64, ComplexValue, f64)> = grid
        .points()
        .into_par_iter()
        .map(|z| {
            let s = eval_series(&upper, z, cfg)?;
            let ds = eval_derivative(&upper, z, 1, cfg)?;
            let combo = (z * ds + 2.0 * alpha * s) / (2.0 * alpha);
            let reference = eval_series(&lower, z, cfg)?;
            Ok((combo.re, z, (combo - reference).norm()))
        })
        .collect::<Result<_>>()?;
    let max_identity_residual = samples.iter().map(|s| s.2).fold(0.0, f64::max);
    if max_identity_residual > CLOSE_TO_CONVEX_IDENTITY_TOL {
        return Err(Error::IdentityViolation(format!(
            "(zS'+2aS)/(2a) differs from S_(a-1) by {max_identity_residual:e}"
        )));
    }
    let re: Vec<(f64, ComplexValue)> = samples.iter().map(|&(r, z, _)| (r, z)).collect();
    let (min_real_part, witness) = worst_point(&re).expect("grid is nonempty");
    Ok(CloseToConvexReport { close_to_convex: min_real_part > 0.0, min_real_part, witness, max_identity_residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    // The typeset predicates certify these, yet the kernel leaves the target:
    // at B = -1, α = 0, λ < 0 both sides of the first branch vanish for every A,
    // and Re S > (1-A)/2 close to 1 is impossible with S(0) = 1.
    #[test]
    fn printed_predicates_certify_non_members() {
        use crate::janowski::theorems::check_theorems;
        let grid = DiskGrid::new(16, 32, 1e-3).unwrap();
        for (a, b, alpha, lambda) in [(-0.9, -1.0, 0.0, -0.5), (0.058, -0.0078, 6.9077, 0.4417), (-0.2864, -0.3558, 9.8224, 0.3723)] {
            let pair = JanowskiPair::new(a, b).unwrap();
            let lam = c(lambda, 0.0);
            assert!(check_theorems(&pair, alpha, lam).unwrap().is_certified(), "A={a} B={b}");
            let r = numeric_membership(&KernelParams::new(alpha, lam).unwrap(), &pair, &grid, &cfg()).unwrap();
            assert!(!r.member && r.min_margin < -1e-3, "A={a} B={b} margin={}", r.min_margin);
        }
    }

    #[test]
    fn kernel_in_right_half_plane() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let grid = DiskGrid::new(64, 64, 1e-3).unwrap();
        let r = numeric_membership(&KernelParams::unit(2.0).unwrap(), &pair, &grid, &cfg()).unwrap();
        assert!(r.member && r.min_margin > 0.0);
        // Real part is smallest on the negative real axis at the rim.
        assert!(r.witness.re < -0.99, "{:?}", r.witness);
        let r = numeric_membership(&KernelParams::unit(0.5).unwrap(), &pair, &grid, &cfg()).unwrap();
        assert!(r.member);
    }

    // Oracle: Re (e^z - 1)/z on a dense sample of |z| = 1 - ε.
    #[test]
    fn half_order_margin_matches_closed_form() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let grid = DiskGrid::new(16, 256, 1e-3).unwrap();
        let r = numeric_membership(&KernelParams::unit(0.5).unwrap(), &pair, &grid, &cfg()).unwrap();
        let dense_min = (0..4096)
            .map(|k| {
                let z = ComplexValue::from_polar(1.0 - 1e-3, std::f64::consts::TAU * f64::from(k) / 4096.0);
                ((z.exp() - 1.0) / z).re
            })
            .fold(f64::INFINITY, f64::min);
        assert!(dense_min > 0.0);
        assert!((r.min_margin - dense_min).abs() < 1e-4, "{} vs {}", r.min_margin, dense_min);
    }

    #[test]
    fn stub_exits_disk() {
        let pair = JanowskiPair::new(1.0, 0.0).unwrap();
        let grid = DiskGrid::new(16, 32, 1e-3).unwrap();
        let r = membership_of(|z| Ok(1.0 + 2.0 * z), &pair, &grid).unwrap();
        assert!(!r.member);
        assert!(r.min_margin < 0.0);
        assert!((r.witness - c(-(1.0 - 1e-3), 0.0)).norm() < 1e-12, "{:?}", r.witness);
        // 1 + 2z = 2 = 1 + A only at z = 1/2, on the grid
        assert!(r.hypothesis_gap >= 0.0);
    }

    #[test]
    fn enlarging_grid_never_helps() {
        let pair = JanowskiPair::new(0.6, 0.1).unwrap();
        let params = KernelParams::new(1.2, c(1.0, 0.0)).unwrap();
        let mut prev = numeric_membership(&params, &pair, &DiskGrid::new(4, 6, 1e-3).unwrap(), &cfg()).unwrap();
        for k in 1..4 {
            let g = DiskGrid::new(4 << k, 6 << k, 1e-3).unwrap();
            let r = numeric_membership(&params, &pair, &g, &cfg()).unwrap();
            assert!(r.min_margin <= prev.min_margin);
            assert!(!(r.member && !prev.member));
            prev = r;
        }
    }

    #[test]
    fn close_to_convex_examples() {
        let grid = DiskGrid::new(16, 32, 1e-3).unwrap();
        for alpha in [1.5, 2.5] {
            let r = check_close_to_convex(alpha, &grid, &cfg()).unwrap();
            assert!(r.close_to_convex && r.min_real_part > 0.0, "alpha={alpha}");
            assert!(r.max_identity_residual <= 1e-10);
        }
        assert!(check_close_to_convex(0.5, &grid, &cfg()).is_err());
    }

    #[test]
    fn close_to_convex_identity_at_origin() {
        let p = KernelParams::unit(1.5).unwrap();
        let z = c(0.0, 0.0);
        let s = eval_series(&p, z, &cfg()).unwrap();
        let ds = eval_derivative(&p, z, 1, &cfg()).unwrap();
        let lower = eval_series(&KernelParams::unit(0.5).unwrap(), z, &cfg()).unwrap();
        assert_eq!((z * ds + 3.0 * s) / 3.0 - lower, c(0.0, 0.0));
    }
}

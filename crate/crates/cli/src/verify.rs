//! Every identity the kernel should satisfy, checked on a grid.

use rayon::prelude::*;

use bsk_core::gamma::log_gamma;
use bsk_core::janowski::DiskGrid;
use bsk_core::kernel::{
    closed_form_half_order, eval_derivative, eval_integral, eval_series, ode_residual, recurrence_residual, OdeVariant,
};
use bsk_core::subordination::{chain_residual, g_recurrence_residual, ChainForm, ChainIdentity};
use bsk_core::{ComplexValue, EvalConfig, KernelParams, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub status: Status,
    /// `None` when skipped.
    pub max_residual: Option<f64>,
    pub threshold: f64,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerifyReport {
    /// Skipped identities do not count against the verdict.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

fn max_over<F>(points: &[ComplexValue], f: F) -> Result<f64>
where
    F: Fn(ComplexValue) -> Result<f64> + Sync,
{
    let v: Vec<f64> = points.par_iter().map(|&z| f(z)).collect::<Result<_>>()?;
    Ok(v.into_iter().fold(0.0, f64::max))
}

fn measured(name: &'static str, residual: f64, threshold: f64, note: &str) -> IdentityCheck {
    IdentityCheck {
        name,
        status: if residual <= threshold { Status::Pass } else { Status::Fail },
        max_residual: Some(residual),
        threshold,
        note: note.into(),
    }
}

fn skipped(name: &'static str, threshold: f64, why: String) -> IdentityCheck {
    IdentityCheck { name, status: Status::Skipped, max_residual: None, threshold, note: why }
}

/// Check every identity that applies to `params` on `grid`.
pub fn verify_all(params: &KernelParams, grid: &DiskGrid, cfg: &EvalConfig) -> Result<VerifyReport> {
    let alpha = params.alpha();
    let lambda = params.lambda();
    let points = grid.points();
    let zero = ComplexValue::new(0.0, 0.0);
    let one = ComplexValue::new(1.0, 0.0);
    let mut checks = Vec::new();

    let s0 = eval_series(params, zero, cfg)?;
    checks.push(measured("initial_value", (s0 - one).norm(), 1e-14, "|S(0) - 1|"));

    let slope = lambda * (log_gamma(alpha + 1.0)? - log_gamma(alpha + 1.5)? - 0.5 * std::f64::consts::PI.ln()).exp();
    let d0 = eval_derivative(params, zero, 1, cfg)?;
    let rel = if slope.norm() == 0.0 { d0.norm() } else { (d0 - slope).norm() / slope.norm() };
    checks.push(measured("initial_slope", rel, 1e-12, "relative error of S'(0) against λΓ(α+1)/(√πΓ(α+3/2))"));

    let dual = max_over(&points, |z| {
        let s = eval_series(params, z, cfg)?;
        Ok((s - eval_integral(params, z, cfg)?).norm() / (1.0 + s.norm()))
    })?;
    checks.push(measured("dual_evaluation", dual, 1e-9, "|series - integral| / (1 + |S|)"));

    if alpha == 0.5 {
        let cf = max_over(&points, |z| Ok((eval_series(params, z, cfg)? - closed_form_half_order(lambda, z)).norm()))?;
        checks.push(measured("closed_form", cf, 1e-11, "(e^{λz} - 1)/(λz) at α = 1/2"));
    } else {
        checks.push(skipped("closed_form", 1e-11, "only at alpha = 1/2".into()));
    }

    let ode = max_over(&points, |z| Ok(ode_residual(params, z, OdeVariant::Corrected, cfg)?.norm()))?;
    checks.push(measured("ode", ode, 1e-8, "z²S'' + (2α+1)zS' - λ²z²S - zM"));

    let unit_lambda = lambda == one;
    if alpha > 0.5 && unit_lambda {
        let r = max_over(&points, |z| Ok(recurrence_residual(alpha, z, cfg)?.norm()))?;
        checks.push(measured("order_recurrence", r, 1e-10, "zS'_α - 2αS_(α-1) + 2αS_α at λ = 1"));
    } else if !unit_lambda {
        checks.push(skipped("order_recurrence", 1e-10, "stated for lambda = 1 only".into()));
    } else {
        checks.push(skipped("order_recurrence", 1e-10, format!("needs alpha > 1/2, got {alpha}")));
    }

    if alpha > 0.5 {
        let r = max_over(&points, |z| Ok(g_recurrence_residual(alpha, z, cfg)?.norm()))?;
        checks.push(measured("g_recurrence", r, 1e-10, "zg'_α - 2αg_(α-1) - (1-2α)g_α, λ = 1"));
    } else {
        checks.push(skipped("g_recurrence", 1e-10, format!("needs alpha > 1/2, got {alpha}")));
    }

    for (name, id) in [
        ("chain_first", ChainIdentity::First),
        ("chain_second", ChainIdentity::Second),
        ("chain_third", ChainIdentity::Third),
    ] {
        if alpha > id.min_alpha() {
            let r = max_over(&points, |z| Ok(chain_residual(id, alpha, z, cfg, ChainForm::Derived)?.norm()))?;
            checks.push(measured(name, r, 1e-8, "g_(α+1-k) through p = g_(α+1), λ = 1"));
        } else {
            checks.push(skipped(name, 1e-8, format!("needs alpha > {}, got {alpha}", id.min_alpha())));
        }
    }

    Ok(VerifyReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> DiskGrid {
        DiskGrid::new(8, 16, 1e-3).unwrap()
    }

    fn status(r: &VerifyReport, name: &str) -> Status {
        r.checks.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn order_two_passes_everything() {
        let r = verify_all(&KernelParams::unit(2.0).unwrap(), &grid(), &EvalConfig::default()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(status(&r, "chain_third"), Status::Pass);
        assert_eq!(status(&r, "closed_form"), Status::Skipped);
    }

    #[test]
    fn half_order_checks_closed_form() {
        let r = verify_all(&KernelParams::unit(0.5).unwrap(), &grid(), &EvalConfig::default()).unwrap();
        assert!(r.pass());
        assert_eq!(status(&r, "closed_form"), Status::Pass);
        assert_eq!(status(&r, "order_recurrence"), Status::Skipped);
    }

    #[test]
    fn low_order_skips_third_identity() {
        let r = verify_all(&KernelParams::unit(0.4).unwrap(), &grid(), &EvalConfig::default()).unwrap();
        assert!(r.pass());
        assert_eq!(status(&r, "chain_third"), Status::Skipped);
        assert_eq!(status(&r, "chain_second"), Status::Skipped);
        assert_eq!(status(&r, "chain_first"), Status::Pass);
    }

    #[test]
    fn complex_lambda_skips_order_recurrence() {
        let p = KernelParams::new(1.5, ComplexValue::new(1.0, 1.0)).unwrap();
        let r = verify_all(&p, &grid(), &EvalConfig::default()).unwrap();
        assert!(r.pass());
        assert_eq!(status(&r, "order_recurrence"), Status::Skipped);
    }
}

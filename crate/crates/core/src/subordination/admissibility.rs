//! The three boundary conditions defining the admissible class.
//!
//! The class itself depends on a caller-chosen set `Ω`; here only the
//! conditions under which `φ(β₁, …, β₄; z) ∉ Ω` is demanded are evaluated.

use crate::error::{Error, Result};
use crate::kernel::ComplexValue;
use crate::subordination::beta::{inverse_beta, BetaQuadruple, InverseForm};
use crate::subordination::target::{richardson_jet, Target};

/// Points of `∂Δ` closer than this to an exceptional point are rejected.
pub const EXCEPTIONAL_EXCLUSION: f64 = 1e-6;
/// `|β₂ − β₁|` below this is treated as a zero denominator.
pub const DEGENERATE_DENOMINATOR: f64 = 1e-14;
const UNIT_CIRCLE_TOL: f64 = 1e-12;
const COND1_TOL: f64 = 1e-12;

/// `q` and its derivatives at a boundary point `ζ`, with the multiplier `m`
/// and the order `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibilityProbe {
    jet: [ComplexValue; 4],
    zeta: ComplexValue,
    m: f64,
    alpha: f64,
}

impl AdmissibilityProbe {
    /// `jet = (q(ζ), q′(ζ), q″(ζ), q‴(ζ))`.
    pub fn new(jet: [ComplexValue; 4], zeta: ComplexValue, m: f64, alpha: f64) -> Result<Self> {
        if !((zeta.norm() - 1.0).abs() <= UNIT_CIRCLE_TOL) {
            return Err(Error::InvalidParameter(format!("zeta must lie on |z| = 1, got |zeta| = {}", zeta.norm())));
        }
        if !(m >= 2.0) || !m.is_finite() {
            return Err(Error::InvalidParameter(format!("m must be >= 2, got {m}")));
        }
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha must be > 1, got {alpha}")));
        }
        if jet.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite("admissibility probe"));
        }
        if jet[1].norm() == 0.0 {
            return Err(Error::DegenerateDenominator("q'(zeta) = 0".into()));
        }
        Ok(Self { jet, zeta, m, alpha })
    }

    /// Probe a symbolic target, refusing `ζ` near one of its exceptional points.
    pub fn from_target(target: &Target, zeta: ComplexValue, m: f64, alpha: f64) -> Result<Self> {
        reject_exceptional(zeta, &target.exceptional_points())?;
        Self::new(target.jet(zeta), zeta, m, alpha)
    }

    /// Probe an arbitrary analytic `q`, derivatives by finite differences.
    pub fn from_fn<F: Fn(ComplexValue) -> ComplexValue>(
        q: F,
        exceptional: &[ComplexValue],
        zeta: ComplexValue,
        m: f64,
        alpha: f64,
    ) -> Result<Self> {
        reject_exceptional(zeta, exceptional)?;
        Self::new(richardson_jet(q, zeta), zeta, m, alpha)
    }

    pub fn q(&self) -> ComplexValue {
        self.jet[0]
    }

    /// `ζ q′(ζ)`.
    pub fn zeta_q1(&self) -> ComplexValue {
        self.zeta * self.jet[1]
    }

    pub fn zeta(&self) -> ComplexValue {
        self.zeta
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The `(β₁, β₂)` that the first condition asks for.
    pub fn required_beta12(&self) -> (ComplexValue, ComplexValue) {
        let a1 = self.alpha + 1.0;
        (self.jet[0], (self.m * self.zeta_q1() + a1 * self.jet[0]) / a1)
    }
}

fn reject_exceptional(zeta: ComplexValue, exceptional: &[ComplexValue]) -> Result<()> {
    match exceptional.iter().find(|p| (*p - zeta).norm() < EXCEPTIONAL_EXCLUSION) {
        Some(p) => Err(Error::Domain(format!("zeta = {zeta} is within {EXCEPTIONAL_EXCLUSION} of exceptional point {p}"))),
        None => Ok(()),
    }
}

/// Right-hand side of the third condition.
///
/// The class definition typesets `m² Re(ζ²q″/q′)`; the general third-order
/// theory it is built on uses `ζ²q‴/q′` there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cond3Reading {
    Printed,
    ThirdDerivative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityOptions {
    pub cond3: Cond3Reading,
    /// How `s, t, u` are recovered from the `β`s in the left-hand sides.
    pub inverse: InverseForm,
}

impl Default for AdmissibilityOptions {
    fn default() -> Self {
        Self { cond3: Cond3Reading::Printed, inverse: InverseForm::Printed }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissibilityOutcome {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    /// `Re(t/s + 1) − m Re(ζq″/q′ + 1)`.
    pub cond2_slack: f64,
    /// `Re(u/s) − m² Re(rhs)`.
    pub cond3_slack: f64,
}

impl AdmissibilityOutcome {
    pub fn all(&self) -> bool {
        self.cond1 && self.cond2 && self.cond3
    }
}

fn close(a: ComplexValue, b: ComplexValue) -> bool {
    (a - b).norm() <= COND1_TOL * (1.0 + a.norm().max(b.norm()))
}

/// Evaluate the three conditions for the quadruple `betas` at `probe`.
pub fn admissibility_check(
    probe: &AdmissibilityProbe,
    betas: &BetaQuadruple,
    opts: AdmissibilityOptions,
) -> Result<AdmissibilityOutcome> {
    if probe.alpha != betas.alpha() {
        return Err(Error::InvalidParameter(format!(
            "probe alpha {} differs from beta alpha {}",
            probe.alpha,
            betas.alpha()
        )));
    }
    let [b1, b2, _, _] = betas.values();
    if (b2 - b1).norm() < DEGENERATE_DENOMINATOR {
        return Err(Error::DegenerateDenominator(format!("|beta2 - beta1| = {} < {DEGENERATE_DENOMINATOR}", (b2 - b1).norm())));
    }
    let (want1, want2) = probe.required_beta12();
    let cond1 = close(b1, want1) && close(b2, want2);

    let [_, s, t, u] = inverse_beta(betas, opts.inverse);
    let [_, q1, q2, q3] = probe.jet;
    let z = probe.zeta;
    let m = probe.m;

    let cond2_slack = (t / s + 1.0).re - m * (z * q2 / q1 + 1.0).re;
    let rhs3 = match opts.cond3 {
        Cond3Reading::Printed => z * z * q2 / q1,
        Cond3Reading::ThirdDerivative => z * z * q3 / q1,
    };
    let cond3_slack = (u / s).re - m * m * rhs3.re;
    if !(cond2_slack.is_finite() && cond3_slack.is_finite()) {
        return Err(Error::NonFinite("admissibility_check"));
    }
    Ok(AdmissibilityOutcome {
        cond1,
        cond2: cond2_slack >= 0.0,
        cond3: cond3_slack >= 0.0,
        cond2_slack,
        cond3_slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subordination::beta::{beta_transforms, BetaForm};

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    const ONE: ComplexValue = ComplexValue::new(1.0, 0.0);

    // Solve for (r, s, t, u) so that the forward map lands on the probe's β₁, β₂.
    fn betas_for(probe: &AdmissibilityProbe, t: ComplexValue, u: ComplexValue) -> BetaQuadruple {
        let a1 = probe.alpha() + 1.0;
        let (b1, b2) = probe.required_beta12();
        beta_transforms([b1, a1 * (b2 - b1), t, u], probe.alpha(), BetaForm::Printed).unwrap()
    }

    #[test]
    fn identity_target_example() {
        let probe = AdmissibilityProbe::from_target(&Target::Identity, ONE, 2.0, 2.0).unwrap();
        let (b1, b2) = probe.required_beta12();
        assert_eq!(b1, ONE);
        assert!((b2 - 5.0 / 3.0).norm() < 1e-15);
        let betas = betas_for(&probe, c(0.0, 0.0), c(0.0, 0.0));
        assert!((betas.beta(2) - 5.0 / 3.0).norm() < 1e-15);
        let out = admissibility_check(&probe, &betas, AdmissibilityOptions::default()).unwrap();
        assert!(out.cond1);
    }

    // q″ = 0: the second right-hand side is exactly m, so the slack is Re(t/s + 1) - m.
    #[test]
    fn linear_target_cond2_rhs_is_m() {
        for k in 0..8 {
            let zeta = ComplexValue::from_polar(1.0, 0.7 * f64::from(k));
            for m in [2.0, 3.5] {
                let probe = AdmissibilityProbe::from_target(&Target::Scaled(1.5), zeta, m, 2.5).unwrap();
                let betas = betas_for(&probe, c(0.4, 0.1), c(0.0, 0.0));
                let [_, s, t, _] = inverse_beta(&betas, InverseForm::Printed);
                let out = admissibility_check(&probe, &betas, AdmissibilityOptions::default()).unwrap();
                assert!((out.cond2_slack - ((t / s + 1.0).re - m)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn equal_betas_are_degenerate() {
        let probe = AdmissibilityProbe::from_target(&Target::Identity, ONE, 2.0, 2.0).unwrap();
        let betas = beta_transforms([ONE, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 2.0, BetaForm::Printed).unwrap();
        assert_eq!(betas.beta(1), betas.beta(2));
        assert!(matches!(
            admissibility_check(&probe, &betas, AdmissibilityOptions::default()),
            Err(Error::DegenerateDenominator(_))
        ));
    }

    #[test]
    fn probe_validation() {
        let jet = [ONE, ONE, c(0.0, 0.0), c(0.0, 0.0)];
        assert!(AdmissibilityProbe::new(jet, c(0.5, 0.0), 2.0, 2.0).is_err());
        assert!(AdmissibilityProbe::new(jet, ONE, 1.5, 2.0).is_err());
        assert!(AdmissibilityProbe::new(jet, ONE, 2.0, 1.0).is_err());
        assert!(AdmissibilityProbe::new([ONE, c(0.0, 0.0), ONE, ONE], ONE, 2.0, 2.0).is_err());
        let half_plane: Target = "mobius:1,-1".parse().unwrap();
        assert!(AdmissibilityProbe::from_target(&half_plane, ONE, 2.0, 2.0).is_err());
        assert!(AdmissibilityProbe::from_target(&half_plane, c(-1.0, 0.0), 2.0, 2.0).is_ok());
        let near = ComplexValue::from_polar(1.0, 1e-7);
        assert!(AdmissibilityProbe::from_fn(|z| half_plane.eval(z), &[ONE], near, 2.0, 2.0).is_err());
    }

    #[test]
    fn cond3_readings_differ_only_on_curved_targets() {
        let zeta = ComplexValue::from_polar(1.0, 2.0);
        let t: Target = "mobius:0.9,0.5".parse().unwrap();
        let probe = AdmissibilityProbe::from_target(&t, zeta, 2.0, 3.0).unwrap();
        let betas = betas_for(&probe, c(1.0, 0.0), c(2.0, -1.0));
        let printed = admissibility_check(&probe, &betas, AdmissibilityOptions::default()).unwrap();
        let third = admissibility_check(
            &probe,
            &betas,
            AdmissibilityOptions { cond3: Cond3Reading::ThirdDerivative, ..Default::default() },
        )
        .unwrap();
        assert_eq!(printed.cond2_slack, third.cond2_slack);
        assert!((printed.cond3_slack - third.cond3_slack).abs() > 1e-3);

        let lin = AdmissibilityProbe::from_target(&Target::Identity, zeta, 2.0, 3.0).unwrap();
        let betas = betas_for(&lin, c(1.0, 0.0), c(2.0, -1.0));
        let a = admissibility_check(&lin, &betas, AdmissibilityOptions::default()).unwrap();
        let b = admissibility_check(&lin, &betas, AdmissibilityOptions { cond3: Cond3Reading::ThirdDerivative, ..Default::default() }).unwrap();
        assert_eq!(a.cond3_slack, b.cond3_slack);
    }

    // With the consistent inverse the recovered s is m ζ q′(ζ), as in the general theory.
    #[test]
    fn consistent_inverse_recovers_s() {
        let zeta = ComplexValue::from_polar(1.0, 0.4);
        let probe = AdmissibilityProbe::from_target(&Target::Scaled(2.0), zeta, 3.0, 2.0).unwrap();
        let betas = betas_for(&probe, c(0.0, 0.0), c(0.0, 0.0));
        let [_, s, _, _] = inverse_beta(&betas, InverseForm::Consistent);
        assert!((s - 3.0 * probe.zeta_q1()).norm() < 1e-13);
        let [_, s2, _, _] = inverse_beta(&betas, InverseForm::Printed);
        assert!((s2 - 2.0 * s).norm() < 1e-13);
    }
}

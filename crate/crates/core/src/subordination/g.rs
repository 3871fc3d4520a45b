//! `g_α(z) = z S_α(z)` at `λ = 1`, its order recurrence, and the derivative
//! identities expressing `g_α, g_{α−1}, g_{α−2}` through `p = g_{α+1}`.

use crate::error::{Error, Result};
use crate::kernel::{ensure_finite, eval_derivative, ComplexValue, EvalConfig, KernelParams};

/// `g_α = z S_{α,1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFunction {
    params: KernelParams,
}

impl GFunction {
    pub fn new(alpha: f64) -> Result<Self> {
        Ok(Self { params: KernelParams::unit(alpha)? })
    }

    pub fn alpha(&self) -> f64 {
        self.params.alpha()
    }

    pub fn eval(&self, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
        self.derivative(z, 0, cfg)
    }

    /// `g^{(k)} = k S^{(k−1)} + z S^{(k)}`, for `k <= 3`.
    pub fn derivative(&self, z: ComplexValue, order: u32, cfg: &EvalConfig) -> Result<ComplexValue> {
        if !(z.norm() < 1.0) {
            return Err(Error::Domain(format!("g needs |z| < 1, got |z| = {}", z.norm())));
        }
        if order > 3 {
            return Err(Error::InvalidParameter(format!("derivative order {order} > 3")));
        }
        let top = eval_derivative(&self.params, z, order, cfg)?;
        let v = if order == 0 {
            z * top
        } else {
            f64::from(order) * eval_derivative(&self.params, z, order - 1, cfg)? + z * top
        };
        ensure_finite(v, "g derivative")
    }
}

pub fn eval_g(alpha: f64, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    GFunction::new(alpha)?.eval(z, cfg)
}

/// `z g′_α − 2α g_{α−1} − (1−2α) g_α`; needs `α > 1/2`.
pub fn g_recurrence_residual(alpha: f64, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    if !(alpha > 0.5) {
        return Err(Error::Domain(format!("g recurrence needs alpha > 1/2, got {alpha}")));
    }
    let g = GFunction::new(alpha)?;
    let lower = GFunction::new(alpha - 1.0)?;
    let r = z * g.derivative(z, 1, cfg)? - 2.0 * alpha * lower.eval(z, cfg)? - (1.0 - 2.0 * alpha) * g.eval(z, cfg)?;
    ensure_finite(r, "g_recurrence_residual")
}

/// Coefficient set used for the second and third identities.
///
/// `Printed` carries the `4α` and `(6α−1), (12α²−8α−1)` coefficients as
/// typeset; they drop the `z p′` contribution of differentiating
/// `(2α+1)p` and do not hold. `Derived` is what repeated application of
/// the recurrence actually gives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainForm {
    Printed,
    Derived,
}

/// Which of the three identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainIdentity {
    /// `g_α` from `p, zp′`.
    First,
    /// `g_{α−1}` from `p, zp′, z²p″`.
    Second,
    /// `g_{α−2}` from `p, …, z³p‴`.
    Third,
}

impl ChainIdentity {
    /// Orders strictly above this keep every `g` involved defined.
    pub fn min_alpha(self) -> f64 {
        match self {
            ChainIdentity::First => -0.5,
            ChainIdentity::Second => 0.5,
            ChainIdentity::Third => 1.5,
        }
    }

    fn depth(self) -> u32 {
        match self {
            ChainIdentity::First => 1,
            ChainIdentity::Second => 2,
            ChainIdentity::Third => 3,
        }
    }
}

/// Weights `w` with `g_{α+1−k} = Σ w_j z^j p^{(j)}` for the `k`-th identity.
pub fn chain_weights(identity: ChainIdentity, alpha: f64, form: ChainForm) -> [f64; 4] {
    let a = alpha;
    let q = 4.0 * a * a - 1.0;
    match (identity, form) {
        (ChainIdentity::First, _) => {
            let d = 2.0 * (a + 1.0);
            [(2.0 * a + 1.0) / d, 1.0 / d, 0.0, 0.0]
        }
        (ChainIdentity::Second, f) => {
            let d = 4.0 * a * (a + 1.0);
            let lin = if f == ChainForm::Printed { 4.0 * a } else { 4.0 * a + 1.0 };
            [q / d, lin / d, 1.0 / d, 0.0]
        }
        (ChainIdentity::Third, f) => {
            let d = 8.0 * a * (a * a - 1.0);
            let (quad, lin) = match f {
                ChainForm::Printed => (6.0 * a - 1.0, 12.0 * a * a - 8.0 * a - 1.0),
                ChainForm::Derived => (6.0 * a, 12.0 * a * a - 6.0 * a - 3.0),
            };
            [(2.0 * a - 3.0) * q / d, lin / d, quad / d, 1.0 / d]
        }
    }
}

/// `(p, zp′, z²p″, z³p‴)` for `p = g_{α+1}`.
pub fn p_jet(alpha: f64, z: ComplexValue, cfg: &EvalConfig) -> Result<[ComplexValue; 4]> {
    let p = GFunction::new(alpha + 1.0)?;
    let mut out = [ComplexValue::new(0.0, 0.0); 4];
    let mut zk = ComplexValue::new(1.0, 0.0);
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = zk * p.derivative(z, k as u32, cfg)?;
        zk *= z;
    }
    Ok(out)
}

/// `g_{α+1−k} − Σ w_j z^j p^{(j)}` for one identity.
pub fn chain_residual(
    identity: ChainIdentity,
    alpha: f64,
    z: ComplexValue,
    cfg: &EvalConfig,
    form: ChainForm,
) -> Result<ComplexValue> {
    if !(alpha > identity.min_alpha()) {
        return Err(Error::Domain(format!(
            "{identity:?} identity needs alpha > {}, got {alpha}",
            identity.min_alpha()
        )));
    }
    let jet = p_jet(alpha, z, cfg)?;
    let w = chain_weights(identity, alpha, form);
    let rhs: ComplexValue = jet.iter().zip(w).map(|(v, c)| v * c).sum();
    let lhs = eval_g(alpha + 1.0 - f64::from(identity.depth()), z, cfg)?;
    ensure_finite(lhs - rhs, "chain_residual")
}

/// All three identity residuals; needs `α > 3/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainResiduals {
    pub r1: ComplexValue,
    pub r2: ComplexValue,
    pub r3: ComplexValue,
}

impl ChainResiduals {
    pub fn max_norm(&self) -> f64 {
        self.r1.norm().max(self.r2.norm()).max(self.r3.norm())
    }
}

pub fn chain_identities_residuals(alpha: f64, z: ComplexValue, cfg: &EvalConfig, form: ChainForm) -> Result<ChainResiduals> {
    if !(alpha > ChainIdentity::Third.min_alpha()) {
        return Err(Error::Domain(format!("chain identities need alpha > 3/2, got {alpha}")));
    }
    Ok(ChainResiduals {
        r1: chain_residual(ChainIdentity::First, alpha, z, cfg, form)?,
        r2: chain_residual(ChainIdentity::Second, alpha, z, cfg, form)?,
        r3: chain_residual(ChainIdentity::Third, alpha, z, cfg, form)?,
    })
}

//! The Bessel-Struve kernel `S_{α,λ}(z) = j_α(iλz) - i h_α(iλz)` on the unit disk.
//!
//! Two independent evaluation routes are provided: the power series
//! `Σ c_n zⁿ` and the integral representation over `[0, 1]`. The residual
//! functions check the kernel's differential equation and its order
//! recurrence.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{half_order_ratio, log_gamma};
use crate::quadrature::tanh_sinh;

/// The scalar type used throughout the crate.
pub type ComplexValue = Complex64;

const LN_SQRT_PI: f64 = 0.572_364_942_924_700_1;

pub(crate) fn ensure_finite(v: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

fn ensure_in_disk(z: ComplexValue) -> Result<()> {
    if !(z.norm() < 1.0) {
        return Err(Error::Domain(format!("|z| must be < 1, got |z| = {}", z.norm())));
    }
    Ok(())
}

/// Order `α` and spectral parameter `λ` of the kernel, with the derived
/// constant `M = 2λΓ(α+1)/(√π Γ(α+1/2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    alpha: f64,
    lambda: ComplexValue,
    m_const: ComplexValue,
}

impl KernelParams {
    pub fn new(alpha: f64, lambda: ComplexValue) -> Result<Self> {
        if !(alpha > -0.5) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!("alpha must be > -1/2, got {alpha}")));
        }
        if !(lambda.re.is_finite() && lambda.im.is_finite()) {
            return Err(Error::InvalidParameter("lambda must be finite".into()));
        }
        let m_const = lambda * half_order_ratio(alpha)?;
        Ok(Self { alpha, lambda, m_const })
    }

    /// `S_α = S_{α,1}`.
    pub fn unit(alpha: f64) -> Result<Self> {
        Self::new(alpha, ComplexValue::new(1.0, 0.0))
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> ComplexValue {
        self.lambda
    }

    pub fn m_const(&self) -> ComplexValue {
        self.m_const
    }

    /// `S′(0) = λΓ(α+1)/(√π Γ(α+3/2))`.
    pub fn initial_slope(&self) -> ComplexValue {
        self.m_const / (2.0 * self.alpha + 1.0)
    }

    fn is_trivial(&self) -> bool {
        self.lambda == ComplexValue::new(0.0, 0.0)
    }
}

/// Tolerances and iteration caps for the series and the quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    rel_tol: f64,
    max_terms: usize,
    quad_levels: usize,
}

impl EvalConfig {
    pub fn new(rel_tol: f64, max_terms: usize, quad_levels: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidParameter(format!("rel_tol must lie in (0, 1), got {rel_tol}")));
        }
        if max_terms < 16 {
            return Err(Error::InvalidParameter(format!("max_terms must be >= 16, got {max_terms}")));
        }
        if quad_levels == 0 {
            return Err(Error::InvalidParameter("quad_levels must be positive".into()));
        }
        Ok(Self { rel_tol, max_terms, quad_levels })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn quad_levels(&self) -> usize {
        self.quad_levels
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self { rel_tol: 1e-15, max_terms: 500, quad_levels: 10 }
    }
}

/// `c_n = Γ(α+1)Γ((n+1)/2) λⁿ / (√π n! Γ(n/2+α+1))`, evaluated in log space.
pub fn series_coefficient(params: &KernelParams, n: u32) -> ComplexValue {
    if n == 0 {
        return ComplexValue::new(1.0, 0.0);
    }
    if params.is_trivial() {
        return ComplexValue::new(0.0, 0.0);
    }
    let a = params.alpha;
    let nf = f64::from(n);
    // Arguments are all positive for alpha > -1/2, n >= 1.
    let lg = |x: f64| log_gamma(x).expect("positive gamma argument");
    let log_mag = lg(a + 1.0) + lg(0.5 * (nf + 1.0)) - LN_SQRT_PI - lg(nf + 1.0) - lg(0.5 * nf + a + 1.0)
        + nf * params.lambda.norm().ln();
    ComplexValue::from_polar(log_mag.exp(), nf * params.lambda.arg())
}

/// Sum `S^{(k)}(z)` by term-wise differentiation of the power series.
///
/// The terms `d_n = n!/(n-k)! a_n w^{n-k}` with `w = λz` follow the two-step
/// recurrence `a_{n+2} = a_n / ((n+2)(n+2α+2))`. Summation stops at the
/// first `n` with `|d_n| <= rel_tol |Σ|` and `|d_{n+1}| < |d_n| / 2`, which
/// bounds the remaining tail by `2|d_{n+1}|`.
fn series_derivative(params: &KernelParams, z: ComplexValue, order: u32, cfg: &EvalConfig) -> Result<ComplexValue> {
    ensure_in_disk(z)?;
    let zero = ComplexValue::new(0.0, 0.0);
    if params.is_trivial() {
        return Ok(if order == 0 { ComplexValue::new(1.0, 0.0) } else { zero });
    }
    let alpha = params.alpha;
    let w = params.lambda * z;
    let k = order as usize;

    // Real coefficients a_k, a_{k+1}.
    let mut a_pair = (1.0, half_order_ratio(alpha)? / (2.0 * alpha + 1.0));
    for n in 0..k {
        let next = a_pair.0 / ((n as f64 + 2.0) * (n as f64 + 2.0 * alpha + 2.0));
        a_pair = (a_pair.1, next);
    }
    let falling = |n: usize| -> f64 { ((n - k + 1)..=n).map(|j| j as f64).product() };
    let lambda_k = params.lambda.powu(order);

    if w == zero {
        return Ok(lambda_k * (falling(k) * a_pair.0));
    }

    let w2 = w * w;
    let mut cur = ComplexValue::new(falling(k) * a_pair.0, 0.0);
    let mut next = w * (falling(k + 1) * a_pair.1);
    let mut sum = zero;
    for n in k..k + cfg.max_terms {
        sum += cur;
        let size = cur.norm();
        if size <= cfg.rel_tol * sum.norm().max(f64::MIN_POSITIVE) && next.norm() < 0.5 * size
            || size == 0.0 && next.norm() == 0.0
        {
            return ensure_finite(lambda_k * sum, "eval_series");
        }
        let nf = n as f64;
        let shift = (nf + 2.0) * (nf + 1.0) / ((nf + 2.0 - k as f64) * (nf + 1.0 - k as f64));
        let after = cur * w2 * (shift / ((nf + 2.0) * (nf + 2.0 * alpha + 2.0)));
        cur = next;
        next = after;
    }
    Err(Error::SeriesNonConvergence { max_terms: cfg.max_terms })
}

/// `S_{α,λ}(z)` from the power series.
pub fn eval_series(params: &KernelParams, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    series_derivative(params, z, 0, cfg)
}

/// `S^{(order)}_{α,λ}(z)` by term-wise differentiation of the series.
pub fn eval_derivative(params: &KernelParams, z: ComplexValue, order: u32, cfg: &EvalConfig) -> Result<ComplexValue> {
    series_derivative(params, z, order, cfg)
}

/// `e^w - 1` without cancellation for small `|w|`.
pub fn expm1(w: ComplexValue) -> ComplexValue {
    let half_sin = (0.5 * w.im).sin();
    let re = w.re.exp_m1() * w.im.cos() - 2.0 * half_sin * half_sin;
    let im = w.re.exp() * w.im.sin();
    ComplexValue::new(re, im)
}

/// `(e^{λz} - 1)/(λz)`, the kernel at `α = 1/2`.
pub fn closed_form_half_order(lambda: ComplexValue, z: ComplexValue) -> ComplexValue {
    let w = lambda * z;
    if w.norm() < 1e-8 {
        return ComplexValue::new(1.0, 0.0) + w / 2.0 + w * w / 6.0;
    }
    expm1(w) / w
}

/// `S_{α,λ}(z)` from the integral representation.
///
/// With `t = sin θ` the weight `(1-t²)^{α-1/2} dt` becomes `cos^{2α}θ dθ` on
/// `[0, π/2]`. For `α < 0` that is still singular at `π/2`, so the constant
/// `e^{λz}` is subtracted from the exponential and added back exactly using
/// `∫ cos^{2α}θ dθ = 1/P`, `P` the prefactor.
pub fn eval_integral(params: &KernelParams, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    ensure_in_disk(z)?;
    let one = ComplexValue::new(1.0, 0.0);
    let w = params.lambda * z;
    if w == ComplexValue::new(0.0, 0.0) {
        return Ok(one);
    }
    let alpha = params.alpha;
    let prefactor = half_order_ratio(alpha)?;
    let tol = cfg.rel_tol.max(64.0 * f64::EPSILON);

    let value = if alpha >= 0.0 {
        let integrand = |theta: f64, gap: f64| -> ComplexValue {
            // cos θ = sin(π/2 - θ)
            let c = gap.sin();
            (w * theta.sin()).exp() * c.powf(2.0 * alpha)
        };
        prefactor * tanh_sinh(integrand, 0.0, FRAC_PI_2, tol, cfg.quad_levels)?
    } else {
        let ew = w.exp();
        let integrand = |_theta: f64, gap: f64| -> ComplexValue {
            let c = gap.sin();
            let half = (0.5 * gap).sin();
            let one_minus_sin = 2.0 * half * half;
            ew * expm1(-w * one_minus_sin) * c.powf(2.0 * alpha)
        };
        prefactor * tanh_sinh(integrand, 0.0, FRAC_PI_2, tol, cfg.quad_levels)? + ew
    };
    ensure_finite(value, "eval_integral")
}

/// Which form of the kernel's differential equation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeVariant {
    /// `z²S″ + (2α+1)zS′ − zλ²S − zM`, as typeset in the source.
    Printed,
    /// `z²S″ + (2α+1)zS′ − λ²z²S − zM`, which the series actually satisfies.
    Corrected,
}

/// Residual of the kernel ODE at `z`; the corrected variant vanishes.
pub fn ode_residual(params: &KernelParams, z: ComplexValue, variant: OdeVariant, cfg: &EvalConfig) -> Result<ComplexValue> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("ode_residual requires z != 0".into()));
    }
    let s0 = eval_series(params, z, cfg)?;
    let s1 = eval_derivative(params, z, 1, cfg)?;
    let s2 = eval_derivative(params, z, 2, cfg)?;
    let l2 = params.lambda * params.lambda;
    let head = z * z * s2 + (2.0 * params.alpha + 1.0) * z * s1 - z * params.m_const;
    let tail = match variant {
        OdeVariant::Printed => z * l2 * s0,
        OdeVariant::Corrected => l2 * z * z * s0,
    };
    ensure_finite(head - tail, "ode_residual")
}

/// `zS′_α(z) − 2αS_{α−1}(z) + 2αS_α(z)` at `λ = 1`; vanishes for `α > 1/2`.
pub fn recurrence_residual(alpha: f64, z: ComplexValue, cfg: &EvalConfig) -> Result<ComplexValue> {
    if !(alpha > 0.5) {
        return Err(Error::Domain(format!("recurrence needs alpha - 1 > -1/2, got alpha = {alpha}")));
    }
    let upper = KernelParams::unit(alpha)?;
    let lower = KernelParams::unit(alpha - 1.0)?;
    let s = eval_series(&upper, z, cfg)?;
    let ds = eval_derivative(&upper, z, 1, cfg)?;
    let s_lower = eval_series(&lower, z, cfg)?;
    ensure_finite(z * ds - 2.0 * alpha * s_lower + 2.0 * alpha * s, "recurrence_residual")
}

//! Sufficient conditions for `S_{α,λ} ∈ P[A,B]`, evaluated exactly as stated.
//!
//! Both predicates are a hypothesis bound on `α` followed by two branches,
//! each an inequality that applies under its own selector condition. No
//! tolerance is added anywhere: `>=` stays `>=` and `<` stays `<`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::{half_order_ratio, log_gamma};
use crate::janowski::region::JanowskiPair;
use crate::kernel::ComplexValue;

/// `3 - 2√2`, where the first predicate hands over to the second.
pub const CRITICAL_B: f64 = 0.171_572_875_253_809_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    NotCertified,
    /// `B` outside the predicate's range, complex `λ`, or the `α` bound fails.
    OutOfScope,
}

impl Verdict {
    pub fn is_certified(self) -> bool {
        self == Verdict::Certified
    }
}

/// Shared inputs of both predicates.
struct Inputs {
    a: f64,
    b: f64,
    alpha: f64,
    lambda: f64,
    m: f64,
}

fn prepare(pair: &JanowskiPair, alpha: f64, lambda: ComplexValue) -> Result<Option<Inputs>> {
    if !(alpha > -0.5) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("alpha must be > -1/2, got {alpha}")));
    }
    if !(lambda.re.is_finite() && lambda.im.is_finite()) {
        return Err(Error::InvalidParameter("lambda must be finite".into()));
    }
    if lambda.im != 0.0 {
        return Ok(None);
    }
    let lam = lambda.re;
    let m = lam * half_order_ratio(alpha)?;
    let inputs = Inputs { a: pair.a(), b: pair.b(), alpha, lambda: lam, m };
    // Shared hypothesis: α >= max{0, |λ|/2 |(λ(1+A)(1+B) + M(1+B)²)/(A-B)|}
    let (a, b) = (inputs.a, inputs.b);
    let bound = lam.abs() / 2.0 * ((lam * (1.0 + a) * (1.0 + b) + m * (1.0 + b).powi(2)) / (a - b)).abs();
    if alpha >= bound.max(0.0) {
        Ok(Some(inputs))
    } else {
        Ok(None)
    }
}

/// Predicate for `-1 <= B <= 3 - 2√2`.
pub fn check_theorem1(pair: &JanowskiPair, alpha: f64, lambda: ComplexValue) -> Result<Verdict> {
    if pair.b() > CRITICAL_B {
        return Ok(Verdict::OutOfScope);
    }
    let Some(Inputs { a, b, alpha, lambda: l, m }) = prepare(pair, alpha, lambda)? else {
        return Ok(Verdict::OutOfScope);
    };

    let p = l * (a + b) + 2.0 * m * b;
    let q = l * (1.0 + a) + m * (1.0 + b);
    let selector = (4.0 * alpha * p * (1.0 - b) + (1.0 + b).powi(2) * q).abs();
    let threshold = 2.0 * l.powi(3) * (1.0 - b) * (a - b);

    let mut certified = false;
    if selector >= threshold {
        let lhs = 4.0 * alpha * alpha - l / (a - b) * (4.0 * alpha * p + (1.0 + b).powi(2) / (1.0 - b) * q).abs()
            + 2.0 * alpha * (1.0 + b) / (1.0 - b);
        let rhs = l * l * (1.0 - b * b) * (l * (1.0 - a) + m * (1.0 - b)) * q / (a - b).powi(2);
        certified |= lhs >= rhs;
    }
    if selector < threshold {
        let lhs = (4.0 * alpha * l * p + (1.0 + b) / (1.0 - b) * (l * l * (1.0 + a) * (1.0 + b) + l * m * (1.0 + b).powi(2)))
            .powi(2);
        let u = l * l * (1.0 - a * b) + l * m * (1.0 - b * b);
        let v = l * l * (1.0 - a) * (1.0 - b) + l * m * (1.0 - b).powi(2);
        let w = l * l * (1.0 + a) * (1.0 + b) + l * m * (1.0 + b).powi(2);
        let rhs = 4.0 * (u * u - v * w) * (4.0 * alpha * alpha + 2.0 * alpha * (1.0 + b) / (1.0 - b) - (u / (a - b)).powi(2));
        certified |= lhs <= rhs;
    }
    Ok(if certified { Verdict::Certified } else { Verdict::NotCertified })
}

/// Predicate for `3 - 2√2 <= B < A`.
///
/// The second branch inequality is read with the whole bracket
/// `(λ(1-AB)+M(1-B²))² - (1-B²)(λ(1-A)+M(1-B))(λ(1+A)+M(1+B))` multiplying
/// the `α` factor; the alternative grouping (only the subtracted product
/// multiplying it) is [`theorem2_branch2_alt_rhs`].
pub fn check_theorem2(pair: &JanowskiPair, alpha: f64, lambda: ComplexValue) -> Result<Verdict> {
    check_theorem2_with(pair, alpha, lambda, Grouping::FullBracket)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    FullBracket,
    ProductOnly,
}

pub fn check_theorem2_with(pair: &JanowskiPair, alpha: f64, lambda: ComplexValue, grouping: Grouping) -> Result<Verdict> {
    if pair.b() < CRITICAL_B {
        return Ok(Verdict::OutOfScope);
    }
    let Some(inputs) = prepare(pair, alpha, lambda)? else {
        return Ok(Verdict::OutOfScope);
    };
    let Inputs { a, b, alpha, lambda: l, m } = inputs;

    let k = 4.0 * b * (1.0 - b) / (1.0 + b).powi(2);
    let p = l * (a + b) + 2.0 * m * b;
    let q = l * (1.0 + a) + m * (1.0 + b);
    let x = (l * (1.0 - a * b) + m * (1.0 - b * b)).powi(2) - (1.0 - b * b) * (l * (1.0 - a) + m * (1.0 - b)) * q;

    let selector = (a - b) * (alpha * l * p + k * l * q).abs();
    let threshold = l * l / 2.0 * x.abs();

    let mut certified = false;
    if selector >= threshold {
        let lhs = alpha * alpha * (a - b).powi(2) - l * (a - b) * (alpha * p + k * q).abs()
            + 8.0 * alpha * b * (1.0 - b) * (a - b).powi(2) / (1.0 + b).powi(3);
        let rhs = 0.25
            * (l * l * (1.0 - a) * (1.0 - b) + l * m * (1.0 - b).powi(2))
            * (l * l * (1.0 + a) * (1.0 + b) + l * m * (1.0 + b).powi(2));
        certified |= lhs >= rhs;
    }
    if selector <= threshold {
        let lhs = (alpha * p + k * q).powi(2);
        let rhs = match grouping {
            Grouping::FullBracket => x * theorem2_alpha_factor(&inputs),
            Grouping::ProductOnly => theorem2_branch2_alt_rhs(&inputs),
        };
        certified |= lhs <= rhs;
    }
    Ok(if certified { Verdict::Certified } else { Verdict::NotCertified })
}

fn theorem2_alpha_factor(i: &Inputs) -> f64 {
    let (a, b, alpha, l, m) = (i.a, i.b, i.alpha, i.lambda, i.m);
    alpha * alpha + 8.0 * alpha * b * (1.0 - b) / (1.0 + b).powi(3)
        - ((l * l * (1.0 - a * b) + l * m * (1.0 - b * b)) / (2.0 * (a - b))).powi(2)
}

fn theorem2_branch2_alt_rhs(i: &Inputs) -> f64 {
    let (a, b, l, m) = (i.a, i.b, i.lambda, i.m);
    (l * (1.0 - a * b) + m * (1.0 - b * b)).powi(2)
        - (1.0 - b * b) * (l * (1.0 - a) + m * (1.0 - b)) * (l * (1.0 + a) + m * (1.0 + b)) * theorem2_alpha_factor(i)
}

/// Dispatch on `B`: the first predicate below `3 - 2√2`, the second above,
/// and either one at the crossover.
pub fn check_theorems(pair: &JanowskiPair, alpha: f64, lambda: ComplexValue) -> Result<Verdict> {
    if pair.b() < CRITICAL_B {
        check_theorem1(pair, alpha, lambda)
    } else if pair.b() > CRITICAL_B {
        check_theorem2(pair, alpha, lambda)
    } else {
        let first = check_theorem1(pair, alpha, lambda)?;
        let second = check_theorem2(pair, alpha, lambda)?;
        Ok(if first.is_certified() || second.is_certified() {
            Verdict::Certified
        } else if first == Verdict::NotCertified || second == Verdict::NotCertified {
            Verdict::NotCertified
        } else {
            Verdict::OutOfScope
        })
    }
}

/// `f(α) = 4αΓ(α+1) - √π Γ(α+1/2)`.
pub fn alpha0_residual(alpha: f64) -> Result<f64> {
    Ok(4.0 * alpha * log_gamma(alpha + 1.0)?.exp() - PI.sqrt() * log_gamma(alpha + 0.5)?.exp())
}

/// Positive root of `4αΓ(α+1) = √π Γ(α+1/2)` by bisection on `[0.01, 2]`.
pub fn solve_alpha0() -> Result<f64> {
    let (mut lo, mut hi) = (0.01, 2.0);
    let (f_lo, f_hi) = (alpha0_residual(lo)?, alpha0_residual(hi)?);
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(Error::IdentityViolation(format!(
            "alpha0 bracket lost its sign change: f(0.01) = {f_lo}, f(2) = {f_hi}"
        )));
    }
    while hi - lo > 4.0 * f64::EPSILON * hi {
        let mid = 0.5 * (lo + hi);
        let f_mid = alpha0_residual(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (f_lo, f_hi) = (alpha0_residual(lo)?.abs(), alpha0_residual(hi)?.abs());
    Ok(if f_lo <= f_hi { lo } else { hi })
}

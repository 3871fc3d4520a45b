//! Tanh-sinh (double-exponential) quadrature for complex-valued integrands.
//!
//! The integrand receives both the abscissa `x` and the distance `b - x` to
//! the right endpoint, computed without cancellation, so integrands with an
//! algebraic singularity at `b` can be evaluated accurately near it.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest `|t|` visited; beyond this the weights underflow.
const T_MAX: f64 = 6.5;
const MIN_LEVELS: usize = 3;

/// Integrate `f` over `[a, b]`, halving the step until two successive
/// estimates agree to `rel_tol`. `max_levels` bounds the number of halvings.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, rel_tol: f64, max_levels: usize) -> Result<Complex64>
where
    F: Fn(f64, f64) -> Complex64,
{
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);

    // Sum over nodes t = k h for the given step and parity filter.
    let level_sum = |h: f64, odd_only: bool| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        if !odd_only {
            acc += f(mid, b - mid) * (half * FRAC_PI_2);
        }
        let stride = if odd_only { 2 } else { 1 };
        let mut k: u64 = 1;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let s = FRAC_PI_2 * t.sinh();
            let cosh_s = s.cosh();
            let weight = half * FRAC_PI_2 * t.cosh() / (cosh_s * cosh_s);
            // 1 - tanh(s), free of cancellation
            let gap = half * (-s).exp() / cosh_s;
            if weight == 0.0 || gap == 0.0 {
                break;
            }
            let u = s.tanh();
            let right = f(mid + half * u, gap);
            let left = f(a + gap, b - a - gap);
            acc += (right + left) * weight;
            k += stride;
        }
        acc
    };

    let mut h = 1.0;
    let mut sum = level_sum(h, false);
    let mut estimate = sum * h;
    for level in 1..=max_levels {
        h *= 0.5;
        sum += level_sum(h, true);
        let next = sum * h;
        let diff = (next - estimate).norm();
        estimate = next;
        if level >= MIN_LEVELS && diff <= rel_tol * estimate.norm() {
            return if estimate.re.is_finite() && estimate.im.is_finite() {
                Ok(estimate)
            } else {
                Err(Error::NonFinite("tanh_sinh"))
            };
        }
    }
    Err(Error::QuadratureNonConvergence { levels: max_levels })
}

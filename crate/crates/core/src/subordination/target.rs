//! Dominant candidates `q` with `q(0) = 0` and their derivatives.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::janowski::region::JanowskiPair;
use crate::kernel::ComplexValue;

/// A univalent target, described symbolically so that derivatives are exact.
///
/// Text form: `identity`, `scaled:c`, `mobius:A,B`, `poly:c0,c1,...`, each
/// optionally followed by `@r` for the dilation `q(rz)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Identity,
    Scaled(f64),
    /// `(1+Az)/(1+Bz) − 1 = (A−B)z/(1+Bz)`.
    Mobius(JanowskiPair),
    /// `Σ c_k z^k`.
    Polynomial(Vec<f64>),
    /// `q(rz)` for `0 < r <= 1`.
    Dilated(Box<Target>, f64),
}

impl Target {
    pub fn eval(&self, z: ComplexValue) -> ComplexValue {
        self.jet(z)[0]
    }

    /// `(q, q′, q″, q‴)` at `z`.
    pub fn jet(&self, z: ComplexValue) -> [ComplexValue; 4] {
        let zero = ComplexValue::new(0.0, 0.0);
        let one = ComplexValue::new(1.0, 0.0);
        match self {
            Target::Identity => [z, one, zero, zero],
            Target::Scaled(c) => [*c * z, ComplexValue::new(*c, 0.0), zero, zero],
            Target::Mobius(pair) => {
                let (a, b) = (pair.a(), pair.b());
                let k = a - b;
                let inv = 1.0 / (1.0 + b * z);
                [k * z * inv, k * inv * inv, -2.0 * b * k * inv.powi(3), 6.0 * b * b * k * inv.powi(4)]
            }
            Target::Polynomial(coeffs) => {
                // Horner on the polynomial and its first three derivatives
                let mut out = [zero; 4];
                for &c in coeffs.iter().rev() {
                    out[3] = out[3] * z + 3.0 * out[2];
                    out[2] = out[2] * z + 2.0 * out[1];
                    out[1] = out[1] * z + out[0];
                    out[0] = out[0] * z + c;
                }
                out
            }
            Target::Dilated(inner, r) => {
                let j = inner.jet(*r * z);
                [j[0], *r * j[1], r * r * j[2], r * r * r * j[3]]
            }
        }
    }

    /// Boundary points where `q` is not analytic.
    pub fn exceptional_points(&self) -> Vec<ComplexValue> {
        match self {
            Target::Mobius(pair) if pair.b().abs() == 1.0 => vec![ComplexValue::new(-1.0 / pair.b(), 0.0)],
            Target::Dilated(inner, r) => inner
                .exceptional_points()
                .into_iter()
                .map(|p| p / *r)
                .filter(|p| p.norm() <= 1.0 + 1e-12)
                .collect(),
            _ => Vec::new(),
        }
    }
}

fn parse_f64(s: &str) -> Result<f64> {
    let v: f64 = s.trim().parse().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))?;
    if !v.is_finite() {
        return Err(Error::Parse(format!("expected a finite number, got {s:?}")));
    }
    Ok(v)
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((base, r)) = s.rsplit_once('@') {
            let r = parse_f64(r)?;
            if !(r > 0.0 && r <= 1.0) {
                return Err(Error::Parse(format!("dilation must lie in (0, 1], got {r}")));
            }
            return Ok(Target::Dilated(Box::new(base.parse()?), r));
        }
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = || -> Result<Vec<f64>> { args.split(',').map(parse_f64).collect() };
        match name.trim() {
            "identity" if args.is_empty() => Ok(Target::Identity),
            "scaled" => match nums()?.as_slice() {
                [c] if *c != 0.0 => Ok(Target::Scaled(*c)),
                _ => Err(Error::Parse(format!("scaled needs one nonzero factor, got {args:?}"))),
            },
            "mobius" => match nums()?.as_slice() {
                [a, b] => JanowskiPair::new(*a, *b).map(Target::Mobius).map_err(|e| Error::Parse(e.to_string())),
                _ => Err(Error::Parse(format!("mobius needs A,B, got {args:?}"))),
            },
            "poly" => {
                let c = nums()?;
                if c.len() > 64 {
                    return Err(Error::Parse(format!("poly allows at most 64 coefficients, got {}", c.len())));
                }
                if c.iter().all(|&v| v == 0.0) {
                    return Err(Error::Parse("poly needs a nonzero coefficient".into()));
                }
                Ok(Target::Polynomial(c))
            }
            _ => Err(Error::Parse(format!("unknown target {s:?}"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Identity => write!(f, "identity"),
            Target::Scaled(c) => write!(f, "scaled:{c}"),
            Target::Mobius(p) => write!(f, "mobius:{},{}", p.a(), p.b()),
            Target::Polynomial(c) => {
                write!(f, "poly:")?;
                for (i, v) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            Target::Dilated(inner, r) => write!(f, "{inner}@{r}"),
        }
    }
}

/// `(q, q′, q″, q‴)` at `z` by central differences, one Richardson step.
///
/// Base step `1e-3`, refined to `5e-4`. Rounding dominates: expect errors
/// near `1e-10`, `1e-8` and `1e-6` (relative to `|q|`) for the three
/// derivatives of a target analytic within `2e-3` of `z`.
pub fn richardson_jet<F: Fn(ComplexValue) -> ComplexValue>(f: F, z: ComplexValue) -> [ComplexValue; 4] {
    let stencil = |h: f64| -> [ComplexValue; 3] {
        let (p1, m1) = (f(z + h), f(z - h));
        let (p2, m2) = (f(z + 2.0 * h), f(z - 2.0 * h));
        let f0 = f(z);
        [
            (p1 - m1) / (2.0 * h),
            (p1 - 2.0 * f0 + m1) / (h * h),
            (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h),
        ]
    };
    let coarse = stencil(1e-3);
    let fine = stencil(5e-4);
    let mut out = [f(z), ComplexValue::new(0.0, 0.0), ComplexValue::new(0.0, 0.0), ComplexValue::new(0.0, 0.0)];
    for k in 0..3 {
        out[k + 1] = (4.0 * fine[k] - coarse[k]) / 3.0;
    }
    out
}

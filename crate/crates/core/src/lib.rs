//! Numerics for the generalized Bessel–Struve kernel
//! `S(z) = Σ Γ(α+1)Γ((n+1)/2) λⁿ zⁿ / (√π n! Γ(n/2+α+1))`:
//! evaluation, Janowski-class inclusion tests, and third-order
//! differential-subordination checks.

pub mod error;
pub mod format;
pub mod gamma;
pub mod janowski;
pub mod kernel;
pub mod quadrature;
pub mod reduce;
pub mod subordination;

pub use error::{Error, Result};
pub use kernel::{ComplexValue, EvalConfig, KernelParams};

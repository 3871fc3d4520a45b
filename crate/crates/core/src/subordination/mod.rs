//! Third-order differential subordination built on `g_α = z S_α`.

pub mod admissibility;
pub mod beta;
pub mod dominance;
pub mod g;
pub mod polygon;
pub mod target;

pub use admissibility::{admissibility_check, AdmissibilityOptions, AdmissibilityOutcome, AdmissibilityProbe, Cond3Reading};
pub use beta::{beta_transforms, inverse_beta, BetaForm, BetaQuadruple, InverseForm};
pub use dominance::{dominance_of, numeric_dominance, DominanceReport};
pub use g::{chain_identities_residuals, chain_residual, eval_g, g_recurrence_residual, ChainForm, ChainIdentity, ChainResiduals, GFunction};
pub use polygon::BoundaryPolygon;
pub use target::Target;

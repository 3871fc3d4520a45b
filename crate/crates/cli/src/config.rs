//! Validated run configuration.

use std::path::PathBuf;

use bsk_core::janowski::{AlphaRange, GridSpec, JanowskiPair};
use bsk_core::subordination::Target;
use bsk_core::{ComplexValue, Error, EvalConfig, KernelParams, Result};

use crate::args::{Cli, CommandArgs, Common, Format, Method};

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Eval { params: KernelParams, z: ComplexValue, method: Method },
    Verify { params: KernelParams },
    Janowski { pair: JanowskiPair, params: KernelParams },
    Scan { pair: JanowskiPair, lambda: f64, range: AlphaRange },
    Dominance { alpha: f64, target: Target },
    Alpha0,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub grid: GridSpec,
    pub tol: EvalConfig,
    pub output: Format,
    pub out_path: Option<PathBuf>,
}

fn real_lambda(re: f64, im: f64) -> Result<f64> {
    if im != 0.0 {
        return Err(Error::InvalidParameter(format!(
            "theorem predicates need real lambda, got imaginary part {im}"
        )));
    }
    if !re.is_finite() {
        return Err(Error::InvalidParameter("lambda must be finite".into()));
    }
    Ok(re)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let (command, common): (Command, Common) = match cli.command {
            CommandArgs::Eval { alpha, lambda, z_re, z_im, method, common } => {
                let params = KernelParams::new(alpha, ComplexValue::new(lambda.lambda_re, lambda.lambda_im))?;
                (Command::Eval { params, z: ComplexValue::new(z_re, z_im), method }, common)
            }
            CommandArgs::Verify { alpha, lambda, common } => {
                let params = KernelParams::new(alpha, ComplexValue::new(lambda.lambda_re, lambda.lambda_im))?;
                (Command::Verify { params }, common)
            }
            CommandArgs::Janowski { pair, alpha, lambda, lambda_im, common } => {
                let lambda = real_lambda(lambda, lambda_im)?;
                let pair = JanowskiPair::new(pair.a, pair.b)?;
                let params = KernelParams::new(alpha, ComplexValue::new(lambda, 0.0))?;
                (Command::Janowski { pair, params }, common)
            }
            CommandArgs::Scan { pair, lambda, lambda_im, alpha_lo, alpha_hi, n, common } => {
                let lambda = real_lambda(lambda, lambda_im)?;
                let pair = JanowskiPair::new(pair.a, pair.b)?;
                if !(alpha_lo > -0.5 && alpha_hi.is_finite() && alpha_lo <= alpha_hi) {
                    return Err(Error::InvalidParameter(format!(
                        "scan needs -1/2 < alpha_lo <= alpha_hi, got [{alpha_lo}, {alpha_hi}]"
                    )));
                }
                (Command::Scan { pair, lambda, range: AlphaRange { lo: alpha_lo, hi: alpha_hi, n } }, common)
            }
            CommandArgs::Dominance { alpha, target, common } => {
                if !(alpha > 1.0) || !alpha.is_finite() {
                    return Err(Error::InvalidParameter(format!("dominance needs alpha > 1, got {alpha}")));
                }
                (Command::Dominance { alpha, target: target.parse()? }, common)
            }
            CommandArgs::Alpha0 { common } => (Command::Alpha0, common),
        };
        Ok(Self {
            command,
            grid: common.grid.parse()?,
            tol: EvalConfig::new(common.rel_tol, common.max_terms, common.quad_levels)?,
            output: common.format,
            out_path: common.out,
        })
    }
}

//! `bsk` command-line harness: argument parsing, validation, and output.

pub mod args;
pub mod config;
pub mod output;
pub mod verify;

use std::fs;
use std::io::Write;

use bsk_core::janowski::{
    check_theorems, numeric_membership, scan_region, solve_alpha0, write_region_csv, DiskGrid, RegionRecord,
    CRITICAL_B,
};
use bsk_core::kernel::{eval_integral, eval_series};
use bsk_core::subordination::numeric_dominance;
use bsk_core::{Error, Result};
use serde_json::Value;

pub use args::{Cli, Format, Method};
pub use config::{Command, RunConfig};
pub use verify::{verify_all, IdentityCheck, Status, VerifyReport};

use output::{csv_num, num, object, record_json, render_csv, render_json, verdict_str, verify_csv, verify_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

/// Exit code for a library error: numerical failures are 3, bad input is 2.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_non_convergence() => EXIT_NON_CONVERGENCE,
        Error::NonFinite(_) | Error::IdentityViolation(_) => EXIT_NON_CONVERGENCE,
        _ => EXIT_VALIDATION,
    }
}

fn render(config: &RunConfig) -> Result<String> {
    let grid = || DiskGrid::from_spec(config.grid);
    let cfg = &config.tol;
    let csv = config.output == Format::Csv;
    Ok(match &config.command {
        Command::Eval { params, z, method } => {
            let v = match method {
                Method::Series => eval_series(params, *z, cfg)?,
                Method::Integral => eval_integral(params, *z, cfg)?,
            };
            if csv {
                render_csv(&["value_re", "value_im"], &[vec![csv_num(v.re), csv_num(v.im)]])
            } else {
                render_json(&object([("value_re", num(v.re)), ("value_im", num(v.im))]))
            }
        }
        Command::Verify { params } => {
            let report = verify_all(params, &grid()?, cfg)?;
            if csv {
                verify_csv(&report)
            } else {
                render_json(&verify_json(params.alpha(), params.lambda().re, params.lambda().im, &report))
            }
        }
        Command::Janowski { pair, params } => {
            let verdict = check_theorems(pair, params.alpha(), params.lambda())?;
            let m = numeric_membership(params, pair, &grid()?, cfg)?;
            let record = RegionRecord {
                alpha: params.alpha(),
                lambda: params.lambda(),
                pair: *pair,
                certified: verdict.is_certified(),
                numeric_member: m.member,
                min_margin: m.min_margin,
                witness: m.witness,
                hypothesis_gap: m.hypothesis_gap,
                error: None,
            };
            if csv {
                region_csv(&[record])?
            } else {
                let theorem = if pair.b() < CRITICAL_B {
                    "first"
                } else if pair.b() > CRITICAL_B {
                    "second"
                } else {
                    "both"
                };
                let mut v = record_json(&record);
                if let Value::Object(map) = &mut v {
                    map.insert("predicate".into(), Value::String(theorem.into()));
                    map.insert("verdict".into(), Value::String(verdict_str(verdict).into()));
                    map.insert("hypothesis_gap".into(), num(m.hypothesis_gap));
                }
                render_json(&v)
            }
        }
        Command::Scan { pair, lambda, range } => {
            let records = scan_region(pair, *range, *lambda, &grid()?, cfg)?;
            if csv {
                region_csv(&records)?
            } else {
                render_json(&object([("records", Value::Array(records.iter().map(record_json).collect()))]))
            }
        }
        Command::Dominance { alpha, target } => {
            let r = numeric_dominance(*alpha, |z| target.eval(z), &grid()?, cfg)?;
            if csv {
                render_csv(
                    &["alpha", "target", "contained", "min_margin", "witness_re", "witness_im"],
                    &[vec![
                        csv_num(*alpha),
                        format!("\"{target}\""),
                        r.contained.to_string(),
                        csv_num(r.min_margin),
                        csv_num(r.witness.re),
                        csv_num(r.witness.im),
                    ]],
                )
            } else {
                render_json(&object([
                    ("alpha", num(*alpha)),
                    ("target", Value::String(target.to_string())),
                    ("contained", Value::Bool(r.contained)),
                    ("min_margin", num(r.min_margin)),
                    ("witness_re", num(r.witness.re)),
                    ("witness_im", num(r.witness.im)),
                ]))
            }
        }
        Command::Alpha0 => {
            let a = solve_alpha0()?;
            if csv {
                render_csv(&["alpha0"], &[vec![csv_num(a)]])
            } else {
                render_json(&object([("alpha0", num(a))]))
            }
        }
    })
}

fn region_csv(records: &[RegionRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_region_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
}

/// Execute `config`, writing results to its destination and diagnostics to `err`.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match render(config) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "bsk: {e}");
            return exit_code(&e);
        }
    };
    let written = match &config.out_path {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "bsk: {msg}");
            EXIT_IO
        }
    }
}

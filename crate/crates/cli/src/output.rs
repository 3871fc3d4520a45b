//! JSON and CSV rendering. JSON numbers carry 17 significant digits, CSV 12.

use bsk_core::format::format_sig;
use bsk_core::janowski::{RegionRecord, Verdict};
use serde_json::{Map, Number, Value};

use crate::verify::VerifyReport;

pub const JSON_DIGITS: usize = 17;
pub const CSV_DIGITS: usize = 12;

/// Finite numbers as exact decimal text; NaN and infinities become `null`.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(format_sig(x, JSON_DIGITS).parse::<Number>().expect("formatted float is valid JSON"))
    } else {
        Value::Null
    }
}

pub fn object<const N: usize>(fields: [(&str, Value); N]) -> Value {
    Value::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn csv_num(x: f64) -> String {
    format_sig(x, CSV_DIGITS)
}

/// Header plus rows, comma separated, LF terminated.
pub fn render_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Certified => "certified",
        Verdict::NotCertified => "not_certified",
        Verdict::OutOfScope => "out_of_scope",
    }
}

pub fn record_json(r: &RegionRecord) -> Value {
    let mut v = object([
        ("alpha", num(r.alpha)),
        ("lambda_re", num(r.lambda.re)),
        ("lambda_im", num(r.lambda.im)),
        ("A", num(r.pair.a())),
        ("B", num(r.pair.b())),
        ("certified", Value::Bool(r.certified)),
        ("numeric_member", Value::Bool(r.numeric_member)),
        ("min_margin", num(r.min_margin)),
        ("witness_re", num(r.witness.re)),
        ("witness_im", num(r.witness.im)),
    ]);
    if let (Some(e), Value::Object(m)) = (&r.error, &mut v) {
        m.insert("error".into(), Value::String(e.clone()));
    }
    v
}

pub fn verify_json(alpha: f64, lambda_re: f64, lambda_im: f64, report: &VerifyReport) -> Value {
    let checks = report
        .checks
        .iter()
        .map(|c| {
            object([
                ("name", Value::String(c.name.into())),
                ("status", Value::String(c.status.as_str().into())),
                ("max_residual", c.max_residual.map_or(Value::Null, num)),
                ("threshold", num(c.threshold)),
                ("note", Value::String(c.note.clone())),
            ])
        })
        .collect();
    object([
        ("alpha", num(alpha)),
        ("lambda_re", num(lambda_re)),
        ("lambda_im", num(lambda_im)),
        ("pass", Value::Bool(report.pass())),
        ("identities", Value::Array(checks)),
    ])
}

pub fn verify_csv(report: &VerifyReport) -> String {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.to_string(),
                c.status.as_str().to_string(),
                c.max_residual.map_or_else(String::new, csv_num),
                csv_num(c.threshold),
            ]
        })
        .collect();
    render_csv(&["name", "status", "max_residual", "threshold"], &rows)
}

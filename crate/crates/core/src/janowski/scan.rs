//! Parameter scans over `α` and the flat-file record format.

use std::io::{Read, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::janowski::grid::DiskGrid;
use crate::janowski::membership::numeric_membership;
use crate::janowski::region::JanowskiPair;
use crate::janowski::theorems::check_theorems;
use crate::kernel::{ComplexValue, EvalConfig, KernelParams};

/// Column order of the CSV output.
pub const CSV_HEADER: [&str; 10] = [
    "alpha",
    "lambda_re",
    "lambda_im",
    "A",
    "B",
    "certified",
    "numeric_member",
    "min_margin",
    "witness_re",
    "witness_im",
];

/// Significant digits used for CSV numbers.
pub const CSV_DIGITS: usize = 12;

/// One scanned `α` with its theorem verdict and sampled membership.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionRecord {
    pub alpha: f64,
    pub lambda: ComplexValue,
    pub pair: JanowskiPair,
    pub certified: bool,
    pub numeric_member: bool,
    pub min_margin: f64,
    pub witness: ComplexValue,
    /// `min |(1+B)S - (1+A)|` on the grid; not part of the CSV schema.
    pub hypothesis_gap: f64,
    /// Set when this point failed to evaluate; the numeric fields are NaN.
    pub error: Option<String>,
}

/// `n` evenly spaced orders from `lo` to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRange {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl AlphaRange {
    pub fn values(&self) -> Vec<f64> {
        match self.n {
            0 => Vec::new(),
            1 => vec![self.lo],
            n => {
                let step = (self.hi - self.lo) / (n - 1) as f64;
                (0..n).map(|i| if i + 1 == n { self.hi } else { self.lo + i as f64 * step }).collect()
            }
        }
    }
}

fn scan_point(pair: &JanowskiPair, alpha: f64, lambda: f64, grid: &DiskGrid, cfg: &EvalConfig) -> RegionRecord {
    let lam = ComplexValue::new(lambda, 0.0);
    let outcome = (|| {
        let verdict = check_theorems(pair, alpha, lam)?;
        let params = KernelParams::new(alpha, lam)?;
        let report = numeric_membership(&params, pair, grid, cfg)?;
        Ok::<_, Error>((verdict, report))
    })();
    match outcome {
        Ok((verdict, report)) => RegionRecord {
            alpha,
            lambda: lam,
            pair: *pair,
            certified: verdict.is_certified(),
            numeric_member: report.member,
            min_margin: report.min_margin,
            witness: report.witness,
            hypothesis_gap: report.hypothesis_gap,
            error: None,
        },
        Err(e) => RegionRecord {
            alpha,
            lambda: lam,
            pair: *pair,
            certified: false,
            numeric_member: false,
            min_margin: f64::NAN,
            witness: ComplexValue::new(f64::NAN, f64::NAN),
            hypothesis_gap: f64::NAN,
            error: Some(e.to_string()),
        },
    }
}

/// Classify every `α` in `range`, in increasing order.
///
/// A point that fails to evaluate is recorded with its error; the scan
/// itself only fails on an invalid range or a non-finite `λ`.
pub fn scan_region(
    pair: &JanowskiPair,
    range: AlphaRange,
    lambda: f64,
    grid: &DiskGrid,
    cfg: &EvalConfig,
) -> Result<Vec<RegionRecord>> {
    if range.n > 0 && !(range.lo > -0.5 && range.hi.is_finite()) {
        return Err(Error::InvalidParameter(format!("scan needs alpha_lo > -1/2, got {}", range.lo)));
    }
    if !lambda.is_finite() {
        return Err(Error::InvalidParameter("lambda must be finite".into()));
    }
    Ok(range
        .values()
        .into_par_iter()
        .map(|alpha| scan_point(pair, alpha, lambda, grid, cfg))
        .collect())
}

/// Write records as CSV: mandatory header, LF line endings, 12 significant digits.
pub fn write_region_csv<W: Write>(records: &[RegionRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Parse(format!("csv write failed: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        let f = |x: f64| format_sig(x, CSV_DIGITS);
        w.write_record([
            f(r.alpha),
            f(r.lambda.re),
            f(r.lambda.im),
            f(r.pair.a()),
            f(r.pair.b()),
            r.certified.to_string(),
            r.numeric_member.to_string(),
            f(r.min_margin),
            f(r.witness.re),
            f(r.witness.im),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(format!("csv write failed: {e}")))?;
    Ok(())
}

fn parse_bool(s: &str) -> Result<bool> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::Parse(format!("expected true or false, got {s:?}"))),
    }
}

fn parse_num(s: &str) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

/// Read records written by [`write_region_csv`]. The header must match exactly.
pub fn read_region_csv<R: Read>(input: R) -> Result<Vec<RegionRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = rdr.headers().map_err(|e| Error::Parse(format!("csv header: {e}")))?;
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Parse(format!("unexpected csv header {:?}", header.iter().collect::<Vec<_>>())));
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Parse(format!("csv row: {e}")))?;
        if row.len() != CSV_HEADER.len() {
            return Err(Error::Parse(format!("expected {} fields, got {}", CSV_HEADER.len(), row.len())));
        }
        let num = |i: usize| parse_num(&row[i]);
        let pair = JanowskiPair::new(num(3)?, num(4)?).map_err(|e| Error::Parse(e.to_string()))?;
        let min_margin = num(7)?;
        out.push(RegionRecord {
            alpha: num(0)?,
            lambda: ComplexValue::new(num(1)?, num(2)?),
            pair,
            certified: parse_bool(&row[5])?,
            numeric_member: parse_bool(&row[6])?,
            min_margin,
            witness: ComplexValue::new(num(8)?, num(9)?),
            hypothesis_gap: f64::NAN,
            error: min_margin.is_nan().then(|| "failed point".to_string()),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> DiskGrid {
        DiskGrid::new(8, 16, 1e-3).unwrap()
    }

    #[test]
    fn alpha_range_values() {
        assert!(AlphaRange { lo: 0.6, hi: 1.4, n: 0 }.values().is_empty());
        assert_eq!(AlphaRange { lo: 0.6, hi: 1.4, n: 1 }.values(), vec![0.6]);
        assert_eq!(AlphaRange { lo: 1.5, hi: 3.0, n: 4 }.values(), vec![1.5, 2.0, 2.5, 3.0]);
        let v = AlphaRange { lo: 0.6, hi: 1.4, n: 9 }.values();
        assert_eq!(v.len(), 9);
        assert!((v[4] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn empty_scan() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let r = scan_region(&pair, AlphaRange { lo: 0.6, hi: 1.4, n: 0 }, 1.0, &small_grid(), &EvalConfig::default());
        assert!(r.unwrap().is_empty());
    }

    #[test]
    fn certified_segment() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let recs =
            scan_region(&pair, AlphaRange { lo: 1.5, hi: 3.0, n: 4 }, 1.0, &small_grid(), &EvalConfig::default())
                .unwrap();
        assert_eq!(recs.len(), 4);
        assert!(recs.iter().all(|r| r.certified && r.numeric_member && r.error.is_none()));
        assert!(recs.windows(2).all(|w| w[0].alpha < w[1].alpha));
    }

    #[test]
    fn failed_point_is_recorded() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let cfg = EvalConfig::new(1e-15, 16, 4).unwrap();
        let recs = scan_region(&pair, AlphaRange { lo: 1.5, hi: 2.0, n: 2 }, 300.0, &small_grid(), &cfg).unwrap();
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.error.is_some() && !r.numeric_member && r.min_margin.is_nan()));
    }

    #[test]
    fn rejects_bad_lower_bound() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let r = scan_region(&pair, AlphaRange { lo: -0.5, hi: 1.0, n: 3 }, 1.0, &small_grid(), &EvalConfig::default());
        assert!(r.is_err());
    }

    #[test]
    fn csv_layout_and_read_back() {
        let pair = JanowskiPair::new(1.0, -1.0).unwrap();
        let recs =
            scan_region(&pair, AlphaRange { lo: 0.6, hi: 1.4, n: 3 }, 1.0, &small_grid(), &EvalConfig::default())
                .unwrap();
        let mut buf = Vec::new();
        write_region_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("alpha,lambda_re,lambda_im,A,B,certified,numeric_member,min_margin,witness_re,witness_im\n"));
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().nth(1).unwrap().starts_with("0.6,1,0,1,-1,false,true,"));

        let back = read_region_csv(buf.as_slice()).unwrap();
        assert_eq!(back.len(), 3);
        for (a, b) in recs.iter().zip(&back) {
            assert_eq!(a.certified, b.certified);
            assert_eq!(a.numeric_member, b.numeric_member);
            assert!((a.min_margin - b.min_margin).abs() <= 1e-11 * a.min_margin.abs());
        }
    }

    #[test]
    fn csv_reader_rejects_garbage() {
        assert!(read_region_csv("a,b\n1,2\n".as_bytes()).is_err());
        let bad_bool = "alpha,lambda_re,lambda_im,A,B,certified,numeric_member,min_margin,witness_re,witness_im\n1,1,0,1,-1,yes,true,0.1,0,0\n";
        assert!(read_region_csv(bad_bool.as_bytes()).is_err());
        let bad_pair = "alpha,lambda_re,lambda_im,A,B,certified,numeric_member,min_margin,witness_re,witness_im\n1,1,0,0,1,true,true,0.1,0,0\n";
        assert!(read_region_csv(bad_pair.as_bytes()).is_err());
        assert!(read_region_csv("".as_bytes()).is_err());
    }
}

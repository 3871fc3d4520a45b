//! Deterministic worst-case reduction over sampled points.

use crate::kernel::ComplexValue;

/// Margins closer than this (relative) count as ties.
const TIE_REL: f64 = 1e-12;

/// Smallest margin and its point, scanning in input order.
///
/// Near-ties go to the lexicographically smaller `(re, im)` witness so the
/// result does not hinge on the last bit of a rounding error.
pub fn worst_point(samples: &[(f64, ComplexValue)]) -> Option<(f64, ComplexValue)> {
    let mut best: Option<(f64, ComplexValue)> = None;
    for &(margin, z) in samples {
        best = Some(match best {
            None => (margin, z),
            Some((m, w)) => {
                let tie = (margin - m).abs() <= TIE_REL * (1.0 + m.abs().max(margin.abs()));
                if (!tie && margin < m) || (tie && lex_less(z, w)) {
                    (margin, z)
                } else {
                    (m, w)
                }
            }
        });
    }
    best
}

fn lex_less(a: ComplexValue, b: ComplexValue) -> bool {
    a.re < b.re || (a.re == b.re && a.im < b.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn picks_minimum() {
        let s = [(0.3, c(0.0, 0.0)), (-0.2, c(0.5, 0.5)), (0.1, c(-1.0, 0.0))];
        assert_eq!(worst_point(&s), Some((-0.2, c(0.5, 0.5))));
        assert_eq!(worst_point(&[]), None);
    }

    #[test]
    fn ties_break_lexicographically() {
        let s = [(1.0, c(0.5, 0.0)), (1.0 + 1e-15, c(-0.5, 0.1)), (1.0, c(-0.5, -0.1))];
        assert_eq!(worst_point(&s).unwrap().1, c(-0.5, -0.1));
    }
}

//! The four linear maps `β_i(r, s, t, u)` and their inverses.

use crate::error::{Error, Result};
use crate::kernel::ComplexValue;
use crate::subordination::g::{chain_weights, ChainForm, ChainIdentity};

/// Coefficients of the forward map.
///
/// `Printed` is the map as typeset. `Chain` is the map that actually sends
/// `(p, zp′, z²p″, z³p‴)` with `p = g_{α+1}` to `(g_{α+1}, g_α, g_{α−1}, g_{α−2})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaForm {
    Printed,
    Chain,
}

/// How to recover `(r, s, t, u)` from the `β`s.
///
/// `Printed` evaluates the typeset closed forms, which are not the inverse of
/// any forward map (the `s` row is off by a factor 2). `Consistent` solves the
/// triangular system of the quadruple's own forward map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseForm {
    Printed,
    Consistent,
}

/// Arguments the quadruple was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSource {
    pub args: [ComplexValue; 4],
    pub alpha: f64,
    pub form: BetaForm,
}

/// `(β₁, β₂, β₃, β₄)`; only constructed by [`beta_transforms`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaQuadruple {
    values: [ComplexValue; 4],
    source: BetaSource,
}

impl BetaQuadruple {
    pub fn values(&self) -> [ComplexValue; 4] {
        self.values
    }

    pub fn beta(&self, i: usize) -> ComplexValue {
        self.values[i - 1]
    }

    pub fn source(&self) -> &BetaSource {
        &self.source
    }

    pub fn alpha(&self) -> f64 {
        self.source.alpha
    }
}

/// Lower-triangular matrix `L` with `β = L (r, s, t, u)`.
pub fn forward_matrix(alpha: f64, form: BetaForm) -> [[f64; 4]; 4] {
    let a = alpha;
    let (row2, chain) = match form {
        BetaForm::Printed => ([1.0, 1.0 / (a + 1.0), 0.0, 0.0], ChainForm::Printed),
        BetaForm::Chain => (chain_weights(ChainIdentity::First, a, ChainForm::Derived), ChainForm::Derived),
    };
    [
        [1.0, 0.0, 0.0, 0.0],
        row2,
        chain_weights(ChainIdentity::Second, a, chain),
        chain_weights(ChainIdentity::Third, a, chain),
    ]
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 1.0) || !alpha.is_finite() {
        return Err(Error::InvalidParameter(format!("beta transforms need alpha > 1, got {alpha}")));
    }
    Ok(())
}

pub fn beta_transforms(args: [ComplexValue; 4], alpha: f64, form: BetaForm) -> Result<BetaQuadruple> {
    check_alpha(alpha)?;
    let l = forward_matrix(alpha, form);
    let mut values = [ComplexValue::new(0.0, 0.0); 4];
    for (i, v) in values.iter_mut().enumerate() {
        *v = (0..=i).map(|j| args[j] * l[i][j]).sum();
    }
    Ok(BetaQuadruple { values, source: BetaSource { args, alpha, form } })
}

/// `(r, s, t, u)` from a quadruple.
pub fn inverse_beta(q: &BetaQuadruple, form: InverseForm) -> [ComplexValue; 4] {
    let a = q.source.alpha;
    let [b1, b2, b3, b4] = q.values;
    match form {
        InverseForm::Printed => {
            let s = 2.0 * (a + 1.0) * (b2 - b1);
            let t = 4.0 * a * (a + 1.0) * b3 + 8.0 * a * (a + 1.0) * b2 - (4.0 * a * a + 8.0 * a + 1.0) * b1;
            let u = 8.0 * a * (a * a - 1.0) * b4 - 4.0 * a * (a + 1.0) * (6.0 * a - 1.0) * b3
                + 2.0 * (a + 1.0) * (36.0 * a * a - 12.0 * a - 1.0) * b2
                + (40.0 * a * a * a + 16.0 * a * a - 18.0 * a - 6.0) * b1;
            [b1, s, t, u]
        }
        InverseForm::Consistent => {
            let l = forward_matrix(a, q.source.form);
            let mut x = [ComplexValue::new(0.0, 0.0); 4];
            for i in 0..4 {
                let known: ComplexValue = (0..i).map(|j| x[j] * l[i][j]).sum();
                x[i] = (q.values[i] - known) / l[i][i];
            }
            x
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::EvalConfig;
    use crate::subordination::g::{eval_g, p_jet};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    const ZERO: ComplexValue = ComplexValue::new(0.0, 0.0);
    const ONE: ComplexValue = ComplexValue::new(1.0, 0.0);

    #[test]
    fn unit_r_example() {
        let q = beta_transforms([ONE, ZERO, ZERO, ZERO], 2.0, BetaForm::Printed).unwrap();
        let v = q.values();
        assert_eq!(v[0], ONE);
        assert_eq!(v[1], ONE);
        assert!((v[2] - 0.625).norm() < 1e-15);
        assert!((v[3] - 0.3125).norm() < 1e-15);
        assert_eq!(q.beta(3), v[2]);
        assert_eq!(inverse_beta(&q, InverseForm::Consistent), [ONE, ZERO, ZERO, ZERO]);
    }

    #[test]
    fn zero_maps_to_zero() {
        for form in [BetaForm::Printed, BetaForm::Chain] {
            let q = beta_transforms([ZERO; 4], 3.0, form).unwrap();
            assert_eq!(q.values(), [ZERO; 4]);
            assert_eq!(inverse_beta(&q, InverseForm::Printed), [ZERO; 4]);
            assert_eq!(inverse_beta(&q, InverseForm::Consistent), [ZERO; 4]);
        }
    }

    #[test]
    fn rejects_small_alpha() {
        assert!(beta_transforms([ONE; 4], 1.0, BetaForm::Printed).is_err());
        assert!(beta_transforms([ONE; 4], f64::NAN, BetaForm::Printed).is_err());
    }

    #[test]
    fn printed_inverse_doubles_s() {
        let args = [c(0.3, 0.1), c(-0.7, 0.2), c(0.5, 0.0), c(0.0, 1.0)];
        let q = beta_transforms(args, 2.5, BetaForm::Printed).unwrap();
        let printed = inverse_beta(&q, InverseForm::Printed);
        assert_eq!(printed[0], args[0]);
        assert!((printed[1] - 2.0 * args[1]).norm() < 1e-14);
        assert!((printed[2] - args[2]).norm() > 1e-3);
    }

    #[test]
    fn chain_form_maps_jet_to_g_orders() {
        let cfg = EvalConfig::default();
        for alpha in [2.5, 3.0] {
            let z = c(0.35, -0.25);
            let q = beta_transforms(p_jet(alpha, z, &cfg).unwrap(), alpha, BetaForm::Chain).unwrap();
            for (k, b) in q.values().iter().enumerate() {
                let g = eval_g(alpha + 1.0 - k as f64, z, &cfg).unwrap();
                assert!((b - g).norm() < 1e-13, "alpha={alpha} k={k}");
            }
        }
    }

    fn quad() -> impl Strategy<Value = [ComplexValue; 4]> {
        prop::array::uniform4((-10.0f64..10.0, -10.0f64..10.0).prop_map(|(a, b)| c(a, b)))
    }

    fn forms() -> impl Strategy<Value = BetaForm> {
        prop_oneof![Just(BetaForm::Printed), Just(BetaForm::Chain)]
    }

    proptest! {
        #[test]
        fn linear(x in quad(), y in quad(), a in -3.0f64..3.0, b in -3.0f64..3.0, alpha in 1.01f64..8.0, form in forms()) {
            let mut mix = [ZERO; 4];
            for i in 0..4 { mix[i] = a * x[i] + b * y[i]; }
            let tx = beta_transforms(x, alpha, form).unwrap().values();
            let ty = beta_transforms(y, alpha, form).unwrap().values();
            let tm = beta_transforms(mix, alpha, form).unwrap().values();
            for i in 0..4 {
                let want = a * tx[i] + b * ty[i];
                prop_assert!((tm[i] - want).norm() <= 1e-13 * (1.0 + want.norm() + a.abs() * tx[i].norm() + b.abs() * ty[i].norm()));
            }
        }

        #[test]
        fn consistent_round_trip(x in quad(), alpha in 1.05f64..8.0, form in forms()) {
            let back = inverse_beta(&beta_transforms(x, alpha, form).unwrap(), InverseForm::Consistent);
            for i in 0..4 {
                prop_assert!((back[i] - x[i]).norm() <= 1e-12 * (1.0 + x.iter().map(|v| v.norm()).sum::<f64>()));
            }
        }

        // Real coefficients: the maps commute with conjugation.
        #[test]
        fn conjugation(x in quad(), alpha in 1.01f64..8.0, form in forms()) {
            let conj = x.map(|v| v.conj());
            let a = beta_transforms(x, alpha, form).unwrap().values();
            let b = beta_transforms(conj, alpha, form).unwrap().values();
            for i in 0..4 {
                prop_assert!((a[i].conj() - b[i]).norm() <= 1e-15 * (1.0 + a[i].norm()));
            }
        }
    }
}

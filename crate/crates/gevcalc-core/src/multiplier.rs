//! The closed family of scalar spectral functions used by the diagonal
//! functional calculus, plus two calculus facts that get verified
//! numerically: the supremum of `λ^k e^{-Dλ^{1/(2s)}}` and the
//! Hilbert–Schmidt series of the Bessel-type kernel of `(I + L)^{-N}`.

use serde::{Deserialize, Serialize};

use crate::algebra::HalfInt;
use crate::error::{Error, Result};

/// A member of the multiplier family. Every kind evaluates to a finite
/// non-negative real for `λ > 0`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplierSpec {
    /// `λ^k` for integer `k` (negative `k` is singular at 0).
    Power(i32),
    /// `λ^a` for real `a` (negative `a` is singular at 0).
    FracPower(f64),
    /// `e^{D λ^{1/(2s)}}`, `s > 0` (any sign of `D`).
    ExpFrac { d: f64, s: f64 },
    /// Heat multiplier `e^{-tλ}`, `t > 0`.
    Heat { t: f64 },
    /// Bessel-type multiplier `(1+λ)^{-N}`, `N >= 1`.
    Bessel { n: u32 },
    /// `λ^k e^{-D λ^{1/(2s)}}` with `k >= 0`, `D > 0`, `s > 0`.
    PowerExp { k: f64, d: f64, s: f64 },
}

impl MultiplierSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            MultiplierSpec::Power(_) => true,
            MultiplierSpec::FracPower(a) => a.is_finite(),
            MultiplierSpec::ExpFrac { d, s } => d.is_finite() && s > 0.0,
            MultiplierSpec::Heat { t } => t > 0.0,
            MultiplierSpec::Bessel { n } => n >= 1,
            MultiplierSpec::PowerExp { k, d, s } => k >= 0.0 && d > 0.0 && s > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParam(format!("multiplier parameters out of range: {self:?}")))
        }
    }

    /// True when the value is undefined (infinite) at `λ = 0`.
    pub fn singular_at_zero(&self) -> bool {
        match *self {
            MultiplierSpec::Power(k) => k < 0,
            MultiplierSpec::FracPower(a) => a < 0.0,
            MultiplierSpec::PowerExp { k, .. } => k > 0.0,
            _ => false,
        }
    }

    /// Scalar evaluation at `lam >= 0`.
    pub fn eval(&self, lam: f64) -> Result<f64> {
        if !(lam >= 0.0) {
            return Err(Error::InvalidParam(format!("multiplier argument {lam} < 0")));
        }
        if lam == 0.0 && self.singular_at_zero() {
            return Err(Error::SingularAtZero);
        }
        let v = match *self {
            MultiplierSpec::Power(k) => lam.powi(k),
            MultiplierSpec::FracPower(a) => lam.powf(a),
            MultiplierSpec::ExpFrac { d, s } => (d * lam.powf(1.0 / (2.0 * s))).exp(),
            MultiplierSpec::Heat { t } => (-t * lam).exp(),
            MultiplierSpec::Bessel { n } => (1.0 + lam).powi(-(n as i32)),
            MultiplierSpec::PowerExp { k, d, s } => {
                if k == 0.0 {
                    (-d * lam.powf(1.0 / (2.0 * s))).exp()
                } else {
                    // work in logs so that large k and lam do not overflow
                    (k * lam.ln() - d * lam.powf(1.0 / (2.0 * s))).exp()
                }
            }
        };
        Ok(v)
    }
}

/// Scalar multiplier evaluation (free-function form).
pub fn eval_multiplier(spec: &MultiplierSpec, lam: f64) -> Result<f64> {
    spec.validate()?;
    spec.eval(lam)
}

/// Closed-form maximizer of `f(λ) = λ^k e^{-Dλ^{1/(2s)}}` over `λ >= 0`:
/// the maximum sits at `λ* = (2ks/D)^{2s}`. Returns `(λ*, f(λ*))`.
pub fn power_exp_sup(k: f64, d: f64, s: f64) -> Result<(f64, f64)> {
    let spec = MultiplierSpec::PowerExp { k, d, s };
    spec.validate()?;
    if k == 0.0 {
        // decreasing on [0, ∞)
        return Ok((0.0, 1.0));
    }
    let lam_star = (2.0 * k * s / d).powf(2.0 * s);
    let sup = spec.eval(lam_star)?;
    Ok((lam_star, sup))
}

/// Running partial sums of `Σ_{l <= l_max} (2l+1) Σ_m (1 + l(l+1) - m²)^{-2N}`
/// over half-integers, starting at the trivial representation (term 1).
/// These are the squared Hilbert–Schmidt contributions of `(I + L̂(ξ))^{-N}`
/// weighted by the representation dimensions.
pub fn bessel_hs_partial_sums(n: u32, l_max: HalfInt) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(l_max.dim());
    let mut acc = 0.0;
    for l in HalfInt::range_to(l_max) {
        let dim = l.dim() as f64;
        let row: f64 =
            (0..l.dim()).map(|i| (1.0 + l.subl_eigenvalue(i)).powi(-2 * n as i32)).sum();
        acc += dim * row;
        out.push((l.value(), acc));
    }
    out
}

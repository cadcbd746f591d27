//! Fourier-side Gevrey analysis on SU(2).
//!
//! A coefficient profile assigns to each spin index `l` a coefficient matrix
//! `φ̂(l)`; with the Plancherel identity
//! `‖φ‖² = Σ_l (2l+1) ‖φ̂(l)‖²_HS` the derivative seminorms `‖∂^w φ‖` and
//! `‖L^k φ‖` become weighted sums over the dual, and the Gevrey order of the
//! profile can be estimated by regressing `log ‖L^k φ‖` on the model
//! `log C + 2k·log A + s·log (2k)!`.
//!
//! All profiles here concentrate on a single matrix entry per `l` (the
//! pattern entry), which keeps every seminorm a scalar sum with a closed
//! form; sums are evaluated in log space throughout because the integrands
//! span hundreds of orders of magnitude.

use serde::{Deserialize, Serialize};

use crate::algebra::{ln_factorial, GeneratorWord, Group, HalfInt, Letter};
use crate::error::{Error, Result};

/// The closed family of coefficient profiles.
#[derive(Clone, Debug, PartialEq)]
pub enum ProfileKind {
    /// `φ̂(l) = e^{-B·x^{1/(2s)}}·E` with `x` the sub-Laplacian eigenvalue at
    /// the pattern row.
    ExpFrac { b: f64, s: f64 },
    /// `φ̂(l) = e^{-t·x}·E`.
    Heat { t: f64 },
    /// `φ̂(l) = (1+l)^{-p}·E`.
    Polynomial { p: f64 },
    /// Unit matrix entry `E_{ij}` at `l₀` only.
    Delta { l0: HalfInt, i: usize, j: usize },
    /// Arbitrary non-negative weight per doubled index (test profiles).
    Weights(Vec<f64>),
}

/// A band-limited coefficient profile with a scalar prefactor.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientProfile {
    kind: ProfileKind,
    band_limit: HalfInt,
    scale: f64,
}

/// Builds a profile after validating the parameters.
pub fn make_profile(kind: ProfileKind, band_limit: HalfInt) -> Result<CoefficientProfile> {
    if band_limit.twice() == 0 {
        return Err(Error::InvalidProfile("band limit must be at least 1/2".into()));
    }
    match &kind {
        ProfileKind::ExpFrac { b, s } => {
            if !(*b > 0.0 && *s > 0.0) {
                return Err(Error::InvalidProfile(format!("expfrac needs B > 0, s > 0: {b}, {s}")));
            }
        }
        ProfileKind::Heat { t } => {
            if !(*t > 0.0) {
                return Err(Error::InvalidProfile(format!("heat needs t > 0: {t}")));
            }
        }
        ProfileKind::Polynomial { p } => {
            if !(*p > 0.0) {
                return Err(Error::InvalidProfile(format!("polynomial needs p > 0: {p}")));
            }
        }
        ProfileKind::Delta { l0, i, j } => {
            if *l0 > band_limit {
                return Err(Error::InvalidProfile("delta index beyond the band limit".into()));
            }
            if *i >= l0.dim() || *j >= l0.dim() {
                return Err(Error::InvalidProfile("delta entry outside the matrix".into()));
            }
        }
        ProfileKind::Weights(w) => {
            if w.len() != band_limit.dim() {
                return Err(Error::InvalidProfile("weight vector length must be 2·band+1".into()));
            }
            if w.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(Error::InvalidProfile("weights must be finite and >= 0".into()));
            }
        }
    }
    Ok(CoefficientProfile { kind, band_limit, scale: 1.0 })
}

impl CoefficientProfile {
    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.kind
    }

    pub fn band_limit(&self) -> HalfInt {
        self.band_limit
    }

    /// Row/column of the single nonzero pattern entry at spin `l`.
    pub fn pattern_pos(&self, l: HalfInt) -> (usize, usize) {
        match &self.kind {
            ProfileKind::Delta { i, j, .. } => (*i, *j),
            _ => (l.center_index(), l.center_index()),
        }
    }

    /// Sub-Laplacian eigenvalue at the pattern row.
    fn pattern_eigenvalue(&self, l: HalfInt) -> f64 {
        l.subl_eigenvalue(self.pattern_pos(l).0)
    }

    /// `ln |φ̂(l)|` at the pattern entry; `-∞` outside the band or where the
    /// profile vanishes.
    pub fn log_weight(&self, l: HalfInt) -> f64 {
        if l > self.band_limit || self.scale == 0.0 {
            return f64::NEG_INFINITY;
        }
        let base = match &self.kind {
            ProfileKind::ExpFrac { b, s } => {
                let x = self.pattern_eigenvalue(l);
                -b * x.powf(1.0 / (2.0 * s))
            }
            ProfileKind::Heat { t } => -t * self.pattern_eigenvalue(l),
            ProfileKind::Polynomial { p } => -p * (1.0 + l.value()).ln(),
            ProfileKind::Delta { l0, .. } => {
                if l == *l0 {
                    0.0
                } else {
                    f64::NEG_INFINITY
                }
            }
            ProfileKind::Weights(w) => w[l.twice() as usize].ln(),
        };
        base + self.scale.abs().ln()
    }
}

fn logsumexp(terms: impl Iterator<Item = f64>) -> f64 {
    let vals: Vec<f64> = terms.filter(|v| *v > f64::NEG_INFINITY).collect();
    if vals.is_empty() {
        return f64::NEG_INFINITY;
    }
    let m = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    m + vals.iter().map(|v| (v - m).exp()).sum::<f64>().ln()
}

/// `ln ‖L^{p/2} φ‖` where the power acts by scaling the pattern row by
/// `x^{p/2}`; `p = 0` gives the plain Plancherel norm.
fn log_power_norm(profile: &CoefficientProfile, p: f64, l_max: HalfInt) -> f64 {
    0.5 * logsumexp(HalfInt::range_to(l_max).map(|l| {
        let lw = profile.log_weight(l);
        if lw == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        let x = profile.pattern_eigenvalue(l);
        let power_term = if p == 0.0 {
            0.0
        } else if x == 0.0 {
            return f64::NEG_INFINITY;
        } else {
            p * x.ln()
        };
        (l.dim() as f64).ln() + power_term + 2.0 * lw
    }))
}

/// Plancherel norm `√(Σ_{l<=l_max} (2l+1)·‖φ̂(l)‖²_HS)`.
pub fn plancherel_norm(profile: &CoefficientProfile, l_max: HalfInt) -> Result<f64> {
    if l_max > profile.band_limit() {
        return Err(Error::InvalidParam("l_max beyond the profile band".into()));
    }
    let v = log_power_norm(profile, 0.0, l_max);
    Ok(if v == f64::NEG_INFINITY { 0.0 } else { v.exp() })
}

/// `ln ‖L^k φ‖` for `k = 0 … k_max` (log space; band-limited sums are finite).
pub fn seminorm_sequence(profile: &CoefficientProfile, k_max: usize) -> Vec<f64> {
    (0..=k_max)
        .map(|k| log_power_norm(profile, 2.0 * k as f64, profile.band_limit()))
        .collect()
}

/// Applies one SU(2) letter symbol to a basis-ish vector, in place of a full
/// matrix product. `P` raises the weight index, `M` lowers it; `R1`, `R2` mix
/// the two. Squared ladder factors use the exact integer forms
/// `(T-i)(i+1)` (raise from `i`) and `(T-i+1)·i` (lower from `i`).
fn apply_letter(letter: Letter, l: HalfInt, v: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let d = l.dim();
    let t = l.twice() as i64;
    let raise = |i: usize| -(((t - i as i64) * (i as i64 + 1)) as f64).sqrt();
    let lower = |i: usize| -(((t - i as i64 + 1) * i as i64) as f64).sqrt();
    let mut out = vec![(0.0, 0.0); d];
    match letter {
        Letter::P => {
            for i in 0..d - 1 {
                let f = raise(i);
                out[i + 1] = (f * v[i].0, f * v[i].1);
            }
        }
        Letter::M => {
            for i in 1..d {
                let f = lower(i);
                out[i - 1] = (f * v[i].0, f * v[i].1);
            }
        }
        Letter::R1 => {
            // (P - M)/2
            for i in 0..d - 1 {
                let f = raise(i) / 2.0;
                out[i + 1].0 += f * v[i].0;
                out[i + 1].1 += f * v[i].1;
            }
            for i in 1..d {
                let f = -lower(i) / 2.0;
                out[i - 1].0 += f * v[i].0;
                out[i - 1].1 += f * v[i].1;
            }
        }
        Letter::R2 => {
            // i(P + M)/2
            for i in 0..d - 1 {
                let f = raise(i) / 2.0;
                out[i + 1].0 += -f * v[i].1;
                out[i + 1].1 += f * v[i].0;
            }
            for i in 1..d {
                let f = lower(i) / 2.0;
                out[i - 1].0 += -f * v[i].1;
                out[i - 1].1 += f * v[i].0;
            }
        }
        _ => unreachable!("non-SU(2) letter"),
    }
    out
}

/// `ln ‖σ_w(l) e_r‖` — the word symbol applied to the pattern column.
fn log_word_column_norm(word: &GeneratorWord, l: HalfInt, row: usize) -> f64 {
    let pm_only = word.letters().iter().all(|&c| c == Letter::P || c == Letter::M);
    if pm_only {
        // single path through the band: O(|w|) per l
        let t = l.twice() as i64;
        let mut i = row as i64;
        let mut prod = 1.0_f64;
        for &c in word.letters().iter().rev() {
            match c {
                Letter::P => {
                    prod *= ((t - i) * (i + 1)) as f64;
                    i += 1;
                }
                Letter::M => {
                    prod *= ((t - i + 1) * i) as f64;
                    i -= 1;
                }
                _ => unreachable!(),
            }
            if i < 0 || i > t || prod == 0.0 {
                return f64::NEG_INFINITY;
            }
        }
        return 0.5 * prod.ln();
    }
    let mut v = vec![(0.0, 0.0); l.dim()];
    v[row] = (1.0, 0.0);
    for &c in word.letters().iter().rev() {
        v = apply_letter(c, l, &v);
    }
    let norm_sq: f64 = v.iter().map(|(re, im)| re * re + im * im).sum();
    0.5 * norm_sq.ln()
}

/// Plancherel norms `‖∂^w φ‖` for every word of length `1 … max_len` over the
/// given SU(2) alphabet (enumeration order).
pub fn word_seminorms(
    profile: &CoefficientProfile,
    alphabet: &[Letter],
    max_len: usize,
) -> Result<Vec<(GeneratorWord, f64)>> {
    if max_len > 8 {
        return Err(Error::InvalidParam(format!("word length {max_len} > 8")));
    }
    if alphabet.iter().any(|c| c.group() != Group::Su2) {
        return Err(Error::InvalidAlphabet);
    }
    let words = crate::algebra::enumerate_words(alphabet, max_len)?;
    let mut out = Vec::with_capacity(words.len());
    for word in words {
        let log_norm = 0.5
            * logsumexp(HalfInt::range_to(profile.band_limit()).map(|l| {
                let lw = profile.log_weight(l);
                if lw == f64::NEG_INFINITY {
                    return f64::NEG_INFINITY;
                }
                let (row, _) = profile.pattern_pos(l);
                let lcol = log_word_column_norm(&word, l, row);
                (l.dim() as f64).ln() + 2.0 * lcol + 2.0 * lw
            }));
        out.push((word, log_norm.exp()));
    }
    Ok(out)
}

/// Least-squares Gevrey fit: coefficients of `log C + a·log A + s·g` where
/// `a` and `g` are the model columns (for the `L^k` model, `a = 2k` and
/// `g = ln (2k)!`).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GevreyFit {
    pub s_hat: f64,
    pub log_a: f64,
    pub log_c: f64,
    /// Root-mean-square of the regression residuals.
    pub residual: f64,
}

fn fit_growth(rows: &[(f64, f64, f64)]) -> Result<GevreyFit> {
    if rows.len() < 4 {
        return Err(Error::InvalidParam(format!("need at least 4 fit points, got {}", rows.len())));
    }
    let mut xtx = nalgebra::Matrix3::<f64>::zeros();
    let mut xty = nalgebra::Vector3::<f64>::zeros();
    for &(a, g, y) in rows {
        let x = nalgebra::Vector3::new(1.0, a, g);
        xtx += x * x.transpose();
        xty += x * y;
    }
    let beta = xtx
        .lu()
        .solve(&xty)
        .ok_or_else(|| Error::InvalidParam("singular design matrix in Gevrey fit".into()))?;
    let mut ss = 0.0;
    for &(a, g, y) in rows {
        let pred = beta[0] + beta[1] * a + beta[2] * g;
        ss += (y - pred) * (y - pred);
    }
    Ok(GevreyFit {
        s_hat: beta[2],
        log_a: beta[1],
        log_c: beta[0],
        residual: (ss / rows.len() as f64).sqrt(),
    })
}

/// Fits `log n_k = log C + 2k·log A + s·log (2k)!` by ordinary least squares
/// over `k >= 2` (the constant dominates `k = 0, 1`, which would bias `s`).
/// Input is the `seminorm_sequence` output, indexed by `k`.
pub fn fit_order(log_seminorms: &[f64]) -> Result<GevreyFit> {
    if log_seminorms.iter().any(|v| *v == f64::NEG_INFINITY || v.is_nan()) {
        return Err(Error::DegenerateProfile);
    }
    let rows: Vec<(f64, f64, f64)> = log_seminorms
        .iter()
        .enumerate()
        .skip(2)
        .map(|(k, &y)| (2.0 * k as f64, ln_factorial(2 * k), y))
        .collect();
    fit_growth(&rows)
}

/// Result of the Roumieu-type decay test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoumieuResult {
    /// `max_{l <= l_max} ‖e^{B·σ_L(l)^{1/(2s)}} φ̂(l)‖_HS` (∞ on overflow).
    pub k_sup: f64,
    /// Finite-range proxy for uniform boundedness: the per-l sequence over
    /// the top 20% of the range is non-increasing.
    pub pass: bool,
}

/// Tests the uniform bound `‖e^{B L̂^{1/(2s)}} φ̂‖_HS <= K` on `l <= l_max`.
pub fn roumieu_decay_test(
    profile: &CoefficientProfile,
    b: f64,
    s: f64,
    l_max: HalfInt,
) -> Result<RoumieuResult> {
    if !(b > 0.0 && s > 0.0) {
        return Err(Error::InvalidParam("roumieu test needs B > 0, s > 0".into()));
    }
    if l_max > profile.band_limit() {
        return Err(Error::InvalidParam("l_max beyond the profile band".into()));
    }
    let log_vals: Vec<f64> = HalfInt::range_to(l_max)
        .map(|l| {
            let lw = profile.log_weight(l);
            if lw == f64::NEG_INFINITY {
                return f64::NEG_INFINITY;
            }
            let x = profile.pattern_eigenvalue(l);
            b * x.powf(1.0 / (2.0 * s)) + lw
        })
        .collect();
    let log_max = log_vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let k_sup = if log_max == f64::NEG_INFINITY { 0.0 } else { log_max.exp() };
    if k_sup.is_infinite() {
        return Ok(RoumieuResult { k_sup, pass: false });
    }
    let start = (0.8 * (log_vals.len() as f64 - 1.0)).floor() as usize;
    let tail = &log_vals[start..];
    let pass = tail.windows(2).all(|w| w[1] <= w[0] + 1e-9);
    Ok(RoumieuResult { k_sup, pass })
}

/// Hölder interpolation check: with `b = aθ + (a+2)(1-θ)` returns
/// `‖L^{b/2}φ‖ / (‖L^{a/2}φ‖^θ ‖L^{(a+2)/2}φ‖^{1-θ})`, which is `<= 1`.
pub fn interpolation_check(profile: &CoefficientProfile, a: u32, theta: f64) -> Result<f64> {
    if ![0, 2, 4].contains(&a) {
        return Err(Error::InvalidParam(format!("interpolation exponent a = {a} not in {{0,2,4}}")));
    }
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::InvalidParam("theta must lie in (0, 1)".into()));
    }
    let band = profile.band_limit();
    let af = a as f64;
    let bexp = af * theta + (af + 2.0) * (1.0 - theta);
    let log_b = log_power_norm(profile, bexp, band);
    let log_lo = log_power_norm(profile, af, band);
    let log_hi = log_power_norm(profile, af + 2.0, band);
    if log_lo == f64::NEG_INFINITY || log_hi == f64::NEG_INFINITY {
        return Err(Error::DegenerateProfile);
    }
    Ok((log_b - theta * log_lo - (1.0 - theta) * log_hi).exp())
}

/// One grid point of the battery's Roumieu scan. The sup is reported in log
/// form so it stays finite and serializable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoumieuGridPoint {
    pub b: f64,
    pub log_k: f64,
    pub pass: bool,
}

/// Combined report of the equivalence battery.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub s_claim: f64,
    /// Fit of `log ‖L^k φ‖` (sub-Laplacian power route).
    pub lk_fit: GevreyFit,
    /// Fit of the max word seminorm per length (derivative route).
    pub word_fit: GevreyFit,
    pub roumieu_grid: Vec<RoumieuGridPoint>,
    /// `|s_word - s_lk|`.
    pub fits_gap: f64,
    /// `fits_gap <= 0.15·s_claim` and some grid `B` passes the decay test.
    pub consistent: bool,
}

/// Runs all three characterizations against one profile: the `L^k` fit, the
/// word-seminorm fit over `{P, M}`, and the Roumieu decay test over the grid
/// `B ∈ {2^-4, …, 2^2}` at the claimed order.
pub fn equivalence_battery(
    profile: &CoefficientProfile,
    s_claim: f64,
    k_max: usize,
    max_word_len: usize,
) -> Result<EquivalenceReport> {
    if profile.band_limit() < HalfInt::from_int(40) {
        return Err(Error::InvalidParam("battery needs band_limit >= 40".into()));
    }
    if !(s_claim > 0.0) {
        return Err(Error::InvalidParam("s_claim must be positive".into()));
    }
    if k_max < 5 {
        return Err(Error::InvalidParam("battery needs k_max >= 5".into()));
    }
    if !(5..=8).contains(&max_word_len) {
        return Err(Error::InvalidParam("battery needs 5 <= max_word_len <= 8".into()));
    }
    let lk_fit = fit_order(&seminorm_sequence(profile, k_max))?;

    let norms = word_seminorms(profile, &[Letter::P, Letter::M], max_word_len)?;
    let mut max_per_len = vec![0.0_f64; max_word_len + 1];
    for (word, norm) in &norms {
        let j = word.len();
        max_per_len[j] = max_per_len[j].max(*norm);
    }
    let rows: Vec<(f64, f64, f64)> = (2..=max_word_len)
        .map(|j| {
            if max_per_len[j] == 0.0 {
                Err(Error::DegenerateProfile)
            } else {
                Ok((j as f64, ln_factorial(j), max_per_len[j].ln()))
            }
        })
        .collect::<Result<_>>()?;
    let word_fit = fit_growth(&rows)?;

    let roumieu_grid: Vec<RoumieuGridPoint> = (-4..=2)
        .map(|e| {
            let b = 2.0_f64.powi(e);
            let r = roumieu_decay_test(profile, b, s_claim, profile.band_limit())?;
            Ok(RoumieuGridPoint { b, log_k: r.k_sup.ln(), pass: r.pass })
        })
        .collect::<Result<_>>()?;

    let fits_gap = (word_fit.s_hat - lk_fit.s_hat).abs();
    let consistent = fits_gap <= 0.15 * s_claim && roumieu_grid.iter().any(|p| p.pass);
    Ok(EquivalenceReport { s_claim, lk_fit, word_fit, roumieu_grid, fits_gap, consistent })
}

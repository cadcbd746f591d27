//! Higher-order Riesz-transform symbols `R_α = ∂^α L^{-|α|/2}` and their
//! operator-norm sweeps over the unitary dual.
//!
//! On the symbol side the transform at one representation is the word symbol
//! right-multiplied by the diagonal multiplier `L^{-|word|/2}`. Sweeps record
//! per-representation operator norms (via the band shortcut whenever the
//! symbol is single-diagonal), the sup, a log-log growth slope fitted over
//! the upper half of the range, and a stabilization ratio comparing the
//! largest index against half of it.
//!
//! `factor_decomposition` reproduces the three-factor telescoping
//! `R_α = (X₁L^{-1/2}) (L^{1/2}X₂L^{-1/2}) ⋯ (L^{1/2}X_{|α|}L^{-|α|/2})`
//! whose per-factor max-entry norms bound the full operator norm from above.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexMatrix, GeneratorWord, Group, HalfInt, Letter};
use crate::error::{Error, Result};
use crate::heisenberg::{heis_word_symbol, HeisRep, WindowedSymbol};
use crate::multiplier::MultiplierSpec;
use crate::su2::{su2_multiplier_symbol, su2_word_symbol, Su2Operator};

/// Where a sweep runs and against which operator.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RieszContext {
    pub group: Group,
    pub operator: Su2Operator,
    pub heis_rep: Option<HeisRep>,
}

impl RieszContext {
    pub fn su2(operator: Su2Operator) -> Self {
        RieszContext { group: Group::Su2, operator, heis_rep: None }
    }

    /// Heisenberg context; sweeps range over λ at the fixed truncation.
    pub fn heis(rep: HeisRep) -> Self {
        RieszContext { group: Group::Heis, operator: Su2Operator::SubL, heis_rep: Some(rep) }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSample {
    pub index: f64,
    pub norm: f64,
}

/// Result of a norm sweep over representation indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub word: GeneratorWord,
    pub samples: Vec<SweepSample>,
    pub sup_norm: f64,
    pub growth_slope: f64,
    pub stabilization_ratio: f64,
    /// Truncation-exact row window (Heisenberg only).
    pub window: Option<(usize, usize)>,
}

/// Ordinary least-squares slope of `log y` against `log x`; points with
/// non-positive values are dropped, and fewer than two usable points give 0.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|&(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return 0.0;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// SU(2) Riesz symbol `σ_w(l) · σ_L^{-|w|/2}(l)`. The trivial representation
/// is excluded: it is the kernel of both operators.
pub fn riesz_symbol_su2(
    word: &GeneratorWord,
    op: Su2Operator,
    l: HalfInt,
) -> Result<ComplexMatrix> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    if l == HalfInt::ZERO {
        return Err(Error::TrivialRepresentation);
    }
    let w = su2_word_symbol(word, l)?;
    let mult = su2_multiplier_symbol(
        &MultiplierSpec::FracPower(-(word.len() as f64) / 2.0),
        op,
        l,
    )?;
    Ok(w.matrix.mul(&mult.matrix))
}

/// Heisenberg Riesz symbol at one representation, masked to the valid window.
pub fn riesz_symbol_heis(word: &GeneratorWord, rep: HeisRep) -> Result<WindowedSymbol> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let w = heis_word_symbol(word, rep)?;
    let diag: Vec<f64> = (0..rep.trunc())
        .map(|k| rep.subl_eigenvalue(k).powf(-(word.len() as f64) / 2.0))
        .collect();
    let mult = ComplexMatrix::from_real_diagonal(&diag);
    let product = w.matrix.mul(&mult);
    Ok(WindowedSymbol {
        matrix: product.mask_rows(w.valid_rows.0, w.valid_rows.1),
        valid_rows: w.valid_rows,
    })
}

fn sample_norm(matrix: &ComplexMatrix) -> Result<f64> {
    if matrix.band_offset().is_some() {
        matrix.diag_band_norm()
    } else {
        matrix.op_norm()
    }
}

/// Sweeps the Riesz symbol norm over representation indices: spins `l` for
/// SU(2), parameters `λ` for H₁ (at the context's fixed truncation). Samples
/// are evaluated in parallel.
pub fn riesz_sweep(ctx: &RieszContext, word: &GeneratorWord, indices: &[f64]) -> Result<SweepReport> {
    if indices.is_empty() {
        return Err(Error::InvalidParam("empty sweep range".into()));
    }
    if indices.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidParam("sweep range must be strictly ascending".into()));
    }
    let window = match ctx.group {
        Group::Su2 => None,
        Group::Heis => {
            let rep = ctx.heis_rep.ok_or_else(|| {
                Error::InvalidParam("Heisenberg sweep needs a representation".into())
            })?;
            Some((word.len(), rep.trunc() - 1 - word.len()))
        }
    };
    let samples: Result<Vec<SweepSample>> = indices
        .par_iter()
        .map(|&index| {
            let norm = match ctx.group {
                Group::Su2 => {
                    let l = HalfInt::try_from_f64(index)?;
                    sample_norm(&riesz_symbol_su2(word, ctx.operator, l)?)?
                }
                Group::Heis => {
                    let base = ctx.heis_rep.unwrap();
                    let rep = HeisRep::new(index, base.trunc())?;
                    sample_norm(&riesz_symbol_heis(word, rep)?.matrix)?
                }
            };
            Ok(SweepSample { index, norm })
        })
        .collect();
    let samples = samples?;
    let sup_norm = samples.iter().map(|s| s.norm).fold(0.0, f64::max);
    let top = samples.last().unwrap();
    let half_target = top.index / 2.0;
    let at_half = samples
        .iter()
        .min_by(|a, b| {
            (a.index - half_target)
                .abs()
                .partial_cmp(&(b.index - half_target).abs())
                .unwrap()
        })
        .unwrap();
    let stabilization_ratio = if at_half.norm == 0.0 {
        if top.norm == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        top.norm / at_half.norm
    };
    let upper: Vec<(f64, f64)> = samples
        .iter()
        .filter(|s| s.index >= half_target)
        .map(|s| (s.index, s.norm))
        .collect();
    let growth_slope = log_log_slope(&upper);
    Ok(SweepReport {
        word: word.clone(),
        samples,
        sup_norm,
        growth_slope,
        stabilization_ratio,
        window,
    })
}

/// Max-entry norms of the three factor types at one spin index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorBounds {
    /// `‖σ_{w₁} σ_L^{-1/2}‖_∞`
    pub t1: f64,
    /// `‖σ_L^{1/2} σ_{w_j} σ_L^{-1/2}‖_∞` for the interior letters
    pub t2: Vec<f64>,
    /// `‖σ_L^{1/2} σ_{w_{|α|}} σ_L^{-|α|/2}‖_∞`
    pub t3: f64,
}

impl FactorBounds {
    /// Product of all factors; an upper bound for the Riesz symbol norm.
    pub fn product(&self) -> f64 {
        self.t1 * self.t2.iter().product::<f64>() * self.t3
    }
}

/// Telescoping factor norms for a `{P, M}` word against the sub-Laplacian.
pub fn factor_decomposition(word: &GeneratorWord, l: HalfInt) -> Result<FactorBounds> {
    if word.len() < 2 {
        return Err(Error::NeedLengthTwo);
    }
    if word.letters().iter().any(|&c| c != Letter::P && c != Letter::M) {
        return Err(Error::InvalidParam("factor decomposition expects a {P,M} word".into()));
    }
    if l == HalfInt::ZERO {
        return Err(Error::TrivialRepresentation);
    }
    let letter_mat = |c: Letter| -> ComplexMatrix {
        su2_word_symbol(&GeneratorWord::new(Group::Su2, vec![c]).unwrap(), l).unwrap().matrix
    };
    let sqrt = su2_multiplier_symbol(&MultiplierSpec::FracPower(0.5), Su2Operator::SubL, l)?.matrix;
    let inv_sqrt =
        su2_multiplier_symbol(&MultiplierSpec::FracPower(-0.5), Su2Operator::SubL, l)?.matrix;
    let tail = su2_multiplier_symbol(
        &MultiplierSpec::FracPower(-(word.len() as f64) / 2.0),
        Su2Operator::SubL,
        l,
    )?
    .matrix;
    let letters = word.letters();
    let t1 = letter_mat(letters[0]).mul(&inv_sqrt).max_abs();
    let t2 = letters[1..letters.len() - 1]
        .iter()
        .map(|&c| sqrt.mul(&letter_mat(c)).mul(&inv_sqrt).max_abs())
        .collect();
    let t3 = sqrt.mul(&letter_mat(letters[letters.len() - 1])).mul(&tail).max_abs();
    Ok(FactorBounds { t1, t2, t3 })
}

/// Exact expansion of the sub-Laplacian power over square-words:
/// `L^k = (-1)^k Σ S₁²S₂²…S_k²` with each `S_i ∈ {R1, R2}`, giving `2^k`
/// words of length `2k`, all with coefficient `(-1)^k`.
pub fn expand_subl_power(k: usize) -> Result<Vec<(i32, GeneratorWord)>> {
    if !(1..=6).contains(&k) {
        return Err(Error::Unsupported(format!("expand_subl_power needs 1 <= k <= 6, got {k}")));
    }
    let coeff = if k % 2 == 0 { 1 } else { -1 };
    let mut out = Vec::with_capacity(1 << k);
    for bits in 0..(1u32 << k) {
        let mut letters = Vec::with_capacity(2 * k);
        for pos in 0..k {
            // lexicographic with R1 < R2: high bit first
            let pick = (bits >> (k - 1 - pos)) & 1;
            let s = if pick == 0 { Letter::R1 } else { Letter::R2 };
            letters.push(s);
            letters.push(s);
        }
        out.push((coeff, GeneratorWord::new(Group::Su2, letters).unwrap()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_words;
    use crate::su2::{su2_symbol, Su2Generator};
    use num_complex::Complex64;

    fn su2_word(text: &str) -> GeneratorWord {
        GeneratorWord::parse(Group::Su2, text).unwrap()
    }

    fn heis_word(text: &str) -> GeneratorWord {
        GeneratorWord::parse(Group::Heis, text).unwrap()
    }

    #[test]
    fn su2_symbol_examples() {
        // [P] at l = 1/2: [[0,0],[-1,0]]·diag(√2,√2) has entry -√2, norm √2
        let m = riesz_symbol_su2(&su2_word("P"), Su2Operator::SubL, HalfInt::HALF).unwrap();
        assert!((m.get(1, 0).re + 2.0_f64.sqrt()).abs() < 1e-14);
        assert!((sample_norm(&m).unwrap() - 2.0_f64.sqrt()).abs() < 1e-14);

        // [R1] at l = 1/2: norm √2/2 <= 1
        let m = riesz_symbol_su2(&su2_word("R1"), Su2Operator::SubL, HalfInt::HALF).unwrap();
        assert!((m.op_norm().unwrap() - 2.0_f64.sqrt() / 2.0).abs() < 1e-12);

        assert_eq!(
            riesz_symbol_su2(&su2_word("P"), Su2Operator::SubL, HalfInt::ZERO).unwrap_err(),
            Error::TrivialRepresentation
        );
        assert_eq!(
            riesz_symbol_su2(&GeneratorWord::empty(Group::Su2), Su2Operator::SubL, HalfInt::ONE)
                .unwrap_err(),
            Error::EmptyWord
        );
    }

    #[test]
    fn heis_symbol_band_entries() {
        // [Zb] at λ = 1: band entries √(2(k+1)/(2k+3)), increasing toward 1
        let rep = HeisRep::new(1.0, 64).unwrap();
        let w = riesz_symbol_heis(&heis_word("Zb"), rep).unwrap();
        assert_eq!(w.matrix.band_offset(), Some(-1));
        let mut prev = 0.0;
        for k in 1..40usize {
            let got = w.matrix.get(k, k + 1).norm();
            let want = (2.0 * (k as f64 + 1.0) / (2.0 * k as f64 + 3.0)).sqrt();
            assert!((got - want).abs() < 1e-13, "k = {k}");
            assert!(got > prev);
            prev = got;
        }
    }

    #[test]
    fn sweep_of_single_ladder_is_constant_sqrt2() {
        let ctx = RieszContext::su2(Su2Operator::SubL);
        let indices: Vec<f64> = (1..=100).map(|t| t as f64 / 2.0).collect();
        let report = riesz_sweep(&ctx, &su2_word("P"), &indices).unwrap();
        for s in &report.samples {
            assert!((s.norm - 2.0_f64.sqrt()).abs() < 1e-12, "l = {}", s.index);
        }
        assert!(report.growth_slope.abs() < 1e-10);
        assert!((report.stabilization_ratio - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sweep_of_alternating_word_is_constant_four() {
        // the boundary weight gives (σ_Pσ_M)² L^{-2} the exact value 4 at m = l
        let ctx = RieszContext::su2(Su2Operator::SubL);
        let indices: Vec<f64> = (1..=100).map(|t| t as f64 / 2.0).collect();
        let report = riesz_sweep(&ctx, &su2_word("PMPM"), &indices).unwrap();
        assert!((report.sup_norm - 4.0).abs() < 1e-12);
        for s in &report.samples {
            assert!((s.norm - 4.0).abs() < 1e-12);
        }
        assert!(report.growth_slope.abs() < 1e-10);
    }

    #[test]
    fn heis_sweep_over_lambda_is_flat() {
        let rep = HeisRep::new(1.0, 1024).unwrap();
        let ctx = RieszContext::heis(rep);
        let report = riesz_sweep(&ctx, &heis_word("Z"), &[0.25, 1.0, 4.0]).unwrap();
        // sup over the window is √2, attained at k = 0
        assert!((report.sup_norm - 2.0_f64.sqrt()).abs() < 1e-14);
        for s in &report.samples {
            assert!((s.norm - 2.0_f64.sqrt()).abs() < 1e-12);
        }
        assert_eq!(report.window, Some((1, 1022)));
    }

    #[test]
    fn factor_decomposition_examples() {
        // t1 of [P,M] at l = 1 is √2 (boundary entry)
        let fb = factor_decomposition(&su2_word("PM"), HalfInt::ONE).unwrap();
        assert!((fb.t1 - 2.0_f64.sqrt()).abs() < 1e-13);
        assert!(fb.t2.is_empty());

        assert_eq!(
            factor_decomposition(&su2_word("P"), HalfInt::ONE).unwrap_err(),
            Error::NeedLengthTwo
        );
        assert!(factor_decomposition(&su2_word("R1R2"), HalfInt::ONE).is_err());
    }

    #[test]
    fn factor_slopes_over_the_sweep_range() {
        // measured log-log slopes over l = 5..50: the interior maximum gives
        // the type-2 factor ~ l (slope 0.9663); the type-3 factor for a
        // length-3 word is dominated by the m = -l boundary entry
        // √((3l-1)·2l)·l^{-3/2} ~ √6·l^{-1/2} (slope -0.4895)
        let mut t2_pts = Vec::new();
        let mut t3_pts = Vec::new();
        for t in 10..=100u32 {
            let l = HalfInt::from_twice(t);
            let fb = factor_decomposition(&su2_word("PMP"), l).unwrap();
            t2_pts.push((l.value(), fb.t2[0]));
            t3_pts.push((l.value(), fb.t3));
        }
        let t2_slope = log_log_slope(&t2_pts);
        let t3_slope = log_log_slope(&t3_pts);
        assert!((t2_slope - 0.9663).abs() < 5e-3, "t2 slope {t2_slope}");
        assert!((t3_slope + 0.4895).abs() < 5e-3, "t3 slope {t3_slope}");
    }

    #[test]
    fn factor_product_bounds_riesz_norm() {
        for text in ["PM", "PMP", "PPMM", "MPMPM"] {
            let word = su2_word(text);
            for t in [4u32, 11, 40] {
                let l = HalfInt::from_twice(t);
                let fb = factor_decomposition(&word, l).unwrap();
                let symbol = riesz_symbol_su2(&word, Su2Operator::SubL, l).unwrap();
                let norm = sample_norm(&symbol).unwrap();
                assert!(
                    fb.product() >= norm - 1e-10,
                    "{text} at l = {l}: {} < {norm}",
                    fb.product()
                );
            }
        }
    }

    #[test]
    fn expansion_of_sub_laplacian_powers() {
        let e1 = expand_subl_power(1).unwrap();
        assert_eq!(e1.len(), 2);
        assert!(e1.iter().all(|(c, w)| *c == -1 && w.len() == 2));
        assert_eq!(e1[0].1.to_string(), "R1R1");
        assert_eq!(e1[1].1.to_string(), "R2R2");

        let e2 = expand_subl_power(2).unwrap();
        assert_eq!(e2.len(), 4);
        assert!(e2.iter().all(|(c, w)| *c == 1 && w.len() == 4));

        assert!(expand_subl_power(0).is_err());
        assert!(expand_subl_power(7).is_err());
    }

    #[test]
    fn expansion_matches_matrix_powers_at_l3() {
        let l = HalfInt::from_int(3);
        let subl = su2_symbol(Su2Generator::SubL, l).matrix;
        for k in 1..=3usize {
            let mut acc = ComplexMatrix::zeros(l.dim(), l.dim());
            for (coeff, word) in expand_subl_power(k).unwrap() {
                let m = su2_word_symbol(&word, l).unwrap().matrix;
                acc = acc.add(&m.scale(Complex64::new(coeff as f64, 0.0)));
            }
            let mut target = ComplexMatrix::identity(l.dim());
            for _ in 0..k {
                target = target.mul(&subl);
            }
            assert!(acc.max_abs_diff(&target) < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn symmetrized_multinomial_fails_at_h3() {
        // (Y₁+Y₂)^h vs (1/2!)Σ_{k₁+k₂=h} h!/(k₁!k₂!) Σ_σ Y_{σ(1)}^{k₁}Y_{σ(2)}^{k₂}
        // with Y_j = -σ_{Rj}²: equality holds at h = 2, fails at h = 3.
        let l = HalfInt::from_int(2);
        let r1 = su2_symbol(Su2Generator::R1, l).matrix;
        let r2 = su2_symbol(Su2Generator::R2, l).matrix;
        let y1 = r1.mul(&r1).scale(Complex64::new(-1.0, 0.0));
        let y2 = r2.mul(&r2).scale(Complex64::new(-1.0, 0.0));
        let pow = |m: &ComplexMatrix, k: usize| {
            let mut acc = ComplexMatrix::identity(l.dim());
            for _ in 0..k {
                acc = acc.mul(m);
            }
            acc
        };
        let sym_formula = |h: usize| {
            let mut acc = ComplexMatrix::zeros(l.dim(), l.dim());
            for k1 in 0..=h {
                let k2 = h - k1;
                let coeff = (1..=h).product::<usize>() as f64
                    / ((1..=k1).product::<usize>() as f64 * (1..=k2).product::<usize>() as f64);
                for (a, b) in [(&y1, &y2), (&y2, &y1)] {
                    acc = acc.add(&pow(a, k1).mul(&pow(b, k2)).scale(Complex64::new(coeff, 0.0)));
                }
            }
            acc.scale(Complex64::new(0.5, 0.0))
        };
        let lhs2 = pow(&y1.add(&y2), 2);
        assert!(lhs2.max_abs_diff(&sym_formula(2)) < 1e-10);
        let lhs3 = pow(&y1.add(&y2), 3);
        let residual = lhs3.max_abs_diff(&sym_formula(3));
        assert!(residual > 1.0, "h = 3 residual unexpectedly small: {residual}");
    }

    #[test]
    fn heis_lambda_invariance_of_windowed_sup() {
        for text in ["Z", "Zb", "ZZb", "ZbZZ"] {
            let word = heis_word(text);
            let base =
                riesz_symbol_heis(&word, HeisRep::new(1.0, 256).unwrap()).unwrap().windowed_max_abs();
            for lam in [0.25, 4.0] {
                let v = riesz_symbol_heis(&word, HeisRep::new(lam, 256).unwrap())
                    .unwrap()
                    .windowed_max_abs();
                assert!((v - base).abs() < 1e-12, "{text} at λ = {lam}");
            }
        }
    }

    #[test]
    fn order_one_riesz_bound_spot_checks() {
        for t in [1u32, 2, 7, 40, 99] {
            let l = HalfInt::from_twice(t);
            for text in ["R1", "R2"] {
                for op in [Su2Operator::SubL, Su2Operator::Beltrami] {
                    let m = riesz_symbol_su2(&su2_word(text), op, l).unwrap();
                    assert!(m.op_norm().unwrap() <= 1.0 + 1e-12, "{text} l={l}");
                }
            }
        }
    }

    #[test]
    fn beltrami_words_stay_contractive() {
        for word in enumerate_words(&[Letter::R1, Letter::R2], 3).unwrap() {
            let m = riesz_symbol_su2(&word, Su2Operator::Beltrami, HalfInt::from_int(5)).unwrap();
            assert!(m.op_norm().unwrap() <= 1.0 + 1e-12, "{word}");
        }
    }

    #[test]
    fn sweep_validates_ranges() {
        let ctx = RieszContext::su2(Su2Operator::SubL);
        assert!(riesz_sweep(&ctx, &su2_word("P"), &[]).is_err());
        assert!(riesz_sweep(&ctx, &su2_word("P"), &[1.0, 0.5]).is_err());
        assert_eq!(
            riesz_sweep(&ctx, &su2_word("P"), &[0.0, 0.5]).unwrap_err(),
            Error::TrivialRepresentation
        );
    }
}

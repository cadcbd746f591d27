//! Truncated Hermite-basis matrices of the infinitesimal Schrödinger
//! representation of H₁ at parameter `λ ≠ 0`.
//!
//! With Hermite indices `k = 0 … N-1` the generator matrices are
//!
//! ```text
//! π_λ(L)[k,l] = |λ|(2k+1) δ_{k,l}
//! π_λ(X)[k,l] =  √|λ|√((k+1)/2)  if k = l-1,   -√|λ|√(k/2)  if k = l+1
//! π_λ(Y)[k,l] = i√λ √((k+1)/2)   if k = l-1,   i√λ √(k/2)   if k = l+1
//! π_λ(T)      = iλ·I
//! ```
//!
//! using the sign convention `√λ := sgn(λ)√|λ|`. The complex fields are
//! derived as `Z = π(X) + iπ(Y)` and `Z̄ = π(X) - iπ(Y)`; for `λ > 0` the
//! upper diagonal of `Z` cancels exactly and a single travelling diagonal
//! remains (for `λ < 0` the roles of the two diagonals swap). Products of
//! such matrices corrupt only rows within `|word|` of the truncation edge,
//! so a word symbol carries a window of rows on which its entries equal
//! those of the untruncated infinite matrix.

use num_complex::Complex64;

use crate::algebra::{ComplexMatrix, GeneratorWord, Group, Letter, RepIndex, SymbolMatrix};
use crate::error::{Error, Result};

/// One Schrödinger representation: parameter `λ ≠ 0` and Hermite truncation
/// `N >= 2`.
#[derive(Copy, Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct HeisRep {
    lambda: f64,
    trunc: usize,
}

impl HeisRep {
    pub fn new(lambda: f64, trunc: usize) -> Result<Self> {
        if !lambda.is_finite() || lambda == 0.0 {
            return Err(Error::InvalidLambda);
        }
        if trunc < 2 {
            return Err(Error::InvalidParam(format!("truncation {trunc} < 2")));
        }
        Ok(HeisRep { lambda, trunc })
    }

    pub fn lambda(self) -> f64 {
        self.lambda
    }

    pub fn trunc(self) -> usize {
        self.trunc
    }

    /// `√λ = sgn(λ)√|λ|`.
    fn sqrt_lambda(self) -> f64 {
        self.lambda.signum() * self.lambda.abs().sqrt()
    }

    /// Sub-Laplacian eigenvalue `|λ|(2k+1)`.
    pub fn subl_eigenvalue(self, k: usize) -> f64 {
        self.lambda.abs() * (2.0 * k as f64 + 1.0)
    }
}

/// Generators with a matrix at every representation.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HeisGenerator {
    X,
    Y,
    T,
    Z,
    Zb,
    SubL,
}

/// A truncated word symbol plus the rows on which it is truncation-exact.
#[derive(Clone, Debug)]
pub struct WindowedSymbol {
    pub matrix: ComplexMatrix,
    /// Inclusive row interval `[r0, r1]` unaffected by the truncation.
    pub valid_rows: (usize, usize),
}

impl WindowedSymbol {
    /// Largest entry modulus over the valid rows.
    pub fn windowed_max_abs(&self) -> f64 {
        let (lo, hi) = self.valid_rows;
        let m = &self.matrix;
        if let Some(off) = m.band_offset() {
            let mut best = 0.0_f64;
            for j in 0..m.cols() {
                let i = j as i64 + off;
                if i >= lo as i64 && i <= hi as i64 {
                    best = best.max(m.get(i as usize, j).norm());
                }
            }
            return best;
        }
        let mut best = 0.0_f64;
        for i in lo..=hi.min(m.rows() - 1) {
            for j in 0..m.cols() {
                best = best.max(m.get(i, j).norm());
            }
        }
        best
    }

    /// The matrix with all rows outside the window zeroed.
    pub fn masked(&self) -> ComplexMatrix {
        self.matrix.mask_rows(self.valid_rows.0, self.valid_rows.1)
    }
}

fn off_diag_magnitude(rep: HeisRep, k: usize) -> f64 {
    rep.lambda.abs().sqrt() * ((k as f64 + 1.0) / 2.0).sqrt()
}

fn x_matrix(rep: HeisRep) -> ComplexMatrix {
    let n = rep.trunc;
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j {
            Complex64::new(off_diag_magnitude(rep, i), 0.0)
        } else if i == j + 1 {
            Complex64::new(-off_diag_magnitude(rep, j), 0.0)
        } else {
            Complex64::ZERO
        }
    })
}

fn y_matrix(rep: HeisRep) -> ComplexMatrix {
    let n = rep.trunc;
    let s = rep.sqrt_lambda();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i + 1 == j {
            Complex64::new(0.0, s * ((i as f64 + 1.0) / 2.0).sqrt())
        } else if i == j + 1 {
            Complex64::new(0.0, s * ((j as f64 + 1.0) / 2.0).sqrt())
        } else {
            Complex64::ZERO
        }
    })
}

/// `π(X) ± iπ(Y)`, computed entrywise on the two candidate diagonals. One
/// diagonal cancels exactly (which one depends on the sign of λ), so the
/// result carries a band tag.
fn complex_field(rep: HeisRep, conjugate: bool) -> ComplexMatrix {
    let n = rep.trunc;
    let s = rep.sqrt_lambda();
    let i_unit = Complex64::new(0.0, 1.0) * if conjugate { -1.0 } else { 1.0 };
    let upper: Vec<Complex64> = (0..n - 1)
        .map(|k| {
            let mag = ((k as f64 + 1.0) / 2.0).sqrt();
            Complex64::new(rep.lambda.abs().sqrt() * mag, 0.0)
                + i_unit * Complex64::new(0.0, s * mag)
        })
        .collect();
    let lower: Vec<Complex64> = (0..n - 1)
        .map(|k| {
            let mag = ((k as f64 + 1.0) / 2.0).sqrt();
            Complex64::new(-rep.lambda.abs().sqrt() * mag, 0.0)
                + i_unit * Complex64::new(0.0, s * mag)
        })
        .collect();
    if upper.iter().all(|&z| z == Complex64::ZERO) {
        ComplexMatrix::from_band(n, 1, |j| if j + 1 < n { lower[j] } else { Complex64::ZERO })
    } else if lower.iter().all(|&z| z == Complex64::ZERO) {
        ComplexMatrix::from_band(n, -1, |j| if j >= 1 { upper[j - 1] } else { Complex64::ZERO })
    } else {
        // does not occur for λ ≠ 0, but keep the dense fallback honest
        ComplexMatrix::from_fn(n, n, |i, j| {
            if i + 1 == j {
                upper[i]
            } else if i == j + 1 {
                lower[j]
            } else {
                Complex64::ZERO
            }
        })
    }
}

/// The `N × N` generator matrix at one representation.
pub fn heis_symbol(gen: HeisGenerator, rep: HeisRep) -> SymbolMatrix {
    let n = rep.trunc;
    let matrix = match gen {
        HeisGenerator::X => x_matrix(rep),
        HeisGenerator::Y => y_matrix(rep),
        HeisGenerator::T => {
            let t = Complex64::new(0.0, rep.lambda);
            ComplexMatrix::from_diagonal(&vec![t; n])
        }
        HeisGenerator::Z => complex_field(rep, false),
        HeisGenerator::Zb => complex_field(rep, true),
        HeisGenerator::SubL => {
            let diag: Vec<f64> = (0..n).map(|k| rep.subl_eigenvalue(k)).collect();
            ComplexMatrix::from_real_diagonal(&diag)
        }
    };
    SymbolMatrix { rep: RepIndex::Heis { lambda: rep.lambda, trunc: rep.trunc }, matrix }
}

fn letter_generator(letter: Letter) -> HeisGenerator {
    match letter {
        Letter::X => HeisGenerator::X,
        Letter::Y => HeisGenerator::Y,
        Letter::Z => HeisGenerator::Z,
        Letter::Zb => HeisGenerator::Zb,
        _ => unreachable!("non-Heisenberg letter"),
    }
}

/// Ordered product of the letter matrices, with truncation bookkeeping:
/// `valid_rows = [|word|, N-1-|word|]`. Requires `2|word| < N`.
pub fn heis_word_symbol(word: &GeneratorWord, rep: HeisRep) -> Result<WindowedSymbol> {
    if word.group() != Group::Heis {
        return Err(Error::WrongGroup(Group::Heis));
    }
    let n = rep.trunc;
    if 2 * word.len() >= n {
        return Err(Error::TruncationTooSmall { word_len: word.len(), trunc: n });
    }
    if word.is_empty() {
        return Ok(WindowedSymbol {
            matrix: ComplexMatrix::identity(n),
            valid_rows: (0, n - 1),
        });
    }
    let mut cache: [Option<ComplexMatrix>; 4] = [None, None, None, None];
    let slot = |letter: Letter| match letter {
        Letter::X => 0usize,
        Letter::Y => 1,
        Letter::Z => 2,
        Letter::Zb => 3,
        _ => unreachable!(),
    };
    let mut acc = ComplexMatrix::identity(n);
    for &letter in word.letters() {
        let idx = slot(letter);
        if cache[idx].is_none() {
            cache[idx] = Some(heis_symbol(letter_generator(letter), rep).matrix);
        }
        acc = acc.mul(cache[idx].as_ref().unwrap());
    }
    Ok(WindowedSymbol { matrix: acc, valid_rows: (word.len(), n - 1 - word.len()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(lambda: f64, n: usize) -> HeisRep {
        HeisRep::new(lambda, n).unwrap()
    }

    fn word(text: &str) -> GeneratorWord {
        GeneratorWord::parse(Group::Heis, text).unwrap()
    }

    #[test]
    fn rep_validation() {
        assert_eq!(HeisRep::new(0.0, 8).unwrap_err(), Error::InvalidLambda);
        assert!(HeisRep::new(-1.0, 8).is_ok());
        assert!(HeisRep::new(1.0, 1).is_err());
    }

    #[test]
    fn sub_laplacian_diagonal() {
        let m = heis_symbol(HeisGenerator::SubL, rep(1.0, 3)).matrix;
        for (k, want) in [1.0, 3.0, 5.0].into_iter().enumerate() {
            assert_eq!(m.get(k, k), Complex64::new(want, 0.0));
        }
    }

    #[test]
    fn x_at_n2() {
        let m = heis_symbol(HeisGenerator::X, rep(1.0, 2)).matrix;
        let v = (0.5_f64).sqrt();
        assert_eq!(m.get(0, 1), Complex64::new(v, 0.0));
        assert_eq!(m.get(1, 0), Complex64::new(-v, 0.0));
        assert_eq!(m.get(0, 0), Complex64::ZERO);
    }

    #[test]
    fn center_is_scalar() {
        let m = heis_symbol(HeisGenerator::T, rep(2.0, 4)).matrix;
        for k in 0..4 {
            assert_eq!(m.get(k, k), Complex64::new(0.0, 2.0));
        }
    }

    #[test]
    fn z_is_derived_from_x_and_y() {
        // entry (1,0) = -2·√(1/2) = -√2; Z = X + iY entrywise
        let r = rep(1.0, 2);
        let z = heis_symbol(HeisGenerator::Z, r).matrix;
        assert_eq!(z.get(1, 0), Complex64::new(-(2.0_f64.sqrt()), 0.0));
        assert_eq!(z.get(0, 1), Complex64::ZERO);
        assert_eq!(z.band_offset(), Some(1));

        let r = rep(1.75, 9);
        let x = heis_symbol(HeisGenerator::X, r).matrix;
        let y = heis_symbol(HeisGenerator::Y, r).matrix;
        let i = Complex64::new(0.0, 1.0);
        let z = heis_symbol(HeisGenerator::Z, r).matrix;
        let zb = heis_symbol(HeisGenerator::Zb, r).matrix;
        assert_eq!(z.max_abs_diff(&x.add(&y.scale(i))), 0.0);
        assert_eq!(zb.max_abs_diff(&x.sub(&y.scale(i))), 0.0);
        assert_eq!(zb.band_offset(), Some(-1));
    }

    #[test]
    fn negative_lambda_swaps_the_travelling_diagonal() {
        let z = heis_symbol(HeisGenerator::Z, rep(-1.0, 6)).matrix;
        assert_eq!(z.band_offset(), Some(-1));
        let zb = heis_symbol(HeisGenerator::Zb, rep(-1.0, 6)).matrix;
        assert_eq!(zb.band_offset(), Some(1));
    }

    #[test]
    fn skew_adjointness_is_exact() {
        for lam in [0.5, 1.0, -2.0] {
            let r = rep(lam, 16);
            for gen in [HeisGenerator::X, HeisGenerator::Y] {
                let m = heis_symbol(gen, r).matrix;
                assert_eq!(m.adjoint().max_abs_diff(&m.scale(Complex64::new(-1.0, 0.0))), 0.0);
            }
        }
    }

    #[test]
    fn sub_laplacian_identity_on_valid_rows() {
        // -(X² + Y²) = SubL on rows [1, N-2]
        let n = 64;
        for lam in [0.5, 1.0, 2.0] {
            let r = rep(lam, n);
            let x = heis_symbol(HeisGenerator::X, r).matrix;
            let y = heis_symbol(HeisGenerator::Y, r).matrix;
            let lhs = x.mul(&x).add(&y.mul(&y)).scale(Complex64::new(-1.0, 0.0));
            let subl = heis_symbol(HeisGenerator::SubL, r).matrix;
            let diff = lhs.sub(&subl).mask_rows(1, n - 2);
            assert!(diff.max_abs() < 1e-12 * lam.abs() * n as f64, "lambda {lam}");
        }
    }

    #[test]
    fn center_and_anticommutator_identities() {
        let n = 64;
        for lam in [0.5, 1.0, 2.0] {
            let r = rep(lam, n);
            let z = heis_symbol(HeisGenerator::Z, r).matrix;
            let zb = heis_symbol(HeisGenerator::Zb, r).matrix;
            // (i/2)[Z, Z̄] = iλ·I on the interior rows
            let comm = z.commutator(&zb).scale(Complex64::new(0.0, 0.5));
            let target = ComplexMatrix::from_diagonal(&vec![Complex64::new(0.0, lam); n]);
            assert!(comm.sub(&target).mask_rows(1, n - 2).max_abs() < 1e-12 * lam.abs());
            // -(ZZ̄ + Z̄Z)/2 = SubL
            let anti = z.anticommutator(&zb).scale(Complex64::new(-0.5, 0.0));
            let subl = heis_symbol(HeisGenerator::SubL, r).matrix;
            assert!(
                anti.sub(&subl).mask_rows(1, n - 2).max_abs() < 1e-12 * lam.abs() * n as f64
            );
        }
    }

    #[test]
    fn word_symbol_examples() {
        // [Z, Zb] product: (ZZ̄)_{1,1} = Z_{1,0}·Z̄_{0,1} = (-√2)(√2) = -2
        let w = heis_word_symbol(&word("ZZb"), rep(1.0, 8)).unwrap();
        assert!((w.matrix.get(1, 1) - Complex64::new(-2.0, 0.0)).norm() < 1e-14);
        assert_eq!(w.valid_rows, (2, 5));
        assert_eq!(w.matrix.band_offset(), Some(0));

        // [X] at λ = 4 is 2× the λ = 1 matrix
        let w4 = heis_word_symbol(&word("X"), rep(4.0, 4)).unwrap();
        let v = (0.5_f64).sqrt();
        assert_eq!(w4.matrix.get(0, 1), Complex64::new(2.0 * v, 0.0));
        assert_eq!(w4.matrix.get(1, 0), Complex64::new(-2.0 * v, 0.0));

        // empty word: identity, full window
        let e = heis_word_symbol(&GeneratorWord::empty(Group::Heis), rep(1.0, 4)).unwrap();
        assert_eq!(e.valid_rows, (0, 3));
        assert_eq!(e.matrix.max_abs_diff(&ComplexMatrix::identity(4)), 0.0);
    }

    #[test]
    fn word_symbol_errors() {
        assert_eq!(
            heis_word_symbol(&word("ZZbZ"), rep(1.0, 6)).unwrap_err(),
            Error::TruncationTooSmall { word_len: 3, trunc: 6 }
        );
        assert_eq!(
            heis_word_symbol(&GeneratorWord::parse(Group::Su2, "PM").unwrap(), rep(1.0, 8))
                .unwrap_err(),
            Error::WrongGroup(Group::Heis)
        );
    }

    #[test]
    fn band_offset_counts_z_minus_zb() {
        for (text, off) in [("Z", 1i64), ("Zb", -1), ("ZZbZ", 1), ("ZZZbZb", 0), ("ZbZbZ", -1)] {
            let w = heis_word_symbol(&word(text), rep(1.0, 32)).unwrap();
            assert_eq!(w.matrix.band_offset(), Some(off), "word {text}");
        }
    }

    #[test]
    fn homogeneity_is_exact_for_dyadic_lambda() {
        // every entry scales by |λ|^{|w|/2}; exact when √λ is a power of two
        for text in ["Z", "ZZb", "XYX", "ZbZbZ"] {
            let w = word(text);
            let base = heis_word_symbol(&w, rep(1.0, 32)).unwrap().matrix;
            for lam in [0.25, 4.0] {
                let scaled = heis_word_symbol(&w, rep(lam, 32)).unwrap().matrix;
                let factor = Complex64::new((lam as f64).powf(w.len() as f64 / 2.0), 0.0);
                assert_eq!(scaled.max_abs_diff(&base.scale(factor)), 0.0, "{text} at {lam}");
            }
        }
    }

    #[test]
    fn windowed_sup_ignores_truncation_rows() {
        // Zb shifts upward; its single corrupted region is near the edge
        let w = heis_word_symbol(&word("ZbZb"), rep(1.0, 16)).unwrap();
        let full = w.matrix.max_abs();
        let windowed = w.windowed_max_abs();
        assert!(windowed <= full);
        assert_eq!(w.masked().max_abs(), windowed);
    }
}

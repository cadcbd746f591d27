//! Dense complex matrices with optional single-diagonal band metadata.
//!
//! The band tag records that every nonzero entry sits on one diagonal
//! `{(i, j) : i - j = band_offset}` (row-minus-column convention). For such
//! matrices the operator norm equals the maximum entry modulus, which turns
//! norm sweeps over large truncations into O(n) work. Products of tagged
//! matrices are computed along the band without touching the dense kernel.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::HalfInt;
use crate::error::{Error, Result};

/// A finite complex matrix, dense storage, with an optional band tag.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    mat: DMatrix<Complex64>,
    band_offset: Option<i64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix { mat: DMatrix::zeros(rows, cols), band_offset: None }
    }

    pub fn identity(n: usize) -> Self {
        ComplexMatrix { mat: DMatrix::identity(n, n), band_offset: Some(0) }
    }

    pub fn from_dense(mat: DMatrix<Complex64>) -> Self {
        ComplexMatrix { mat, band_offset: None }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        ComplexMatrix { mat: DMatrix::from_fn(rows, cols, f), band_offset: None }
    }

    /// Square diagonal matrix (band offset 0).
    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut mat = DMatrix::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            mat[(i, i)] = d;
        }
        ComplexMatrix { mat, band_offset: Some(0) }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diagonal(&d)
    }

    /// Square matrix whose only nonzero diagonal is `{(j + offset, j)}`,
    /// with `values[j]` at column `j`.
    pub fn from_band(n: usize, offset: i64, mut values: impl FnMut(usize) -> Complex64) -> Self {
        let mut mat = DMatrix::zeros(n, n);
        for j in 0..n {
            let i = j as i64 + offset;
            if i >= 0 && (i as usize) < n {
                mat[(i as usize, j)] = values(j);
            }
        }
        ComplexMatrix { mat, band_offset: Some(offset) }
    }

    /// Attaches a band tag, verifying that every off-band entry is zero.
    pub fn with_band(mut self, offset: i64) -> Result<Self> {
        for j in 0..self.cols() {
            for i in 0..self.rows() {
                if i as i64 - j as i64 != offset && self.mat[(i, j)] != Complex64::ZERO {
                    return Err(Error::NotSingleDiagonal);
                }
            }
        }
        self.band_offset = Some(offset);
        Ok(self)
    }

    /// Finds the single nonzero diagonal if there is one (exact zero test).
    /// The zero matrix detects as band 0.
    pub fn detect_band(&self) -> Option<i64> {
        let mut found: Option<i64> = None;
        for j in 0..self.cols() {
            for i in 0..self.rows() {
                if self.mat[(i, j)] != Complex64::ZERO {
                    let off = i as i64 - j as i64;
                    match found {
                        None => found = Some(off),
                        Some(f) if f != off => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(found.unwrap_or(0))
    }

    pub fn rows(&self) -> usize {
        self.mat.nrows()
    }

    pub fn cols(&self) -> usize {
        self.mat.ncols()
    }

    pub fn band_offset(&self) -> Option<i64> {
        self.band_offset
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.mat[(i, j)]
    }

    pub fn dense(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn is_finite(&self) -> bool {
        self.mat.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Matrix product. Band tags compose additively; when both factors are
    /// tagged the product is computed along the band in O(n).
    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch in product");
        if let (Some(a), Some(b)) = (self.band_offset, rhs.band_offset) {
            if self.rows() == self.cols() && rhs.rows() == rhs.cols() {
                let n = self.rows();
                // (AB)[j + a + b, j] = A[j + b + a, j + b] * B[j + b, j]
                return ComplexMatrix::from_band(n, a + b, |j| {
                    let k = j as i64 + b;
                    let i = k + a;
                    if k >= 0 && (k as usize) < n && i >= 0 && (i as usize) < n {
                        self.mat[(i as usize, k as usize)] * rhs.mat[(k as usize, j)]
                    } else {
                        Complex64::ZERO
                    }
                });
            }
        }
        let mat = &self.mat * &rhs.mat;
        let band_offset = match (self.band_offset, rhs.band_offset) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        ComplexMatrix { mat, band_offset }
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let band_offset = match (self.band_offset, rhs.band_offset) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        ComplexMatrix { mat: &self.mat + &rhs.mat, band_offset }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let band_offset = match (self.band_offset, rhs.band_offset) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        ComplexMatrix { mat: &self.mat - &rhs.mat, band_offset }
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        ComplexMatrix { mat: &self.mat * c, band_offset: self.band_offset }
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix { mat: self.mat.transpose(), band_offset: self.band_offset.map(|o| -o) }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix { mat: self.mat.adjoint(), band_offset: self.band_offset.map(|o| -o) }
    }

    pub fn commutator(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.mul(rhs).add(&rhs.mul(self))
    }

    /// Largest entry modulus, `‖A‖_∞ = max_{i,j} |A_{i,j}|`.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus of the difference, for identity checks.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        (&self.mat - &rhs.mat).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Hilbert–Schmidt norm `(Σ|A_{ij}|²)^{1/2}`.
    pub fn hs_norm(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Operator norm `‖A‖ = sup_{‖v‖≤1} ‖Av‖`, the largest singular value.
    ///
    /// Single-diagonal matrices take the O(n) band path (the singular values
    /// of such a matrix are exactly the entry moduli); everything else goes
    /// through a dense SVD.
    pub fn op_norm(&self) -> Result<f64> {
        if !self.is_finite() {
            return Err(Error::InvalidMatrix);
        }
        if self.band_offset.is_some() {
            return self.diag_band_norm();
        }
        if self.rows() == 0 || self.cols() == 0 {
            return Ok(0.0);
        }
        let svd = self.mat.clone().svd(false, false);
        Ok(svd.singular_values.iter().copied().fold(0.0, f64::max))
    }

    /// Maximum entry modulus over the tagged band. Exactly the operator norm
    /// for single-diagonal matrices.
    pub fn diag_band_norm(&self) -> Result<f64> {
        let offset = self.band_offset.ok_or(Error::NotSingleDiagonal)?;
        if !self.is_finite() {
            return Err(Error::InvalidMatrix);
        }
        let mut best = 0.0_f64;
        for j in 0..self.cols() {
            let i = j as i64 + offset;
            if i >= 0 && (i as usize) < self.rows() {
                best = best.max(self.mat[(i as usize, j)].norm());
            }
        }
        Ok(best)
    }

    /// Zeroes every row outside `[lo, hi]` (inclusive), keeping the band tag.
    pub fn mask_rows(&self, lo: usize, hi: usize) -> ComplexMatrix {
        let mut mat = self.mat.clone();
        for i in 0..mat.nrows() {
            if i < lo || i > hi {
                for j in 0..mat.ncols() {
                    mat[(i, j)] = Complex64::ZERO;
                }
            }
        }
        ComplexMatrix { mat, band_offset: self.band_offset }
    }
}

/// Which representation a symbol matrix was evaluated at.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepIndex {
    Su2 { l: HalfInt },
    Heis { lambda: f64, trunc: usize },
}

/// A symbol matrix together with the representation it realizes.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolMatrix {
    pub rep: RepIndex,
    pub matrix: ComplexMatrix,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn op_norm_identity() {
        assert_eq!(ComplexMatrix::identity(2).op_norm().unwrap(), 1.0);
    }

    #[test]
    fn op_norm_scaled_rotation() {
        // [[0, 1], [-1, 0]] / 2 has both singular values 1/2
        let m = ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 1) => c(0.5, 0.0),
            (1, 0) => c(-0.5, 0.0),
            _ => c(0.0, 0.0),
        });
        assert!((m.op_norm().unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn op_norm_ladder_corner() {
        // the l = 1/2 ladder symbol [[0,0],[-1,0]]
        let m = ComplexMatrix::from_fn(2, 2, |i, j| {
            if (i, j) == (1, 0) { c(-1.0, 0.0) } else { c(0.0, 0.0) }
        });
        assert!((m.op_norm().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn op_norm_rejects_non_finite() {
        let m = ComplexMatrix::from_fn(2, 2, |i, j| {
            if (i, j) == (0, 0) { c(f64::NAN, 0.0) } else { c(0.0, 0.0) }
        });
        assert_eq!(m.op_norm().unwrap_err(), Error::InvalidMatrix);
    }

    #[test]
    fn band_norm_examples() {
        let m = ComplexMatrix::from_band(4, 1, |j| match j {
            0 => c(-1.0, 0.0),
            1 => c(0.0, 3.0),
            2 => c(0.5, 0.0),
            _ => c(0.0, 0.0),
        });
        assert_eq!(m.diag_band_norm().unwrap(), 3.0);

        let z = ComplexMatrix::from_band(3, 1, |_| c(0.0, 0.0));
        assert_eq!(z.diag_band_norm().unwrap(), 0.0);

        let untagged = ComplexMatrix::zeros(3, 3);
        assert_eq!(untagged.diag_band_norm().unwrap_err(), Error::NotSingleDiagonal);
    }

    #[test]
    fn with_band_validates() {
        let m = ComplexMatrix::from_fn(3, 3, |i, j| {
            if (i, j) == (1, 0) { c(2.0, 0.0) } else { c(0.0, 0.0) }
        });
        assert!(m.clone().with_band(1).is_ok());
        assert_eq!(m.with_band(0).unwrap_err(), Error::NotSingleDiagonal);
    }

    #[test]
    fn band_norm_matches_svd_on_random_single_diagonals() {
        // Lemma-style contract: for single-diagonal matrices the operator
        // norm equals the max entry modulus.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..100 {
            let n = rng.gen_range(1..=200);
            let max_off = n as i64 - 1;
            let off = rng.gen_range(-max_off..=max_off);
            let m = ComplexMatrix::from_band(n, off, |_| {
                c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0))
            });
            let band = m.diag_band_norm().unwrap();
            let svd = m.dense().clone().svd(false, false);
            let dense: f64 = svd.singular_values.iter().copied().fold(0.0, f64::max);
            assert!(
                (band - dense).abs() <= 1e-12 * band.max(1.0),
                "trial {trial}: band {band} vs svd {dense}"
            );
        }
    }

    #[test]
    fn banded_product_matches_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(2..=40);
            let o1 = rng.gen_range(-2_i64..=2);
            let o2 = rng.gen_range(-2_i64..=2);
            let a = ComplexMatrix::from_band(n, o1, |j| c(rng.gen_range(-1.0..1.0), rng.gen()));
            let b = ComplexMatrix::from_band(n, o2, |j| c(rng.gen_range(-1.0..1.0), j as f64));
            let fast = a.mul(&b);
            let slow = ComplexMatrix::from_dense(a.dense() * b.dense());
            assert_eq!(fast.band_offset(), Some(o1 + o2));
            assert!(fast.max_abs_diff(&slow) == 0.0);
        }
    }

    #[test]
    fn mask_rows_zeroes_outside_window() {
        let m = ComplexMatrix::from_fn(4, 4, |i, j| c((i * 4 + j) as f64, 0.0));
        let w = m.mask_rows(1, 2);
        assert_eq!(w.get(0, 3), Complex64::ZERO);
        assert_eq!(w.get(3, 0), Complex64::ZERO);
        assert_eq!(w.get(1, 2), c(6.0, 0.0));
    }
}

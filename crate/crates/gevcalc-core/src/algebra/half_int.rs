//! Exact half-integer spin indices.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A non-negative half-integer `l ∈ ½ℕ₀`, stored as `2l` so that spin
/// indices and weights stay exact. The representation dimension is
/// `d_l = 2l + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt {
    twice: u32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Builds `l` from `2l`.
    pub fn from_twice(twice: u32) -> Self {
        HalfInt { twice }
    }

    /// Builds an integer spin `l = n`.
    pub fn from_int(n: u32) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Parses a floating value that must be a non-negative multiple of ½.
    pub fn try_from_f64(x: f64) -> Result<Self> {
        let twice = 2.0 * x;
        if !x.is_finite() || x < 0.0 || twice.fract() != 0.0 || twice > u32::MAX as f64 {
            return Err(Error::InvalidParam(format!(
                "{x} is not a non-negative half-integer"
            )));
        }
        Ok(HalfInt { twice: twice as u32 })
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Representation dimension `2l + 1`.
    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The weight `m` sitting at row/column `idx` in the basis order
    /// `m = -l, -l+1, …, l` (so `idx = m + l`).
    pub fn weight_at(self, idx: usize) -> f64 {
        (2 * idx as i64 - self.twice as i64) as f64 / 2.0
    }

    /// `l(l+1)`, computed exactly from the doubled index.
    pub fn casimir_eigenvalue(self) -> f64 {
        let t = self.twice as i64;
        (t * (t + 2)) as f64 / 4.0
    }

    /// Sub-Laplacian eigenvalue `l(l+1) - m²` at row `idx`, exact in `f64`
    /// for all desk-scale `l` (the integer numerator stays below 2⁵³).
    pub fn subl_eigenvalue(self, idx: usize) -> f64 {
        let t = self.twice as i64;
        let tm = 2 * idx as i64 - t;
        (t * (t + 2) - tm * tm) as f64 / 4.0
    }

    /// Row index of the default coefficient-pattern weight: `m = 0` for
    /// integer `l`, `m = ½` for half-integer `l`.
    pub fn center_index(self) -> usize {
        ((self.twice + 1) / 2) as usize
    }

    /// All half-integers `0, ½, 1, …, max` (inclusive).
    pub fn range_to(max: HalfInt) -> impl Iterator<Item = HalfInt> {
        (0..=max.twice).map(HalfInt::from_twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

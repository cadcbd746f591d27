//! Symbol matrices for left-invariant operators on SU(2).
//!
//! Representations are indexed by spin `l ∈ ½ℕ₀` with dimension `2l + 1`;
//! rows and columns follow the weight order `m = -l, -l+1, …, l` (index
//! `i = m + l`). The ladder symbols are
//!
//! ```text
//! σ_P(l)[m, n] = -√((l-n)(l+n+1)) δ_{m,n+1}      (first lower diagonal)
//! σ_M(l)[m, n] = -√((l+n)(l-n+1)) δ_{m,n-1}      (= σ_P(l)ᵀ)
//! ```
//!
//! and the sub-Laplacian symbol is the diagonal `l(l+1) - m²`. The genuine
//! horizontal fields are the skew-Hermitian combinations
//! `R1 = (σ_P - σ_M)/2` and `R2 = i(σ_P + σ_M)/2`; they satisfy
//! `-(σ_R1² + σ_R2²) = σ_SubL` exactly, which pins the composition
//! conventions used throughout. The Laplace–Beltrami symbol is the scalar
//! `l(l+1)·I`, recovered independently by the Casimir identity
//! `-(σ_R1² + σ_R2² + [σ_R1,σ_R2]²) = l(l+1)·I`.

use num_complex::Complex64;

use crate::algebra::{ComplexMatrix, GeneratorWord, Group, HalfInt, Letter, RepIndex, SymbolMatrix};
use crate::error::{Error, Result};
use crate::multiplier::MultiplierSpec;

/// Generators with a symbol at every spin index.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Su2Generator {
    /// Ladder-plus symbol, Eq. form `-√((l-n)(l+n+1))` on the lower diagonal.
    P,
    /// Ladder-minus symbol, the transpose of `P`.
    M,
    /// `(σ_P - σ_M)/2`, real skew-symmetric.
    R1,
    /// `i(σ_P + σ_M)/2`, skew-Hermitian.
    R2,
    /// Sub-Laplacian, diagonal `l(l+1) - m²`.
    SubL,
    /// Laplace–Beltrami, scalar `l(l+1)`.
    Beltrami,
}

/// The two diagonal operators available to the functional calculus.
#[derive(Copy, Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Su2Operator {
    SubL,
    Beltrami,
}

/// `(l-n)(l+n+1)` at column index `j` (so `n = j - l`), as an exact integer:
/// with `T = 2l` this is `(T - j)(j + 1)`.
fn ladder_sq(l: HalfInt, j: usize) -> f64 {
    let t = l.twice() as i64;
    ((t - j as i64) * (j as i64 + 1)) as f64
}

fn ladder_plus(l: HalfInt) -> ComplexMatrix {
    ComplexMatrix::from_band(l.dim(), 1, |j| Complex64::new(-ladder_sq(l, j).sqrt(), 0.0))
}

/// Diagonal eigenvalues of the chosen operator's symbol at spin `l`.
pub fn operator_eigenvalues(op: Su2Operator, l: HalfInt) -> Vec<f64> {
    match op {
        Su2Operator::SubL => (0..l.dim()).map(|i| l.subl_eigenvalue(i)).collect(),
        Su2Operator::Beltrami => vec![l.casimir_eigenvalue(); l.dim()],
    }
}

/// The `(2l+1) × (2l+1)` symbol of a generator at spin `l`.
pub fn su2_symbol(gen: Su2Generator, l: HalfInt) -> SymbolMatrix {
    let matrix = match gen {
        Su2Generator::P => ladder_plus(l),
        Su2Generator::M => ladder_plus(l).transpose(),
        Su2Generator::R1 => {
            let p = ladder_plus(l);
            p.sub(&p.transpose()).scale(Complex64::new(0.5, 0.0))
        }
        Su2Generator::R2 => {
            let p = ladder_plus(l);
            p.add(&p.transpose()).scale(Complex64::new(0.0, 0.5))
        }
        Su2Generator::SubL => {
            ComplexMatrix::from_real_diagonal(&operator_eigenvalues(Su2Operator::SubL, l))
        }
        Su2Generator::Beltrami => {
            ComplexMatrix::from_real_diagonal(&operator_eigenvalues(Su2Operator::Beltrami, l))
        }
    };
    SymbolMatrix { rep: RepIndex::Su2 { l }, matrix }
}

fn letter_symbol(letter: Letter, l: HalfInt) -> ComplexMatrix {
    match letter {
        Letter::P => su2_symbol(Su2Generator::P, l).matrix,
        Letter::M => su2_symbol(Su2Generator::M, l).matrix,
        Letter::R1 => su2_symbol(Su2Generator::R1, l).matrix,
        Letter::R2 => su2_symbol(Su2Generator::R2, l).matrix,
        _ => unreachable!("non-SU(2) letter"),
    }
}

/// Ordered product `σ_{Y₁} ⋯ σ_{Y_{|α|}}` of the letter symbols, left to
/// right in word order; the empty word gives the identity.
pub fn su2_word_symbol(word: &GeneratorWord, l: HalfInt) -> Result<SymbolMatrix> {
    if word.group() != Group::Su2 {
        return Err(Error::WrongGroup(Group::Su2));
    }
    let mut acc = ComplexMatrix::identity(l.dim());
    for &letter in word.letters() {
        acc = acc.mul(&letter_symbol(letter, l));
    }
    Ok(SymbolMatrix { rep: RepIndex::Su2 { l }, matrix: acc })
}

/// Applies a scalar multiplier entrywise to the diagonal of the chosen
/// operator's symbol. The trivial representation `l = 0` is rejected when the
/// multiplier is singular at 0 (its sub-Laplacian symbol is the zero matrix).
pub fn su2_multiplier_symbol(
    spec: &MultiplierSpec,
    op: Su2Operator,
    l: HalfInt,
) -> Result<SymbolMatrix> {
    spec.validate()?;
    let eigs = operator_eigenvalues(op, l);
    if spec.singular_at_zero() && eigs.iter().any(|&d| d == 0.0) {
        return Err(Error::TrivialRepresentation);
    }
    let diag: Result<Vec<f64>> = eigs.iter().map(|&d| spec.eval(d)).collect();
    Ok(SymbolMatrix {
        rep: RepIndex::Su2 { l },
        matrix: ComplexMatrix::from_real_diagonal(&diag?),
    })
}

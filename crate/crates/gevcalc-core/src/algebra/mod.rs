//! Shared numerical substrate: half-integer indices, generator words, complex
//! matrices with single-diagonal band metadata, and log-Gamma utilities.

mod gamma;
mod half_int;
mod matrix;
mod word;

pub use gamma::{ln_factorial, ln_gamma, log_factorial_power};
pub use half_int::HalfInt;
pub use matrix::{ComplexMatrix, RepIndex, SymbolMatrix};
pub use word::{enumerate_words, GeneratorWord, Group, Letter};

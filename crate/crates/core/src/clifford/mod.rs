//! The exterior algebra `Λ*E*` of a Euclidean space with its two Clifford
//! actions
//!
//! ```text
//! c(v) = v*∧ − i_v        ĉ(v) = v*∧ + i_v
//! ```
//!
//! and the operators built from them for a symmetric matrix `A`:
//! `Â = Σ a_ij c(e_i) ĉ(e_j)` and `K = tr|A| + Â`.
//!
//! Basis elements of `Λ*` are indexed by bitmasks: bit `i-1` set means
//! `e^i` is a factor, and factors are written in increasing order.
//! Operators are dense `2^m × 2^m` matrices, generic over the scalar type so
//! the algebraic identities can be checked exactly over the rationals.

mod exterior;
mod ops;
mod sym;

use thiserror::Error;

pub use exterior::{ExteriorVector, Parity};
pub use ops::{c_op, chat_op, hat_a, hat_a_with, k_op, lemma1_kernel, CliffOp, Scalar};
pub use sym::{Frame, SymMatrix};

use crate::circleindex::EigenError;

/// Largest `m` for which operators on `Λ*R^m` are materialized.
pub const MAX_DIM: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliffordError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },
    #[error("matrix is singular (|det| = {det:e})")]
    SingularMatrix { det: f64 },
    #[error("basis is not orthonormal: |<e_{i}, e_{j}> - δ| = {gap:e}")]
    BasisNotOrthonormal { i: usize, j: usize, gap: f64 },
    #[error("spectral gap of K is {gap:e}, below 1e-6 · tr|A| = {floor:e}")]
    DegenerateGap { gap: f64, floor: f64 },
    #[error("kernel residual |K w| = {residual:e} exceeds 1e-8 · tr|A|")]
    ResidualTooLarge { residual: f64 },
    #[error("dimension {0} outside 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error(transparent)]
    Eigen(#[from] EigenError),
}

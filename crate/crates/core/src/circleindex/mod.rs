//! Mod-2 index of a singular circle.
//!
//! Along a circle the linearization of the vector field gives a loop of
//! invertible symmetric matrices `A(t)`. For each sample the kernel of
//! `K = tr|A| + Â` is a line in `Λ*`; transporting a generator of that line
//! around the loop returns it to `±` itself. The circle has index 1 when the
//! sign is `+` (trivial line bundle) and 0 otherwise.
//!
//! The primary route generates the kernel line as the wedge of the negative
//! eigenspace of `A`; [`ind2_oracle`] instead takes the lowest eigenvector of
//! the full `2^m × 2^m` matrix of `K`.

mod eigen;
mod loops;
mod monodromy;

use thiserror::Error;

pub use eigen::{sym_eigen, EigenError, SymEigen};
pub use loops::{Location, LoopFile, LoopGenerator, MatrixLoop, Turns};
pub use monodromy::{
    boundary_reduce, holonomy, ind2, ind2_oracle, kernel_sections, monodromy, CircleIndexResult,
    Monodromy, MIN_OVERLAP, ORACLE_MAX_DIM,
};

use crate::clifford::{CliffOp, CliffordError, ExteriorVector, SymMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IndexError {
    #[error("loop has no samples")]
    EmptyLoop,
    #[error("sample {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("sample {index}: {source}")]
    Sample { index: usize, source: CliffordError },
    #[error("consecutive kernel sections {index} and {next} overlap by only {overlap:.3e} (< {MIN_OVERLAP}); supply more samples")]
    SamplingTooCoarse {
        index: usize,
        next: usize,
        overlap: f64,
    },
    #[error("sample {index} has {found} negative eigenvalues, sample 0 has {expected}")]
    NonConstantNegativeIndex {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("dense oracle limited to m <= {ORACLE_MAX_DIM}, got {0}")]
    DimensionTooLarge(usize),
    #[error("loop is not located on the boundary")]
    NotBoundaryLoop,
    #[error("sample {index} does not have block form diag({sign}, A0)")]
    BlockStructureViolated { index: usize, sign: i8 },
    #[error("boundary sign must be +1 or -1, got {0}")]
    BadBoundarySign(i64),
    #[error("invalid loop generator: {0}")]
    BadGenerator(String),
    #[error("loop file: {0}")]
    BadLoopFile(String),
}

impl IndexError {
    /// Variant name, used as the error kind in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            IndexError::EmptyLoop => "EmptyLoop",
            IndexError::DimensionMismatch { .. } => "DimensionMismatch",
            IndexError::Sample { .. } => "Sample",
            IndexError::SamplingTooCoarse { .. } => "SamplingTooCoarse",
            IndexError::NonConstantNegativeIndex { .. } => "NonConstantNegativeIndex",
            IndexError::DimensionTooLarge(..) => "DimensionTooLarge",
            IndexError::NotBoundaryLoop => "NotBoundaryLoop",
            IndexError::BlockStructureViolated { .. } => "BlockStructureViolated",
            IndexError::BadBoundarySign(..) => "BadBoundarySign",
            IndexError::BadGenerator(..) => "BadGenerator",
            IndexError::BadLoopFile(..) => "BadLoopFile",
        }
    }
}

/// Unit wedge of the eigenvectors with negative eigenvalue, in the standard
/// basis of `Λ*`. This spans `ker K`.
pub fn wedge_of_negative_eigenspace(e: &SymEigen) -> ExteriorVector<f64> {
    let m = e.values.len();
    let neg: Vec<Vec<f64>> = e
        .values
        .iter()
        .zip(&e.vectors)
        .filter(|(v, _)| **v < 0.0)
        .map(|(_, vec)| vec.clone())
        .collect();
    ExteriorVector::wedge_all(m, &neg).normalized()
}

/// Generator of `ker K(a)` by the wedge route.
pub fn kernel_wedge(a: &SymMatrix) -> Result<ExteriorVector<f64>, CliffordError> {
    Ok(wedge_of_negative_eigenspace(&a.invertible_eigen()?))
}

/// Jacobi eigendecomposition of a dense operator on `Λ*` (assumed symmetric).
pub fn dense_sym_eigen(op: &CliffOp<f64>) -> Result<SymEigen, EigenError> {
    let mut entries = op.entries().to_vec();
    eigen::jacobi(op.size(), &mut entries)
}

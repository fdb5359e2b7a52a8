use serde::{Deserialize, Serialize};

use super::CliffordError;
use crate::circleindex::{sym_eigen, SymEigen};

/// A real symmetric `m × m` matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    /// Accepts rows that are symmetric up to `1e-12` relative to the largest
    /// entry, and stores the exactly symmetrized matrix.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, CliffordError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(CliffordError::NotSquare);
        }
        let scale = rows.iter().flatten().fold(1.0_f64, |m, x| m.max(x.abs()));
        let mut entries = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let gap = (rows[i][j] - rows[j][i]).abs();
                if gap > 1e-12 * scale || !gap.is_finite() {
                    return Err(CliffordError::NotSymmetric { i, j, gap });
                }
                entries[i * dim + j] = 0.5 * (rows[i][j] + rows[j][i]);
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut entries = vec![0.0; dim * dim];
        for (i, &v) in values.iter().enumerate() {
            entries[i * dim + i] = v;
        }
        SymMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn eigen(&self) -> Result<SymEigen, CliffordError> {
        Ok(sym_eigen(self)?)
    }

    /// Eigendecomposition, failing unless `|det| > 1e-9 · scale^m` where
    /// `scale` is the largest absolute entry.
    pub fn invertible_eigen(&self) -> Result<SymEigen, CliffordError> {
        let e = self.eigen()?;
        let det = e.determinant();
        let floor = 1e-9 * self.max_abs().powi(self.dim as i32);
        if self.max_abs() == 0.0 || det.abs() <= floor {
            return Err(CliffordError::SingularMatrix { det });
        }
        Ok(e)
    }

    /// `R A Rᵀ` for a square `R` given by rows.
    pub fn conjugated(&self, r: &[Vec<f64>]) -> SymMatrix {
        let n = self.dim;
        assert_eq!(r.len(), n);
        let mut ra = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                ra[i * n + j] = (0..n).map(|k| r[i][k] * self.get(k, j)).sum();
            }
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v: f64 = (0..n).map(|k| ra[i * n + k] * r[j][k]).sum();
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        SymMatrix { dim: n, entries }
    }

    /// `diag(lead, self)`.
    pub fn with_leading(&self, lead: f64) -> SymMatrix {
        let n = self.dim + 1;
        let mut entries = vec![0.0; n * n];
        entries[0] = lead;
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[(i + 1) * n + j + 1] = self.get(i, j);
            }
        }
        SymMatrix { dim: n, entries }
    }

    /// Deletes the first row and column.
    pub fn without_leading(&self) -> SymMatrix {
        assert!(self.dim >= 1);
        let n = self.dim - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..self.dim {
            for j in 1..self.dim {
                entries.push(self.get(i, j));
            }
        }
        SymMatrix { dim: n, entries }
    }
}

impl TryFrom<Vec<Vec<f64>>> for SymMatrix {
    type Error = CliffordError;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self, Self::Error> {
        SymMatrix::new(rows)
    }
}

impl From<SymMatrix> for Vec<Vec<f64>> {
    fn from(m: SymMatrix) -> Self {
        m.rows()
    }
}

/// An orthonormal frame `e_1, …, e_m` of `R^m`, each vector in standard
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    vectors: Vec<Vec<f64>>,
}

impl Frame {
    pub fn standard(dim: usize) -> Self {
        Frame {
            vectors: (0..dim)
                .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
                .collect(),
        }
    }

    /// Checks orthonormality to `1e-10`.
    pub fn new(vectors: Vec<Vec<f64>>) -> Result<Self, CliffordError> {
        let m = vectors.len();
        if vectors.iter().any(|v| v.len() != m) {
            return Err(CliffordError::NotSquare);
        }
        for i in 0..m {
            for j in 0..m {
                let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
                let gap = (dot - if i == j { 1.0 } else { 0.0 }).abs();
                if gap > 1e-10 {
                    return Err(CliffordError::BasisNotOrthonormal { i, j, gap });
                }
            }
        }
        Ok(Frame { vectors })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Matrix of the operator `a` in this frame: `⟨e_i, a e_j⟩`.
    pub fn express(&self, a: &SymMatrix) -> SymMatrix {
        let m = self.dim();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m)
                            .map(|k| {
                                (0..m)
                                    .map(|l| self.vectors[i][k] * a.get(k, l) * self.vectors[j][l])
                                    .sum::<f64>()
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        SymMatrix::new(rows).expect("congruence keeps symmetry")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric() {
        assert!(matches!(
            SymMatrix::new(vec![vec![1.0, 2.0], vec![0.0, 1.0]]),
            Err(CliffordError::NotSymmetric { .. })
        ));
        assert_eq!(
            SymMatrix::new(vec![vec![1.0, 2.0]]),
            Err(CliffordError::NotSquare)
        );
    }

    #[test]
    fn singularity_threshold() {
        assert!(SymMatrix::diagonal(&[1.0, 0.0]).invertible_eigen().is_err());
        assert!(SymMatrix::diagonal(&[1.0, 1e-8]).invertible_eigen().is_ok());
        assert!(SymMatrix::diagonal(&[0.0, 0.0]).invertible_eigen().is_err());
    }

    #[test]
    fn block_helpers() {
        let a = SymMatrix::diagonal(&[2.0, -3.0]);
        let b = a.with_leading(-1.0);
        assert_eq!(b, SymMatrix::diagonal(&[-1.0, 2.0, -3.0]));
        assert_eq!(b.without_leading(), a);
    }

    #[test]
    fn frame_check() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(Frame::new(vec![vec![r, r], vec![-r, r]]).is_ok());
        assert!(matches!(
            Frame::new(vec![vec![1.0, 0.0], vec![1.0, 1.0]]),
            Err(CliffordError::BasisNotOrthonormal { .. })
        ));
    }
}

//! Cyclic Jacobi eigensolver for dense real symmetric matrices.

use thiserror::Error;

use crate::clifford::SymMatrix;

const MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EigenError {
    #[error("Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {0:e})")]
    NoConvergence(f64),
}

/// Eigenvalues in ascending order; `vectors[i]` is the unit eigenvector of
/// `values[i]`.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl SymEigen {
    /// Number of negative eigenvalues.
    pub fn negative_count(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0.0).count()
    }

    pub fn trace_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn determinant(&self) -> f64 {
        self.values.iter().product()
    }
}

pub fn sym_eigen(a: &SymMatrix) -> Result<SymEigen, EigenError> {
    let n = a.dim();
    let mut rows: Vec<f64> = a.entries().to_vec();
    jacobi(n, &mut rows)
}

/// Jacobi on a row-major `n × n` symmetric array, consumed in place.
pub(crate) fn jacobi(n: usize, a: &mut [f64]) -> Result<SymEigen, EigenError> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-15 * frob;
    let off = |a: &[f64]| {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(a) <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off(a) > tol {
        return Err(EigenError::NoConvergence(off(a)));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    Ok(SymEigen {
        values: order.iter().map(|&i| a[i * n + i]).collect(),
        vectors: order
            .iter()
            .map(|&j| (0..n).map(|k| v[k * n + j]).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagonal_input() {
        let e = sym_eigen(&SymMatrix::diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        assert_eq!(e.vectors[0], vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn swap_matrix() {
        let e = sym_eigen(&SymMatrix::new(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-14 && (e.values[1] - 1.0).abs() < 1e-14);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let (x, y) = (e.vectors[0][0], e.vectors[0][1]);
        assert!((x.abs() - r).abs() < 1e-14 && (x + y).abs() < 1e-14);
        let (x, y) = (e.vectors[1][0], e.vectors[1][1]);
        assert!((x.abs() - r).abs() < 1e-14 && (x - y).abs() < 1e-14);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn random_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = 8;
            let mut rows = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let x: f64 = rng.random_range(-3.0..3.0);
                    rows[i][j] = x;
                    rows[j][i] = x;
                }
            }
            let a = SymMatrix::new(rows.clone()).unwrap();
            let e = sym_eigen(&a).unwrap();
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
            let norm = a.entries().iter().map(|x| x * x).sum::<f64>().sqrt();
            for i in 0..n {
                for j in 0..n {
                    let rec: f64 = (0..n)
                        .map(|k| e.vectors[k][i] * e.values[k] * e.vectors[k][j])
                        .sum();
                    assert!((rec - rows[i][j]).abs() <= 1e-9, "reconstruction");
                    let dot: f64 = (0..n).map(|k| e.vectors[i][k] * e.vectors[j][k]).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() <= 1e-10, "orthonormality");
                }
                let res: f64 = (0..n)
                    .map(|r| {
                        let av: f64 = (0..n).map(|k| rows[r][k] * e.vectors[i][k]).sum();
                        (av - e.values[i] * e.vectors[i][r]).powi(2)
                    })
                    .sum::<f64>()
                    .sqrt();
                assert!(res <= 1e-10 * norm, "residual {res}");
            }
        }
    }
}

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Num;

use super::exterior::reorder_sign;
use super::{CliffordError, ExteriorVector, Frame, Parity, SymMatrix, MAX_DIM};
use crate::circleindex::wedge_of_negative_eigenspace;

/// Field-like scalar usable for operator matrices: `f64` or `BigRational`.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug {}

impl<T: Num + Neg<Output = T> + Clone + Debug> Scalar for T {}

/// A linear operator on `Λ*R^m`, as a dense `2^m × 2^m` matrix acting on
/// coefficient columns.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffOp<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> CliffOp<T> {
    pub fn zeros(dim: usize) -> Self {
        let n = 1 << dim;
        CliffOp {
            dim,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn scalar(dim: usize, s: T) -> Self {
        let mut op = Self::zeros(dim);
        let n = op.size();
        for i in 0..n {
            op.entries[i * n + i] = s.clone();
        }
        op
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, T::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `2^m`.
    pub fn size(&self) -> usize {
        1 << self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.size() + col]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    fn add_at(&mut self, row: usize, col: usize, v: T) {
        let n = self.size();
        let e = &mut self.entries[row * n + col];
        *e = e.clone() + v;
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        let mut t = Self::zeros(self.dim);
        for i in 0..n {
            for j in 0..n {
                t.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &T) -> Self {
        CliffOp {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.clone() * s.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn apply(&self, v: &ExteriorVector<T>) -> ExteriorVector<T> {
        assert_eq!(v.dim(), self.dim);
        let n = self.size();
        let coeffs = (0..n)
            .map(|i| {
                (0..n).fold(T::zero(), |acc, j| {
                    let a = &self.entries[i * n + j];
                    let x = v.coeff(j);
                    if a.is_zero() || x.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * x.clone()
                    }
                })
            })
            .collect();
        ExteriorVector::from_coeffs(self.dim, coeffs)
    }
}

impl<T: Scalar> Add for &CliffOp<T> {
    type Output = CliffOp<T>;

    fn add(self, rhs: Self) -> CliffOp<T> {
        assert_eq!(self.dim, rhs.dim);
        CliffOp {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| match (a.is_zero(), b.is_zero()) {
                    (true, _) => b.clone(),
                    (_, true) => a.clone(),
                    _ => a.clone() + b.clone(),
                })
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &CliffOp<T> {
    type Output = CliffOp<T>;

    fn sub(self, rhs: Self) -> CliffOp<T> {
        assert_eq!(self.dim, rhs.dim);
        CliffOp {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| match (a.is_zero(), b.is_zero()) {
                    (true, _) => -b.clone(),
                    (_, true) => a.clone(),
                    _ => a.clone() - b.clone(),
                })
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &CliffOp<T> {
    type Output = CliffOp<T>;

    fn neg(self) -> CliffOp<T> {
        CliffOp {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> Mul for &CliffOp<T> {
    type Output = CliffOp<T>;

    /// Product over the nonzero entries only; Clifford generators have at
    /// most `m` nonzeros per column, so this stays cheap for exact scalars.
    fn mul(self, rhs: Self) -> CliffOp<T> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.size();
        let rhs_rows: Vec<Vec<(usize, &T)>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| (j, &rhs.entries[k * n + j]))
                    .filter(|(_, b)| !b.is_zero())
                    .collect()
            })
            .collect();
        let mut out: CliffOp<T> = CliffOp::zeros(self.dim);
        for i in 0..n {
            for (k, row) in rhs_rows.iter().enumerate() {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in row {
                    let e = &mut out.entries[i * n + j];
                    let acc = std::mem::replace(e, T::zero());
                    *e = acc + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

/// `ε(v) + sign·ι(v)`: exterior multiplication plus or minus contraction.
fn clifford_generator<T: Scalar>(v: &[T], contraction_sign: bool) -> CliffOp<T> {
    let dim = v.len();
    let mut op = CliffOp::zeros(dim);
    for mask in 0..1usize << dim {
        for (bit, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let flip = reorder_sign(mask, bit);
            if mask >> bit & 1 == 0 {
                let val = if flip { -vi.clone() } else { vi.clone() };
                op.add_at(mask | 1 << bit, mask, val);
            } else {
                let val = if flip != contraction_sign {
                    vi.clone()
                } else {
                    -vi.clone()
                };
                op.add_at(mask & !(1 << bit), mask, val);
            }
        }
    }
    op
}

/// `c(v) = v*∧ − i_v`, skew-adjoint.
pub fn c_op<T: Scalar>(v: &[T]) -> CliffOp<T> {
    clifford_generator(v, false)
}

/// `ĉ(v) = v*∧ + i_v`, self-adjoint.
pub fn chat_op<T: Scalar>(v: &[T]) -> CliffOp<T> {
    clifford_generator(v, true)
}

/// `Σ_ij a_ij c(e_i) ĉ(e_j)` with `a` expressed in the frame `e`, computed
/// literally from the products of generators.
pub fn hat_a_with<T: Scalar>(a: &[Vec<T>], frame: &[Vec<T>]) -> CliffOp<T> {
    let m = frame.len();
    assert!(a.len() == m && a.iter().all(|r| r.len() == m));
    let cs: Vec<CliffOp<T>> = frame.iter().map(|e| c_op(e)).collect();
    let hs: Vec<CliffOp<T>> = frame.iter().map(|e| chat_op(e)).collect();
    let mut out = CliffOp::zeros(m);
    for i in 0..m {
        for j in 0..m {
            if a[i][j].is_zero() {
                continue;
            }
            out = &out + &(&cs[i] * &hs[j]).scale(&a[i][j]);
        }
    }
    out
}

/// Checked floating version of [`hat_a_with`]: `a` is the matrix of the
/// operator in `frame`.
pub fn hat_a(a: &SymMatrix, frame: &Frame) -> Result<CliffOp<f64>, CliffordError> {
    if a.dim() != frame.dim() {
        return Err(CliffordError::NotSquare);
    }
    if a.dim() > MAX_DIM {
        return Err(CliffordError::BadDimension(a.dim()));
    }
    Frame::new(frame.vectors().to_vec())?;
    Ok(hat_a_with(&a.rows(), frame.vectors()))
}

/// `Â` in the standard basis, assembled column by column: `c(e_i)ĉ(e_j)`
/// maps each basis element to a single signed basis element.
pub(crate) fn hat_a_standard(a: &SymMatrix) -> CliffOp<f64> {
    let m = a.dim();
    let mut op = CliffOp::zeros(m);
    for mask in 0..1usize << m {
        for j in 0..m {
            // ĉ(e_j) e^mask
            let (mid, s1) = if mask >> j & 1 == 0 {
                (mask | 1 << j, reorder_sign(mask, j))
            } else {
                (mask & !(1 << j), reorder_sign(mask, j))
            };
            for i in 0..m {
                let aij = a.get(i, j);
                if aij == 0.0 {
                    continue;
                }
                // c(e_i) e^mid
                let (target, s2) = if mid >> i & 1 == 0 {
                    (mid | 1 << i, reorder_sign(mid, i))
                } else {
                    (mid & !(1 << i), !reorder_sign(mid, i))
                };
                let v = if s1 != s2 { -aij } else { aij };
                op.add_at(target, mask, v);
            }
        }
    }
    op
}

/// `K = tr|A| · Id + Â`.
pub fn k_op(a: &SymMatrix) -> Result<CliffOp<f64>, CliffordError> {
    if a.dim() == 0 || a.dim() > MAX_DIM {
        return Err(CliffordError::BadDimension(a.dim()));
    }
    let e = a.invertible_eigen()?;
    Ok(&CliffOp::scalar(a.dim(), e.trace_abs()) + &hat_a_standard(a))
}

/// Unit generator of `ker K` as the wedge of an orthonormal basis of the
/// negative eigenspace of `a`, with its degree parity (even iff `det a > 0`).
///
/// Refuses inputs whose second eigenvalue of `K`, `2·min|λ_i|`, is below
/// `1e-6 · tr|A|`, and checks the residual `|K w| ≤ 1e-8 · tr|A|`.
pub fn lemma1_kernel(a: &SymMatrix) -> Result<(ExteriorVector<f64>, Parity), CliffordError> {
    let k = k_op(a)?;
    let e = a.invertible_eigen()?;
    let trace = e.trace_abs();
    let gap = 2.0 * e.values.iter().fold(f64::INFINITY, |m, v| m.min(v.abs()));
    let floor = 1e-6 * trace;
    if gap < floor {
        return Err(CliffordError::DegenerateGap { gap, floor });
    }
    let w = wedge_of_negative_eigenspace(&e);
    let residual = k.apply(&w).norm();
    if residual > 1e-8 * trace {
        return Err(CliffordError::ResidualTooLarge { residual });
    }
    Ok((w, Parity::of(e.negative_count())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circleindex::dense_sym_eigen;

    #[test]
    fn one_dimensional_generators() {
        let c = c_op(&[1.0]);
        // columns: 1 ↦ e¹, e¹ ↦ −1
        assert_eq!(c.entries(), &[0.0, -1.0, 1.0, 0.0]);
        let h = chat_op(&[1.0]);
        assert_eq!(h.entries(), &[0.0, 1.0, 1.0, 0.0]);
        assert!(c_op(&[0.0, 0.0]).is_zero());
    }

    #[test]
    fn hat_a_of_scalar_matrix() {
        // c(e1)ĉ(e1) sends 1 ↦ −1 and e¹ ↦ e¹
        let lam = 2.5;
        let op = hat_a_with(&[vec![lam]], &[vec![1.0]]);
        let direct = (&c_op(&[1.0]) * &chat_op(&[1.0])).scale(&lam);
        assert_eq!(op, direct);
        assert_eq!(op.entries(), &[-lam, 0.0, 0.0, lam]);
        assert!(hat_a_with(&vec![vec![0.0; 3]; 3], Frame::standard(3).vectors()).is_zero());
    }

    #[test]
    fn fast_and_literal_hat_a_agree() {
        let a = SymMatrix::new(vec![
            vec![1.0, -2.0, 0.5],
            vec![-2.0, 0.3, 1.5],
            vec![0.5, 1.5, -1.0],
        ])
        .unwrap();
        let slow = hat_a(&a, &Frame::standard(3)).unwrap();
        let fast = hat_a_standard(&a);
        let diff = (&slow - &fast)
            .entries()
            .iter()
            .fold(0.0_f64, |m, x| m.max(x.abs()));
        assert!(diff < 1e-14);
    }

    #[test]
    fn k_kernels_for_signed_identities() {
        for m in 1..=4 {
            let (w, p) = lemma1_kernel(&SymMatrix::identity(m)).unwrap();
            assert!((w.coeff(0).abs() - 1.0).abs() < 1e-12);
            assert_eq!(p, Parity::Even);
            let (w, p) = lemma1_kernel(&SymMatrix::diagonal(&vec![-1.0; m])).unwrap();
            assert!((w.coeff((1 << m) - 1).abs() - 1.0).abs() < 1e-12);
            assert_eq!(p, Parity::of(m));
        }
    }

    #[test]
    fn k_for_diag_two_minus_three() {
        let a = SymMatrix::diagonal(&[2.0, -3.0]);
        let k = k_op(&a).unwrap();
        let e = dense_sym_eigen(&k).unwrap();
        assert!(e.values[0].abs() < 1e-12);
        assert!(e.values[1] > 1.0);
        // kernel is e², mask 0b10
        assert!((e.vectors[0][0b10].abs() - 1.0).abs() < 1e-12);
        let (w, p) = lemma1_kernel(&a).unwrap();
        assert_eq!(p, Parity::Odd);
        assert!((w.coeff(0b10).abs() - 1.0).abs() < 1e-12);
        let (w, p) = lemma1_kernel(&SymMatrix::diagonal(&[1.0, -1.0])).unwrap();
        assert_eq!(p, Parity::Odd);
        assert!((w.coeff(0b10).abs() - 1.0).abs() < 1e-12);
        let (w, p) = lemma1_kernel(&SymMatrix::diagonal(&[-1.0, -1.0])).unwrap();
        assert_eq!(p, Parity::Even);
        assert!((w.coeff(0b11).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn singular_and_degenerate_inputs() {
        assert!(matches!(
            k_op(&SymMatrix::diagonal(&[1.0, 0.0])),
            Err(CliffordError::SingularMatrix { .. })
        ));
        assert!(matches!(
            lemma1_kernel(&SymMatrix::diagonal(&[1.0, 1e-8])),
            Err(CliffordError::DegenerateGap { .. })
        ));
    }
}

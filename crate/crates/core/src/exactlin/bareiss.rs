use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * cols + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * n + i] = BigInt::from(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.entries[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.entries[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Reduces every entry mod 2.
    pub fn to_gf2(&self) -> super::Gf2Matrix {
        let mut m = super::Gf2Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.entries[i * self.cols + j].is_odd() {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (oi, &i) in rows.iter().enumerate() {
            for (oj, &j) in cols.iter().enumerate() {
                out.entries[oi * cols.len() + oj] = self.entries[i * self.cols + j].clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row[dst] += row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        for j in 0..self.cols {
            let s = self.entries[src * self.cols + j].clone();
            self.entries[dst * self.cols + j] += s;
        }
    }

    /// Fraction-free Gaussian elimination. After processing pivot `k` every
    /// remaining entry is a (k+1)-minor of the original matrix, so the
    /// division by the previous pivot is exact.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.entries.clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in col..cols {
                    a.swap(p * cols + j, rank * cols + j);
                }
            }
            let pivot = a[rank * cols + col].clone();
            let unit_prev = prev.is_one();
            for r in rank + 1..rows {
                let factor = std::mem::take(&mut a[r * cols + col]);
                let row_zero = factor.is_zero();
                for j in col + 1..cols {
                    let idx = r * cols + j;
                    let lead = &a[rank * cols + j];
                    if row_zero && a[idx].is_zero() {
                        continue;
                    }
                    let mut v = &pivot * &a[idx];
                    if !row_zero && !lead.is_zero() {
                        v -= &factor * lead;
                    }
                    if !unit_prev {
                        debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                        v /= &prev;
                    }
                    a[idx] = v;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

trait Parity {
    fn is_odd(&self) -> bool;
}

impl Parity for BigInt {
    fn is_odd(&self) -> bool {
        !(self % 2u32).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_zero() {
        assert_eq!(IntMatrix::diagonal(&[2, -3, 7]).rank(), 3);
        assert_eq!(IntMatrix::from_rows(&[vec![0]]).rank(), 0);
        assert_eq!(IntMatrix::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn skipped_columns_keep_division_exact() {
        let m = IntMatrix::from_rows(&[
            vec![0, 2, 4, 1],
            vec![0, 3, 6, 5],
            vec![0, 5, 10, 7],
            vec![0, 1, 2, 0],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_over_q_can_exceed_rank_mod_two() {
        let m = IntMatrix::diagonal(&[2, 1]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.to_gf2().rank(), 1);
    }
}

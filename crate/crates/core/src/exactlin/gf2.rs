use std::fmt;

const WORD: usize = 64;

/// Dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD);
        Gf2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values (any nonzero entry counts as 1).
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        let w = self.bits[i * self.words_per_row + j / WORD];
        (w >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.bits[i * self.words_per_row + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.bits.swap(a * w + k, b * w + k);
        }
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let w = self.words_per_row;
        for k in 0..w {
            let s = self.bits[src * w + k];
            self.bits[dst * w + k] ^= s;
        }
    }

    /// Gaussian elimination on a copy. Pivots are taken as the first row
    /// (from the current pivot row down) with a set bit, scanning columns
    /// left to right.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let w = m.words_per_row;
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let word = col / WORD;
            let mask = 1u64 << (col % WORD);
            let Some(pivot) = (rank..m.rows).find(|&r| m.bits[r * w + word] & mask != 0) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in rank + 1..m.rows {
                if m.bits[r * w + word] & mask != 0 {
                    // columns before `word` are already zero in the pivot row
                    for k in word..w {
                        let s = m.bits[rank * w + k];
                        m.bits[r * w + k] ^= s;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(Gf2Matrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn wide_rows_span_several_words() {
        let mut m = Gf2Matrix::zeros(3, 200);
        m.set(0, 150, true);
        m.set(1, 150, true);
        m.set(1, 3, true);
        m.set(2, 199, true);
        assert_eq!(m.rank(), 3);
        m.add_row(0, 1);
        assert!(!m.get(1, 150));
        assert_eq!(m.rank(), 3);
    }
}

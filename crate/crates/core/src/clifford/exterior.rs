use std::ops::Neg;

use serde::Serialize;

use super::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// An element of `Λ*R^m`, stored densely: `coeffs[mask]` is the coefficient
/// of `e^{i_1} ∧ … ∧ e^{i_k}` where `i_1 < … < i_k` are the set bits of
/// `mask` (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorVector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

/// Sign of moving a new factor `e^i` past the factors of `mask` below it.
pub(crate) fn reorder_sign(mask: usize, bit: usize) -> bool {
    (mask & ((1 << bit) - 1)).count_ones() % 2 == 1
}

impl<T: Scalar> ExteriorVector<T> {
    pub fn zero(dim: usize) -> Self {
        ExteriorVector {
            dim,
            coeffs: vec![T::zero(); 1 << dim],
        }
    }

    /// The scalar `1 ∈ Λ⁰`.
    pub fn one(dim: usize) -> Self {
        Self::basis(dim, 0)
    }

    pub fn basis(dim: usize, mask: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coeffs[mask] = T::one();
        v
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), 1 << dim);
        ExteriorVector { dim, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &T {
        &self.coeffs[mask]
    }

    /// `v ∧ self` for the 1-form `v = Σ v_i e^i`.
    pub fn wedge_left(&self, v: &[T]) -> Self {
        assert_eq!(v.len(), self.dim);
        let mut out = Self::zero(self.dim);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (bit, vi) in v.iter().enumerate() {
                if mask >> bit & 1 == 1 || vi.is_zero() {
                    continue;
                }
                let term = c.clone() * vi.clone();
                let target = &mut out.coeffs[mask | 1 << bit];
                *target = if reorder_sign(mask, bit) {
                    target.clone() - term
                } else {
                    target.clone() + term
                };
            }
        }
        out
    }

    /// `v_1 ∧ v_2 ∧ … ∧ v_k`; the empty product is `1`.
    pub fn wedge_all(dim: usize, vectors: &[Vec<T>]) -> Self {
        vectors
            .iter()
            .rev()
            .fold(Self::one(dim), |acc, v| acc.wedge_left(v))
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Parity of the degrees in the support, `None` if mixed or zero.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen = None;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = Parity::of(mask.count_ones() as usize);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        seen
    }
}

impl ExteriorVector<f64> {
    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        ExteriorVector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c / n).collect(),
        }
    }

    /// Parity of the degrees carrying non-negligible weight.
    pub fn dominant_parity(&self, tol: f64) -> Option<Parity> {
        let mut even = 0.0;
        let mut odd = 0.0;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if mask.count_ones() % 2 == 0 {
                even += c * c;
            } else {
                odd += c * c;
            }
        }
        let total = even + odd;
        if odd <= tol * total {
            Some(Parity::Even)
        } else if even <= tol * total {
            Some(Parity::Odd)
        } else {
            None
        }
    }
}

impl<T: Scalar> Neg for ExteriorVector<T> {
    type Output = Self;

    fn neg(self) -> Self {
        ExteriorVector {
            dim: self.dim,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_anticommutes() {
        let e1 = vec![1.0, 0.0, 0.0];
        let e3 = vec![0.0, 0.0, 1.0];
        let a = ExteriorVector::<f64>::wedge_all(3, &[e1.clone(), e3.clone()]);
        let b = ExteriorVector::<f64>::wedge_all(3, &[e3, e1]);
        assert_eq!(a.coeff(0b101), &1.0);
        assert_eq!(b.coeff(0b101), &-1.0);
        assert_eq!(a.parity(), Some(Parity::Even));
    }

    #[test]
    fn wedge_coefficients_are_minors() {
        let u = vec![1.0, 2.0, 0.0];
        let v = vec![3.0, 1.0, 1.0];
        let w = ExteriorVector::<f64>::wedge_all(3, &[u, v]);
        assert_eq!(w.coeff(0b011), &(1.0 * 1.0 - 2.0 * 3.0));
        assert_eq!(w.coeff(0b101), &(1.0 * 1.0 - 0.0 * 3.0));
        assert_eq!(w.coeff(0b110), &(2.0 * 1.0 - 0.0 * 1.0));
    }
}

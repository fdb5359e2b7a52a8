use serde::Serialize;

use super::{dense_sym_eigen, wedge_of_negative_eigenspace, IndexError, Location, MatrixLoop};
use crate::clifford::{k_op, CliffordError, Parity};

/// Consecutive kernel sections must overlap at least this much in absolute
/// value for the transport sign to be read off.
pub const MIN_OVERLAP: f64 = 0.1;

/// Largest `m` accepted by [`ind2_oracle`] (dense `2^m` eigensolve).
pub const ORACLE_MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Monodromy {
    pub sign: i8,
    pub min_overlap: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CircleIndexResult {
    pub monodromy: i8,
    pub parity: Parity,
    pub ind2: u8,
    pub min_overlap: f64,
}

impl CircleIndexResult {
    fn from_parts(m: Monodromy, parity: Parity) -> Self {
        CircleIndexResult {
            monodromy: m.sign,
            parity,
            ind2: u8::from(m.sign == 1),
            min_overlap: m.min_overlap,
        }
    }
}

/// Sign of transporting a section once around the cycle: the product of
/// `sign⟨w_i, w_{i+1}⟩` over consecutive pairs, wrap-around included.
/// Each section may carry an arbitrary sign; the product does not see it.
pub fn holonomy<S: AsRef<[f64]>>(sections: &[S]) -> Result<Monodromy, IndexError> {
    let n = sections.len();
    if n == 0 {
        return Err(IndexError::EmptyLoop);
    }
    let mut sign = 1i8;
    let mut min_overlap = f64::INFINITY;
    for index in 0..n {
        let next = (index + 1) % n;
        let a = sections[index].as_ref();
        let b = sections[next].as_ref();
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        if dot.abs() < MIN_OVERLAP {
            return Err(IndexError::SamplingTooCoarse {
                index,
                next,
                overlap: dot.abs(),
            });
        }
        if dot < 0.0 {
            sign = -sign;
        }
        min_overlap = min_overlap.min(dot.abs());
    }
    Ok(Monodromy { sign, min_overlap })
}

/// Unit generators of `ker K(A(t))` for every sample by the wedge route,
/// with the common number of negative eigenvalues.
pub fn kernel_sections(l: &MatrixLoop) -> Result<(Vec<Vec<f64>>, usize), IndexError> {
    let mut sections = Vec::with_capacity(l.samples().len());
    let mut expected = None;
    for (index, a) in l.samples().iter().enumerate() {
        let e = a
            .invertible_eigen()
            .map_err(|source| IndexError::Sample { index, source })?;
        let p = e.negative_count();
        match expected {
            None => expected = Some(p),
            Some(q) if q != p => {
                return Err(IndexError::NonConstantNegativeIndex {
                    index,
                    expected: q,
                    found: p,
                })
            }
            _ => {}
        }
        sections.push(wedge_of_negative_eigenspace(&e).coeffs().to_vec());
    }
    Ok((sections, expected.unwrap_or(0)))
}

pub fn monodromy(l: &MatrixLoop) -> Result<Monodromy, IndexError> {
    let (sections, _) = kernel_sections(l)?;
    holonomy(&sections)
}

/// `ind₂ = 1` iff the kernel line bundle is trivial (monodromy `+1`).
pub fn ind2(l: &MatrixLoop) -> Result<CircleIndexResult, IndexError> {
    let (sections, p) = kernel_sections(l)?;
    Ok(CircleIndexResult::from_parts(
        holonomy(&sections)?,
        Parity::of(p),
    ))
}

/// [`ind2`] recomputed from the lowest eigenvector of the dense matrix of
/// `K` at each sample. Parity is read from the degrees in that eigenvector.
pub fn ind2_oracle(l: &MatrixLoop) -> Result<CircleIndexResult, IndexError> {
    if l.dim() > ORACLE_MAX_DIM {
        return Err(IndexError::DimensionTooLarge(l.dim()));
    }
    let mut sections = Vec::with_capacity(l.samples().len());
    let mut parity = None;
    for (index, a) in l.samples().iter().enumerate() {
        let wrap = |source| IndexError::Sample { index, source };
        let k = k_op(a).map_err(wrap)?;
        let e = dense_sym_eigen(&k).map_err(|e| wrap(CliffordError::Eigen(e)))?;
        let trace = a.eigen().map_err(wrap)?.trace_abs();
        let floor = 1e-6 * trace;
        if e.values[1] < floor {
            return Err(wrap(CliffordError::DegenerateGap {
                gap: e.values[1],
                floor,
            }));
        }
        let v = e.vectors.into_iter().next().expect("nonempty spectrum");
        let p = crate::clifford::ExteriorVector::from_coeffs(l.dim(), v.clone())
            .dominant_parity(1e-12)
            .ok_or(wrap(CliffordError::DegenerateGap {
                gap: e.values[1],
                floor,
            }))?;
        match parity {
            None => parity = Some(p),
            Some(q) if q != p => {
                return Err(IndexError::NonConstantNegativeIndex {
                    index,
                    expected: usize::from(q == Parity::Odd),
                    found: usize::from(p == Parity::Odd),
                })
            }
            _ => {}
        }
        sections.push(v);
    }
    let m = holonomy(&sections)?;
    Ok(CircleIndexResult::from_parts(
        m,
        parity.unwrap_or(Parity::Even),
    ))
}

/// Drops the normal (`u`) row and column of a boundary loop, leaving the loop
/// of `A0(t)` on the boundary. The kernel line of `A` is that of `A0`, or
/// `e^u ∧` it when the sign is negative, so the index is unchanged.
pub fn boundary_reduce(l: &MatrixLoop) -> Result<MatrixLoop, IndexError> {
    let Location::Boundary { sign } = l.location() else {
        return Err(IndexError::NotBoundaryLoop);
    };
    for (index, s) in l.samples().iter().enumerate() {
        let tol = 1e-12 * s.max_abs().max(1.0);
        if (s.get(0, 0) - f64::from(sign)).abs() > tol
            || (1..l.dim()).any(|k| s.get(0, k).abs() > tol)
        {
            return Err(IndexError::BlockStructureViolated { index, sign });
        }
    }
    Ok(l.reduced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circleindex::{LoopGenerator, Turns};
    use crate::clifford::SymMatrix;

    fn rotating(turns: Turns, count: usize) -> MatrixLoop {
        MatrixLoop::generated(LoopGenerator::ConjugatedDiag {
            diag: vec![-1.0, 1.0, 1.0, 1.0],
            plane: [0, 1],
            turns,
            count,
        })
        .unwrap()
    }

    #[test]
    fn constant_loop_is_trivial() {
        let l = MatrixLoop::generated(LoopGenerator::Constant {
            diag: vec![1.0, 1.0, -1.0, -1.0],
            count: 8,
        })
        .unwrap();
        let m = monodromy(&l).unwrap();
        assert_eq!(m.sign, 1);
        assert!((m.min_overlap - 1.0).abs() < 1e-12);
        let r = ind2(&l).unwrap();
        assert_eq!((r.ind2, r.parity), (1, Parity::Even));
    }

    #[test]
    fn half_turn_is_mobius() {
        let l = rotating(Turns::new(1, 2), 16);
        assert_eq!(monodromy(&l).unwrap().sign, -1);
        let r = ind2(&l).unwrap();
        assert_eq!((r.ind2, r.parity), (0, Parity::Odd));
        assert_eq!(ind2(&l.reversed()).unwrap().ind2, 0);
        let o = ind2_oracle(&l).unwrap();
        assert_eq!(
            (o.ind2, o.parity, o.monodromy),
            (r.ind2, r.parity, r.monodromy)
        );
    }

    #[test]
    fn full_turn_is_trivial() {
        let l = rotating(Turns::new(1, 1), 16);
        assert_eq!(monodromy(&l).unwrap().sign, 1);
    }

    #[test]
    fn two_samples_are_too_coarse() {
        let l = rotating(Turns::new(1, 2), 2);
        assert!(matches!(
            ind2(&l),
            Err(IndexError::SamplingTooCoarse {
                index: 0,
                next: 1,
                ..
            })
        ));
    }

    #[test]
    fn sign_change_of_determinant_is_refused() {
        let l = MatrixLoop::interior(vec![
            SymMatrix::diagonal(&[1.0, 1.0]),
            SymMatrix::diagonal(&[1.0, -1.0]),
        ])
        .unwrap();
        assert!(matches!(
            ind2(&l),
            Err(IndexError::NonConstantNegativeIndex {
                index: 1,
                expected: 0,
                found: 1
            })
        ));
    }

    #[test]
    fn oracle_matches_on_constant_loop() {
        let l = MatrixLoop::generated(LoopGenerator::Constant {
            diag: vec![2.0, -3.0],
            count: 5,
        })
        .unwrap();
        let r = ind2_oracle(&l).unwrap();
        assert_eq!((r.ind2, r.parity), (1, Parity::Odd));
        let big = MatrixLoop::generated(LoopGenerator::Constant {
            diag: vec![1.0; 9],
            count: 1,
        })
        .unwrap();
        assert_eq!(ind2_oracle(&big), Err(IndexError::DimensionTooLarge(9)));
    }

    #[test]
    fn boundary_reduction() {
        let l = MatrixLoop::generated_boundary(
            LoopGenerator::Constant {
                diag: vec![-1.0],
                count: 3,
            },
            1,
        )
        .unwrap();
        let r = boundary_reduce(&l).unwrap();
        assert_eq!(r.samples()[0], SymMatrix::diagonal(&[-1.0]));
        assert_eq!(ind2(&l).unwrap().ind2, 1);
        assert_eq!(ind2(&r).unwrap().ind2, 1);
        assert_eq!(boundary_reduce(&r), Err(IndexError::NotBoundaryLoop));
    }
}
